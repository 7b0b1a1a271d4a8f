"""
Exact linear algebra over the rationals.

Matrices are plain lists of rows. Every entry is converted to
``fractions.Fraction`` so ranks and reductions never depend on a
floating point tolerance.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

Vector = List[Fraction]
Matrix = List[Vector]


def _as_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(entry) for entry in row] for row in rows]


def row_reduce(rows: Sequence[Sequence], width: int) -> Tuple[Matrix, List[int]]:
    """
    Bring the matrix to reduced row echelon form
    Args:
        rows: The rows of the matrix, each of length width
        width: Number of columns (needed when rows is empty)
    Returns:
        (nonzero rows of the reduced form, pivot column of each row)
    """
    matrix = _as_fractions(rows)
    pivots: List[int] = []
    lead = 0
    for column in range(width):
        pivot_row = None
        for r in range(lead, len(matrix)):
            if matrix[r][column] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        matrix[lead], matrix[pivot_row] = matrix[pivot_row], matrix[lead]
        pivot_value = matrix[lead][column]
        if pivot_value != 1:
            matrix[lead] = [entry / pivot_value for entry in matrix[lead]]
        for r in range(len(matrix)):
            if r != lead and matrix[r][column] != 0:
                factor = matrix[r][column]
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[lead])]
        pivots.append(column)
        lead += 1
        if lead == len(matrix):
            break
    return matrix[:lead], pivots


def rank(rows: Sequence[Sequence], width: int = None) -> int:
    if not rows:
        return 0
    if width is None:
        width = len(rows[0])
    _, pivots = row_reduce(rows, width)
    return len(pivots)


def reduce_vector(vector: Sequence, reduced_rows: Matrix, pivots: List[int]) -> Vector:
    """Subtract the row space of an RREF matrix so every pivot entry becomes zero"""
    result = [Fraction(entry) for entry in vector]
    for row, column in zip(reduced_rows, pivots):
        factor = result[column]
        if factor != 0:
            result = [a - factor * b for a, b in zip(result, row)]
    return result


def solve_unitriangular(upper: Sequence[Sequence], rhs: Sequence) -> Vector:
    """
    Solve x · U = rhs for an upper unitriangular U by forward substitution
    Args:
        upper: Square matrix with U[i][i] = 1 and U[i][j] = 0 for j < i
        rhs: Right hand side row vector
    Returns:
        The unique solution x
    Raises:
        ValueError: If U is not unitriangular
    """
    size = len(rhs)
    solution: Vector = []
    for j in range(size):
        if upper[j][j] != 1 or any(upper[j][i] != 0 for i in range(j)):
            raise ValueError(f"Matrix is not upper unitriangular at row {j}")
        value = Fraction(rhs[j])
        for i in range(j):
            if solution[i] != 0 and upper[i][j] != 0:
                value -= solution[i] * upper[i][j]
        solution.append(value)
    return solution
