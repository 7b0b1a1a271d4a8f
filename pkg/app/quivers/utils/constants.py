"""
This module contains the constants for the quivers app.
"""

from typing import Dict, List, Tuple


def _linear_a(n: int) -> Tuple[List[str], List[Tuple[str, str]]]:
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [(str(i), str(i + 1)) for i in range(1, n)]
    return vertices, arrows


def _branched(arms: Dict[str, List[str]], center: str) -> Tuple[List[str], List[Tuple[str, str]]]:
    """Tree with every arrow pointing away from the branch vertex"""
    vertices = [center]
    arrows = []
    for arm in arms.values():
        previous = center
        for vertex in arm:
            vertices.append(vertex)
            arrows.append((previous, vertex))
            previous = vertex
    return sorted(vertices), arrows


def _type_d(n: int) -> Tuple[List[str], List[Tuple[str, str]]]:
    center = str(n - 2)
    long_arm = [str(i) for i in range(n - 3, 0, -1)]
    return _branched({'long': long_arm, 'left': [str(n - 1)], 'right': [str(n)]}, center)


def _type_e(n: int) -> Tuple[List[str], List[Tuple[str, str]]]:
    # chain 1 - 2 - ... - (n-1) with vertex n attached to 3
    return _branched({
        'short': ['2', '1'],
        'long': [str(i) for i in range(4, n)],
        'tail': [str(n)],
    }, '3')


QUIVER_PRESETS = {
    **{f'A{n}': _linear_a(n) for n in range(1, 9)},
    **{f'D{n}': _type_d(n) for n in range(4, 7)},
    'E6': _type_e(6),
    'E7': _type_e(7),
    'E8': _type_e(8),
}

# Coxeter numbers, used by the Fuss-Catalan fixtures of the test-suite
COXETER_NUMBERS = {
    'A': lambda n: n + 1,
    'D': lambda n: 2 * n - 2,
    'E6': 12,
    'E7': 18,
    'E8': 30,
}

# Arm lengths (sorted) of the branch vertex for the exceptional types
EXCEPTIONAL_ARMS = {
    (1, 2, 2): 'E6',
    (1, 2, 3): 'E7',
    (1, 2, 4): 'E8',
}

QUIVER_SCHEMA_KEYS = ('vertices', 'arrows')

ERROR_MESSAGES = {
    'MALFORMED': 'Malformed quiver description: {error}',
    'UNKNOWN_KEYS': 'Unknown keys in quiver description: {keys}',
    'UNKNOWN_VERTEX': 'Arrow {arrow} uses an undeclared vertex',
    'DUPLICATE_VERTEX': 'Vertex {vertex} is declared twice',
    'EMPTY': 'A quiver needs at least one vertex',
    'CYCLIC': 'Quiver has an oriented cycle through {vertices}',
    'MULTIPLE_ARROWS': 'Arrow {source}->{target} appears more than once',
    'DISCONNECTED': 'Underlying graph has {count} connected components',
    'NON_DYNKIN': 'Underlying graph is not of Dynkin type A, D or E: {reason}',
    'DIMENSION_MISMATCH': 'Dimension vector over {given} does not match quiver vertices {expected}',
    'UNKNOWN_PRESET': 'Unknown preset or missing file: {name}',
    'UNKNOWN_AR_VERTEX': 'Vertex {vertex} is not in the AR quiver',
    'MESH_ADDITIVITY': 'Mesh additivity fails at {vertex}: dimension {dim}',
    'ROOT_COUNT': 'Knitted {knitted} modules but there are {roots} positive roots',
    'BOUNDARY_COUNT': 'Found {projectives} projectives and {injectives} injectives for {n} vertices',
}

LOGGING_CONFIG = {
    'KNITTING_LOGGER': 'quivers.services.knitting_service',
}
