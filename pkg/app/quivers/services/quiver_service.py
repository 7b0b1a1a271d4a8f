"""
This module contains the quiver service: parsing, presets, the Euler form
and the positive roots of a Dynkin quiver.
"""

from pathlib import Path
from typing import List, Sequence, Tuple
import json
import logging

from ..domain import DimVector, Quiver
from ..serializers import QuiverSerializer
from ..utils.constants import ERROR_MESSAGES, QUIVER_PRESETS
from ..utils.exceptions import DimensionMismatchException, QuiverFormatException
from ..utils.validators import QuiverValidator

logger = logging.getLogger(__name__)


class QuiverService:
    def __init__(self):
        self.logger = logger

    def parse_quiver(self, text: str, name: str = '') -> Quiver:
        """
        Parse a quiver from its JSON description
        Args:
            text: JSON text following the quiver schema
            name: Optional display name
        Returns:
            A validated connected Dynkin quiver
        Raises:
            QuiverFormatException: Malformed JSON or schema violation
            CyclicQuiverException, DisconnectedQuiverException,
            NonDynkinQuiverException, MultipleArrowsException: see QuiverValidator
        """
        try:
            data = json.loads(text)
        except (TypeError, ValueError) as e:
            raise QuiverFormatException(ERROR_MESSAGES['MALFORMED'].format(error=str(e)))
        if not isinstance(data, dict):
            raise QuiverFormatException(ERROR_MESSAGES['MALFORMED'].format(error='expected a JSON object'))
        serializer = QuiverSerializer(data=data)
        if not serializer.is_valid():
            raise QuiverFormatException(ERROR_MESSAGES['MALFORMED'].format(error=serializer.errors))
        return self.build_quiver(
            serializer.validated_data['vertices'], serializer.validated_data['arrows'], name=name
        )

    def build_quiver(self, vertices: Sequence[str], arrows: Sequence[Tuple[str, str]],
                     name: str = '', require_connected: bool = True) -> Quiver:
        """Validate and build; require_connected=False admits disjoint unions and the empty quiver"""
        validator = QuiverValidator(require_connected=require_connected, allow_empty=not require_connected)
        types = validator.validate(list(vertices), [tuple(arrow) for arrow in arrows])
        quiver = Quiver(tuple(vertices), tuple(tuple(arrow) for arrow in arrows), name=name)
        self.logger.debug(f"Built quiver {quiver.label} of type {'+'.join(types) or 'empty'}")
        return quiver

    def preset(self, name: str) -> Quiver:
        vertices, arrows = QUIVER_PRESETS[name]
        return self.build_quiver(vertices, arrows, name=name)

    def load_quiver(self, argument: str) -> Quiver:
        """A preset name or the path of a quiver JSON file"""
        if argument in QUIVER_PRESETS:
            return self.preset(argument)
        path = Path(argument)
        if not path.is_file():
            raise QuiverFormatException(ERROR_MESSAGES['UNKNOWN_PRESET'].format(name=argument))
        return self.parse_quiver(path.read_text(), name=path.stem)

    def dynkin_types(self, quiver: Quiver) -> List[str]:
        return QuiverValidator(require_connected=False, allow_empty=True).validate(
            list(quiver.vertices), list(quiver.arrows)
        )

    def _check_dimensions(self, quiver: Quiver, *vectors: DimVector):
        for vector in vectors:
            if vector.labels != quiver.vertices:
                raise DimensionMismatchException(
                    ERROR_MESSAGES['DIMENSION_MISMATCH'].format(
                        given=list(vector.labels), expected=list(quiver.vertices)
                    )
                )

    def euler_form(self, quiver: Quiver, a: DimVector, b: DimVector) -> int:
        """<a, b> = sum_i a_i b_i - sum_{i -> j} a_i b_j"""
        self._check_dimensions(quiver, a, b)
        value = sum(x * y for x, y in zip(a.values, b.values))
        for source, target in quiver.arrows:
            value -= a[source] * b[target]
        return value

    def tits_form(self, quiver: Quiver, values: Sequence[int]) -> int:
        entries = dict(zip(quiver.vertices, values))
        value = sum(x * x for x in values)
        for source, target in quiver.arrows:
            value -= entries[source] * entries[target]
        return value

    def positive_roots(self, quiver: Quiver) -> List[DimVector]:
        """
        All positive roots, grown from the simple roots by adding one
        simple root at a time while the Tits form stays equal to 1.
        """
        n = quiver.n
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            next_frontier = []
            for root in frontier:
                for i in range(n):
                    candidate = tuple(value + (1 if k == i else 0) for k, value in enumerate(root))
                    if candidate not in found and self.tits_form(quiver, candidate) == 1:
                        found.add(candidate)
                        next_frontier.append(candidate)
            frontier = next_frontier
        roots = sorted(found, key=lambda values: (sum(values), values))
        self.logger.debug(f"{quiver.label}: {len(roots)} positive roots")
        return [DimVector(quiver.vertices, values) for values in roots]
