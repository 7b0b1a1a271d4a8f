"""
This module contains the validators for the derived app.
"""

import re
from typing import Tuple

from quivers.domain import ARQuiver, ARVertex, DimVector

from .constants import ERROR_MESSAGES, OBJECT_NAME_PATTERN
from .exceptions import ObjectNameException


class ObjectNameValidator:
    def __init__(self, ar: ARQuiver):
        self.ar = ar
        self.pattern = re.compile(OBJECT_NAME_PATTERN)

    def validate(self, name: str) -> Tuple[ARVertex, int]:
        """
        Read an object name such as '110[1]', '(1,10,0)[-1]' or '011'
        Args:
            name: Dimension string with optional [shift]; no suffix means shift 0
        Returns:
            (module, shift)
        Raises:
            ObjectNameException: Unreadable name or no indecomposable with that dimension vector
        """
        match = self.pattern.match(name.strip())
        if match is None:
            raise ObjectNameException(ERROR_MESSAGES['OBJECT_NAME'].format(name=name, detail='bad syntax'))
        dim_text = match.group('dim')
        if dim_text.startswith('('):
            values = tuple(int(value) for value in dim_text[1:-1].split(','))
        else:
            values = tuple(int(value) for value in dim_text)
        labels = self.ar.quiver.vertices
        if len(values) != len(labels):
            raise ObjectNameException(ERROR_MESSAGES['OBJECT_NAME'].format(
                name=name, detail=f"expected {len(labels)} entries"
            ))
        module = self.ar.by_dim(DimVector(labels, values))
        if module is None:
            raise ObjectNameException(ERROR_MESSAGES['OBJECT_NAME'].format(
                name=name, detail='not the dimension vector of an indecomposable'
            ))
        shift = int(match.group('shift')) if match.group('shift') is not None else 0
        return module, shift
