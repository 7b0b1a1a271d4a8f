"""
This module contains the constants for the derived app.
"""

# Orbit sums run over t in [-ORBIT_RANGE, ORBIT_RANGE]
ORBIT_RANGE = 2

# Safety bound on the shift loops when reading coordinates back
MAX_COORDINATE_STEPS = 1000

# name of an indecomposable: dimension string plus an optional [shift]
OBJECT_NAME_PATTERN = r'^(?P<dim>\(\d+(?:,\d+)*\)|\d+)(?:\[(?P<shift>-?\d+)\])?$'

ERROR_MESSAGES = {
    'ORBIT_TERM': 'Orbit term t={t} of Hom({source}, G^t {target}[{k}]) is {value}, expected 0',
    'COORDINATES': 'Coordinate model disagrees with the AR quiver at {vertex}: {detail}',
    'HOM_BASIS': 'Mesh basis of Hom({source}, {target}) has dimension {basis}, hammock gives {hammock}',
    'ENDPOINTS': 'Cannot compose a map into {middle} with a map out of {other}',
    'APPROXIMATION': 'Approximation of {target} by {cls}: {detail}',
    'OBJECT_NAME': 'Cannot read object name {name!r}: {detail}',
}

LOGGING_CONFIG = {
    'MESH_LOGGER': 'derived.services.mesh_service',
}
