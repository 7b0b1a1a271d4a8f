"""
This module contains the constants for the clusters app.
"""

# Order in which `verify all` runs the suites
VERIFICATION_SUITES = ['derived', 'cluster', 'localise', 'endo']

# G-twists of M considered when factoring maps in the orbit category
G_TWIST_RANGE = 2

CHECK_STATUS = {
    'PASS': 'pass',
    'FAIL': 'fail',
    'CAPPED': 'capped',
}

ERROR_MESSAGES = {
    'CLIQUE_CAP': 'More than {cap} maximal m-rigid objects; raise --max-cliques',
    'NOT_RIGID': 'Object {object} is not m-rigid: {detail}',
    'WRONG_SIZE': 'Expected {expected} summands, got {size}',
    'NOT_IN_DOMAIN': '{vertex} is not in the fundamental domain for m={m}',
    'NOT_A_SUMMAND': '{vertex} is not a summand of {object}',
    'NO_SLICE': 'No slice puts {object} into degrees 0..{top}; widen the window',
    'PROJECTION': 'Projection of {object} to D0 is not a non-negative combination: {detail}',
    'PERPENDICULAR': 'Perpendicular category of {vertex}: {detail}',
    'LOCALISATION': 'Localising {object} at {vertex}: {detail}',
    'NO_REPLACEMENT': 'No left replacement of {vertex} found in the window',
    'PRECONDITION': 'Precondition fails for {vertex}: {detail}',
    'ENDO': 'Endomorphism algebra of {object}: {detail}',
}

LOGGING_CONFIG = {
    'VERIFICATION_LOGGER': 'clusters.services.verification_service',
}
