"""
This module contains the configuration constants shared by every mcluster app.
"""

import os

# Computation defaults, every one of them can be overridden per command
CLUSTER_CONFIG = {
    'WINDOW_LOW': int(os.getenv('MCLUSTER_WINDOW_LOW', '-3')),
    'WINDOW_PAD': int(os.getenv('MCLUSTER_WINDOW_PAD', '4')),
    'MAX_CLIQUES': int(os.getenv('MCLUSTER_MAX_CLIQUES', '100000')),
    'MAX_M': int(os.getenv('MCLUSTER_MAX_M', '6')),
    'WORKERS': int(os.getenv('MCLUSTER_WORKERS', '1')),
}

# Process exit codes of the management commands
EXIT_CODES = {
    'PASS': 0,
    'CHECK_FAILED': 1,
    'USAGE': 2,
    'RESOURCE_CAP': 3,
}

ERROR_MESSAGES = {
    'INVALID_M': 'm must be an integer between 1 and {max_m}, got {m}',
    'INVALID_WINDOW': 'Window must look like LOW:HIGH with LOW <= 0 and HIGH >= {minimum}, got {window}',
    'INVALID_MAX_CLIQUES': 'max-cliques must be a positive integer, got {value}',
    'INVALID_WORKERS': 'workers must be a positive integer, got {value}',
    'WINDOW_OVERFLOW': 'Shift {shift} is outside the window [{low}, {high}]; widen it with --window',
}

LOGGING_CONFIG = {
    'COMMANDS_LOGGER': 'core.management',
}
