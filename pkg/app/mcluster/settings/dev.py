from .base import *

DEBUG = True

LOG_LEVEL = 'DEBUG'

for _logger in LOGGING['loggers'].values():
    _logger['level'] = LOG_LEVEL

LOGGING['handlers']['console']['formatter'] = 'simple'
