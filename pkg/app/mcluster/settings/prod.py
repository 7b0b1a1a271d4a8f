from .base import *

DEBUG = False

SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', SECRET_KEY)

# Sweeps over large grids log stage summaries only.
LOG_LEVEL = os.environ.get('MCLUSTER_LOG_LEVEL', 'WARNING').upper()

for _logger in LOGGING['loggers'].values():
    _logger['level'] = LOG_LEVEL
