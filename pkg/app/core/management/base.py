"""
Shared base for the mcluster management commands: the quiver argument,
the global flags and the mapping of exceptions onto exit codes.
"""

from typing import Any, Dict, Iterable
import logging

from django.core.management.base import BaseCommand, CommandError

from core.serializers import render_json
from core.services.context_service import ContextService
from core.utils.constants import EXIT_CODES, LOGGING_CONFIG
from core.utils.exceptions import CheckFailedException, MClusterException, ResourceCapException, UsageException
from core.utils.validators import CommandOptionsValidator
from derived.domain import Window
from quivers.services import QuiverService

logger = logging.getLogger(LOGGING_CONFIG['COMMANDS_LOGGER'])


class MClusterCommand(BaseCommand):
    requires_system_checks = []

    def add_arguments(self, parser):
        self.add_leading_arguments(parser)
        parser.add_argument('quiver', type=str, help='Preset name (A1..A8, D4..D6, E6..E8) or path to a quiver JSON file')
        parser.add_argument('--m', type=int, default=1, help='The m of the m-cluster category')
        parser.add_argument('--json', action='store_true', dest='as_json', help='Machine readable output')
        parser.add_argument('--window', type=str, default=None, help='Shift window LOW:HIGH')
        parser.add_argument('--max-cliques', type=int, default=None, dest='max_cliques',
                            help='Cap on the number of maximal m-rigid objects')
        parser.add_argument('--workers', type=int, default=None, help='Worker pool size for the sweeps')
        parser.add_argument('--timings', action='store_true', help='Report elapsed times')
        self.add_command_arguments(parser)

    def add_leading_arguments(self, parser):
        """Positional arguments placed before the quiver"""

    def add_command_arguments(self, parser):
        """Flags specific to one command"""

    def handle(self, *args, **options):
        try:
            self.options = CommandOptionsValidator().validate(options)
            quiver = QuiverService().load_quiver(options['quiver'])
            self.context = ContextService().get_context(
                quiver, self.options['m'], Window(*self.options['window'])
            )
            self.run(**options)
        except UsageException as e:
            raise CommandError(str(e), returncode=EXIT_CODES['USAGE'])
        except ResourceCapException as e:
            raise CommandError(str(e), returncode=EXIT_CODES['RESOURCE_CAP'])
        except CheckFailedException as e:
            raise CommandError(str(e), returncode=EXIT_CODES['CHECK_FAILED'])
        except MClusterException as e:
            logger.error(f"Unclassified failure: {e}")
            raise CommandError(str(e), returncode=EXIT_CODES['CHECK_FAILED'])

    def run(self, **options):
        raise NotImplementedError

    def emit(self, options: Dict[str, Any], data: Any, lines: Iterable[str]):
        """JSON under --json, the text lines otherwise"""
        if options.get('as_json'):
            self.stdout.write(render_json(data))
        else:
            for line in lines:
                self.stdout.write(line)

    def check_failed(self, message: str):
        raise CommandError(message, returncode=EXIT_CODES['CHECK_FAILED'])
