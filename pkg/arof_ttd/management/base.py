import logging

from django.core.management.base import BaseCommand, CommandError

from arof_ttd.config import load_config
from arof_ttd.exceptions import SimulationException, get_exception_exit_code_and_details
from arof_ttd.runner.tables import ResultTable, emit

logger = logging.getLogger("arof_ttd.commands")


class SimulationCommand(BaseCommand):
    """
    Base of the commands that emit a result table.

    Subclasses implement `run(**options)` and return the table. Any error is turned into a
    `CommandError` carrying the simulator exit code, so `manage.py` and the standalone
    script both exit with 2 on validation errors and 3 on runtime errors.
    """

    # Nothing here depends on models or a database.
    requires_system_checks = []

    def add_config_argument(self, parser):
        parser.add_argument(
            "--config",
            "-c",
            required=True,
            help=(
                "Scenario file path, or the name of a bundled scenario: table2, fig5, fig6, fig7, "
                "or their long names reference, coverage, codirectional, chirp_sweep."
            ),
        )

    def add_arguments(self, parser):
        parser.add_argument(
            "--out",
            "-o",
            default=None,
            help="Write the table to this path instead of stdout.",
        )

    def run(self, **options) -> ResultTable:
        raise NotImplementedError("subclasses of SimulationCommand must provide a run() method")

    def load(self, options):
        return load_config(options["config"])

    def handle(self, *args, **options):
        try:
            table = self.run(**options)
            emit(table, options["out"], stream=self.stdout)
        except CommandError:
            raise
        except Exception as exc:
            exit_code, details = get_exception_exit_code_and_details(exc)
            level = getattr(exc, "logging_level", "ERROR")
            if isinstance(exc, SimulationException):
                logger.log(logging.getLevelName(level), str(exc))
            else:
                logger.exception("Unexpected error in %s", self.__module__.rsplit(".", 1)[-1])
            raise CommandError(details, returncode=exit_code) from exc
