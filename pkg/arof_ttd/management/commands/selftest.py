import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from arof_ttd.exceptions import EXIT_RUNTIME
from arof_ttd.utils.test_runner import PytestTestRunner

logger = logging.getLogger("arof_ttd.commands")

TESTS_DIR = Path(__file__).resolve().parents[2] / "tests"


class Command(BaseCommand):
    help = "Run the bundled test suite with pytest"

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            "labels",
            nargs="*",
            help="Test modules or node ids to run. Defaults to the whole suite.",
        )
        parser.add_argument(
            "--failfast",
            action="store_true",
            help="Stop at the first failure.",
        )
        parser.add_argument(
            "--keyword",
            "-k",
            default=None,
            help="Only run the tests matching this pytest keyword expression.",
        )

    def handle(self, *args, **options):
        labels = options["labels"] or [str(TESTS_DIR)]
        runner = PytestTestRunner(
            verbosity=options["verbosity"],
            failfast=options["failfast"],
            keyword=options["keyword"],
        )
        failures = runner.run_tests(labels)
        if failures:
            raise CommandError(f"Test run failed with pytest status {failures}.", returncode=EXIT_RUNTIME)
        self.stdout.write("All tests passed.")
