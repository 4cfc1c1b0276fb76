from arof_ttd.management.base import SimulationCommand
from arof_ttd.runner.chain import TABLES, run_chain


class Command(SimulationCommand):
    help = "Run the whole chain of one scenario and write one of its result tables"

    def add_arguments(self, parser):
        self.add_config_argument(parser)
        super().add_arguments(parser)
        parser.add_argument(
            "--table",
            "-t",
            choices=TABLES,
            default="summary",
            help="Table to write: steering summary, element feeds, beam patterns or spurs.",
        )

    def run(self, **options):
        return run_chain(self.load(options)).table(options["table"])
