from arof_ttd.analysis.cost import cost_table
from arof_ttd.management.base import SimulationCommand


class Command(SimulationCommand):
    help = "Component counts of the proposed and conventional remote radio heads"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--services",
            type=int,
            default=6,
            help="Number of services N_s.",
        )
        parser.add_argument(
            "--elements",
            type=int,
            default=4,
            help="Number of antenna elements per array N_A.",
        )
        parser.add_argument(
            "--mmwave-services",
            type=int,
            default=None,
            dest="mmwave_services",
            help="Services in the mmWave band. Defaults to half of the services.",
        )
        parser.add_argument(
            "--include-cu",
            action="store_true",
            dest="include_cu",
            help="Also count the central unit lasers, modulators and gratings.",
        )

    def run(self, **options):
        return cost_table(
            n_services=options["services"],
            n_elements=options["elements"],
            include_cu=options["include_cu"],
            n_mmwave_services=options["mmwave_services"],
        )
