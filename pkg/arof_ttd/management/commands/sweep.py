from arof_ttd.config import parse_sweep
from arof_ttd.management.base import SimulationCommand
from arof_ttd.runner.sweep import run_sweep


class Command(SimulationCommand):
    help = "Run the chain once per step of a parameter sweep"

    def add_arguments(self, parser):
        self.add_config_argument(parser)
        super().add_arguments(parser)
        parser.add_argument(
            "--sweep",
            "-s",
            default=None,
            help=(
                "Sweep as VAR=START:STOP:STEP, for example cfbg.chirp=0.7nm:4nm:0.05nm. "
                "Defaults to the sweep section of the config."
            ),
        )

    def run(self, **options):
        cfg = self.load(options)
        sweep_spec = parse_sweep(options["sweep"]) if options["sweep"] else None
        return run_sweep(cfg, sweep_spec)
