from arof_ttd.beamforming.squint import squint_metric
from arof_ttd.constants import GIGA, ServiceBand, SteeringMode
from arof_ttd.management.base import SimulationCommand
from arof_ttd.runner.tables import ResultTable


class Command(SimulationCommand):
    help = (
        "Compare the beam squint of true-time-delay steering and of phase shifters set at the "
        "design frequency, over the service tones of one band"
    )

    def add_arguments(self, parser):
        self.add_config_argument(parser)
        super().add_arguments(parser)
        parser.add_argument(
            "--band",
            "-b",
            choices=[band.value for band in ServiceBand],
            default=ServiceBand.MMWAVE.value,
            help="Service band to evaluate.",
        )

    def run(self, **options):
        cfg = self.load(options)
        band = ServiceBand(options["band"])
        geom = cfg.geometry(band)
        delays = cfg.expected_increment(band) * geom.indices
        design_freq = cfg.band_config(band).design_frequency
        eval_freqs = cfg.service_frequencies(band)

        rows = []
        for mode in SteeringMode:
            result = squint_metric(
                geom, delays, design_freq, eval_freqs, mode=mode, grid=cfg.grid.angles()
            )
            reference = result.peaks.get(design_freq)
            for freq in eval_freqs:
                angle = result.peaks.get(freq)
                shift = "" if angle is None or reference is None else angle - reference
                rows.append(
                    (mode.value, freq / GIGA, "" if angle is None else angle, shift, result.spread)
                )
        return ResultTable(
            columns=("mode", "freq", "peak_angle", "shift", "spread"),
            units=("", "GHz", "deg", "deg", "deg"),
            rows=tuple(rows),
        )
