import logging
from dataclasses import dataclass, field

from arof_ttd.beamforming.steering import BandSteering, steer_feeds
from arof_ttd.config.scenario import ScenarioConfig
from arof_ttd.constants import GIGA, PICO, ServiceBand
from arof_ttd.exceptions import NoPeak
from arof_ttd.frontend.feeds import FeedExtraction, extract_element_feeds
from arof_ttd.log import chain_stage, scenario_context
from arof_ttd.runner.tables import ResultTable

logger = logging.getLogger("arof_ttd.runner")


@dataclass(frozen=True)
class ChainResult:
    scenario: ScenarioConfig
    extraction: FeedExtraction
    steering: dict[ServiceBand, list[BandSteering]] = field(default_factory=dict)

    def design_steering(self, band: ServiceBand) -> BandSteering:
        if not self.steering.get(band):
            raise NoPeak(f"No service tone is shared by all the {band.value} elements.")
        design = self.scenario.band_config(band).design_frequency
        return min(self.steering[band], key=lambda item: abs(item.freq - design))

    def summary_table(self) -> ResultTable:
        rows = []
        for band, items in self.steering.items():
            for item in items:
                rows.append(
                    (
                        band.value,
                        item.freq / GIGA,
                        self.scenario.delta_t(band) / PICO,
                        self.extraction.measured_increment(band, item.freq) / PICO,
                        "" if item.expected_angle is None else item.expected_angle,
                        item.result.peak_angle,
                        item.result.peak_width_3db,
                        item.result.sidelobe_level_db,
                    )
                )
        return ResultTable(
            columns=(
                "band",
                "freq",
                "delta_t",
                "increment",
                "expected_angle",
                "peak_angle",
                "width_3db",
                "sidelobe_level",
            ),
            units=("", "GHz", "ps", "ps", "deg", "deg", "deg", "dB"),
            rows=tuple(rows),
        )

    def feeds_table(self) -> ResultTable:
        rows = []
        for feed in self.extraction.feeds:
            for tone in feed.tones:
                delay = feed.relative_delays.get(tone.freq)
                rows.append(
                    (
                        feed.band.value,
                        feed.element_index,
                        tone.freq / GIGA,
                        tone.amp,
                        tone.phase,
                        "" if delay is None else delay / PICO,
                    )
                )
        return ResultTable(
            columns=("band", "element", "freq", "amplitude", "phase", "relative_delay"),
            units=("", "", "GHz", "A", "rad", "ps"),
            rows=tuple(rows),
        )

    def patterns_table(self) -> ResultTable:
        items = [item for band_items in self.steering.values() for item in band_items]
        if not items:
            return ResultTable(columns=("angle",), units=("deg",))
        columns = ["angle"] + [f"{item.band.value}_{item.freq / GIGA:g}GHz" for item in items]
        angles = items[0].pattern.angles
        rows = tuple(
            (float(angle), *(float(item.pattern.magnitude_db[index]) for item in items))
            for index, angle in enumerate(angles)
        )
        return ResultTable(
            columns=tuple(columns), units=("deg",) + ("dB",) * len(items), rows=rows
        )

    def spurs_table(self) -> ResultTable:
        return ResultTable(
            columns=("band", "element", "freq", "ratio"),
            units=("", "", "GHz", ""),
            rows=tuple(
                (spur.band.value, spur.element_index, spur.freq / GIGA, spur.ratio)
                for spur in self.extraction.spurs
            ),
        )

    def table(self, name: str) -> ResultTable:
        return getattr(self, f"{name}_table")()


TABLES = ("summary", "feeds", "patterns", "spurs")


def run_chain(cfg: ScenarioConfig) -> ChainResult:
    """
    Whole chain of one scenario: RF feeds, beam patterns and steering of every service tone.
    """
    with scenario_context(cfg.name):
        extraction = extract_element_feeds(cfg)
        steering = {}
        with chain_stage("beamforming"):
            for band in ServiceBand:
                steering[band] = steer_feeds(
                    extraction.band_feeds(band),
                    cfg.geometry(band),
                    cfg.grid.angles(),
                    band,
                    increment=extraction.increments[band],
                )
        result = ChainResult(scenario=cfg, extraction=extraction, steering=steering)
        for band in ServiceBand:
            logger.info(
                "%s: %s peak %.4f deg",
                cfg.name,
                band.value,
                result.design_steering(band).result.peak_angle,
            )
    return result
