"""
Validated scenario configuration.

Section dataclasses mirror the sections of the config format and their fields mirror the keys,
so `section.key` addresses one value both in a file and in `ScenarioConfig.with_value`.
All values are SI.
"""

import typing
from dataclasses import dataclass, fields, replace

import numpy as np

from arof_ttd.beamforming.array_factor import ArrayGeometry, angle_grid
from arof_ttd.constants import NANO, PICO, Cfbg3Mode, ServiceBand
from arof_ttd.exceptions import InvalidInput
from arof_ttd.frontend.demux import ChannelPlan
from arof_ttd.frontend.interleaver import PortFilterSpec
from arof_ttd.optics.delay import (
    ChirpSpec,
    DelayLaw,
    align_mmwave_slope,
    chirp_to_channel_delay,
    delay_law_from_chirp,
    delay_law_from_delta_t,
)
from arof_ttd.optics.modulation import MzmConfig, ToneSet
from arof_ttd.settings import ttd_settings


@dataclass(frozen=True)
class LaserConfig:
    frequency: float
    power: float


@dataclass(frozen=True)
class DelayConfig:
    """
    CU gratings (CFBG1 and CFBG2 share one law). Either `chirp` (m) or `delta_t` (s) sets
    the delay difference; with neither the gratings are flat.
    """

    chirp: float | None = None
    delta_t: float | None = None
    sign: int = 1
    grating_length: float = 0.04
    center_wavelength: float = 1549.32e-9
    calibration: float | None = None

    def __post_init__(self):
        if self.chirp is not None and self.delta_t is not None:
            raise InvalidInput("Set either cfbg.chirp or cfbg.delta_t, not both.")
        if self.sign not in (1, -1):
            raise InvalidInput(f"cfbg.sign must be +1 or -1, got {self.sign}.")

    def chirp_spec(self) -> ChirpSpec:
        return ChirpSpec(
            total_chirp=self.chirp / NANO,
            grating_length=self.grating_length * 1e3,
            center_wavelength=self.center_wavelength / NANO,
            calibration_const=self.calibration,
        )

    def channel_delta_t(self) -> float:
        """
        Unsigned delay difference between lines one reference spacing apart.
        """
        if self.chirp is not None:
            return chirp_to_channel_delay(self.chirp_spec())
        return self.delta_t or 0.0

    def law(self, band: tuple[float, float]) -> DelayLaw:
        if self.chirp is not None:
            return delay_law_from_chirp(self.chirp_spec(), self.sign, band)
        return delay_law_from_delta_t(self.delta_t or 0.0, self.sign, band)


@dataclass(frozen=True)
class Cfbg3Config:
    mode: Cfbg3Mode = Cfbg3Mode.ALIGNED
    target_delta_t: float | None = None

    def __post_init__(self):
        if self.mode == Cfbg3Mode.TARGET and self.target_delta_t is None:
            raise InvalidInput("cfbg3.mode = target requires cfbg3.target_delta_t.")


@dataclass(frozen=True)
class DemuxConfig:
    first_channel: float
    spacing: float
    window_low: float
    window_high: float


@dataclass(frozen=True)
class ArrayConfig:
    elements: int = 4


@dataclass(frozen=True)
class BandConfig:
    design_frequency: float
    spacing: float
    passband_low: float
    passband_high: float

    def geometry(self, n_elements: int) -> ArrayGeometry:
        return ArrayGeometry(n_elements=n_elements, spacing=self.spacing)


@dataclass(frozen=True)
class DetectorConfig:
    responsivity: float = 1.0
    amplifier_gain: float = 1.0


@dataclass(frozen=True)
class GridConfig:
    start: float = 0.0
    stop: float = 180.0
    step: float = 0.01

    def angles(self) -> np.ndarray:
        return angle_grid(self.start, self.stop, self.step)


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.step == 0 or (self.stop - self.start) * self.step < 0:
            raise InvalidInput(
                f"Sweep step {self.step:g} does not go from {self.start:g} to {self.stop:g}."
            )

    def values(self) -> np.ndarray:
        count = int(np.floor((self.stop - self.start) / self.step + 1e-9)) + 1
        return self.start + self.step * np.arange(count)


@dataclass(frozen=True)
class ScenarioConfig:
    laser1: LaserConfig
    laser2: LaserConfig
    rf: ToneSet
    mzm1: MzmConfig
    mzm2: MzmConfig
    cfbg: DelayConfig
    cfbg3: Cfbg3Config
    interleaver: PortFilterSpec
    demux: DemuxConfig
    array: ArrayConfig
    sub6: BandConfig
    mmwave: BandConfig
    detector: DetectorConfig
    grid: GridConfig
    sweep: SweepSpec | None = None
    name: str = "scenario"

    def band_config(self, band: ServiceBand) -> BandConfig:
        return self.sub6 if band == ServiceBand.SUB6 else self.mmwave

    def geometry(self, band: ServiceBand) -> ArrayGeometry:
        return self.band_config(band).geometry(self.array.elements)

    def channel_plan(self, band: ServiceBand) -> ChannelPlan:
        reference_offset = 0.0
        if band == ServiceBand.MMWAVE:
            reference_offset = self.laser2.frequency - self.laser1.frequency
        return ChannelPlan.regular(
            band=band,
            first_channel=self.demux.first_channel,
            spacing=self.demux.spacing,
            n_elements=self.array.elements,
            window_low=self.demux.window_low,
            window_high=self.demux.window_high,
            reference_offset=reference_offset,
        )

    def optical_band(self) -> tuple[float, float]:
        """
        Band the gratings are specified over: the span of the demux windows.
        """
        return self.channel_plan(ServiceBand.SUB6).span

    def cu_delay_law(self) -> DelayLaw:
        return self.cfbg.law(self.optical_band())

    def rrh_delay_law(self) -> DelayLaw:
        cu_slope = self.cu_delay_law().slope
        if self.cfbg3.mode == Cfbg3Mode.ALIGNED:
            slope = align_mmwave_slope(cu_slope, self.sub6.spacing, self.mmwave.spacing)
        elif self.cfbg3.mode == Cfbg3Mode.TARGET:
            total = self.cfbg.sign * self.cfbg3.target_delta_t / ttd_settings.REFERENCE_CHANNEL_SPACING
            slope = total - cu_slope
        else:
            slope = 0.0
        return DelayLaw.normalized(slope, self.optical_band())

    def total_slope(self, band: ServiceBand) -> float:
        slope = self.cu_delay_law().slope
        if band == ServiceBand.MMWAVE:
            slope += self.rrh_delay_law().slope
        return slope

    def delta_t(self, band: ServiceBand) -> float:
        """
        Signed optical delay difference of the band between lines one reference spacing apart.
        """
        return self.total_slope(band) * ttd_settings.REFERENCE_CHANNEL_SPACING

    def expected_increment(self, band: ServiceBand) -> float:
        """
        Per-element RF delay increment: twice the slope times the channel spacing.
        """
        return 2 * self.total_slope(band) * self.demux.spacing

    def service_frequencies(self, band: ServiceBand) -> tuple[float, ...]:
        if band == ServiceBand.SUB6:
            return tuple(sorted(self.rf.tones))
        offset = abs(self.laser2.frequency - self.laser1.frequency)
        return tuple(sorted(offset + tone for tone in self.rf.tones))

    def with_value(self, variable: str, value: float) -> "ScenarioConfig":
        """
        Copy of the config with `section.key` set to `value`.
        """
        section_name, _, key = variable.partition(".")
        section = getattr(self, section_name, None) if section_name in SWEEPABLE_SECTIONS else None
        section_fields = {} if section is None else {item.name: item.type for item in fields(section)}
        if key not in section_fields:
            raise InvalidInput(f"Unknown sweep variable '{variable}'.")

        if not _is_numeric(section_fields[key]):
            raise InvalidInput(f"'{variable}' is not a numeric sweep variable.")

        current = getattr(section, key)
        if isinstance(current, int) and not isinstance(current, bool):
            value = int(round(value))
        changes = {key: value}
        if section_name == "cfbg" and key == "chirp":
            changes["delta_t"] = None
        elif section_name == "cfbg" and key == "delta_t":
            changes["chirp"] = None
        return replace(self, **{section_name: replace(section, **changes)})

    def describe(self) -> dict:
        return {
            "name": self.name,
            "delta_t_sub6_ps": self.delta_t(ServiceBand.SUB6) / PICO,
            "delta_t_mmwave_ps": self.delta_t(ServiceBand.MMWAVE) / PICO,
            "elements": self.array.elements,
        }


def _is_numeric(field_type) -> bool:
    return any(kind in (int, float) for kind in typing.get_args(field_type) or (field_type,))


SWEEPABLE_SECTIONS = (
    "laser1",
    "laser2",
    "mzm1",
    "mzm2",
    "cfbg",
    "cfbg3",
    "interleaver",
    "demux",
    "array",
    "sub6",
    "mmwave",
    "detector",
)
