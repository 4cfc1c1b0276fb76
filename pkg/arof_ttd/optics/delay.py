"""
Chirped fiber Bragg gratings modelled as linear group-delay laws over optical frequency.

A law t(f) = slope * f + intercept applies inside its band; lines outside the band are
reflected without added delay.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from arof_ttd.constants import NANO, PICO, SPEED_OF_LIGHT
from arof_ttd.exceptions import ChirpOutOfRange, DegenerateBeat, InvalidInput
from arof_ttd.optics.spectrum import OpticalSpectrum, SpectralLine
from arof_ttd.settings import ttd_settings

logger = logging.getLogger("arof_ttd.optics")

UNBOUNDED = (0.0, math.inf)


@dataclass(frozen=True)
class DelayLaw:
    slope: float = 0.0
    intercept: float = 0.0
    band: tuple[float, float] = UNBOUNDED

    def __post_init__(self):
        low, high = self.band
        if not low < high:
            raise InvalidInput(f"Delay law band must satisfy f_min < f_max, got {self.band}.")

    @classmethod
    def normalized(cls, slope: float, band: tuple[float, float] = UNBOUNDED) -> "DelayLaw":
        """
        Law with the intercept chosen so the smallest in-band delay is 0.
        Unbounded bands keep a zero intercept.
        """
        low, high = band
        edge = low if slope >= 0 else high
        intercept = 0.0 if math.isinf(edge) else -slope * edge
        return cls(slope=slope, intercept=intercept, band=band)

    def in_band(self, freqs) -> np.ndarray:
        freqs = np.asarray(freqs, dtype=float)
        low, high = self.band
        return (freqs >= low) & (freqs <= high)

    def delay(self, freqs) -> np.ndarray:
        freqs = np.asarray(freqs, dtype=float)
        return np.where(self.in_band(freqs), self.slope * freqs + self.intercept, 0.0)

    def cascade(self, other: "DelayLaw") -> "DelayLaw":
        """
        Law equivalent to reflecting on this grating then on `other`, over the common band.
        """
        band = (max(self.band[0], other.band[0]), min(self.band[1], other.band[1]))
        return DelayLaw(
            slope=self.slope + other.slope,
            intercept=self.intercept + other.intercept,
            band=band,
        )


@dataclass(frozen=True)
class ChirpSpec:
    total_chirp: float
    grating_length: float = 40.0
    center_wavelength: float = 1549.32
    calibration_const: float | None = None

    def __post_init__(self):
        if not self.total_chirp > 0:
            raise InvalidInput(f"Total chirp must be > 0 nm, got {self.total_chirp}.")
        if not self.grating_length > 0:
            raise InvalidInput(f"Grating length must be > 0 mm, got {self.grating_length}.")

    @property
    def calibration(self) -> float:
        """
        C in ps*nm, fitted to the calibration points unless given.
        """
        if self.calibration_const is not None:
            return self.calibration_const
        return fit_calibration_constant(ttd_settings.CHIRP_CALIBRATION_POINTS)

    def physical_channel_delay(
        self, channel_spacing: float | None = None, group_index: float | None = None
    ) -> float:
        """
        Delay difference in s between adjacent channels predicted from the grating geometry:
        the round trip through the full length spread linearly over the total chirp.
        """
        if channel_spacing is None:
            channel_spacing = ttd_settings.REFERENCE_CHANNEL_SPACING
        if group_index is None:
            group_index = ttd_settings.FIBER_GROUP_INDEX
        round_trip = 2 * group_index * self.grating_length * 1e-3 / SPEED_OF_LIGHT
        wavelength = self.center_wavelength * NANO
        channel_width = wavelength**2 * channel_spacing / SPEED_OF_LIGHT
        return round_trip * channel_width / (self.total_chirp * NANO)


def fit_calibration_constant(points) -> float:
    """
    Least-squares C of the reciprocal law delta_t = C / chirp through (chirp nm, delta_t ps)
    points.
    """
    chirps = np.array([chirp for chirp, _ in points], dtype=float)
    delays = np.array([delay for _, delay in points], dtype=float)
    return float(np.sum(delays / chirps) / np.sum(1.0 / chirps**2))


def chirp_to_channel_delay(spec: ChirpSpec, channel_spacing: float | None = None) -> float:
    reference = ttd_settings.REFERENCE_CHANNEL_SPACING
    if channel_spacing is None:
        channel_spacing = reference
    low, high = ttd_settings.CHIRP_RANGE
    if not low <= spec.total_chirp <= high:
        raise ChirpOutOfRange(
            f"Total chirp {spec.total_chirp:g} nm outside [{low:g}, {high:g}] nm."
        )
    return spec.calibration / spec.total_chirp * PICO * channel_spacing / reference


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise InvalidInput(f"Delay law sign must be +1 or -1, got {sign}.")


def delay_law_from_delta_t(
    delta_t: float, sign: int = 1, band: tuple[float, float] = UNBOUNDED
) -> DelayLaw:
    """
    Law whose delay difference between lines one reference spacing apart is `delta_t`.
    """
    _check_sign(sign)
    return DelayLaw.normalized(sign * delta_t / ttd_settings.REFERENCE_CHANNEL_SPACING, band)


def delay_law_from_chirp(
    spec: ChirpSpec, sign: int = 1, band: tuple[float, float] = UNBOUNDED
) -> DelayLaw:
    _check_sign(sign)
    return delay_law_from_delta_t(chirp_to_channel_delay(spec), sign, band)


def apply_delay(spec: OpticalSpectrum, law: DelayLaw) -> OpticalSpectrum:
    freqs = spec.freqs
    cycles = freqs * law.delay(freqs)
    factors = np.exp(-2j * np.pi * np.mod(cycles, 1.0))
    return OpticalSpectrum(
        tuple(
            SpectralLine(line.freq, line.amp * factor)
            for line, factor in zip(spec.lines, factors, strict=True)
        )
    )


def align_mmwave_slope(n: float, d1: float, d2: float) -> float:
    """
    Slope k of the RRH grating so that the cascaded slope n + k equals n * d2 / d1.
    """
    if not (d1 > 0 and d2 > 0):
        raise InvalidInput(f"Element spacings must be > 0, got d1={d1}, d2={d2}.")
    return (d2 - d1) * n / d1


def effective_rf_delay(
    line_a: SpectralLine | float,
    law_a: DelayLaw,
    line_b: SpectralLine | float,
    law_b: DelayLaw,
) -> float:
    """
    Delay of the beat tone between two delayed optical lines:
    (f_a t_a - f_b t_b) / (f_a - f_b).
    """
    freq_a = float(getattr(line_a, "freq", line_a))
    freq_b = float(getattr(line_b, "freq", line_b))
    if freq_a == freq_b:
        raise DegenerateBeat(f"Both beat partners sit at {freq_a:g} Hz.")
    delay_a = float(law_a.delay(freq_a))
    delay_b = float(law_b.delay(freq_b))
    return (freq_a * delay_a - freq_b * delay_b) / (freq_a - freq_b)
