"""
Direct laser modulation by the RF service tones and the quadrature-biased MZM comb generator.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.special import jv

from arof_ttd.exceptions import AliasingError, ChannelOverlap, InvalidInput, TruncationError
from arof_ttd.optics.spectrum import OpticalSpectrum, SpectralLine, prune_merge
from arof_ttd.settings import ttd_settings

logger = logging.getLogger("arof_ttd.optics")


@dataclass(frozen=True)
class ToneSet:
    tones: tuple[float, ...] = ()

    def __post_init__(self):
        tones = tuple(float(tone) for tone in self.tones)
        if any(tone <= 0 for tone in tones):
            raise InvalidInput(f"RF tones must be positive, got {tones}.")
        if len(set(tones)) != len(tones):
            raise InvalidInput(f"RF tones must be distinct, got {tones}.")
        object.__setattr__(self, "tones", tones)

    @property
    def max_tone(self) -> float:
        return max(self.tones, default=0.0)

    def check_channel(self, spacing: float):
        """
        Raise `ChannelOverlap` if a sideband would reach half the channel spacing.
        """
        if self.tones and self.max_tone >= spacing / 2:
            raise ChannelOverlap(
                f"Tone {self.max_tone / 1e9:g} GHz does not fit a {spacing / 1e9:g} GHz channel."
            )

    def __iter__(self):
        return iter(self.tones)

    def __len__(self):
        return len(self.tones)


@dataclass(frozen=True)
class MzmConfig:
    drive_freq: float = 50e9
    v_drive: float = 4.0
    v_pi: float = 4.0
    bias_sign: int = 1
    truncation_order: int = field(
        default_factory=lambda: ttd_settings.BESSEL_TRUNCATION_ORDER
    )

    def __post_init__(self):
        if not self.v_pi > 0:
            raise InvalidInput(f"v_pi must be > 0, got {self.v_pi}.")
        if not self.drive_freq > 0:
            raise InvalidInput(f"drive_freq must be > 0, got {self.drive_freq}.")
        if self.truncation_order < 1:
            raise InvalidInput(f"truncation_order must be >= 1, got {self.truncation_order}.")
        if self.bias_sign not in (1, -1):
            raise InvalidInput(f"bias_sign must be +1 or -1, got {self.bias_sign}.")

    @property
    def modulation_index(self) -> float:
        return np.pi * self.v_drive / (2 * self.v_pi)

    @property
    def orders(self) -> np.ndarray:
        return np.arange(-self.truncation_order, self.truncation_order + 1)

    def coefficients(self) -> np.ndarray:
        """
        Field coefficient of every harmonic in `orders`.

        q = 0 gets J_0(x), |q| = 2n gets (-1)^n J_2n(x) and |q| = 2n - 1 gets
        bias_sign (-1)^n J_(2n-1)(x), all scaled by 1/sqrt(2).
        """
        order = np.abs(self.orders)
        half = (order + 1) // 2
        sign = np.where(order % 2 == 0, (-1.0) ** (order // 2), self.bias_sign * (-1.0) ** half)
        return sign * jv(order, self.modulation_index) / np.sqrt(2)

    def energy_deficit(self) -> float:
        return float(1.0 - np.sum(jv(np.abs(self.orders), self.modulation_index) ** 2))


def required_order(x: float, threshold: float | None = None) -> int:
    """
    Smallest truncation order N with |J_(N+1)(x)| below `threshold`.
    """
    if threshold is None:
        threshold = ttd_settings.PRUNE_THRESHOLD
    order = 1
    while abs(jv(order + 1, x)) >= threshold:
        order += 1
    return order


def direct_modulate(spec: OpticalSpectrum, tones: ToneSet) -> OpticalSpectrum:
    if not tones.tones:
        return spec
    if len(spec) > 1:
        tones.check_channel(float(np.min(np.diff(spec.freqs))))

    lines = []
    for line in spec:
        lines.append(line)
        for tone in tones:
            sideband = line.amp / 2
            lines.append(SpectralLine(line.freq - tone, sideband))
            lines.append(SpectralLine(line.freq + tone, sideband))
    return prune_merge(lines)


def _check_aliasing(freqs: np.ndarray, cfg: MzmConfig):
    tolerance = ttd_settings.MERGE_TOLERANCE
    gaps = np.abs(np.subtract.outer(freqs, freqs))[np.triu_indices(len(freqs), k=1)]
    multiples = np.round(gaps / cfg.drive_freq)
    resonant = (
        (multiples >= 1)
        & (multiples <= 2 * cfg.truncation_order)
        & (np.abs(gaps - multiples * cfg.drive_freq) <= tolerance)
    )
    if np.any(resonant):
        gap = gaps[np.argmax(resonant)]
        raise AliasingError(
            f"Input lines {gap / 1e9:g} GHz apart alias under a "
            f"{cfg.drive_freq / 1e9:g} GHz drive."
        )


def mzm_modulate(spec: OpticalSpectrum, cfg: MzmConfig) -> OpticalSpectrum:
    deficit = cfg.energy_deficit()
    if deficit > ttd_settings.BESSEL_ENERGY_TOLERANCE:
        raise TruncationError(
            f"Order {cfg.truncation_order} leaves a {deficit:.3g} energy deficit at "
            f"x={cfg.modulation_index:.4g}, use order {required_order(cfg.modulation_index)}."
        )
    if not spec:
        return spec

    freqs, amps = spec.freqs, spec.amps
    if cfg.modulation_index != 0:
        _check_aliasing(freqs, cfg)

    harmonic_freqs = freqs[:, None] + cfg.orders[None, :] * cfg.drive_freq
    harmonic_amps = amps[:, None] * cfg.coefficients()[None, :]
    logger.debug(
        "MZM comb: %s input lines, %s harmonics each, x=%.4f",
        len(spec),
        len(cfg.orders),
        cfg.modulation_index,
    )
    return prune_merge(
        SpectralLine(float(freq), complex(amp))
        for freq, amp in zip(harmonic_freqs.ravel(), harmonic_amps.ravel(), strict=True)
    )
