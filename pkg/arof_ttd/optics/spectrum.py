"""
Exact sparse representation of optical fields.

A field is a finite set of monochromatic lines, each with an absolute optical frequency in Hz
and a complex amplitude in sqrt(W). Every operation returns a new `OpticalSpectrum` whose lines
are strictly ascending, merged and pruned.
"""

import logging
import typing
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np

from arof_ttd.exceptions import InvalidInput
from arof_ttd.settings import ttd_settings

logger = logging.getLogger("arof_ttd.optics")

COUPLER_FACTOR = 1 / np.sqrt(2)


class SpectralLine(typing.NamedTuple):
    freq: float
    amp: complex


@dataclass(frozen=True)
class OpticalSpectrum:
    lines: tuple[SpectralLine, ...] = ()

    @classmethod
    def from_arrays(cls, freqs, amps) -> "OpticalSpectrum":
        """
        Build a spectrum from already ordered and merged arrays.
        """
        return cls(
            tuple(
                SpectralLine(float(freq), complex(amp))
                for freq, amp in zip(freqs, amps, strict=True)
            )
        )

    @property
    def freqs(self) -> np.ndarray:
        return np.array([line.freq for line in self.lines], dtype=float)

    @property
    def amps(self) -> np.ndarray:
        return np.array([line.amp for line in self.lines], dtype=complex)

    @property
    def power(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def scaled(self, factor: complex) -> "OpticalSpectrum":
        return OpticalSpectrum(
            tuple(SpectralLine(line.freq, line.amp * factor) for line in self.lines)
        )

    def lines_in(self, low: float, high: float) -> "OpticalSpectrum":
        """
        Lines with low <= freq < high.
        """
        return OpticalSpectrum(tuple(line for line in self.lines if low <= line.freq < high))

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __bool__(self):
        return bool(self.lines)


def prune_merge(
    spec: OpticalSpectrum | Iterable[SpectralLine],
    amp_threshold: float | None = None,
    freq_tolerance: float | None = None,
) -> OpticalSpectrum:
    """
    Coherently sum lines whose neighbour gap is within `freq_tolerance` and drop the lines
    whose magnitude is below `amp_threshold` times the strongest input line.

    A threshold of 0 keeps every line, including exact zeros.
    """
    if amp_threshold is None:
        amp_threshold = ttd_settings.PRUNE_THRESHOLD
    if freq_tolerance is None:
        freq_tolerance = ttd_settings.MERGE_TOLERANCE
    if amp_threshold < 0 or freq_tolerance < 0:
        raise InvalidInput("Prune threshold and merge tolerance must be >= 0.")

    lines = list(spec)
    if not lines:
        return OpticalSpectrum()

    freqs = np.array([line.freq for line in lines], dtype=float)
    amps = np.array([line.amp for line in lines], dtype=complex)
    order = np.argsort(freqs, kind="stable")
    freqs, amps = freqs[order], amps[order]
    reference = np.max(np.abs(amps))

    starts = np.flatnonzero(np.concatenate(([True], np.diff(freqs) > freq_tolerance)))
    freqs = freqs[starts]
    amps = np.add.reduceat(amps, starts)

    if amp_threshold > 0:
        keep = np.abs(amps) >= amp_threshold * reference
        if reference == 0:
            keep[:] = False
        freqs, amps = freqs[keep], amps[keep]
    return OpticalSpectrum.from_arrays(freqs, amps)


def laser_line(power_w: float, center_freq: float) -> OpticalSpectrum:
    if not power_w > 0:
        raise InvalidInput(f"Laser power must be > 0 W, got {power_w}.")
    if not center_freq > 0:
        raise InvalidInput(f"Laser frequency must be > 0 Hz, got {center_freq}.")
    return OpticalSpectrum((SpectralLine(float(center_freq), complex(np.sqrt(power_w))),))


def couple(a: OpticalSpectrum, b: OpticalSpectrum) -> OpticalSpectrum:
    """
    Lossless 2x1 coupler: every input amplitude is scaled by 1/sqrt(2).
    """
    return prune_merge(
        [SpectralLine(line.freq, line.amp * COUPLER_FACTOR) for line in (*a.lines, *b.lines)]
    )
