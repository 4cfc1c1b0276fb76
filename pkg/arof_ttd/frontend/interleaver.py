"""
Periodic two-port interleaver splitting the combined comb between the sub-6 GHz and mmWave
paths.
"""

from dataclasses import dataclass

import numpy as np

from arof_ttd.exceptions import InvalidInput
from arof_ttd.optics.spectrum import OpticalSpectrum
from arof_ttd.settings import ttd_settings


@dataclass(frozen=True)
class PortFilterSpec:
    """
    Ideal periodic two-port interleaver.

    Port 1 passes the closed window [port1_low, port1_high] measured from `origin` and
    repeated every `period`. Port 2 passes the complement.
    """

    period: float = 50e9
    port1_low: float = 0.0
    port1_high: float = 12.5e9
    origin: float = 0.0

    def __post_init__(self):
        if not self.period > 0:
            raise InvalidInput(f"Interleaver period must be > 0, got {self.period}.")
        width = self.port1_high - self.port1_low
        if not 0 <= width < self.period:
            raise InvalidInput(
                f"Port 1 window width {width:g} Hz must be in [0, period={self.period:g})."
            )

    def port1_mask(self, freqs) -> np.ndarray:
        freqs = np.asarray(freqs, dtype=float)
        tolerance = ttd_settings.MERGE_TOLERANCE
        offset = np.mod(freqs - self.origin - self.port1_low, self.period)
        offset = np.where(self.period - offset <= tolerance, 0.0, offset)
        return offset <= self.port1_high - self.port1_low + tolerance


def interleave(
    spec: OpticalSpectrum, filt: PortFilterSpec
) -> tuple[OpticalSpectrum, OpticalSpectrum]:
    mask = filt.port1_mask(spec.freqs)
    port1 = tuple(line for line, on_port1 in zip(spec.lines, mask, strict=True) if on_port1)
    port2 = tuple(line for line, on_port1 in zip(spec.lines, mask, strict=True) if not on_port1)
    return OpticalSpectrum(port1), OpticalSpectrum(port2)
