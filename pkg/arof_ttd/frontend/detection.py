"""
Square-law photodetection and brick-wall bandpass filtering.
"""

import typing
from collections.abc import Iterable

import numpy as np

from arof_ttd.exceptions import InvalidInput
from arof_ttd.optics.spectrum import OpticalSpectrum, SpectralLine
from arof_ttd.settings import ttd_settings


def normalize_phase(phase: float) -> float:
    """
    Map a phase to (-pi, pi].
    """
    phase = float(np.angle(np.exp(1j * phase)))
    return np.pi if phase <= -np.pi else phase


class RfTone(typing.NamedTuple):
    freq: float
    amp: float
    phase: float

    @classmethod
    def from_phasor(cls, freq: float, phasor: complex) -> "RfTone":
        phase = normalize_phase(float(np.angle(phasor))) if phasor != 0 else 0.0
        return cls(float(freq), float(abs(phasor)), phase)

    @property
    def phasor(self) -> complex:
        return self.amp * np.exp(1j * self.phase)


class BeatTerm(typing.NamedTuple):
    """
    Contribution of one optical line pair to the photocurrent, before coincident beats merge.
    """

    freq: float
    phasor: complex
    upper: float
    lower: float


class Photocurrent(typing.NamedTuple):
    dc: float
    tones: tuple[RfTone, ...]


def beat_phasor(upper: SpectralLine, lower: SpectralLine, responsivity: float) -> complex:
    return 2 * responsivity * upper.amp * np.conj(lower.amp)


def beat_terms(spec: OpticalSpectrum, responsivity: float | None = None) -> list[BeatTerm]:
    if responsivity is None:
        responsivity = ttd_settings.DEFAULT_RESPONSIVITY
    lines = sorted(spec.lines, key=lambda line: line.freq)
    lower_index, upper_index = np.triu_indices(len(lines), k=1)
    return [
        BeatTerm(
            freq=lines[upper].freq - lines[lower].freq,
            phasor=beat_phasor(lines[upper], lines[lower], responsivity),
            upper=lines[upper].freq,
            lower=lines[lower].freq,
        )
        for lower, upper in zip(lower_index, upper_index, strict=True)
    ]


def merge_tones(terms: Iterable[BeatTerm], tolerance: float | None = None) -> tuple[RfTone, ...]:
    """
    Coherently sum beat terms whose frequencies are within `tolerance`.
    """
    if tolerance is None:
        tolerance = ttd_settings.MERGE_TOLERANCE
    terms = list(terms)
    if not terms:
        return ()
    freqs = np.array([term.freq for term in terms], dtype=float)
    phasors = np.array([term.phasor for term in terms], dtype=complex)
    order = np.argsort(freqs, kind="stable")
    freqs, phasors = freqs[order], phasors[order]
    starts = np.flatnonzero(np.concatenate(([True], np.diff(freqs) > tolerance)))
    return tuple(
        RfTone.from_phasor(freq, phasor)
        for freq, phasor in zip(freqs[starts], np.add.reduceat(phasors, starts), strict=True)
    )


def photodetect(spec: OpticalSpectrum, responsivity: float | None = None) -> Photocurrent:
    if responsivity is None:
        responsivity = ttd_settings.DEFAULT_RESPONSIVITY
    dc = responsivity * spec.power
    return Photocurrent(dc=dc, tones=merge_tones(beat_terms(spec, responsivity)))


def bandpass(tones: Iterable, f_lo: float, f_hi: float) -> list:
    """
    Keep the tones (or beat terms) strictly inside (f_lo, f_hi).
    """
    if not f_lo < f_hi:
        raise InvalidInput(f"Bandpass needs f_lo < f_hi, got [{f_lo:g}, {f_hi:g}].")
    return [tone for tone in tones if f_lo < tone.freq < f_hi]
