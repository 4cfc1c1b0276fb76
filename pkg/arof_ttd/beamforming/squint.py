"""
Beam squint: how far the main lobe moves when the same steering is used at other frequencies.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from arof_ttd.beamforming.array_factor import (
    ArrayGeometry,
    angle_grid,
    array_factor,
    predicted_angle,
    weights_from_delays,
)
from arof_ttd.beamforming.steering import peak_angle
from arof_ttd.constants import SteeringMode
from arof_ttd.exceptions import InvalidInput, NoPeak

logger = logging.getLogger("arof_ttd.beamforming")


@dataclass(frozen=True)
class SquintResult:
    spread: float
    peaks: dict[float, float] = field(default_factory=dict)
    out_of_range: tuple[float, ...] = ()
    mode: SteeringMode = SteeringMode.TTD


def _implied_increment(delays: np.ndarray, design_freq: float, freq: float, mode) -> float:
    increment = float(np.polyfit(np.arange(delays.size), delays, 1)[0])
    if mode == SteeringMode.PHASE_SHIFT:
        # phases frozen at the design frequency act as a delay scaled by f_design / f
        return increment * design_freq / freq
    return increment


def _peak(geom, delays, design_freq, freq, mode, grid) -> float | None:
    expected = predicted_angle(_implied_increment(delays, design_freq, freq, mode), geom.spacing)
    if expected is None:
        return None
    weight_freq = design_freq if mode == SteeringMode.PHASE_SHIFT else freq
    pattern = array_factor(weights_from_delays(delays, weight_freq), freq, geom, grid)
    return peak_angle(pattern, near=expected).peak_angle


def squint_metric(
    geom: ArrayGeometry,
    delays,
    design_freq: float,
    eval_freqs,
    mode: SteeringMode | str = SteeringMode.TTD,
    grid=None,
) -> SquintResult:
    """
    Max peak shift in degrees over `eval_freqs` relative to the peak at `design_freq`.

    In ttd mode the element delays are applied at every frequency. In phase_shift mode the
    element phases computed at `design_freq` are reused unchanged. Frequencies whose main lobe
    leaves the visible region are reported in `out_of_range` and left out of the spread.
    """
    mode = SteeringMode(mode)
    eval_freqs = [float(freq) for freq in eval_freqs]
    if not eval_freqs:
        raise InvalidInput("squint_metric needs at least one evaluation frequency.")
    delays = np.asarray(delays, dtype=float)
    if delays.shape != (geom.n_elements,):
        raise InvalidInput(f"Expected {geom.n_elements} element delays, got {delays.size}.")
    if grid is None:
        grid = angle_grid()

    reference = _peak(geom, delays, design_freq, design_freq, mode, grid)
    if reference is None:
        raise NoPeak(f"Design steering at {design_freq / 1e9:g} GHz is outside the visible region.")

    peaks = {}
    out_of_range = []
    for freq in eval_freqs:
        angle = _peak(geom, delays, design_freq, freq, mode, grid)
        if angle is None:
            logger.info("%s squint: %.3f GHz steers out of range", mode.value, freq / 1e9)
            out_of_range.append(freq)
            continue
        peaks[freq] = angle

    spread = max((abs(angle - reference) for angle in peaks.values()), default=0.0)
    return SquintResult(
        spread=spread,
        peaks=peaks,
        out_of_range=tuple(out_of_range),
        mode=mode,
    )
