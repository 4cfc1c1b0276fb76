import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from arof_ttd.beamforming.array_factor import (
    ArrayGeometry,
    BeamPattern,
    array_factor,
    predicted_angle,
)
from arof_ttd.constants import ServiceBand
from arof_ttd.exceptions import NoPeak
from arof_ttd.settings import ttd_settings

if TYPE_CHECKING:
    from arof_ttd.frontend.feeds import ElementFeed

logger = logging.getLogger("arof_ttd.beamforming")


@dataclass(frozen=True)
class SteeringResult:
    peak_angle: float
    peak_width_3db: float
    sidelobe_level_db: float


@dataclass(frozen=True)
class BandSteering:
    band: ServiceBand
    freq: float
    pattern: BeamPattern
    result: SteeringResult
    expected_angle: float | None = None


def _local_maxima(values: np.ndarray) -> np.ndarray:
    """
    Indices of local maxima. The first sample of a flat top wins.
    """
    if values.size == 1:
        return np.array([0])
    rising = np.concatenate(([True], values[1:] > values[:-1]))
    not_falling = np.concatenate((values[:-1] >= values[1:], [True]))
    return np.flatnonzero(rising & not_falling)


def _refine(angles: np.ndarray, values: np.ndarray, index: int) -> float:
    """
    Parabolic interpolation of the peak through the sample and its two neighbours.
    """
    if index == 0 or index == values.size - 1:
        return float(angles[index])
    left, center, right = values[index - 1], values[index], values[index + 1]
    curvature = left - 2 * center + right
    if curvature >= 0:
        return float(angles[index])
    offset = float(np.clip(0.5 * (left - right) / curvature, -0.5, 0.5))
    neighbour = index + 1 if offset > 0 else index - 1
    return float(angles[index] + abs(offset) * (angles[neighbour] - angles[index]))


def _crossing(angles: np.ndarray, values: np.ndarray, index: int, level: float, step: int):
    position = index
    while 0 <= position + step < values.size and values[position] > level:
        position += step
    if values[position] > level:
        return float(angles[position])
    inner = position - step
    fraction = (values[inner] - level) / (values[inner] - values[position])
    return float(angles[inner] + fraction * (angles[position] - angles[inner]))


def peak_angle(pattern: BeamPattern, near: float | None = None) -> SteeringResult:
    """
    Main lobe of a pattern: grid maximum refined by a parabola through the dB values.

    Lobes within LOBE_TIE_TOLERANCE_DB of the maximum are tied (grating lobes). The tie is
    resolved toward `near` when given, else toward the smaller angle.
    """
    values = pattern.magnitude_db
    angles = pattern.angles
    if values.max() - values.min() < 1e-9:
        raise NoPeak(f"Pattern at {pattern.freq / 1e9:g} GHz is flat.")

    maxima = _local_maxima(values)
    tied = [index for index in maxima if values[index] >= values.max() - ttd_settings.LOBE_TIE_TOLERANCE_DB]
    refined = [_refine(angles, values, index) for index in tied]
    choice = 0
    if near is not None:
        choice = int(np.argmin([abs(angle - near) for angle in refined]))
    index = tied[choice]

    level = values[index] - 3.0
    width = _crossing(angles, values, index, level, 1) - _crossing(angles, values, index, level, -1)
    others = [values[other] for other in maxima if other != index]
    sidelobe = float(max(others)) if others else float("-inf")
    return SteeringResult(
        peak_angle=float(np.clip(refined[choice], 0.0, 180.0)),
        peak_width_3db=width,
        sidelobe_level_db=sidelobe,
    )


def steer_feeds(
    feeds: Sequence["ElementFeed"],
    geometry: ArrayGeometry,
    grid,
    band: ServiceBand,
    increment: float | None = None,
) -> list[BandSteering]:
    """
    Pattern and steering result of every service tone shared by all the feeds of a band.

    `increment` is the expected per-element delay increment; the lobe closest to the
    direction it predicts is reported when grating lobes tie.
    """
    feeds = sorted(feeds, key=lambda feed: feed.element_index)
    shared = set(feeds[0].relative_delays)
    for feed in feeds[1:]:
        shared &= set(feed.relative_delays)

    expected = None
    if increment is not None:
        expected = predicted_angle(increment, geometry.spacing)

    steering = []
    for freq in sorted(shared):
        weights = np.array([feed.phasor_at(freq) for feed in feeds])
        if ttd_settings.EQUALIZE_ELEMENT_AMPLITUDES:
            weights = np.exp(1j * np.angle(weights))
        pattern = array_factor(weights, freq, geometry, grid)
        result = peak_angle(pattern, near=expected)
        logger.debug(
            "%s %.3f GHz peak %.4f deg (expected %s)",
            band.value,
            freq / 1e9,
            result.peak_angle,
            expected,
        )
        steering.append(
            BandSteering(
                band=band,
                freq=freq,
                pattern=pattern,
                result=result,
                expected_angle=expected,
            )
        )
    return steering
