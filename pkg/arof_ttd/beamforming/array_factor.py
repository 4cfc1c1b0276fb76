"""
Array factor of a uniform linear array.

Angles are measured from the array axis, 90 degrees is broadside. Element k sits at -k*d on
the 0 degree axis, so the geometric phase of element k toward theta is
exp(-j 2 pi f k d cos(theta) / c) and a positive per-element delay increment tau steers to
cos(theta) = -c tau / d, above broadside.
"""

from dataclasses import dataclass

import numpy as np

from arof_ttd.constants import SPEED_OF_LIGHT
from arof_ttd.exceptions import InvalidInput
from arof_ttd.settings import ttd_settings

# dB floor for pattern nulls
MIN_DB = -300.0


@dataclass(frozen=True)
class ArrayGeometry:
    n_elements: int
    spacing: float

    def __post_init__(self):
        if self.n_elements < 2:
            raise InvalidInput(f"An array needs at least 2 elements, got {self.n_elements}.")
        if not self.spacing > 0:
            raise InvalidInput(f"Element spacing must be > 0 m, got {self.spacing}.")

    @classmethod
    def half_wavelength(cls, n_elements: int, design_frequency: float) -> "ArrayGeometry":
        return cls(n_elements=n_elements, spacing=SPEED_OF_LIGHT / design_frequency / 2)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.n_elements)


@dataclass(frozen=True, eq=False)
class BeamPattern:
    freq: float
    angles: np.ndarray
    magnitude_db: np.ndarray


def angle_grid(start: float = 0.0, stop: float = 180.0, step: float | None = None) -> np.ndarray:
    if step is None:
        step = ttd_settings.ANGLE_GRID_STEP
    if not step > 0 or not 0 <= start < stop <= 180:
        raise InvalidInput(f"Invalid angle grid start={start}, stop={stop}, step={step}.")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(count)


def weights_from_delays(delays, freq: float) -> np.ndarray:
    return np.exp(-2j * np.pi * freq * np.asarray(delays, dtype=float))


def predicted_angle(tau: float, spacing: float) -> float | None:
    """
    Main lobe direction in degrees for a per-element delay increment `tau`,
    None when it falls outside the visible region.
    """
    cosine = -SPEED_OF_LIGHT * tau / spacing
    if abs(cosine) > 1:
        return None
    return float(np.degrees(np.arccos(cosine)))


def array_factor(weights, freq: float, geom: ArrayGeometry, grid) -> BeamPattern:
    weights = np.asarray(weights, dtype=complex)
    grid = np.asarray(grid, dtype=float)
    if weights.shape != (geom.n_elements,):
        raise InvalidInput(
            f"Expected {geom.n_elements} element weights, got {weights.shape[0]}."
        )
    if grid.size == 0:
        raise InvalidInput("Angle grid is empty.")
    if grid.size > 1 and np.any(np.diff(grid) <= 0):
        raise InvalidInput("Angle grid must be strictly increasing.")

    cosines = np.cos(np.radians(grid))
    phase = 2 * np.pi * freq * geom.spacing / SPEED_OF_LIGHT
    steering = np.exp(-1j * phase * np.outer(cosines, geom.indices))
    magnitude = np.abs(steering @ weights)
    peak = magnitude.max()
    if peak == 0:
        raise InvalidInput("All element weights are zero.")
    with np.errstate(divide="ignore"):
        magnitude_db = np.maximum(20 * np.log10(magnitude / peak), MIN_DB)
    return BeamPattern(freq=freq, angles=grid, magnitude_db=magnitude_db)
