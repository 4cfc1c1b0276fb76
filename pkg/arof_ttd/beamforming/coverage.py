"""
Steering coverage: peak angles of both bands while the CU grating is swept.
"""

import logging
import typing
from dataclasses import replace
from typing import TYPE_CHECKING

import numpy as np

from arof_ttd.beamforming.steering import BandSteering, steer_feeds
from arof_ttd.constants import ServiceBand
from arof_ttd.exceptions import InvalidInput, NoPeak
from arof_ttd.frontend.feeds import FeedExtraction, extract_element_feeds

if TYPE_CHECKING:
    from arof_ttd.config.scenario import ScenarioConfig

logger = logging.getLogger("arof_ttd.beamforming")


class CoveragePoint(typing.NamedTuple):
    band: ServiceBand
    sign: int
    chirp: float | None
    delta_t: float
    peak_angle: float


def design_steering(
    cfg: "ScenarioConfig", extraction: FeedExtraction, band: ServiceBand
) -> BandSteering:
    """
    Steering of the service tone closest to the band design frequency.
    """
    steering = steer_feeds(
        extraction.band_feeds(band),
        cfg.geometry(band),
        cfg.grid.angles(),
        band,
        increment=extraction.increments.get(band),
    )
    if not steering:
        raise NoPeak(f"No service tone is shared by all the {band.value} elements.")
    design = cfg.band_config(band).design_frequency
    return min(steering, key=lambda item: abs(item.freq - design))


def _points(cfg: "ScenarioConfig", bands) -> list[CoveragePoint]:
    extraction = extract_element_feeds(cfg)
    return [
        CoveragePoint(
            band=band,
            sign=cfg.cfbg.sign,
            chirp=cfg.cfbg.chirp,
            delta_t=cfg.delta_t(band),
            peak_angle=design_steering(cfg, extraction, band).result.peak_angle,
        )
        for band in bands
    ]


def coverage_sweep(
    cfg: "ScenarioConfig",
    chirp_range: tuple[float, float],
    steps: int,
    signs=(1,),
    bands=tuple(ServiceBand),
) -> list[CoveragePoint]:
    """
    Run the whole chain for `steps` total chirps (m) evenly spread over `chirp_range` and
    every grating orientation in `signs`.
    """
    if steps < 1:
        raise InvalidInput(f"Coverage sweep needs at least one step, got {steps}.")
    points = []
    for sign in signs:
        for chirp in np.linspace(*chirp_range, steps):
            scenario = replace(
                cfg, cfbg=replace(cfg.cfbg, chirp=float(chirp), delta_t=None, sign=sign)
            )
            points.extend(_points(scenario, bands))
    logger.info("Coverage sweep: %s points", len(points))
    return points


def slope_coverage_sweep(
    cfg: "ScenarioConfig",
    delta_t_range: tuple[float, float],
    steps: int,
    bands=tuple(ServiceBand),
) -> list[CoveragePoint]:
    """
    Sweep the signed CU delay difference (s) through `delta_t_range`, negative values
    reversing the grating.
    """
    if steps < 1:
        raise InvalidInput(f"Coverage sweep needs at least one step, got {steps}.")
    points = []
    for delta_t in np.linspace(*delta_t_range, steps):
        sign = -1 if delta_t < 0 else 1
        scenario = replace(
            cfg, cfbg=replace(cfg.cfbg, chirp=None, delta_t=float(abs(delta_t)), sign=sign)
        )
        points.extend(_points(scenario, bands))
    logger.info("Slope coverage sweep: %s points", len(points))
    return points
