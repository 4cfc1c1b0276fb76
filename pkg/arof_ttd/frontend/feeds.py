"""
End-to-end composition of the CU and RRH chain into per-element RF feeds.
"""

import logging
import typing
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from arof_ttd.constants import ServiceBand
from arof_ttd.exceptions import ChannelOverlap, DeadElement, PhaseAmbiguity
from arof_ttd.frontend.demux import ChannelPlan, demux
from arof_ttd.frontend.detection import BeatTerm, RfTone, bandpass, beat_terms, merge_tones
from arof_ttd.frontend.interleaver import interleave
from arof_ttd.log import chain_stage
from arof_ttd.optics.delay import DelayLaw, apply_delay
from arof_ttd.optics.modulation import direct_modulate, mzm_modulate
from arof_ttd.optics.spectrum import OpticalSpectrum, couple, laser_line
from arof_ttd.settings import ttd_settings

if TYPE_CHECKING:
    from arof_ttd.config.scenario import ScenarioConfig

logger = logging.getLogger("arof_ttd.frontend")


@dataclass(frozen=True)
class ElementFeed:
    """
    RF signal delivered to one antenna element of one band.

    `relative_delays` maps every service frequency present on all the elements of the band
    to the delay of this element relative to element 0.
    """

    element_index: int
    band: ServiceBand
    tones: tuple[RfTone, ...] = ()
    relative_delays: dict[float, float] = field(default_factory=dict)

    def tone_at(self, freq: float) -> RfTone | None:
        tolerance = ttd_settings.MERGE_TOLERANCE
        for tone in self.tones:
            if abs(tone.freq - freq) <= tolerance:
                return tone
        return None

    def phasor_at(self, freq: float) -> complex:
        tone = self.tone_at(freq)
        return 0j if tone is None else tone.phasor


class SpurEntry(typing.NamedTuple):
    band: ServiceBand
    element_index: int
    freq: float
    ratio: float


@dataclass(frozen=True)
class FeedExtraction:
    feeds: tuple[ElementFeed, ...]
    spurs: tuple[SpurEntry, ...] = ()
    increments: dict[ServiceBand, float] = field(default_factory=dict)

    def band_feeds(self, band: ServiceBand) -> list[ElementFeed]:
        return [feed for feed in self.feeds if feed.band == band]

    def measured_increment(self, band: ServiceBand, freq: float) -> float:
        """
        Mean per-element delay increment of one service tone.
        """
        feeds = self.band_feeds(band)
        delays = [feed.relative_delays[freq] for feed in feeds]
        indices = [feed.element_index for feed in feeds]
        return float(np.polyfit(indices, delays, 1)[0])

    def __iter__(self):
        return iter(self.feeds)

    def __len__(self):
        return len(self.feeds)


def unwrap_relative_delays(phases, freq: float, predicted=None) -> np.ndarray:
    """
    Delays relative to the first element from the phases (rad) of one tone, phasor
    exp(-j 2 pi f tau).

    With `predicted` relative delays every value is moved by whole RF periods to the
    closest prediction. Without it consecutive phase steps are wrapped to (-pi, pi) and a
    step of exactly half a period is refused.
    """
    phases = np.asarray(phases, dtype=float)
    period = 1.0 / freq
    if predicted is not None:
        raw = -(phases - phases[0]) / (2 * np.pi * freq)
        predicted = np.asarray(predicted, dtype=float)
        return raw + period * np.round((predicted - raw) / period)

    steps = np.angle(np.exp(1j * np.diff(phases)))
    if np.any(np.isclose(np.abs(steps), np.pi, rtol=0.0, atol=1e-12)):
        raise PhaseAmbiguity(
            f"A phase step of half a period at {freq / 1e9:g} GHz has two equally close delays."
        )
    return np.concatenate(([0.0], np.cumsum(-steps / (2 * np.pi * freq))))


def _optical_ports(
    cfg: "ScenarioConfig", cu_law: DelayLaw, rrh_law: DelayLaw
) -> tuple[OpticalSpectrum, OpticalSpectrum]:
    with chain_stage("spectrum_core"):
        lambda1 = laser_line(cfg.laser1.power, cfg.laser1.frequency)
        lambda1 = mzm_modulate(direct_modulate(lambda1, cfg.rf), cfg.mzm1)
        lambda2 = mzm_modulate(laser_line(cfg.laser2.power, cfg.laser2.frequency), cfg.mzm2)
        logger.debug("Comb lines: lambda1 %s, lambda2 %s", len(lambda1), len(lambda2))

    with chain_stage("dispersive_delay"):
        lambda1 = apply_delay(lambda1, cu_law)
        lambda2 = apply_delay(lambda2, cu_law)

    with chain_stage("photonic_frontend"):
        port1, port2 = interleave(couple(lambda1, lambda2), cfg.interleaver)
        logger.debug("Interleaver: port1 %s lines, port2 %s lines", len(port1), len(port2))

    with chain_stage("dispersive_delay"):
        port2 = apply_delay(port2, rrh_law)
    return port1, port2


def _is_reference_term(term: BeatTerm, reference: float) -> bool:
    tolerance = ttd_settings.MERGE_TOLERANCE
    return abs(term.upper - reference) <= tolerance or abs(term.lower - reference) <= tolerance


def _spur_report(
    terms: list[BeatTerm], reference: float, band: ServiceBand, element_index: int, services
) -> list[SpurEntry]:
    tolerance = ttd_settings.MERGE_TOLERANCE
    spurs = []
    for freq in services:
        matching = [term for term in terms if abs(term.freq - freq) <= tolerance]
        service = sum((term.phasor for term in matching if _is_reference_term(term, reference)), 0j)
        spur_terms = [term for term in matching if not _is_reference_term(term, reference)]
        if not spur_terms:
            continue
        spur = sum((term.phasor for term in spur_terms), 0j)
        ratio = abs(spur) / abs(service) if service != 0 else float("inf")
        spurs.append(SpurEntry(band, element_index, freq, ratio))
    return spurs


def _band_feeds(
    port: OpticalSpectrum,
    plan: ChannelPlan,
    cfg: "ScenarioConfig",
    band: ServiceBand,
    increment: float,
) -> tuple[list[ElementFeed], list[SpurEntry]]:
    band_cfg = cfg.band_config(band)
    services = cfg.service_frequencies(band)
    gain = cfg.detector.amplifier_gain
    channels = demux(port, plan)

    element_tones = []
    spurs = []
    for index, (channel, reference) in enumerate(zip(channels, plan.references, strict=True)):
        terms = bandpass(
            beat_terms(channel, cfg.detector.responsivity),
            band_cfg.passband_low,
            band_cfg.passband_high,
        )
        tones = tuple(
            RfTone(tone.freq, tone.amp * gain, tone.phase) for tone in merge_tones(terms)
        )
        trial = ElementFeed(element_index=index, band=band, tones=tones)
        if all(trial.tone_at(freq) is None for freq in services):
            raise DeadElement(index, band.value)
        element_tones.append(tones)
        spurs.extend(_spur_report(terms, reference, band, index, services))

    trial_feeds = [
        ElementFeed(element_index=index, band=band, tones=tones)
        for index, tones in enumerate(element_tones)
    ]
    shared = [
        freq for freq in services if all(trial.tone_at(freq) is not None for trial in trial_feeds)
    ]
    delays = {}
    predicted = increment * np.arange(len(trial_feeds))
    for freq in shared:
        phases = [trial.tone_at(freq).phase for trial in trial_feeds]
        delays[freq] = unwrap_relative_delays(phases, freq, predicted)

    feeds = [
        ElementFeed(
            element_index=index,
            band=band,
            tones=tones,
            relative_delays={freq: float(values[index]) for freq, values in delays.items()},
        )
        for index, tones in enumerate(element_tones)
    ]
    return feeds, spurs


def extract_element_feeds(cfg: "ScenarioConfig") -> FeedExtraction:
    """
    Run the whole chain of a scenario and return the RF feed of every (element, band).
    """
    cu_law = cfg.cu_delay_law()
    rrh_law = cfg.rrh_delay_law()
    port1, port2 = _optical_ports(cfg, cu_law, rrh_law)

    feeds = []
    spurs = []
    increments = {}
    with chain_stage("photonic_frontend"):
        for band, port in ((ServiceBand.SUB6, port1), (ServiceBand.MMWAVE, port2)):
            increments[band] = cfg.expected_increment(band)
            band_feeds, band_spurs = _band_feeds(
                port, cfg.channel_plan(band), cfg, band, increments[band]
            )
            feeds.extend(band_feeds)
            spurs.extend(band_spurs)

    for spur in spurs:
        logger.warning(
            "Spur on %s element %s at %.3f GHz, %.3g of the service tone",
            spur.band.value,
            spur.element_index,
            spur.freq / 1e9,
            spur.ratio,
        )
    return FeedExtraction(feeds=tuple(feeds), spurs=tuple(spurs), increments=increments)


def check_nominal_chain(cfg: "ScenarioConfig"):
    """
    Static checks run on the zero-delay chain before any simulation: tone vs. channel
    overlap and elements left without a service tone.
    """
    tones = cfg.rf
    tones.check_channel(min(cfg.mzm1.drive_freq, cfg.mzm2.drive_freq))
    laser_gap = abs(cfg.laser2.frequency - cfg.laser1.frequency)
    if tones.tones and tones.max_tone >= laser_gap / 2:
        raise ChannelOverlap(
            f"Tone {tones.max_tone / 1e9:g} GHz overlaps the lambda2 lines "
            f"{laser_gap / 1e9:g} GHz away."
        )
    flat = DelayLaw()
    port1, port2 = _optical_ports(cfg, flat, flat)
    with chain_stage("photonic_frontend"):
        for band, port in ((ServiceBand.SUB6, port1), (ServiceBand.MMWAVE, port2)):
            _band_feeds(port, cfg.channel_plan(band), cfg, band, 0.0)
