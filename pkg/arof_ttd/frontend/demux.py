import logging
from dataclasses import dataclass

from arof_ttd.constants import ServiceBand
from arof_ttd.exceptions import InvalidInput
from arof_ttd.optics.spectrum import OpticalSpectrum

logger = logging.getLogger("arof_ttd.frontend")


@dataclass(frozen=True)
class ChannelPlan:
    """
    Per-element optical windows [low, high) of one service band.

    `references` holds, per element, the frequency of the line every service tone of that
    element is meant to beat against (the lambda1 carrier for sub-6GHz, the lambda2 line for
    mmWave).
    """

    band: ServiceBand
    windows: tuple[tuple[float, float], ...] = ()
    references: tuple[float, ...] = ()

    def __post_init__(self):
        for low, high in self.windows:
            if not low < high:
                raise InvalidInput(f"Demux window [{low:g}, {high:g}) is empty.")
        ordered = sorted(self.windows)
        for (_, previous_high), (low, _) in zip(ordered, ordered[1:], strict=False):
            if low < previous_high:
                raise InvalidInput("Demux windows of different elements overlap.")
        if self.references and len(self.references) != len(self.windows):
            raise InvalidInput("One reference line per demux window is required.")

    @classmethod
    def regular(
        cls,
        band: ServiceBand,
        first_channel: float,
        spacing: float,
        n_elements: int,
        window_low: float,
        window_high: float,
        reference_offset: float = 0.0,
    ) -> "ChannelPlan":
        centers = [first_channel + index * spacing for index in range(n_elements)]
        return cls(
            band=band,
            windows=tuple((center + window_low, center + window_high) for center in centers),
            references=tuple(center + reference_offset for center in centers),
        )

    @property
    def span(self) -> tuple[float, float]:
        return min(low for low, _ in self.windows), max(high for _, high in self.windows)

    def __len__(self):
        return len(self.windows)


@dataclass(frozen=True)
class DemuxResult:
    channels: tuple[OpticalSpectrum, ...]
    dead_elements: tuple[int, ...] = ()

    def __len__(self):
        return len(self.channels)

    def __iter__(self):
        return iter(self.channels)

    def __getitem__(self, index):
        return self.channels[index]


def demux(port: OpticalSpectrum, plan: ChannelPlan) -> DemuxResult:
    channels = tuple(port.lines_in(low, high) for low, high in plan.windows)
    dead_elements = tuple(index for index, channel in enumerate(channels) if len(channel) < 2)
    for index in dead_elements:
        logger.warning(
            "Element %s of band %s receives %s line(s), no beat possible",
            index,
            plan.band.value,
            len(channels[index]),
        )
    return DemuxResult(channels=channels, dead_elements=dead_elements)
