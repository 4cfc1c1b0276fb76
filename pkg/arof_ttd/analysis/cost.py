"""
RRH component tally of the proposed TTD architecture against the conventional
per-service phase-shifter architecture.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum

from arof_ttd.exceptions import InvalidInput
from arof_ttd.runner.tables import ResultTable


# TODO - replace (str, Enum) by StrEnum when python requirements > 3.11
class Architecture(str, Enum):
    PROPOSED = "proposed"
    CONVENTIONAL = "conventional"


class ComponentKind(str, Enum):
    INTERLEAVER = "interleaver"
    CFBG = "cfbg"
    DWDM_DEMUX = "dwdm_demux"
    PD = "pd"
    BPF = "bpf"
    EA = "ea"
    PHASE_SHIFTER = "phase_shifter"
    PSL = "psl"
    LASER = "laser"
    MZM = "mzm"

    @property
    def is_passive(self) -> bool:
        return self in PASSIVE_KINDS


PASSIVE_KINDS = frozenset(
    {ComponentKind.INTERLEAVER, ComponentKind.CFBG, ComponentKind.DWDM_DEMUX}
)

# Kinds reported by the RRH comparison, in table order
RRH_KINDS = (
    ComponentKind.PD,
    ComponentKind.BPF,
    ComponentKind.EA,
    ComponentKind.PHASE_SHIFTER,
    ComponentKind.PSL,
    ComponentKind.INTERLEAVER,
    ComponentKind.CFBG,
    ComponentKind.DWDM_DEMUX,
)
CU_KINDS = (ComponentKind.LASER, ComponentKind.MZM)


@dataclass(frozen=True)
class CostScenario:
    n_services: int
    n_elements: int
    architecture: Architecture = Architecture.PROPOSED
    n_mmwave_services: int | None = None
    include_cu: bool = False

    def __post_init__(self):
        if self.n_services < 1 or self.n_elements < 1:
            raise InvalidInput(
                f"Service and element counts must be >= 1, got {self.n_services} "
                f"and {self.n_elements}."
            )
        if self.n_mmwave_services is not None and not 0 <= self.n_mmwave_services <= self.n_services:
            raise InvalidInput(
                f"n_mmwave_services must be in [0, {self.n_services}], got {self.n_mmwave_services}."
            )
        object.__setattr__(self, "architecture", Architecture(self.architecture))

    @property
    def mmwave_services(self) -> int:
        if self.n_mmwave_services is None:
            return self.n_services // 2
        return self.n_mmwave_services


@dataclass(frozen=True)
class ComponentTally:
    counts: dict[ComponentKind, int]
    metadata: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, kind) -> int:
        return self.counts.get(ComponentKind(kind), 0)

    @property
    def passive(self) -> dict[ComponentKind, int]:
        return {kind: count for kind, count in self.counts.items() if kind.is_passive}

    @property
    def active(self) -> dict[ComponentKind, int]:
        return {kind: count for kind, count in self.counts.items() if not kind.is_passive}


@dataclass(frozen=True)
class TallyDiff:
    deltas: dict[ComponentKind, int]
    score: float


def component_counts(s: CostScenario) -> ComponentTally:
    n_s, n_a = s.n_services, s.n_elements
    if s.architecture == Architecture.PROPOSED:
        # one PD/BPF/EA chain per element and band, whatever the number of services
        counts = {
            ComponentKind.PD: 2 * n_a,
            ComponentKind.BPF: 2 * n_a,
            ComponentKind.EA: 2 * n_a,
            ComponentKind.PHASE_SHIFTER: 0,
            ComponentKind.PSL: 0,
            ComponentKind.INTERLEAVER: 1,
            ComponentKind.CFBG: 1,
            ComponentKind.DWDM_DEMUX: 2,
        }
        metadata = {}
        if s.include_cu:
            counts[ComponentKind.LASER] = 2
            counts[ComponentKind.MZM] = 2
            counts[ComponentKind.CFBG] += 2
    else:
        counts = {
            ComponentKind.PD: n_s,
            ComponentKind.BPF: n_s * n_a,
            ComponentKind.EA: n_s * n_a,
            ComponentKind.PHASE_SHIFTER: n_s * n_a,
            ComponentKind.PSL: n_s,
            ComponentKind.INTERLEAVER: 0,
            ComponentKind.CFBG: 0,
            ComponentKind.DWDM_DEMUX: 1,
        }
        mmwave = s.mmwave_services * n_a
        metadata = {
            "phase_shifter_mmwave": mmwave,
            "phase_shifter_sub6": n_s * n_a - mmwave,
        }
        if s.include_cu:
            counts[ComponentKind.LASER] = n_s
    return ComponentTally(counts=counts, metadata=metadata)


def default_weights() -> dict[ComponentKind, float]:
    """
    One unit per active part, nothing for passive parts.
    """
    return {kind: 0.0 if kind.is_passive else 1.0 for kind in ComponentKind}


def tally_diff(
    a: ComponentTally, b: ComponentTally, weights: Mapping | None = None
) -> TallyDiff:
    """
    Per-kind b - a and the weighted sum of the deltas: the units `a` saves over `b`.
    """
    if weights is None:
        weights = default_weights()
    weights = {ComponentKind(kind): float(value) for kind, value in weights.items()}
    if any(value < 0 for value in weights.values()):
        raise InvalidInput("Cost weights must be >= 0.")
    kinds = [kind for kind in ComponentKind if kind in a.counts or kind in b.counts]
    deltas = {kind: b[kind] - a[kind] for kind in kinds}
    score = sum(weights.get(kind, 0.0) * delta for kind, delta in deltas.items())
    return TallyDiff(deltas=deltas, score=score)


def cost_table(
    n_services: int,
    n_elements: int,
    include_cu: bool = False,
    n_mmwave_services: int | None = None,
    weights: Mapping | None = None,
) -> ResultTable:
    """
    Proposed and conventional counts side by side, with the per-kind saving and the weighted
    score on the last row.
    """
    proposed, conventional = (
        component_counts(
            CostScenario(
                n_services=n_services,
                n_elements=n_elements,
                architecture=architecture,
                n_mmwave_services=n_mmwave_services,
                include_cu=include_cu,
            )
        )
        for architecture in Architecture
    )
    diff = tally_diff(proposed, conventional, weights)
    kinds = RRH_KINDS + (CU_KINDS if include_cu else ())
    rows = [
        (
            kind.value,
            "passive" if kind.is_passive else "active",
            proposed[kind],
            conventional[kind],
            diff.deltas.get(kind, 0),
        )
        for kind in kinds
    ]
    rows.append(("score", "", "", "", diff.score))
    return ResultTable(
        columns=("component", "type", "proposed", "conventional", "saving"),
        units=("", "", "count", "count", "count"),
        rows=tuple(rows),
    )
