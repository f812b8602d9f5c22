from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from hypernull.types.enum.metrics import ChoiceKind, ProfileKind, ProfileSource

SizePair = Tuple[int, int]


@dataclass(frozen=True)
class ClusteringReport:
    c_bar: float
    triangles: Tuple[int, ...]
    wedges: Tuple[int, ...]

    def local(self, v: int) -> float:
        return self.triangles[v] / self.wedges[v] if self.wedges[v] else 0.0


@dataclass(frozen=True)
class ChoiceFunction:
    kind: ChoiceKind = ChoiceKind.UNIFORM
    # Seeds the tie-breaking stream of TOP2 / TOPBOTTOM
    seed: int = 0


@dataclass(frozen=True)
class AssortativityResult:
    rho: float
    kind: ChoiceKind
    repetitions: int
    ranks: Tuple[float, ...]
    draws: Tuple[float, ...] = ()


@dataclass(frozen=True)
class IntersectionProfile:
    kind: ProfileKind
    support: Dict[int, float]
    pair_count: int
    source: ProfileSource
    sizes: Optional[SizePair] = None

    @property
    def mean(self) -> float:
        """Average intersection size ⟨J⟩."""
        return sum(j * p for j, p in self.support.items())

    def as_list(self, j_max: Optional[int] = None) -> List[float]:
        top = max(self.support) if j_max is None else j_max
        return [self.support.get(j, 0.0) for j in range(top + 1)]


@dataclass
class RatioGrid:
    """⟨J⟩ / ⟨Ĵ⟩ per size pair; None marks cells with no null signal."""

    sizes: List[int]
    observed: Dict[SizePair, float] = field(default_factory=dict)
    null: Dict[SizePair, Optional[float]] = field(default_factory=dict)
    ratio: Dict[SizePair, Optional[float]] = field(default_factory=dict)

    def cell(self, k: int, ell: int) -> Optional[float]:
        return self.ratio.get((min(k, ell), max(k, ell)))
