from .hypergraph import (
    Edge,
    canonical_edge,
    DegreeSequence,
    DimensionSequence,
    Hypergraph,
    Violation,
    BipartiteGraph,
    ProjectedGraph,
)
from .chain import ChainState, ReshuffleOutcome
from .oracle import SpaceEnumeration, ExactDistribution
from .metrics import (
    SizePair,
    ClusteringReport,
    ChoiceFunction,
    AssortativityResult,
    IntersectionProfile,
    RatioGrid,
)
from .label_map import LabelMap
