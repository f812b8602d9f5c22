from enum import Enum


class Space(str, Enum):
    HYPERGRAPH = "hypergraph"
    PROJECTED = "projected"
