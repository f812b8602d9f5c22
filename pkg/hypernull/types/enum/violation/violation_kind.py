from enum import Enum


class ViolationKind(str, Enum):
    DEGENERATE_EDGE = "degenerate_edge"
    NODE_OUT_OF_RANGE = "node_out_of_range"
    UNSORTED_EDGE = "unsorted_edge"
    EMPTY_EDGE = "empty_edge"
    MULTIPLICITY_MISMATCH = "multiplicity_mismatch"
    HANDSHAKE = "handshake"
