from collections import Counter
from typing import List, Sequence

from hypernull.types import Hypergraph, Violation
from hypernull.types.enum.violation import ViolationKind


def validate(hypergraph: Hypergraph) -> List[Violation]:
    """Structured invariant check; an empty list means the value is valid."""
    violations: List[Violation] = []
    degree_total = 0
    for index, edge in enumerate(hypergraph.edges):
        if len(edge) == 0:
            violations.append(
                Violation(
                    ViolationKind.EMPTY_EDGE, f"edge {index} is empty", index
                )
            )
            continue
        if len(set(edge)) != len(edge):
            violations.append(
                Violation(
                    ViolationKind.DEGENERATE_EDGE,
                    f"edge {index} {edge} repeats a node",
                    index,
                )
            )
        elif list(edge) != sorted(edge):
            violations.append(
                Violation(
                    ViolationKind.UNSORTED_EDGE,
                    f"edge {index} {edge} is not in canonical order",
                    index,
                )
            )
        out_of_range = [v for v in edge if v < 0 or v >= hypergraph.n]
        if out_of_range:
            violations.append(
                Violation(
                    ViolationKind.NODE_OUT_OF_RANGE,
                    f"edge {index} has ids {out_of_range} outside "
                    f"[0, {hypergraph.n})",
                    index,
                )
            )
        degree_total += len(edge)

    recount = Counter(hypergraph.edges)
    index = Counter(
        {e: c for e, c in hypergraph.multiplicity_index.items() if c}
    )
    if recount != index:
        diff = sorted(
            set(recount.items()).symmetric_difference(index.items())
        )
        violations.append(
            Violation(
                ViolationKind.MULTIPLICITY_MISMATCH,
                f"multiplicity index disagrees with recount at {diff[:5]}",
            )
        )

    if not any(v.kind == ViolationKind.NODE_OUT_OF_RANGE for v in violations):
        degrees = [0] * hypergraph.n
        for edge in hypergraph.edges:
            for v in edge:
                degrees[v] += 1
        if sum(degrees) != degree_total:
            violations.append(
                Violation(
                    ViolationKind.HANDSHAKE,
                    f"sum of degrees {sum(degrees)} != sum of sizes "
                    f"{degree_total}",
                )
            )
    return violations


def is_valid(hypergraph: Hypergraph) -> bool:
    return not validate(hypergraph)


def configurability_violations(
    d: Sequence[int], k: Sequence[int]
) -> List[str]:
    """Necessary conditions only: Σd = Σk, k_e ≤ n, d_v ≤ m."""
    problems = []
    n, m = len(d), len(k)
    if sum(d) != sum(k):
        problems.append(f"sum(d) = {sum(d)} != sum(k) = {sum(k)}")
    if any(x < 0 for x in d):
        problems.append("negative degree")
    if any(x < 1 for x in k):
        problems.append("edge dimension below 1")
    if k and max(k) > n:
        problems.append(f"edge dimension {max(k)} exceeds n = {n}")
    if d and max(d) > m:
        problems.append(f"degree {max(d)} exceeds m = {m}")
    return problems
