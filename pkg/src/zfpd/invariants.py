"""Exact solvers for the forcing and domination parameters, with witnesses.

Every solver searches cardinalities in ascending order and, within one
cardinality, masks in ascending numeric order, so the returned witness is
always the smallest-bitmask minimum set.  The searches are plain exhaustive
sweeps over ``k``-subsets; the only shortcuts are safe bounds (a zero
forcing set can never beat the minimum degree, a total dominating set never
has fewer than two vertices), which the tests exercise against unpruned
reference implementations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph, bits, is_tree, induces_connected, k_subsets
from .propagation import ForceLog, closure, closure_with_log

__all__ = [
    "ParamResult",
    "zero_forcing_number",
    "power_domination_number",
    "domination_number",
    "total_domination_number",
    "path_cover_number",
    "spider_number",
    "diameter",
    "is_spider",
    "find_zero_forcing_set",
    "find_power_dominating_set",
]

_PATH_COVER_CAP = 24

Witness = Union[int, tuple[tuple[int, ...], ...]]


@dataclass(frozen=True)
class ParamResult:
    """A parameter value plus the witness that attains it.

    ``witness`` is a vertex mask for the set-valued parameters and a tuple
    of vertex sequences for the partition-valued ones.  ``certificate``
    carries the force log that proves a forcing-style witness works.
    """

    value: int
    witness: Witness
    certificate: Optional[ForceLog] = None


def _require_connected(g: Graph, what: str) -> None:
    if g.n == 0 or not g.is_connected():
        raise ValueError(f"{what} requires a nonempty connected graph")


def find_zero_forcing_set(g: Graph, k: int) -> Optional[int]:
    """Smallest-bitmask zero forcing set of size exactly ``k``, if one exists."""
    full = g.full_mask
    for m in k_subsets(g.n, k):
        if closure(g, m) == full:
            return m
    return None


def find_power_dominating_set(g: Graph, k: int) -> Optional[int]:
    """Smallest-bitmask power dominating set of size exactly ``k``, if one exists."""
    full = g.full_mask
    for m in k_subsets(g.n, k):
        if closure(g, g.closed_neighborhood(m)) == full:
            return m
    return None


def zero_forcing_number(g: Graph) -> ParamResult:
    """Minimum size of a zero forcing set, with witness and force log."""
    _require_connected(g, "the zero forcing number")
    delta = g.degree_stats()[0]
    for k in range(max(1, delta), g.n + 1):
        m = find_zero_forcing_set(g, k)
        if m is not None:
            _, log = closure_with_log(g, m)
            return ParamResult(k, m, log)
    raise AssertionError("unreachable: the full vertex set always forces")


def power_domination_number(g: Graph, upper_bound: int | None = None) -> ParamResult:
    """Minimum size of a power dominating set, with witness and force log.

    ``upper_bound`` (for instance a known domination or zero forcing number)
    only caps the search; the ascending sweep makes it safe.
    """
    _require_connected(g, "the power domination number")
    cap = g.n if upper_bound is None else min(upper_bound, g.n)
    for k in range(1, cap + 1):
        m = find_power_dominating_set(g, k)
        if m is not None:
            _, log = closure_with_log(g, g.closed_neighborhood(m))
            return ParamResult(k, m, log)
    raise AssertionError("unreachable: the full vertex set always power dominates")


def domination_number(g: Graph) -> ParamResult:
    """Minimum size of a dominating set."""
    _require_connected(g, "the domination number")
    full = g.full_mask
    for k in range(1, g.n + 1):
        for m in k_subsets(g.n, k):
            if g.closed_neighborhood(m) == full:
                return ParamResult(k, m)
    raise AssertionError("unreachable: the full vertex set dominates")


def total_domination_number(g: Graph) -> ParamResult:
    """Minimum size of a total dominating set (every vertex has a neighbor in it)."""
    _require_connected(g, "the total domination number")
    if g.n == 1:
        raise ValueError("total domination is undefined on a single vertex")
    full = g.full_mask
    # No vertex neighbors itself, so a single vertex never totally dominates.
    for k in range(2, g.n + 1):
        for m in k_subsets(g.n, k):
            if g.open_neighborhood(m) == full:
                return ParamResult(k, m)
    raise AssertionError("unreachable: a connected graph on >= 2 vertices has one")


def diameter(g: Graph) -> int:
    """Largest pairwise distance; errors on disconnected input."""
    return g.diameter()


# ---------------------------------------------------------------------------
# partition-valued parameters, both solved by the same subset dynamic program


def _induced_path_masks(g: Graph) -> list[int]:
    """Masks of all vertex sets inducing a path, single vertices included."""
    found = {1 << v for v in range(g.n)}
    stack = [(1 << v, v) for v in range(g.n)]
    while stack:
        mask, tail = stack.pop()
        for w in bits(g.adj[tail] & ~mask):
            # Extending keeps an induced path iff the new vertex sees only the tail.
            if g.adj[w] & mask == 1 << tail:
                grown = mask | 1 << w
                found.add(grown)
                stack.append((grown, w))
    return sorted(found)


def _spider_masks(g: Graph) -> list[int]:
    """Masks of connected vertex sets with at most one in-mask degree above two."""
    out = []
    for mask in range(1, 1 << g.n):
        if not induces_connected(g, mask):
            continue
        heavy = 0
        for v in bits(mask):
            if (g.adj[v] & mask).bit_count() > 2:
                heavy += 1
                if heavy > 1:
                    break
        if heavy <= 1:
            out.append(mask)
    return out


def _min_partition(g: Graph, parts: list[int]) -> tuple[int, list[int]]:
    """Fewest parts from ``parts`` partitioning all vertices, plus one witness.

    Subset DP keyed on the lowest uncovered vertex; ties go to the smallest
    part mask, keeping witnesses deterministic.
    """
    by_low: dict[int, list[int]] = {}
    for p in parts:
        by_low.setdefault(p & -p, []).append(p)
    for group in by_low.values():
        group.sort()
    memo: dict[int, int] = {0: 0}
    choice: dict[int, int] = {}

    def solve(s: int) -> int:
        got = memo.get(s)
        if got is not None:
            return got
        low = s & -s
        best = g.n + 1
        pick = 0
        for q in by_low.get(low, ()):
            if q & ~s:
                continue
            sub = solve(s ^ q)
            if sub + 1 < best:
                best = sub + 1
                pick = q
        memo[s] = best
        choice[s] = pick
        return best

    value = solve(g.full_mask)
    witness = []
    s = g.full_mask
    while s:
        q = choice[s]
        witness.append(q)
        s ^= q
    return value, witness


def _path_order(g: Graph, mask: int) -> tuple[int, ...]:
    """Vertex sequence of the path induced by ``mask``, from its smaller endpoint."""
    verts = list(bits(mask))
    if len(verts) == 1:
        return (verts[0],)
    ends = [v for v in verts if (g.adj[v] & mask).bit_count() == 1]
    at = min(ends)
    seq = [at]
    seen = 1 << at
    while len(seq) < len(verts):
        nxt = g.adj[at] & mask & ~seen
        at = nxt.bit_length() - 1
        seq.append(at)
        seen |= nxt
    return tuple(seq)


def path_cover_number(g: Graph) -> ParamResult:
    """Fewest vertex-disjoint induced paths covering every vertex.

    Exact subset dynamic programming; refuses graphs above 24 vertices
    rather than degrade silently.
    """
    _require_connected(g, "the path cover number")
    if g.n > _PATH_COVER_CAP:
        raise ValueError(f"path cover search is capped at {_PATH_COVER_CAP} vertices")
    value, masks = _min_partition(g, _induced_path_masks(g))
    return ParamResult(value, tuple(_path_order(g, q) for q in masks))


def is_spider(t: Graph) -> bool:
    """True iff ``t`` is a tree with at most one vertex of degree above two.

    Paths and single vertices count as degenerate spiders.
    """
    if not is_tree(t):
        return False
    return sum(1 for row in t.adj if row.bit_count() > 2) <= 1


def spider_number(t: Graph) -> ParamResult:
    """Fewest parts of a vertex partition of a tree into spider-inducing sets."""
    if not is_tree(t):
        raise ValueError("the spider number is defined on trees only")
    value, masks = _min_partition(t, _spider_masks(t))
    return ParamResult(value, tuple(tuple(bits(q)) for q in masks))
