"""Binary graph constructions: Cartesian product, lexicographic product,
and vertex amalgamation.

Product vertices are laid out row-major: the pair ``(gv, hv)`` lands at
index ``gv * n_H + hv``, and the returned map converts both ways so
witnesses found inside a product can be reported in factor coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = ["ProductVertexMap", "cartesian_product", "lexicographic_product", "amalgamate"]


@dataclass(frozen=True)
class ProductVertexMap:
    """Row-major bijection between factor pairs and product vertex indices."""

    n_left: int
    n_right: int

    def index(self, gv: int, hv: int) -> int:
        if not (0 <= gv < self.n_left and 0 <= hv < self.n_right):
            raise IndexError(f"pair ({gv},{hv}) out of range")
        return gv * self.n_right + hv

    def pair(self, idx: int) -> tuple[int, int]:
        if not 0 <= idx < self.n_left * self.n_right:
            raise IndexError(f"index {idx} out of range")
        return divmod(idx, self.n_right)


def _check_operands(g: Graph, h: Graph) -> None:
    if g.n == 0 or h.n == 0:
        raise ValueError("product operands must be nonempty")


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Box product: move along one coordinate at a time."""
    _check_operands(g, h)
    vmap = ProductVertexMap(g.n, h.n)
    edges = []
    for gv in range(g.n):
        for hu, hv in h.edges():
            edges.append((vmap.index(gv, hu), vmap.index(gv, hv)))
    for hv in range(h.n):
        for gu, gv in g.edges():
            edges.append((vmap.index(gu, hv), vmap.index(gv, hv)))
    return Graph(g.n * h.n, edges), vmap


def lexicographic_product(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    """Composition: left-factor edges join whole fibers, right edges stay inside one."""
    _check_operands(g, h)
    vmap = ProductVertexMap(g.n, h.n)
    edges = []
    for gu, gv in g.edges():
        for hu in range(h.n):
            for hv in range(h.n):
                edges.append((vmap.index(gu, hu), vmap.index(gv, hv)))
    for gv in range(g.n):
        for hu, hv in h.edges():
            edges.append((vmap.index(gv, hu), vmap.index(gv, hv)))
    return Graph(g.n * h.n, edges), vmap


def amalgamate(g: Graph, gv: int, h: Graph, hv: int) -> Graph:
    """Glue ``h`` onto ``g`` by identifying ``hv`` with ``gv``.

    The result keeps the labels of ``g``; the surviving vertices of ``h``
    follow in their original sorted order starting at ``g.n``.  The glued
    vertex carries both neighborhoods, so the induced copies of either
    operand come back intact.
    """
    if not 0 <= gv < g.n:
        raise IndexError(f"vertex {gv} out of range for the left operand")
    if not 0 <= hv < h.n:
        raise IndexError(f"vertex {hv} out of range for the right operand")
    keep = [w for w in range(h.n) if w != hv]
    relabel = {w: g.n + i for i, w in enumerate(keep)}
    relabel[hv] = gv
    edges = list(g.edges())
    edges.extend((relabel[a], relabel[b]) for a, b in h.edges())
    return Graph(g.n + h.n - 1, edges)
