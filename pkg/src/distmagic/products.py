"""Cartesian, lexicographic, and direct products of two graphs.

Vertex pairs (g, h) are encoded row-major as g * |V(H)| + h, so each H-layer
(fix g, vary h) is a contiguous block of ids.  Products materialize their full
edge set; at the sizes this library targets that is cheap and keeps every
verifier a plain loop over edges.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph

CARTESIAN = "cartesian"
LEXICOGRAPHIC = "lexicographic"
DIRECT = "direct"

PRODUCT_KINDS = (CARTESIAN, LEXICOGRAPHIC, DIRECT)

H_LAYER = "H"
G_LAYER = "G"


@dataclass(frozen=True)
class ProductGraph:
    """A product together with its factors and the pair encoding."""

    base: Graph
    factor_g: Graph
    factor_h: Graph
    kind: str

    @property
    def gsize(self) -> int:
        return self.factor_g.n

    @property
    def hsize(self) -> int:
        return self.factor_h.n

    def encode(self, gi: int, hi: int) -> int:
        return gi * self.hsize + hi

    def decode(self, v: int) -> tuple[int, int]:
        return divmod(v, self.hsize)


def product(kind: str, g: Graph, h: Graph) -> ProductGraph:
    """Construct the product of the given kind.  Empty factors give empty products."""
    if kind not in PRODUCT_KINDS:
        raise InputError(f"unknown product kind {kind!r}, expected one of {PRODUCT_KINDS}")
    hn = h.n
    edges = set()
    if kind == CARTESIAN:
        for u, v in g.sorted_edges:
            for hi in range(hn):
                edges.add((u * hn + hi, v * hn + hi))
        for gi in range(g.n):
            for a, b in h.sorted_edges:
                edges.add((gi * hn + a, gi * hn + b))
    elif kind == LEXICOGRAPHIC:
        for u, v in g.sorted_edges:
            for hi in range(hn):
                for hj in range(hn):
                    edges.add(_canon(u * hn + hi, v * hn + hj))
        for gi in range(g.n):
            for a, b in h.sorted_edges:
                edges.add((gi * hn + a, gi * hn + b))
    else:
        for u, v in g.sorted_edges:
            for a, b in h.sorted_edges:
                edges.add(_canon(u * hn + a, v * hn + b))
                edges.add(_canon(u * hn + b, v * hn + a))
    base = Graph(g.n * hn, frozenset(edges))
    return ProductGraph(base, g, h, kind)


def _canon(a, b):
    return (a, b) if a < b else (b, a)


def layer(p: ProductGraph, axis: str, fixed: int) -> list[int]:
    """Vertex ids of one layer, in coordinate order.

    axis H: the H-layer of the G-vertex `fixed` (ids (fixed,0)..(fixed,hsize-1)).
    axis G: the G-layer of the H-vertex `fixed`.
    """
    if axis == H_LAYER:
        if not (0 <= fixed < p.gsize):
            raise InputError(f"G-vertex {fixed} out of range [0,{p.gsize})")
        return [p.encode(fixed, hi) for hi in range(p.hsize)]
    if axis == G_LAYER:
        if not (0 <= fixed < p.hsize):
            raise InputError(f"H-vertex {fixed} out of range [0,{p.hsize})")
        return [p.encode(gi, fixed) for gi in range(p.gsize)]
    raise InputError(f"axis must be {H_LAYER!r} or {G_LAYER!r}, got {axis!r}")


def neighborhood_product_check(p: ProductGraph) -> bool:
    """Self-test for direct products: N(a,b) must equal N_G(a) x N_H(b)."""
    if p.kind != DIRECT:
        raise InputError(f"neighborhood product check applies to direct products, got {p.kind!r}")
    for a in range(p.gsize):
        ga = p.factor_g.neighbors(a)
        for b in range(p.hsize):
            expected = {p.encode(x, y) for x in ga for y in p.factor_h.neighbors(b)}
            if expected != set(p.base.neighbors(p.encode(a, b))):
                return False
    return True
