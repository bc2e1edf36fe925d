"""Rearranging balanced labelings of direct products.

Three label-swap operations, each exchanging exactly two labels while
preserving the bijection, every vertex weight, and balance, and each
establishing one promised twin pair; a coupling procedure that rewrites a
balanced labeling until either some H-layer is closed under twins or the
H-layers are matched in pairs with twins aligned coordinatewise; and the
extraction of a balanced labeling of one factor from either outcome.

All operations consume and produce immutable values.  The scramble used to
exercise them permutes labels inside classes of vertices with identical
neighborhoods, driven by a fixed linear congruential generator
(x -> 1664525*x + 1013904223 mod 2^32) feeding a Fisher-Yates shuffle, so
scrambles are reproducible from the seed alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .magic import Labeling, verify_balanced
from .products import DIRECT, LEXICOGRAPHIC, ProductGraph

CLOSED_H_LAYER = "closed_H_layer"
COUPLED_PAIRS = "coupled_pairs"


@dataclass(frozen=True)
class BalancedProductLabeling:
    """A product labeling verified balanced, with its twin involution.

    twins[v] is the vertex holding the complementary label |V|+1-l(v).
    """

    product: ProductGraph
    labeling: Labeling
    twins: tuple[int, ...]


def make_balanced(prod: ProductGraph, labeling: Labeling) -> BalancedProductLabeling:
    """Verify and wrap; rejects labelings that are not balanced on the product."""
    if prod.kind not in (DIRECT, LEXICOGRAPHIC):
        raise InputError(f"expected a direct or lexicographic product, got {prod.kind!r}")
    report = verify_balanced(prod.base, labeling)
    if not report.is_balanced:
        raise InputError(
            f"labeling is not balanced on the product ({report.failure_count} failures)"
        )
    return BalancedProductLabeling(prod, labeling, report.twin_map)


def _twin_coords(bl: BalancedProductLabeling, gi: int, hi: int) -> tuple[int, int]:
    return bl.product.decode(bl.twins[bl.product.encode(gi, hi)])


def _exchange(bl: BalancedProductLabeling, a: int, b: int) -> BalancedProductLabeling:
    vals = list(bl.labeling.values)
    vals[a], vals[b] = vals[b], vals[a]
    return make_balanced(bl.product, Labeling(tuple(vals)))


def _require(condition, message):
    if not condition:
        raise InputError(message)


def swap_lemma1(bl: BalancedProductLabeling, v1: int, v2: int) -> BalancedProductLabeling:
    """Twins (g,h) and (g',h') with g != g' and h != h': exchange the labels of
    (g',h') and (g',h).  The result is balanced with twins (g,h) and (g',h).

    Valid because in a direct product N(g,h) = N(g',h') = N(g',h) = N(g,h'),
    so the exchange moves labels between vertices with one shared neighborhood.
    """
    prod = bl.product
    _require(prod.kind == DIRECT, "lemma swaps apply to direct products only")
    g1, h1 = prod.decode(v1)
    g2, h2 = prod.decode(v2)
    _require(bl.twins[v1] == v2, f"vertices {v1} and {v2} are not twins")
    _require(g1 != g2, "twin pair lies in one H-layer (G-coordinates equal)")
    _require(h1 != h2, "twin pair already aligned (H-coordinates equal)")
    return _exchange(bl, v2, prod.encode(g2, h1))


def swap_lemma2(bl, g, gp, h, h1, h2) -> BalancedProductLabeling:
    """Twins (g,h),(g',h) and in-layer twins (g,h1),(g,h2): exchange the labels
    of (g,h2) and (g',h1), giving twins (g,h1) and (g',h1).

    h, h1, h2 are required pairwise distinct (the in-layer pair cannot involve
    the anchor coordinate, and h1 = h2 would be a vertex twinned with itself).
    """
    prod = bl.product
    _require(prod.kind == DIRECT, "lemma swaps apply to direct products only")
    _require(g != gp, "anchor layers must differ")
    _require(len({h, h1, h2}) == 3, "h, h1, h2 must be pairwise distinct")
    _require(
        bl.twins[prod.encode(g, h)] == prod.encode(gp, h),
        f"({g},{h}) and ({gp},{h}) are not twins",
    )
    _require(
        bl.twins[prod.encode(g, h1)] == prod.encode(g, h2),
        f"({g},{h1}) and ({g},{h2}) are not twins",
    )
    return _exchange(bl, prod.encode(g, h2), prod.encode(gp, h1))


def swap_lemma3(bl, g, gp, gpp, h, hp) -> BalancedProductLabeling:
    """Twins (g,h),(g',h) and twins (g,h'),(g'',h') with g'' != g': exchange
    the labels of (g',h') and (g'',h'), giving twins (g,h') and (g',h')."""
    prod = bl.product
    _require(prod.kind == DIRECT, "lemma swaps apply to direct products only")
    _require(gpp != gp, "g'' must differ from g'")
    _require(g != gp and g != gpp, "g must differ from g' and g''")
    _require(
        bl.twins[prod.encode(g, h)] == prod.encode(gp, h),
        f"({g},{h}) and ({gp},{h}) are not twins",
    )
    _require(
        bl.twins[prod.encode(g, hp)] == prod.encode(gpp, hp),
        f"({g},{hp}) and ({gpp},{hp}) are not twins",
    )
    return _exchange(bl, prod.encode(gp, hp), prod.encode(gpp, hp))


@dataclass(frozen=True)
class CoupleOutcome:
    """Either one twin-closed H-layer, or a pairing of all H-layers such that
    within a pair (g, g') the twin of (g,h) is (g',h) for every h."""

    tag: str
    closed_g: int | None = None
    pairs: tuple[tuple[int, int], ...] | None = None
    swaps: int = 0


def _layer_closed(bl: BalancedProductLabeling, g: int) -> bool:
    return all(_twin_coords(bl, g, h)[0] == g for h in range(bl.product.hsize))


def couple_layers(bl: BalancedProductLabeling, on_swap=None):
    """Rewrite the labeling until an H-layer is twin-closed or all H-layers
    are coupled in pairs; returns (rewritten labeling, outcome).

    Deterministic choices: the working layer g is the smallest id remaining,
    and within each rewriting pass the smallest product vertex id is processed
    first.  Passes run in lemma order: first lemma-1 exchanges align the
    H-coordinate of any twin reaching outside layer g, then lemma-3 exchanges
    pull coordinate-aligned twins from third layers into g', then lemma-2
    exchanges break up pairs living inside layer g.  Every exchange couples a
    row or strictly shrinks the set of misaligned rows, so the pass loop
    terminates.

    on_swap, when given, is called as on_swap(before, after, lemma_name) for
    every exchange.
    """
    prod = bl.product
    if prod.kind != DIRECT:
        raise InputError("coupling applies to direct products only")
    if not prod.base.edges:
        raise InputError("product has no edges; twin structure is undefined")

    hsize = prod.hsize
    swaps = 0

    def apply(fn, *args, lemma):
        nonlocal bl, swaps
        new = fn(bl, *args)
        swaps += 1
        if on_swap is not None:
            on_swap(bl, new, lemma)
        bl = new

    remaining = set(range(prod.gsize))
    pairs = []
    while True:
        if not remaining:
            return bl, CoupleOutcome(COUPLED_PAIRS, pairs=tuple(pairs), swaps=swaps)
        if len(remaining) == 1:
            g = next(iter(remaining))
            if not _layer_closed(bl, g):
                raise AssertionError("last remaining H-layer must be twin-closed")
            return bl, CoupleOutcome(CLOSED_H_LAYER, closed_g=g, swaps=swaps)
        g = min(remaining)
        if _layer_closed(bl, g):
            return bl, CoupleOutcome(CLOSED_H_LAYER, closed_g=g, swaps=swaps)

        # pick the partner layer g' from the smallest cross twin, aligning it
        gp = None
        for h in range(hsize):
            tg, th = _twin_coords(bl, g, h)
            if tg != g:
                gp = tg
                if th != h:
                    apply(swap_lemma1, prod.encode(g, h), prod.encode(tg, th), lemma="lemma1")
                break
        assert gp is not None and gp in remaining

        while True:
            state = [_twin_coords(bl, g, h) for h in range(hsize)]
            if all(state[h] == (gp, h) for h in range(hsize)):
                break
            anchor = next(h for h in range(hsize) if state[h] == (gp, h))
            moved = False
            for h in range(hsize):
                tg, th = state[h]
                if tg != g and th != h:
                    apply(swap_lemma1, prod.encode(g, h), prod.encode(tg, th), lemma="lemma1")
                    moved = True
                    break
            if moved:
                continue
            for h in range(hsize):
                tg, th = state[h]
                if th == h and tg not in (g, gp):
                    apply(swap_lemma3, g, gp, tg, anchor, h, lemma="lemma3")
                    moved = True
                    break
            if moved:
                continue
            for h in range(hsize):
                tg, th = state[h]
                if tg == g and th != h:
                    h1, h2 = (h, th) if h < th else (th, h)
                    apply(swap_lemma2, g, gp, anchor, h1, h2, lemma="lemma2")
                    moved = True
                    break
            if not moved:
                raise AssertionError("uncovered twin configuration while coupling")

        remaining -= {g, gp}
        pairs.append((g, gp))


def closed_h_layer_outcome(bl: BalancedProductLabeling) -> CoupleOutcome:
    """Outcome for the smallest twin-closed H-layer, without any rewriting.

    This is the route for lexicographic products, whose balanced labelings
    keep twins inside H-layers whenever the second factor has edges.
    """
    for g in range(bl.product.gsize):
        if _layer_closed(bl, g):
            return CoupleOutcome(CLOSED_H_LAYER, closed_g=g, swaps=0)
    raise InputError("no twin-closed H-layer in this labeling")


def extract_factor_labeling(bl: BalancedProductLabeling, outcome: CoupleOutcome):
    """Read a balanced labeling of one factor off a coupling outcome.

    Returns ("H", labeling of the second factor) for a closed H-layer, or
    ("G", labeling of the first factor) for coupled pairs.  The outcome is
    revalidated against the current labeling, so a stale outcome is rejected.
    """
    prod = bl.product
    if outcome.tag == CLOSED_H_LAYER:
        g = outcome.closed_g
        if g is None or not (0 <= g < prod.gsize):
            raise InputError(f"closed layer id {g} out of range [0,{prod.gsize})")
        if not _layer_closed(bl, g):
            raise InputError(f"stale outcome: H-layer {g} is not twin-closed for this labeling")
        hsize = prod.hsize
        values = [0] * hsize
        nextlabel = 1
        for h in range(hsize):
            if values[h]:
                continue
            _, th = _twin_coords(bl, g, h)
            values[h] = nextlabel
            values[th] = hsize - nextlabel + 1
            nextlabel += 1
        return "H", Labeling(tuple(values))

    if outcome.tag == COUPLED_PAIRS:
        if outcome.pairs is None:
            raise InputError("coupled outcome carries no pairs")
        flat = [g for pair in outcome.pairs for g in pair]
        if sorted(flat) != list(range(prod.gsize)):
            raise InputError("coupled pairs do not partition the first factor's vertices")
        for a, b in outcome.pairs:
            for h in range(prod.hsize):
                if _twin_coords(bl, a, h) != (b, h):
                    raise InputError(
                        f"stale outcome: twin of ({a},{h}) is not ({b},{h}) for this labeling"
                    )
        gsize = prod.gsize
        values = [0] * gsize
        for i, (a, b) in enumerate(sorted(outcome.pairs, key=min), start=1):
            lo, hi = (a, b) if a < b else (b, a)
            values[lo] = i
            values[hi] = gsize - i + 1
        return "G", Labeling(tuple(values))

    raise InputError(f"unknown outcome tag {outcome.tag!r}")


# ---------------------------------------------------------------------------
# Seeded scramble
# ---------------------------------------------------------------------------

class _Lcg:
    """Numerical Recipes LCG, 32-bit state; the documented scramble driver."""

    def __init__(self, seed: int):
        self.state = seed & 0xFFFFFFFF

    def below(self, bound: int) -> int:
        self.state = (1664525 * self.state + 1013904223) & 0xFFFFFFFF
        return self.state % bound


def equal_neighborhood_classes(graph) -> list[list[int]]:
    """Vertex classes with identical neighborhoods, each ascending, ordered by
    smallest member.  Dict lookup hashes the sorted neighbor tuple and falls
    back to full comparison on collision."""
    classes = {}
    for v in range(graph.n):
        classes.setdefault(graph.neighbors(v), []).append(v)
    return sorted(classes.values(), key=lambda c: c[0])


def scramble_balanced(bl: BalancedProductLabeling, seed: int) -> BalancedProductLabeling:
    """Permute labels inside each equal-neighborhood class, deterministically
    from the seed.  Weights and the twin condition are preserved because any
    neighborhood contains all or none of each class."""
    rng = _Lcg(seed)
    values = list(bl.labeling.values)
    for cls in equal_neighborhood_classes(bl.product.base):
        if len(cls) < 2:
            continue
        labels = [values[v] for v in cls]
        for i in range(len(labels) - 1, 0, -1):  # Fisher-Yates
            j = rng.below(i + 1)
            labels[i], labels[j] = labels[j], labels[i]
        for v, lab in zip(cls, labels):
            values[v] = lab
    return make_balanced(bl.product, Labeling(tuple(values)))
