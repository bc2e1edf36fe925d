"""Shared test helpers, kept independent of the code paths they check."""

import itertools

from distmagic.graphs import Graph


def brute_force_distance_magic(g: Graph):
    """Unpruned check over all n! bijections; the oracle for search outcomes.

    Returns (found, labels or None, k or None) with the first witness in
    lexicographic order of the label tuple indexed by vertex id.
    """
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    for perm in itertools.permutations(range(1, n + 1)):
        k = None
        ok = True
        for v in range(n):
            w = sum(perm[u] for u in adj[v])
            if k is None:
                k = w
            elif w != k:
                ok = False
                break
        if ok:
            return True, perm, (k if k is not None else 0)
    return False, None, None


def enumerate_magic_labelings(g: Graph):
    """Every distance magic labeling of g, as (labels, k) pairs."""
    out = []
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    for perm in itertools.permutations(range(1, n + 1)):
        ws = {sum(perm[u] for u in adj[v]) for v in range(n)}
        if len(ws) <= 1:
            out.append((perm, ws.pop() if ws else 0))
    return out
