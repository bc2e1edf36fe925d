"""Pruned exhaustive backtracking search for distance magic labelings.

The search decides existence on small graphs and doubles as the empirical
oracle for the closed-form classifiers.  An `exhausted_none` outcome is a
certificate that the full (pruned) space contains no labeling; every prune
below is admissible, so pruning never changes the found/none answer.

Vertex order is fixed (descending degree, ties by id) and candidate labels
are tried in ascending order, so the returned witness is the
lexicographically first label sequence along that vertex order, and runs are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, regularity
from .magic import Labeling

FOUND = "found"
EXHAUSTED_NONE = "exhausted_none"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    """Node cap for one search; None means unlimited."""

    max_nodes: int | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError(f"bounded budget must be positive, got {self.max_nodes}")


@dataclass
class SearchStats:
    nodes: int = 0  # assignments pushed
    steps: int = 0  # candidate labels tried
    prunes: dict = field(default_factory=dict)

    def prune(self, reason: str):
        self.prunes[reason] = self.prunes.get(reason, 0) + 1


@dataclass(frozen=True)
class SearchOutcome:
    tag: str
    labeling: Labeling | None
    magic_constant: int | None
    stats: SearchStats


class _Budget(Exception):
    pass


def find_distance_magic(g: Graph, budget: SearchBudget | None = None) -> SearchOutcome:
    """Decide whether g admits a distance magic labeling.

    Fast paths: odd-regular graphs are rejected outright, and for regular
    graphs the magic constant is pinned to r(n+1)/2.  Irregular graphs are
    searched once per candidate k in the rearrangement bounds
    ceil(min/n) .. floor(max/n) of sum(d(v) * l(v)) / n, ascending.
    """
    stats = SearchStats()
    n = g.n
    if n == 0:
        return SearchOutcome(FOUND, Labeling(()), 0, stats)

    r = regularity(g)
    if r is not None and r % 2 == 1:
        stats.prune("odd_regular")
        return SearchOutcome(EXHAUSTED_NONE, None, None, stats)
    if r is not None:
        if (r * (n + 1)) % 2:
            stats.prune("k_not_integral")
            return SearchOutcome(EXHAUSTED_NONE, None, None, stats)
        candidates = [r * (n + 1) // 2]
    else:
        degrees = sorted(g.degree(v) for v in range(n))
        labels = list(range(1, n + 1))
        low = sum(d * l for d, l in zip(degrees, reversed(labels)))
        high = sum(d * l for d, l in zip(degrees, labels))
        k_min = -(-low // n)
        k_max = high // n
        if k_min > k_max:
            stats.prune("k_range_empty")
            return SearchOutcome(EXHAUSTED_NONE, None, None, stats)
        candidates = list(range(k_min, k_max + 1))

    max_nodes = budget.max_nodes if budget is not None else None
    for k in candidates:
        try:
            witness = _search_k(g, k, stats, max_nodes)
        except _Budget:
            return SearchOutcome(BUDGET_EXCEEDED, None, None, stats)
        if witness is not None:
            return SearchOutcome(FOUND, witness, k, stats)
    return SearchOutcome(EXHAUSTED_NONE, None, None, stats)


def _search_k(g: Graph, k: int, stats: SearchStats, max_nodes):
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    adj = [g.neighbors(v) for v in range(n)]

    assigned = [0] * n  # label of v, 0 = unassigned
    nbr_sum = [0] * n  # sum of assigned labels over N(v)
    nbr_left = [g.degree(v) for v in range(n)]  # unassigned neighbors of v
    unused = [True] * (n + 1)  # unused[l] for labels 1..n
    trail = []  # assignment stack, shared; frames roll back to a mark
    prunes = stats.prunes

    def propagate(units) -> bool:
        # Single-slot propagation: when all but one neighbor of u is labeled,
        # the last one is pinned to k - nbr_sum[u]; closed neighborhoods must
        # hit k exactly.  Only branches with zero completions are discarded,
        # so exhaustiveness and the lexicographically-first witness survive.
        nodes = stats.nodes
        work = list(units)
        while work:
            u = work.pop()
            left = nbr_left[u]
            if left == 0:
                if nbr_sum[u] != k:
                    prunes["closed_neighborhood"] = prunes.get("closed_neighborhood", 0) + 1
                    stats.nodes = nodes
                    return False
            elif left == 1:
                au = adj[u]
                w = next(x for x in au if not assigned[x])
                need = k - nbr_sum[u]
                if need < 1 or need > n or not unused[need]:
                    prunes["forced_unavailable"] = prunes.get("forced_unavailable", 0) + 1
                    stats.nodes = nodes
                    return False
                nodes += 1
                assigned[w] = need
                unused[need] = False
                trail.append(w)
                for x in adj[w]:
                    nbr_sum[x] += need
                    nbr_left[x] -= 1
                work.extend(adj[w])
        stats.nodes = nodes
        return True

    def rollback(mark):
        while len(trail) > mark:
            v = trail.pop()
            lab = assigned[v]
            assigned[v] = 0
            unused[lab] = True
            for u in adj[v]:
                nbr_sum[u] -= lab
                nbr_left[u] += 1

    def bounds_ok() -> bool:
        # remaining-label feasibility for every partially labeled neighborhood:
        # fill the open slots with the smallest / largest unused labels
        free = [l for l in range(1, n + 1) if unused[l]]
        asc = [0]
        for l in free:
            asc.append(asc[-1] + l)
        desc = [0]
        for l in reversed(free):
            desc.append(desc[-1] + l)
        for v in range(n):
            left = nbr_left[v]
            if left == 0:
                continue
            if nbr_sum[v] + asc[left] > k:
                prunes["sum_too_high"] = prunes.get("sum_too_high", 0) + 1
                return False
            if nbr_sum[v] + desc[left] < k:
                prunes["sum_too_low"] = prunes.get("sum_too_low", 0) + 1
                return False
        return True

    def dfs(pos: int):
        while pos < n and assigned[order[pos]]:
            pos += 1
        if pos == n:
            return Labeling(tuple(assigned))
        v = order[pos]
        av = adj[v]
        for lab in range(1, n + 1):
            if not unused[lab]:
                continue
            stats.steps += 1
            stats.nodes += 1
            if max_nodes is not None and stats.nodes > max_nodes:
                raise _Budget()
            mark = len(trail)
            assigned[v] = lab
            unused[lab] = False
            trail.append(v)
            for u in av:
                nbr_sum[u] += lab
                nbr_left[u] -= 1
            if propagate(av) and bounds_ok():
                if max_nodes is not None and stats.nodes > max_nodes:
                    raise _Budget()
                got = dfs(pos + 1)
                if got is not None:
                    return got
            rollback(mark)
        return None

    if not propagate(range(n)):
        rollback(0)
        return None
    if max_nodes is not None and stats.nodes > max_nodes:
        raise _Budget()
    witness = dfs(0)
    if witness is None:
        rollback(0)
    return witness


def check_family(named_graphs, budget: SearchBudget | None = None):
    """Run the search over (name, graph) pairs, preserving order."""
    return [(name, find_distance_magic(g, budget)) for name, g in named_graphs]
