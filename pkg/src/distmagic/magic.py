"""Distance magic verification.

A labeling is a bijection from vertices onto {1..n}.  It is distance magic
when every open-neighborhood label sum (the vertex weight) equals one constant
k, and balanced when additionally the graph has even order and every
neighborhood that contains the vertex labeled i also contains the vertex
labeled n+1-i (its twin).

Edge case fixed here once and for all: a graph with no edges and even order is
accepted as balanced distance magic with k = 0, and the report carries a
`degenerate` flag so callers can tell this apart from a genuinely positive
magic constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, regularity

MAX_DIAGNOSTICS = 32


@dataclass(frozen=True)
class Labeling:
    """values[v] is the label of vertex v; labels form a bijection onto {1..n}."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)


def check_labeling(g: Graph, labeling: Labeling):
    """Reject anything that is not a bijection onto {1..n} for this graph."""
    _check_bijection(g.n, labeling)


def _check_bijection(n: int, labeling: Labeling):
    vals = labeling.values
    if len(vals) != n:
        raise InputError(f"labeling has {len(vals)} entries for a graph on {n} vertices")
    seen = set()
    duplicates = set()
    for x in vals:
        if x in seen:
            duplicates.add(x)
        seen.add(x)
    missing = sorted(set(range(1, n + 1)) - seen)
    out_of_range = sorted({x for x in vals if not (1 <= x <= n)})
    if duplicates or missing or out_of_range:
        parts = []
        if duplicates:
            parts.append(f"duplicate labels {sorted(duplicates)}")
        if missing:
            parts.append(f"missing labels {missing}")
        if out_of_range:
            parts.append(f"labels outside 1..{n}: {out_of_range}")
        raise InputError("labeling is not a bijection: " + "; ".join(parts))


def label_positions(labeling: Labeling) -> tuple[int, ...]:
    """positions[i-1] = the vertex carrying label i."""
    pos = [0] * len(labeling.values)
    for v, x in enumerate(labeling.values):
        pos[x - 1] = v
    return tuple(pos)


def weight(g: Graph, labeling: Labeling, v: int) -> int:
    """Sum of labels over N(v); 0 for isolated vertices."""
    check_labeling(g, labeling)
    return sum(labeling.values[u] for u in g.neighbors(v))


def weights(g: Graph, labeling: Labeling) -> tuple[int, ...]:
    vals = labeling.values
    return tuple(sum(vals[u] for u in g.neighbors(v)) for v in range(g.n))


@dataclass(frozen=True)
class Diagnostic:
    """One verification failure: what a vertex should have seen vs what it saw."""

    vertex: int
    expected: int
    actual: int
    kind: str  # "weight" or "twin"


@dataclass(frozen=True)
class TwinPairCheck:
    u: int
    v: int
    non_adjacent: bool
    equal_neighborhoods: bool


@dataclass(frozen=True)
class VerifyReport:
    weights: tuple[int, ...]
    magic_constant: int | None
    is_distance_magic: bool
    is_balanced: bool
    degenerate: bool
    twin_map: tuple[int, ...] | None
    twin_pairs: tuple[TwinPairCheck, ...]
    failures: tuple[Diagnostic, ...]
    failure_count: int


def verify_distance_magic(g: Graph, labeling: Labeling) -> VerifyReport:
    """Check the uniform-weight condition and report per-vertex weights."""
    check_labeling(g, labeling)
    w = weights(g, labeling)
    uniform = len(set(w)) <= 1
    k = (w[0] if g.n else 0) if uniform else None
    failures, count = _weight_failures(w) if not uniform else ((), 0)
    return VerifyReport(
        weights=w,
        magic_constant=k,
        is_distance_magic=uniform,
        is_balanced=False,
        degenerate=uniform and not g.edges,
        twin_map=None,
        twin_pairs=(),
        failures=failures,
        failure_count=count,
    )


def verify_balanced(g: Graph, labeling: Labeling) -> VerifyReport:
    """Check the twin (balanced) condition on top of distance magic.

    Balanced requires: even order, uniform weights, and for every vertex w and
    every u in N(w), the vertex labeled n+1-l(u) also in N(w).  When balanced,
    twin_map pairs the vertex labeled i with the vertex labeled n+1-i, and each
    pair is recorded with its non-adjacency / equal-neighborhood facts.
    """
    base = verify_distance_magic(g, labeling)
    n = g.n
    failures = list(base.failures)
    count = base.failure_count
    pairing_ok = True
    if n % 2 == 0:
        vals = labeling.values
        pos = label_positions(labeling)
        for w_v in range(n):
            nb = g.neighbor_set(w_v)
            for u in g.neighbors(w_v):
                partner = pos[n - vals[u]]
                if partner not in nb:
                    pairing_ok = False
                    count += 1
                    if len(failures) < MAX_DIAGNOSTICS:
                        failures.append(
                            Diagnostic(w_v, expected=n + 1 - vals[u], actual=vals[u], kind="twin")
                        )
    else:
        pairing_ok = False

    balanced = pairing_ok and n % 2 == 0 and base.is_distance_magic
    twin_map = None
    twin_pairs = ()
    if balanced:
        vals = labeling.values
        pos = label_positions(labeling)
        twin_map = tuple(pos[n - vals[v]] for v in range(n))
        checks = []
        for i in range(1, n // 2 + 1):
            u, v = pos[i - 1], pos[n - i]
            checks.append(
                TwinPairCheck(
                    u=u,
                    v=v,
                    non_adjacent=not g.has_edge(u, v),
                    equal_neighborhoods=g.neighbor_set(u) == g.neighbor_set(v),
                )
            )
        twin_pairs = tuple(checks)

    return VerifyReport(
        weights=base.weights,
        magic_constant=base.magic_constant,
        is_distance_magic=base.is_distance_magic,
        is_balanced=balanced,
        degenerate=base.degenerate,
        twin_map=twin_map,
        twin_pairs=twin_pairs,
        failures=tuple(failures),
        failure_count=count,
    )


def _weight_failures(w):
    # reference value: the most common weight, smallest on ties
    counts = {}
    for x in w:
        counts[x] = counts.get(x, 0) + 1
    expected = min(sorted(counts), key=lambda x: (-counts[x], x))
    bad = [(v, x) for v, x in enumerate(w) if x != expected]
    diags = tuple(
        Diagnostic(v, expected=expected, actual=x, kind="weight")
        for v, x in bad[:MAX_DIAGNOSTICS]
    )
    return diags, len(bad)


def theoretical_k(g: Graph) -> int | None:
    """Magic constant r(n+1)/2 forced on any r-regular distance magic graph.

    None when g is irregular or when r(n+1) is odd (integrality obstruction).
    """
    r = regularity(g)
    if r is None:
        return None
    if (r * (g.n + 1)) % 2:
        return None
    return r * (g.n + 1) // 2


def odd_regular_obstruction(g: Graph) -> bool:
    """True iff g is r-regular with r odd, hence certainly not distance magic."""
    r = regularity(g)
    return r is not None and r % 2 == 1


# ---------------------------------------------------------------------------
# Equalized incomplete tournament export
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EitRow:
    team: int  # vertex id
    strength: int  # label
    opponents: tuple[int, ...]  # opponent strengths, ascending
    total: int


@dataclass(frozen=True)
class EitSchedule:
    teams: int
    rounds: int
    magic_constant: int
    rows: tuple[EitRow, ...]


def eit_schedule(g: Graph, labeling: Labeling) -> EitSchedule:
    """Export an r-regular distance magic labeling as an EIT(n, r) table.

    Team i has strength = its label, plays the teams labeling its neighbors,
    and every opponent-strength total equals the magic constant.
    """
    r = regularity(g)
    if r is None:
        raise InputError("EIT export needs a regular graph; degrees are not all equal")
    report = verify_distance_magic(g, labeling)
    if not report.is_distance_magic:
        raise InputError(
            f"EIT export needs a distance magic labeling; {report.failure_count} weight mismatches"
        )
    rows = []
    for v in range(g.n):
        opponents = tuple(sorted(labeling.values[u] for u in g.neighbors(v)))
        rows.append(EitRow(v, labeling.values[v], opponents, sum(opponents)))
    rows.sort(key=lambda row: row.strength)
    return EitSchedule(g.n, r, report.magic_constant, tuple(rows))


def format_eit(schedule: EitSchedule) -> str:
    out = [f"teams={schedule.teams} rounds={schedule.rounds} k={schedule.magic_constant}"]
    for row in schedule.rows:
        opp = ",".join(str(x) for x in row.opponents)
        out.append(f"team={row.team} strength={row.strength} opponents={opp} total={row.total}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Labeling text format: n lines "v l(v)"
# ---------------------------------------------------------------------------

def parse_labeling(text: str, n: int) -> Labeling:
    lines = [ln for ln in text.splitlines()]
    if len(lines) != n:
        raise InputError(f"expected {n} labeling lines, got {len(lines)}")
    values = [0] * n
    seen_vertices = set()
    for i, line in enumerate(lines, start=1):
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {i}: labeling line must be 'v label', got {line!r}")
        try:
            v, lab = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputError(f"line {i}: labeling line must be two integers, got {line!r}")
        if not (0 <= v < n):
            raise InputError(f"line {i}: vertex {v} out of range [0,{n})")
        if v in seen_vertices:
            raise InputError(f"line {i}: vertex {v} labeled twice")
        seen_vertices.add(v)
        values[v] = lab
    labeling = Labeling(tuple(values))
    _check_bijection(n, labeling)
    return labeling


def format_labeling(labeling: Labeling) -> str:
    return "".join(f"{v} {x}\n" for v, x in enumerate(labeling.values))


# ---------------------------------------------------------------------------
# Report rendering
# ---------------------------------------------------------------------------

def report_kv(report: VerifyReport) -> str:
    """Stable machine-readable key=value form."""
    k = "none" if report.magic_constant is None else str(report.magic_constant)
    lines = [
        f"is_distance_magic={_b(report.is_distance_magic)}",
        f"magic_constant={k}",
        f"is_balanced={_b(report.is_balanced)}",
        f"degenerate={_b(report.degenerate)}",
        f"failure_count={report.failure_count}",
    ]
    return "\n".join(lines) + "\n"


def report_text(report: VerifyReport) -> str:
    """Human-readable block."""
    out = []
    if report.is_distance_magic:
        out.append(f"distance magic: yes (k = {report.magic_constant})")
    else:
        out.append("distance magic: no")
    out.append(f"balanced: {'yes' if report.is_balanced else 'no'}")
    if report.degenerate:
        out.append("degenerate: graph has no edges, k = 0 by convention")
    if report.weights:
        out.append(f"weights: min={min(report.weights)} max={max(report.weights)}")
    if report.twin_map is not None:
        pairs = sorted({tuple(sorted((v, t))) for v, t in enumerate(report.twin_map)})
        out.append("twin pairs: " + " ".join(f"({u},{v})" for u, v in pairs))
    if report.failure_count:
        out.append(f"failures: {report.failure_count} total, first {len(report.failures)} shown")
        for d in report.failures:
            out.append(f"  vertex {d.vertex}: {d.kind} expected {d.expected}, got {d.actual}")
    return "\n".join(out) + "\n"


def _b(flag: bool) -> str:
    return "true" if flag else "false"
