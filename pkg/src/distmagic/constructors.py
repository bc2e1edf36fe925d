"""Explicit labeling constructions and closed-form classifiers.

Covers: the canonical C4 labeling, complete bipartite K_{2n,2n}, complete
minus a perfect matching, lexicographic and direct products of a regular
graph with a balanced distance magic graph, and the five-stage grid
construction that labels C_m x C_n (direct product) for m, n = 0 mod 4,
m, n > 4 with magic constant 2mn + 2.

Grid indexing: the direct product of C_m and C_n is viewed as an m x n grid
of cells v[i][j] (row i along C_m, column j along C_n), where the neighbors
of v[i][j] are the four diagonal cells v[i+-1][j+-1] with wraparound.  The
grid converts to a flat labeling under vertex id = i * n + j, which matches
the row-major product encoding.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graphs import Graph, regularity
from .magic import Labeling, verify_balanced

# classifier verdicts for products of cycles
BALANCED_DISTANCE_MAGIC = "balanced_distance_magic"
DISTANCE_MAGIC_NOT_BALANCED = "distance_magic_not_balanced"
NOT_DISTANCE_MAGIC = "not_distance_magic"


def label_c4() -> Labeling:
    """Balanced labeling of C4: consecutive cycle vertices get 1, 2, 4, 3 (k = 5)."""
    return Labeling((1, 2, 4, 3))


def label_complete_bipartite(n: int) -> Labeling:
    """Balanced labeling of K_{2n,2n} as built by graphs.complete_bipartite(2n, 2n).

    Label i goes to the first part when i mod 4 is 0 or 1, to the second part
    otherwise; within a part, labels are placed on ascending vertex ids.
    """
    if n < 1:
        raise InputError(f"complete bipartite construction needs n >= 1, got n={n}")
    size = 4 * n
    values = [0] * size
    a_next, b_next = 0, 2 * n
    for i in range(1, size + 1):
        if i % 4 in (0, 1):
            values[a_next] = i
            a_next += 1
        else:
            values[b_next] = i
            b_next += 1
    return Labeling(tuple(values))


def label_complete_minus_matching(n: int) -> Labeling:
    """Balanced labeling of K_{2n} minus the matching {(2i, 2i+1)}.

    The endpoints of the i-th removed edge (1-based) get labels i and 2n+1-i.
    """
    if n < 1:
        raise InputError(f"matching construction needs n >= 1, got n={n}")
    values = [0] * (2 * n)
    for i in range(n):
        values[2 * i] = i + 1
        values[2 * i + 1] = 2 * n - i
    return Labeling(tuple(values))


def _balanced_input(h: Graph, h_labeling: Labeling):
    report = verify_balanced(h, h_labeling)
    if not report.is_balanced:
        raise InputError("the second factor's labeling must be balanced distance magic")


def label_lexicographic(g: Graph, h: Graph, h_labeling: Labeling) -> Labeling:
    """Balanced labeling of the lexicographic product of g (regular) with a
    balanced (h, h_labeling).

    With p = |V(g)|, t = |V(h)|, the pair whose h-vertex carries label j gets
    (j-1)p + i for j <= t/2 and jp - i + 1 for j > t/2 (i is the 1-based
    g-vertex).  The product's magic constant is (t*r_g + r_h)(tp + 1) / 2.
    """
    if regularity(g) is None:
        raise InputError("the first factor must be regular")
    _balanced_input(h, h_labeling)
    p, t = g.n, h.n
    values = [0] * (p * t)
    for hv in range(t):
        j = h_labeling.values[hv]
        for gv in range(p):
            i = gv + 1
            lab = (j - 1) * p + i if j <= t // 2 else j * p - i + 1
            values[gv * t + hv] = lab
    return Labeling(tuple(values))


def label_direct(g: Graph, h: Graph, h_labeling: Labeling) -> Labeling:
    """Balanced labeling of the direct product of g (regular) with a balanced
    (h, h_labeling).

    With t = |V(g)|, p = |V(h)|, the pair whose h-vertex carries label j gets
    (j-1)t + i for j <= p/2 and jt - i + 1 for j > p/2.  The product's magic
    constant is (r_g * r_h / 2)(pt + 1).
    """
    if regularity(g) is None:
        raise InputError("the first factor must be regular")
    _balanced_input(h, h_labeling)
    t, p = g.n, h.n
    values = [0] * (p * t)
    for hv in range(p):
        j = h_labeling.values[hv]
        for gv in range(t):
            i = gv + 1
            lab = (j - 1) * t + i if j <= p // 2 else j * t - i + 1
            values[gv * p + hv] = lab
    return Labeling(tuple(values))


# ---------------------------------------------------------------------------
# Grid labelings for products of two cycles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridLabeling:
    """Labels of the m x n grid view of the direct product of two cycles."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InputError("grid shape does not match rows x cols")
        total = self.rows * self.cols
        flat = [x for row in self.entries for x in row]
        if sorted(flat) != list(range(1, total + 1)):
            raise InputError(f"grid entries are not a bijection onto 1..{total}")

    def to_labeling(self) -> Labeling:
        """Flatten under vertex id = i * cols + j."""
        return Labeling(tuple(x for row in self.entries for x in row))

    @staticmethod
    def from_labeling(labeling: Labeling, rows: int, cols: int) -> "GridLabeling":
        if rows * cols != len(labeling.values):
            raise InputError(f"cannot reshape {len(labeling.values)} labels into {rows}x{cols}")
        vals = labeling.values
        return GridLabeling(
            rows, cols, tuple(tuple(vals[i * cols + j] for j in range(cols)) for i in range(rows))
        )


def label_cycle_product(m: int, n: int) -> GridLabeling:
    """Distance magic (never balanced) labeling of the direct product of C_m
    and C_n for m, n = 0 mod 4 and m, n > 4, with magic constant 2mn + 2.

    Built in five stages: seeds on every second cell of row 0, then row 2 in
    reversed column order, then the remaining even rows recursively, then the
    odd rows, and finally every odd column from its even neighbor column.
    Labels above mn/2 shift down where labels at most mn/2 shift up, so each
    stage consumes one low and one high block of the label range.
    """
    if m % 4 or n % 4:
        raise InputError(f"both cycle lengths must be divisible by 4, got m={m} n={n}")
    if m <= 4 or n <= 4:
        raise InputError(
            "cycle lengths must exceed 4; for m=4 or n=4 use the direct-product "
            "construction with a balanced C4 instead"
        )
    total = m * n
    half = total // 2
    grid = [[0] * n for _ in range(m)]

    def shifted(value, delta):
        return value + delta if value <= half else value - delta

    # stage 1: row 0, columns 0 and 2 mod 4
    for j in range(n // 4):
        grid[0][4 * j] = 2 * j + 1 if j <= (n + 7) // 8 - 1 else n // 2 - 2 * j
    for j in range(n // 4):
        grid[0][4 * j + 2] = total - 2 * j - 1 if j <= n // 8 - 1 else total - n // 2 + 2 * j + 2

    # stage 2: row 2 reads row 0 in reversed column order
    for j in range(0, n, 2):
        grid[2][j] = shifted(grid[0][n - 2 - j], n // 4)

    # stage 3: even rows 4..m-2, each from the even row four above
    for i in range(2, m // 2):
        for j in range(0, n, 2):
            grid[2 * i][j] = shifted(grid[2 * i - 4][j], n // 2)

    # stage 4: odd rows from the even row below
    for i in range(m // 2):
        for j in range(0, n, 2):
            grid[2 * i + 1][j] = shifted(grid[2 * i][j], total // 8)

    # stage 5: odd columns from the even column to the left
    for i in range(m):
        for j in range(1, n, 2):
            grid[i][j] = shifted(grid[i][j - 1], total // 4)

    return GridLabeling(m, n, tuple(tuple(row) for row in grid))


def cycle_product_magic_constant(m: int, n: int) -> int:
    return 2 * m * n + 2


# ---------------------------------------------------------------------------
# Classifiers for products of cycles
# ---------------------------------------------------------------------------

def classify_cycle_direct(m: int, n: int) -> str:
    """Verdict for the direct product of C_m and C_n.

    Balanced iff m = 4 or n = 4; distance magic but not balanced iff both are
    0 mod 4 and exceed 4; otherwise not distance magic.
    """
    _check_cycle_length(m)
    _check_cycle_length(n)
    if m == 4 or n == 4:
        return BALANCED_DISTANCE_MAGIC
    if m % 4 == 0 and n % 4 == 0:
        return DISTANCE_MAGIC_NOT_BALANCED
    return NOT_DISTANCE_MAGIC


def classify_cycle_cartesian(m: int, n: int) -> bool:
    """Cartesian product of C_m and C_n is distance magic iff m = n = 2 mod 4."""
    _check_cycle_length(m)
    _check_cycle_length(n)
    return m == n and m % 4 == 2


def classify_cycle(n: int) -> bool:
    """C_n is distance magic iff n = 4."""
    _check_cycle_length(n)
    return n == 4


def classify_lex_cycles(n: int, m: int) -> bool:
    """The lexicographic product of C_n with C_m is distance magic iff m = 4."""
    _check_cycle_length(n)
    _check_cycle_length(m)
    return m == 4


def _check_cycle_length(x: int):
    if x < 3:
        raise InputError(f"cycle length must be >= 3, got {x}")


# ---------------------------------------------------------------------------
# Grid text format: header "m n k", then rows printed top-down ending with
# row 0, so the page shows v[0][0] in the lower left corner.
# ---------------------------------------------------------------------------

def format_grid(grid: GridLabeling, k: int) -> str:
    lines = [f"{grid.rows} {grid.cols} {k}"]
    for i in range(grid.rows - 1, -1, -1):
        lines.append(" ".join(str(x) for x in grid.entries[i]))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> tuple[GridLabeling, int]:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise InputError("line 1: missing grid header 'm n k'")
    header = lines[0].split()
    if len(header) != 3:
        raise InputError(f"line 1: grid header must be 'm n k', got {lines[0]!r}")
    try:
        m, n, k = (int(x) for x in header)
    except ValueError:
        raise InputError(f"line 1: grid header must be three integers, got {lines[0]!r}")
    if m < 1 or n < 1:
        raise InputError(f"line 1: grid dimensions must be positive, got m={m} n={n}")
    body = lines[1:]
    if len(body) != m:
        raise InputError(f"expected {m} grid rows after the header, got {len(body)}")
    rows = [()] * m
    for idx, line in enumerate(body):
        i = m - 1 - idx  # rows are printed top-down, row 0 last
        parts = line.split()
        if len(parts) != n:
            raise InputError(f"line {idx + 2}: expected {n} entries, got {len(parts)}")
        try:
            rows[i] = tuple(int(x) for x in parts)
        except ValueError:
            raise InputError(f"line {idx + 2}: grid entries must be integers, got {line!r}")
    return GridLabeling(m, n, tuple(rows)), k
