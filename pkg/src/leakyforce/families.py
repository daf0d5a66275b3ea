"""Closed-form l-forcing numbers, product bounds, and grid 1-forcing patterns."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil
from typing import Optional

from .errors import ParameterError
from .forcing import Verdict, verify_l_forcing
from .graph import FamilySpec, Graph, build_family, grid

# Z_1 of the n x m grid (n <= m) obtained by exhaustive computation.
GRID_Z1_TABLE = {
    (2, 2): 2, (2, 3): 3, (2, 4): 4, (2, 5): 4, (2, 6): 4, (2, 7): 4,
    (3, 3): 3, (3, 4): 4, (3, 5): 5, (3, 6): 6, (3, 7): 6,
    (4, 4): 4, (4, 5): 5, (4, 6): 6, (4, 7): 7, (4, 8): 8,
    (5, 5): 5, (5, 6): 6, (5, 7): 7,
    (6, 6): 6, (6, 7): 7,
    (7, 7): 7,
}

# wing pattern (L, R, offset) keyed by m - n; the block height H is (m - offset) / 2
_WING_EVEN = {1: (1, 1, 2), 2: (1, 1, 2), 3: (2, 2, 4), 4: (2, 2, 4), 5: (3, 3, 6)}
_WING_ODD = {1: (0, 1, 1), 2: (0, 1, 1), 3: (1, 2, 3), 4: (2, 3, 5), 5: (3, 4, 7)}


@dataclass(frozen=True)
class ClosedForm:
    """Known value or bounds of Z_l for a family member.

    ``status`` is ``"exact"`` (lower == upper), ``"bounds"``, or
    ``"unknown"`` (no bound is claimed; lower and upper are ``None``).
    """

    family: FamilySpec
    ell: int
    status: str
    lower: Optional[int]
    upper: Optional[int]
    source: str

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.status == "exact" else None

    @property
    def exact(self) -> bool:
        return self.status == "exact"


def _exact(spec, ell, value, source):
    return ClosedForm(spec, ell, "exact", value, value, source)


def _bounds(spec, ell, lower, upper, source):
    if lower == upper:
        return ClosedForm(spec, ell, "exact", lower, upper, source)
    return ClosedForm(spec, ell, "bounds", lower, upper, source)


def _path_value(n, ell):
    if n == 1:
        return 1
    return {0: 1, 1: 2}.get(ell, n)


def closed_form_z(spec: FamilySpec, ell: int) -> ClosedForm:
    """Z_l for a named family, or the tightest known interval.

    Grids are normalized to ``n <= m``; the wheel parameter counts rim
    vertices only.
    """
    if ell < 0:
        raise ParameterError("leak budget must be non-negative")
    kind, p = spec.kind, spec.params
    if kind == "path":
        return _exact(spec, ell, _path_value(p[0], ell), "path formula")
    if kind == "cycle":
        n = p[0]
        return _exact(spec, ell, 2 if ell <= 1 else n, "cycle formula")
    if kind == "complete":
        n = p[0]
        return _exact(spec, ell, n - 1 if ell <= n - 2 else n, "complete graph formula")
    if kind == "wheel":
        n = p[0]
        if ell <= 1:
            v = 3
        elif ell == 2:
            v = ceil(2 * n / 3) + 1
        elif ell < n:
            v = n
        else:
            v = n + 1
        return _exact(spec, ell, v, "wheel formula")
    if kind == "star":
        t = p[0]
        if t == 1:
            return _exact(spec, ell, 1 if ell == 0 else 2, "complete graph formula")
        if ell == 0:
            return _exact(spec, ell, t - 1, "all but one leaf of a tree")
        if ell < t:
            return _exact(spec, ell, t, "leaves of a tree")
        return _exact(spec, ell, t + 1, "degree bound: every vertex has degree <= l")
    if kind == "hypercube":
        return _hypercube(spec, ell)
    return _grid(spec, ell)


def _hypercube(spec, ell):
    d = spec.params[0]
    if d == 1:
        return _exact(spec, ell, 1 if ell == 0 else 2, "complete graph formula")
    if ell >= d:
        return _exact(spec, ell, 1 << d, "degree bound: every vertex has degree <= l")
    half = 1 << (d - 1)
    if ell <= 1:
        return _exact(spec, ell, half, "hypercube zero forcing number")
    special = {(3, 2): 6, (4, 3): 10}
    if (d, ell) in special:
        return _exact(spec, ell, special[(d, ell)], "computed hypercube value")
    # product with Q_4 (l = 2) or Q_5 (l = 3) meets the zero forcing lower bound
    if (ell == 2 and d >= 4) or (ell == 3 and d >= 5):
        return _exact(spec, ell, half, "product bound meets zero forcing number")
    return ClosedForm(spec, ell, "unknown", None, None, "no known value")


def _grid(spec, ell):
    n, m = sorted(spec.params)
    if n == 1:
        return _exact(spec, ell, _path_value(m, ell), "path formula")
    if ell == 0:
        return _exact(spec, ell, n, "grid zero forcing number")
    if ell >= 4 or (n == 2 and ell >= 3):
        return _exact(spec, ell, n * m, "degree bound: every vertex has degree <= l")
    if ell == 1:
        if n == m:
            return _exact(spec, ell, n, "array pattern meets zero forcing number")
        if (n, m) in GRID_Z1_TABLE:
            return _exact(spec, ell, GRID_Z1_TABLE[(n, m)], "computed grid table")
        return _bounds(spec, ell, n, grid_z1_upper_bound(n, m), "pattern upper bounds")
    low_degree = sum(1 for v in range(n * m) if _grid_degree(n, m, v) <= ell)
    z1 = _grid(FamilySpec("grid", (n, m)), 1)
    return _bounds(spec, ell, max(z1.lower, low_degree), n * m,
                   "chain and degree lower bounds")


def _grid_degree(n, m, v):
    r, c = divmod(v, m)
    return (r > 0) + (r < n - 1) + (c > 0) + (c < m - 1)


def grid_z1_upper_bound(n: int, m: int) -> int:
    """Best pattern-based upper bound on Z_1 of the n x m grid."""
    n, m = sorted((n, m))
    best = min(2 * n, 2 * m - n)
    if m // 2 + 2 >= n or (m - n <= 5 and m >= 7):
        best = min(best, m)
    return best


def tree_z1(g: Graph) -> tuple[int, frozenset[int]]:
    """Z_1 of a tree and its optimal set, the leaves."""
    if not g.is_connected() or g.edge_count != g.n - 1:
        raise ParameterError(f"{g.label or 'graph'} is not a tree")
    if g.n == 1:
        return 1, frozenset([0])
    if g.n == 2:
        raise ParameterError("K_2 is excluded: both vertices are needed")
    leaves = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    return len(leaves), leaves


def product_upper_bound(zg: int, zh: int, size_g: int, size_h: int) -> int:
    """Bound on Z_l(G x H): copy a minimum set of one factor across the other."""
    return min(size_g * zh, size_h * zg)


# -- grid patterns ---------------------------------------------------------

PATTERN_KINDS = ("array", "bar", "wing")


@dataclass(frozen=True)
class GridPattern:
    kind: str
    n: int
    m: int
    cells: frozenset[tuple[int, int]]  # (row, col), 1-based

    def vertices(self) -> frozenset[int]:
        return frozenset((r - 1) * self.m + (c - 1) for r, c in self.cells)


def wing_parameters(n: int, m: int) -> tuple[int, int, int]:
    """(L, R, H) for the wing pattern; requires ``1 <= m - n <= 5``."""
    gap = m - n
    table = _WING_EVEN if m % 2 == 0 else _WING_ODD
    if gap not in table:
        raise ParameterError(f"wing pattern needs 1 <= m - n <= 5, got m - n = {gap}")
    left, right, offset = table[gap]
    return left, right, (m - offset) // 2


def _check_pattern_domain(kind, n, m):
    if kind not in PATTERN_KINDS:
        raise ParameterError(f"unknown pattern {kind!r}")
    if not 1 <= n <= m:
        raise ParameterError(f"patterns need 1 <= n <= m, got n={n}, m={m}")
    if kind == "bar" and not m // 2 + 2 >= n:
        raise ParameterError(f"bar pattern needs floor(m/2) + 2 >= n, got {m // 2 + 2} < {n}")
    if kind == "wing":
        if m < 7:
            raise ParameterError(f"wing pattern needs m >= 7, got m={m}")
        if not n <= m <= n + 5:
            raise ParameterError(f"wing pattern needs n <= m <= n + 5, got n={n}, m={m}")


def grid_pattern(kind: str, n: int, m: int) -> GridPattern:
    """Initial cells of the array (2m - n cells), bar (m) or wing (m) pattern.

    Array: a two-row block of n cells at the left end of the middle rows,
    plus columns n+1..m of the top and bottom rows. Bar: the two center
    cells of row 1 and columns 2..m-1 of row 2. Wing: columns 2..L+1 and
    m-R..m-1 of row 2 (mirror images of each other) plus the two center
    columns over rows 1..H.

    Raises ``ParameterError`` outside the pattern's hypotheses, and when the
    prescribed cells leave the grid or coincide (for instance the array with
    n = 1, whose top and bottom rows are the same row).
    """
    _check_pattern_domain(kind, n, m)
    cells: list[tuple[int, int]] = []
    if kind == "array":
        if n % 2:
            c = (n + 1) // 2
            cells += [(c, j) for j in range(1, c + 1)]
            cells += [(c - 1, j) for j in range(1, c)]
        else:
            h = n // 2
            cells += [(h, j) for j in range(1, h + 1)]
            cells += [(h + 1, j) for j in range(1, h + 1)]
        for j in range(n + 1, m + 1):
            cells += [(1, j), (n, j)]
    elif kind == "bar":
        c = m // 2 if m % 2 == 0 else (m + 1) // 2
        cells += [(1, c), (1, c + 1)]
        cells += [(2, j) for j in range(2, m)]
    else:
        left, right, height = wing_parameters(n, m)
        cells += [(2, i + 1) for i in range(1, left + 1)]
        cells += [(2, m - i) for i in range(1, right + 1)]
        for i in range(1, height + 1):
            cells += [(i, m // 2), (i, m // 2 + 1)]
    for r, c in cells:
        if not (1 <= r <= n and 1 <= c <= m):
            raise ParameterError(f"{kind} cell {(r, c)} lies outside the {n}x{m} grid")
    if len(set(cells)) != len(cells):
        raise ParameterError(f"{kind} pattern cells coincide for n={n}, m={m}")
    return GridPattern(kind, n, m, frozenset(cells))


def verify_pattern(kind: str, n: int, m: int, threads: Optional[int] = None) -> Verdict:
    """Check the pattern against every single-leak placement on the n x m grid."""
    pat = grid_pattern(kind, n, m)
    return verify_l_forcing(grid(n, m), pat.vertices(), 1, threads)


def grid_sides(n: int, m: int, sides) -> frozenset[int]:
    """Vertices along the named sides (``top``, ``bottom``, ``left``, ``right``)."""
    out = set()
    for side in sides:
        if side == "top":
            out.update(range(m))
        elif side == "bottom":
            out.update((n - 1) * m + c for c in range(m))
        elif side == "left":
            out.update(r * m for r in range(n))
        elif side == "right":
            out.update(r * m + m - 1 for r in range(n))
        else:
            raise ParameterError(f"unknown side {side!r}")
    return frozenset(out)


def family_graph(spec: FamilySpec) -> Graph:
    return build_family(spec)
