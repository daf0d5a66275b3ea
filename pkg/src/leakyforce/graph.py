"""Simple undirected graphs, named families, products, and text formats."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import GraphParseError, GraphValidationError, ParameterError, VertexDomainError

FAMILY_KINDS = ("path", "cycle", "complete", "wheel", "hypercube", "grid", "star")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the ascending tuple of neighbors of ``v``. The label
    records provenance only and does not take part in equality.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphValidationError("a graph needs at least one vertex")
        if len(self.adjacency) != self.n:
            raise GraphValidationError("adjacency length differs from n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphValidationError(f"neighbors of {v} not strictly ascending")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphValidationError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphValidationError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphValidationError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], label: str = "") -> Graph:
        """Build from an edge iterable; duplicate edges collapse."""
        if n < 1:
            raise GraphValidationError("a graph needs at least one vertex")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphValidationError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), label)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighborhood bitmasks, bit ``u`` of ``masks[v]`` set iff ``u ~ v``."""
        out = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def __repr__(self):
        return f"Graph({self.label or '?'}, n={self.n}, m={self.edge_count})"


# -- vertex sets -----------------------------------------------------------

def to_mask(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise VertexDomainError(f"vertex {v!r} not in 0..{g.n - 1}")
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


# -- families --------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ParameterError(f"unknown family {self.kind!r}")
        want = 2 if self.kind == "grid" else 1
        if len(self.params) != want:
            raise ParameterError(f"{self.kind} takes {want} parameter(s), got {len(self.params)}")
        floor = {"cycle": 3, "wheel": 3}.get(self.kind, 1)
        for p in self.params:
            if not isinstance(p, int) or p < floor:
                raise ParameterError(f"{self.kind} parameter must be an integer >= {floor}, got {p!r}")

    @property
    def label(self) -> str:
        if self.kind == "grid":
            return f"grid({self.params[0]}x{self.params[1]})"
        return f"{self.kind}({self.params[0]})"


def build_family(spec: FamilySpec) -> Graph:
    """Construct a family member under the canonical vertex labeling.

    Paths and cycles are numbered in traversal order, the wheel hub and the
    star center come last, hypercube vertices are d-bit integers adjacent when
    they differ in one bit, and grid cell (row, col), 1-based, is vertex
    ``(row - 1) * m + (col - 1)``.
    """
    kind, p = spec.kind, spec.params
    if kind == "path":
        n = p[0]
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        n = p[0]
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "complete":
        n = p[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "wheel":
        n = p[0] + 1
        hub = p[0]
        edges = [(i, (i + 1) % hub) for i in range(hub)] + [(i, hub) for i in range(hub)]
    elif kind == "star":
        n = p[0] + 1
        edges = [(i, p[0]) for i in range(p[0])]
    elif kind == "hypercube":
        d = p[0]
        n = 1 << d
        edges = [(i, i ^ (1 << b)) for i in range(n) for b in range(d) if i < i ^ (1 << b)]
    else:
        rows, cols = p
        n = rows * cols
        edges = []
        for r in range(rows):
            for c in range(cols):
                v = r * cols + c
                if c + 1 < cols:
                    edges.append((v, v + 1))
                if r + 1 < rows:
                    edges.append((v, v + cols))
    return Graph.from_edges(n, edges, spec.label)


def path(n: int) -> Graph:
    return build_family(FamilySpec("path", (n,)))


def cycle(n: int) -> Graph:
    return build_family(FamilySpec("cycle", (n,)))


def complete(n: int) -> Graph:
    return build_family(FamilySpec("complete", (n,)))


def wheel(n: int) -> Graph:
    """Wheel with ``n`` rim vertices and a hub (``n + 1`` vertices)."""
    return build_family(FamilySpec("wheel", (n,)))


def star(t: int) -> Graph:
    """``K_{1,t}``: leaves ``0..t-1``, center ``t``."""
    return build_family(FamilySpec("star", (t,)))


def hypercube(d: int) -> Graph:
    return build_family(FamilySpec("hypercube", (d,)))


def grid(n: int, m: int) -> Graph:
    return build_family(FamilySpec("grid", (n, m)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Box product; the pair ``(x, y)`` becomes vertex ``x * h.n + y``."""
    nh = h.n
    edges = []
    for x in range(g.n):
        for y, y2 in h.edges():
            edges.append((x * nh + y, x * nh + y2))
    for x, x2 in g.edges():
        for y in range(nh):
            edges.append((x * nh + y, x2 * nh + y))
    label = f"({g.label or '?'})x({h.label or '?'})"
    return Graph.from_edges(g.n * nh, edges, label)


def random_regular(n: int, d: int, seed=None, max_tries: int = 10_000) -> Graph:
    """Uniform-ish random ``d``-regular simple graph by the pairing model."""
    if n * d % 2 or d >= n:
        raise ParameterError(f"no simple {d}-regular graph on {n} vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(d)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            e = (min(u, v), max(u, v))
            if u == v or e in edges:
                ok = False
                break
            edges.add(e)
        if ok:
            return Graph.from_edges(n, sorted(edges), f"random_{d}regular({n},seed={seed})")
    raise ParameterError("pairing model failed to produce a simple graph")


# -- text formats ----------------------------------------------------------

def parse_edge_list(text: str, label: str = "edgelist") -> Graph:
    """Parse ``u v`` lines with an optional leading ``n <count>`` header.

    Blank lines and ``#`` comments are skipped. The vertex count is the
    larger of the header and one past the largest endpoint seen.
    """
    declared = None
    edges = []
    seen_content = False
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not seen_content and tokens[0] == "n":
            if len(tokens) != 2:
                raise GraphParseError("header must be 'n <count>'", lineno)
            try:
                declared = int(tokens[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if declared < 1:
                raise GraphParseError("vertex count must be positive", lineno)
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            raise GraphParseError(f"expected two endpoints, got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"malformed token in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError("endpoints must be non-negative", lineno)
        if u == v:
            raise GraphValidationError(f"line {lineno}: self-loop at {u}")
        edges.append((u, v))
        top = max(top, u, v)
    n = max(top + 1, declared or 0)
    if n < 1:
        raise GraphParseError("no vertices")
    return Graph.from_edges(n, edges, label)


def _g6_size_bytes(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        nbrs = g.masks[j]
        for i in range(j):
            bits.append((nbrs >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = [
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
              | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    ]
    return bytes(_g6_size_bytes(g.n) + body).decode("ascii")


def parse_graph6(text: str, label: str = "graph6") -> Graph:
    """Decode one graph6 string (short and long size forms)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    for pos, val in enumerate(data):
        if not 0 <= val <= 63:
            raise GraphParseError(f"invalid graph6 byte {s[pos]!r} at offset {pos}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for val in data[2:8]:
            n = n << 6 | val
        body = data[8:]
    else:
        raise GraphParseError("truncated graph6 size field")
    if n < 1:
        raise GraphParseError("graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise GraphParseError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges, label)


def parse_graph(text: str, fmt: str, label: str = "") -> Graph:
    if fmt == "edgelist":
        return parse_edge_list(text, label or "edgelist")
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphParseError(f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0], label or "graph6")
    raise GraphParseError(f"unknown format {fmt!r}")
