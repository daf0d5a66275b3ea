"""Exhaustive ground truth for small graphs.

Deliberately independent of the kernels: leaks are materialized as real
pendant vertices and the plain color-change rule runs on Python sets.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ResourceLimitError
from .graph import Graph

DEFAULT_MAX_N = 12


def _leaky_adjacency(g: Graph, leaks):
    """Adjacency of ``g`` with one pendant vertex ``("leak", v)`` per leaked ``v``."""
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}
    for v in leaks:
        pendant = ("leak", v)
        adj[v].add(pendant)
        adj[pendant] = {v}
    return adj


def zero_forcing_closure(adj, colored):
    """Apply single forces one at a time until none is possible."""
    colored = set(colored)
    progress = True
    while progress:
        progress = False
        for v in list(colored):
            white = [u for u in adj[v] if u not in colored]
            if len(white) == 1:
                colored.add(white[0])
                progress = True
    return colored


def survives(g: Graph, initial, leaks) -> bool:
    """True when every original vertex ends up colored (pendants cannot be chosen)."""
    adj = _leaky_adjacency(g, leaks)
    colored = zero_forcing_closure(adj, initial)
    return all(v in colored for v in range(g.n))


def residual(g: Graph, initial, leaks) -> frozenset:
    adj = _leaky_adjacency(g, leaks)
    colored = zero_forcing_closure(adj, initial)
    return frozenset(v for v in range(g.n) if v not in colored)


def is_l_forcing_bruteforce(g: Graph, candidate, ell: int) -> bool:
    """Try every leak set of every size up to ``ell``."""
    for size in range(min(ell, g.n) + 1):
        for leaks in combinations(range(g.n), size):
            if not survives(g, candidate, leaks):
                return False
    return True


def brute_force_z(g: Graph, ell: int, max_n: int = DEFAULT_MAX_N) -> tuple[int, frozenset[int]]:
    """Smallest l-forcing set by size-then-lexicographic enumeration."""
    if g.n > max_n:
        raise ResourceLimitError(f"brute force capped at n={max_n}, graph has {g.n}")
    for size in range(g.n + 1):
        for cand in combinations(range(g.n), size):
            if is_l_forcing_bruteforce(g, cand, ell):
                return size, frozenset(cand)
    raise AssertionError("the full vertex set is always l-forcing")


def enumerate_forts(g: Graph, ell: int, max_size: int | None = None,
                    max_n: int = 10) -> list[frozenset[int]]:
    """Every non-empty set that is exactly the residual of some failed attempt.

    A set ``T`` qualifies when some leak set of at most ``ell`` vertices
    leaves exactly ``T`` uncolored from the initial set ``V - T``.
    """
    if g.n > max_n:
        raise ResourceLimitError(f"fort enumeration capped at n={max_n}, graph has {g.n}")
    if max_size is None:
        max_size = g.n
    everything = frozenset(range(g.n))
    leak_sets = [ls for size in range(min(ell, g.n) + 1)
                 for ls in combinations(range(g.n), size)]
    out = []
    for size in range(1, max_size + 1):
        for t in combinations(range(g.n), size):
            t = frozenset(t)
            if any(residual(g, everything - t, ls) == t for ls in leak_sets):
                out.append(t)
    return out
