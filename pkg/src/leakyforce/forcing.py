"""Leak-aware zero forcing: closures and l-forcing verification.

A leak on ``v`` is modeled as ``v`` never performing a force. The pendant
leak vertex stays uncolored until every original vertex is colored, so a
leaked vertex can never force an original vertex; success means every
original vertex ends up colored.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, from_mask, to_mask
from .kernels import backend_for


@dataclass(frozen=True)
class Verdict:
    passed: bool
    witness_leaks: Optional[frozenset[int]] = None
    residual: Optional[frozenset[int]] = None


def default_threads() -> int:
    env = os.environ.get("LFORCE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def closure(g: Graph, initial: Iterable[int], leaks: Iterable[int] = ()) -> frozenset[int]:
    """Maximal colored set reachable from ``initial`` with ``leaks`` barred from forcing."""
    kern = backend_for(g.n)
    return from_mask(kern.closure_mask(g.masks, to_mask(g, initial), to_mask(g, leaks)))


def closure_mask(g: Graph, initial: int, leaks: int = 0) -> int:
    return backend_for(g.n).closure_mask(g.masks, initial, leaks)


def failing_placements(g: Graph, candidate: int, ell: int, limit: int = 1,
                       threads: Optional[int] = None) -> list[tuple[int, int]]:
    """First ``limit`` failing leak masks (with closures), lexicographic order.

    Leak sets have exactly ``min(ell, n)`` members; smaller sets never fail
    when all the larger ones pass, since extra leaks only shrink a closure.
    With several threads the placements are split by smallest leaked vertex
    and the results concatenated in order, so the output is identical.
    """
    size = min(max(ell, 0), g.n)
    kern = backend_for(g.n)
    threads = default_threads() if threads is None else max(1, threads)
    if threads == 1 or size == 0 or g.n < 16:
        return kern.failing_leak_sets(g.masks, candidate, size, 0, g.n, limit)
    bounds = _chunk_bounds(g.n - size + 1, threads * 4)
    out: list[tuple[int, int]] = []
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(kern.failing_leak_sets, g.masks, candidate, size, lo, hi, limit)
            for lo, hi in bounds
        ]
        for fut in futures:
            if len(out) >= limit:
                fut.cancel()
                continue
            out.extend(fut.result())
    return out[:limit]


def _chunk_bounds(count, pieces):
    step = max(1, -(-count // pieces))
    return [(lo, min(lo + step, count)) for lo in range(0, count, step)]


def verify_l_forcing(g: Graph, candidate: Iterable[int], ell: int,
                     threads: Optional[int] = None) -> Verdict:
    """Check that ``candidate`` colors ``g`` under every placement of ``ell`` leaks.

    On failure the lexicographically first failing leak set is reported
    together with the original vertices it leaves uncolored.
    """
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    cand = to_mask(g, candidate)
    bad = failing_placements(g, cand, ell, 1, threads)
    if not bad:
        return Verdict(True)
    leaks, cl = bad[0]
    return Verdict(False, from_mask(leaks), from_mask(g.full_mask & ~cl))


def is_l_forcing(g: Graph, candidate: Iterable[int], ell: int) -> bool:
    return verify_l_forcing(g, candidate, ell).passed
