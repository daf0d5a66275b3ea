"""Forts: residual uncolored sets of failed forcing attempts.

Every l-forcing set meets every l-forcing fort, so forts serve as the
covering rows of the constraint-generation loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import FortError
from .graph import Graph, from_mask, to_mask
from .kernels import backend_for


@dataclass(frozen=True)
class Fort:
    """A fort with the initial set and leak set that leave exactly it uncolored."""

    members: frozenset[int]
    witness_initial: frozenset[int]
    witness_leaks: frozenset[int]

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def fort_is_valid(g: Graph, fort: Fort, ell: int | None = None) -> bool:
    """Recompute the witness closure and compare with the members exactly."""
    if not fort.members:
        return False
    if ell is not None and len(fort.witness_leaks) > ell:
        return False
    kern = backend_for(g.n)
    cl = kern.closure_mask(g.masks, to_mask(g, fort.witness_initial), to_mask(g, fort.witness_leaks))
    return from_mask(g.full_mask & ~cl) == fort.members


def fort_is_minimal(g: Graph, fort: Fort) -> bool:
    """No single member can be dropped while keeping a residual under the witness leaks."""
    kern = backend_for(g.n)
    full = g.full_mask
    t = to_mask(g, fort.members)
    leaks = to_mask(g, fort.witness_leaks)
    for v in fort.members:
        rest = t & ~(1 << v)
        if full & ~kern.closure_mask(g.masks, full & ~rest, leaks):
            return False
    return True


def minimize_fort(g: Graph, t: Iterable[int], leaks: Iterable[int]) -> Fort:
    """Shrink ``t`` while its complement still fails under ``leaks``.

    Members are tried in ascending order; a successful removal replaces ``t``
    with the new residual and the scan restarts. The result is minimal with
    respect to this leak set.
    """
    kern = backend_for(g.n)
    full = g.full_mask
    tm = to_mask(g, t)
    lm = to_mask(g, leaks)
    residual = full & ~kern.closure_mask(g.masks, full & ~tm, lm)
    if not residual or residual & ~tm:
        raise FortError("complement of t does not leave a residual inside t")
    tm = kern.minimize_mask(g.masks, residual, lm)
    return Fort(from_mask(tm), from_mask(full & ~tm), from_mask(lm))


def extract_fort(g: Graph, failed_initial: Iterable[int], leaks: Iterable[int]) -> Fort:
    """Minimal fort inside what ``failed_initial`` leaves uncolored under ``leaks``."""
    kern = backend_for(g.n)
    full = g.full_mask
    lm = to_mask(g, leaks)
    residual = full & ~kern.closure_mask(g.masks, to_mask(g, failed_initial), lm)
    if not residual:
        raise FortError("initial set colors the whole graph; there is no fort")
    tm = kern.minimize_mask(g.masks, residual, lm)
    return Fort(from_mask(tm), from_mask(full & ~tm), from_mask(lm))


def extract_fort_mask(g: Graph, residual: int, leaks: int) -> Fort:
    """``extract_fort`` for a residual already computed as a mask."""
    tm = backend_for(g.n).minimize_mask(g.masks, residual, leaks)
    return Fort(from_mask(tm), from_mask(g.full_mask & ~tm), from_mask(leaks))


def seed_forts(g: Graph, ell: int) -> list[Fort]:
    """Singleton forts ``{v}`` for every vertex of degree at most ``ell``.

    Leaking all neighbors of ``v`` leaves ``v`` uncolored even when every
    other vertex starts colored.
    """
    out = []
    everything = frozenset(range(g.n))
    for v in range(g.n):
        if g.degree(v) <= ell:
            out.append(Fort(frozenset([v]), everything - {v}, frozenset(g.neighbors(v))))
    return out
