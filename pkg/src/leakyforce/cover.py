"""Exact 0-1 set multicover over a fort pool.

Minimize the number of chosen vertices subject to every fort containing at
least ``multiplicity`` chosen vertices. Solved by depth-first branch and
bound with a greedy warm start and a disjoint-fort lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InfeasibleCoverError
from .graph import from_mask
from .kernels import backend_for


def _mask(vs):
    m = 0
    for v in vs:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class CoverInstance:
    """Forts are vertex sets over ``0..universe_size-1``.

    With ``saturate`` a fort smaller than the multiplicity only needs all of
    its members (used by redundancy mode, where singleton forts are common).
    """

    universe_size: int
    forts: tuple[frozenset[int], ...]
    multiplicity: int = 1
    fixed_in: frozenset[int] = field(default_factory=frozenset)
    fixed_out: frozenset[int] = field(default_factory=frozenset)
    saturate: bool = False

    def __post_init__(self):
        object.__setattr__(self, "forts", tuple(frozenset(f) for f in self.forts))
        object.__setattr__(self, "fixed_in", frozenset(self.fixed_in))
        object.__setattr__(self, "fixed_out", frozenset(self.fixed_out))
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be at least 1")
        if self.fixed_in & self.fixed_out:
            raise ValueError("fixed_in and fixed_out overlap")
        n = self.universe_size
        for i, f in enumerate(self.forts):
            if not f:
                raise ValueError(f"fort #{i} is empty")
            if min(f) < 0 or max(f) >= n:
                raise ValueError(f"fort #{i} leaves the universe 0..{n - 1}")
        for v in self.fixed_in | self.fixed_out:
            if not 0 <= v < n:
                raise ValueError(f"fixed vertex {v} outside the universe")

    def requirement(self, fort) -> int:
        if self.saturate:
            return min(self.multiplicity, len(fort))
        return self.multiplicity

    def check_feasible(self):
        for i, f in enumerate(self.forts):
            need = self.requirement(f)
            if len(f - self.fixed_out) < need:
                raise InfeasibleCoverError(i, f, need)

    def is_covered_by(self, chosen) -> bool:
        chosen = frozenset(chosen)
        return all(len(f & chosen) >= self.requirement(f) for f in self.forts)


@dataclass(frozen=True)
class CoverSolution:
    chosen: frozenset[int]
    objective: int
    optimal: bool
    nodes_explored: int = 0


def greedy_upper_bound(inst: CoverInstance) -> CoverSolution:
    """Feasible cover by repeatedly taking the vertex in the most deficient forts."""
    inst.check_feasible()
    chosen = set(inst.fixed_in)
    deficit = [inst.requirement(f) - len(f & chosen) for f in inst.forts]
    while True:
        score: dict[int, int] = {}
        for f, d in zip(inst.forts, deficit):
            if d > 0:
                for v in f:
                    if v not in chosen and v not in inst.fixed_out:
                        score[v] = score.get(v, 0) + 1
        if not score:
            break
        pick = min(score, key=lambda v: (-score[v], v))
        chosen.add(pick)
        deficit = [d - 1 if pick in f else d for f, d in zip(inst.forts, deficit)]
    return CoverSolution(frozenset(chosen), len(chosen), optimal=False)


def disjoint_fort_lower_bound(inst: CoverInstance) -> int:
    """Multiplicity times the size of a greedy pairwise-disjoint subfamily.

    Forts are taken smallest first (ties by position). Under ``saturate`` each
    disjoint fort contributes its own requirement instead.
    """
    used: set[int] = set()
    total = 0
    order = sorted(range(len(inst.forts)), key=lambda i: (len(inst.forts[i]), i))
    for i in order:
        f = inst.forts[i]
        if used.isdisjoint(f):
            used |= f
            total += inst.requirement(f)
    return total


def solve_multicover(inst: CoverInstance) -> CoverSolution:
    """Minimum-cardinality cover; ties go to the lexicographically smallest set."""
    inst.check_feasible()
    warm = greedy_upper_bound(inst)
    kern = backend_for(inst.universe_size)
    chosen, nodes = kern.multicover(
        inst.universe_size,
        [_mask(f) for f in inst.forts],
        inst.multiplicity,
        _mask(inst.fixed_in),
        _mask(inst.fixed_out),
        _mask(warm.chosen),
        inst.saturate,
    )
    members = from_mask(chosen)
    return CoverSolution(members, len(members), optimal=True, nodes_explored=nodes)
