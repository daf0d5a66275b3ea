"""Constraint generation for the l-forcing number.

Solve the covering program over the current fort pool, test the optimum
against every leak placement, and turn a failure into a new fort. The loop
ends when the covering optimum is itself l-forcing, at which point it is a
minimum l-forcing set.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .cover import CoverInstance, solve_multicover
from .errors import InternalLogicError
from .forcing import failing_placements
from .forts import Fort, extract_fort_mask, seed_forts
from .graph import Graph, to_mask

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveResult:
    z: int
    optimal_set: frozenset[int]
    fort_pool: tuple[Fort, ...]
    iterations: int
    multiplicity: int
    leak_budget: int
    seed_count: int = 0
    nodes_explored: int = 0


def compute_l_forcing_number(
    g: Graph,
    ell: int,
    required: Iterable[int] = (),
    multiplicity: int = 1,
    *,
    forts_per_round: int = 1,
    threads: Optional[int] = None,
    saturate: bool = False,
) -> SolveResult:
    """Minimum l-forcing set of ``g`` (with ``multiplicity=1`` and no required vertices).

    ``required`` vertices are fixed into every covering solution.
    ``forts_per_round`` > 1 harvests one fort per distinct failing leak set,
    up to that many, from each failed verification.
    """
    if ell < 0:
        raise ValueError("leak budget must be non-negative")
    if multiplicity < 1 or forts_per_round < 1:
        raise ValueError("multiplicity and forts_per_round must be positive")
    ell = min(ell, g.n)
    fixed = frozenset(required)
    to_mask(g, fixed)  # domain check

    pool = list(seed_forts(g, ell))
    keys = {f.key() for f in pool}
    seeds = len(pool)
    full = g.full_mask
    iterations = 0
    nodes = 0
    while True:
        inst = CoverInstance(g.n, tuple(f.members for f in pool), multiplicity,
                             fixed_in=fixed, saturate=saturate)
        sol = solve_multicover(inst)
        iterations += 1
        nodes += sol.nodes_explored
        bad = failing_placements(g, to_mask(g, sol.chosen), ell, forts_per_round, threads)
        if not bad:
            log.debug("%s l=%d: z=%d after %d rounds, %d forts",
                      g.label, ell, sol.objective, iterations, len(pool))
            return SolveResult(sol.objective, sol.chosen, tuple(pool), iterations,
                               multiplicity, ell, seeds, nodes)
        for i, (leaks, cl) in enumerate(bad):
            fort = extract_fort_mask(g, full & ~cl, leaks)
            key = fort.key()
            if key in keys:
                # the residual avoids the covering set, which meets every pooled fort
                if i == 0:
                    raise InternalLogicError(f"fort {list(key)} generated twice")
                continue
            keys.add(key)
            pool.append(fort)


def compute_with_redundancy(g: Graph, ell: int, k: int = 2, **kwargs) -> SolveResult:
    """Constraint generation with every pool fort covered ``k`` times.

    Forts with fewer than ``k`` vertices are covered completely.
    """
    return compute_l_forcing_number(g, ell, multiplicity=k, saturate=True, **kwargs)
