"""Pure-Python kernels over integer bitmasks.

Vertex ``v`` corresponds to bit ``1 << v``. These routines are the
reference implementation and work for any number of vertices; the compiled
``_ckernels`` module mirrors them exactly for graphs with at most 64.
"""

from itertools import combinations

BACKEND = "python"
MAX_VERTICES = None


def closure_mask(adj, initial, leaks):
    """Fixpoint of the color-change rule; leaked vertices never force."""
    full = (1 << len(adj)) - 1
    colored = initial
    changed = True
    while changed and colored != full:
        changed = False
        # one pass applies every available force, then rescan
        active = colored & ~leaks
        while active:
            low = active & -active
            active ^= low
            unc = adj[low.bit_length() - 1] & ~colored
            if unc and not unc & (unc - 1):
                colored |= unc
                changed = True
    return colored


def failing_leak_sets(adj, candidate, size, lo, hi, limit):
    """Failing leak placements of exactly ``size`` vertices, in lex order.

    Only placements whose smallest vertex lies in ``[lo, hi)`` are examined
    (the empty placement belongs to ``lo == 0``). At most ``limit`` results
    ``(leak_mask, closure_mask)`` are returned.
    """
    n = len(adj)
    full = (1 << n) - 1
    found = []
    if size == 0:
        if lo == 0:
            cl = closure_mask(adj, candidate, 0)
            if cl != full:
                found.append((0, cl))
        return found
    for first in range(lo, min(hi, n - size + 1)):
        head = 1 << first
        for rest in combinations(range(first + 1, n), size - 1):
            leaks = head
            for v in rest:
                leaks |= 1 << v
            cl = closure_mask(adj, candidate, leaks)
            if cl != full:
                found.append((leaks, cl))
                if len(found) >= limit:
                    return found
    return found


def minimize_mask(adj, t, leaks):
    """Witness-preserving shrink of a residual set ``t`` under ``leaks``.

    Scan members ascending; whenever dropping one still leaves a non-empty
    residual, continue from that residual. Stops when every single removal
    lets the complement color the whole graph.
    """
    full = (1 << len(adj)) - 1
    restart = True
    while restart:
        restart = False
        scan = t
        while scan:
            low = scan & -scan
            scan ^= low
            residual = full & ~closure_mask(adj, full & ~(t & ~low), leaks)
            if residual:
                t = residual
                restart = True
                break
    return t


def _popcount(x):
    return bin(x).count("1")


def multicover(n, forts, k, fixed_in, fixed_out, upper=None, saturate=False):
    """Exact minimum-cardinality ``k``-multicover with lexicographic ties.

    ``forts`` are bitmasks. Branches on the lowest free vertex that occurs in
    any deficient fort, include first. Every undecided vertex below the
    branching vertex stays out for the whole subtree, so depth-first order
    visits solutions in lexicographic order and the first optimum found is
    the lexicographically smallest. ``upper`` is an optional feasible mask
    that only tightens pruning; an equal-size search result replaces it.
    With ``saturate`` each fort needs ``min(k, |fort|)`` members.

    Returns ``(chosen_mask, nodes_explored)``; ``chosen_mask`` is ``None``
    when the instance is infeasible.
    """
    forts = list(dict.fromkeys(forts))
    if saturate:
        needs = [min(k, _popcount(f)) for f in forts]
    else:
        needs = [k] * len(forts)
    rows = list(zip(forts, needs))
    best = [None, n + 1, False]  # mask, size, found by search
    if upper is not None:
        best[0] = upper
        best[1] = _popcount(upper)
    nodes = [0]

    def search(chosen, excluded, size):
        nodes[0] += 1
        deficits = []
        free = 0
        for f, req in rows:
            need = req - _popcount(f & chosen)
            if need > 0:
                rest = f & ~chosen & ~excluded
                if _popcount(rest) < need:
                    return
                deficits.append((need, rest))
                free |= rest
        if not deficits:
            if size < best[1] or (size == best[1] and not best[2]):
                best[0], best[1], best[2] = chosen, size, True
            return
        # pairwise-disjoint remainders each need fresh vertices
        deficits.sort(key=lambda d: _popcount(d[1]))
        used = 0
        lb = size
        for need, rest in deficits:
            if not rest & used:
                used |= rest
                lb += need
        if lb > best[1] or (lb == best[1] and best[2]):
            return
        low = free & -free
        search(chosen | low, excluded, size + 1)
        search(chosen, excluded | low, size)

    search(fixed_in, fixed_out & ~fixed_in, _popcount(fixed_in))
    return best[0], nodes[0]
