"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the pytest terminal
summary; run ``python tests/test_acceptance.py`` to get the same lines
without pytest. Set ``LFORCE_LONG=1`` for the stretch targets and the
exhaustive product sweep.
"""

import functools
import itertools
import os
import random
import sys
import time

import pytest

from leakyforce import (
    FamilySpec,
    ParameterError,
    brute_force_z,
    build_family,
    cartesian_product,
    closed_form_z,
    closure,
    compute_l_forcing_number,
    compute_with_redundancy,
    grid,
    grid_pattern,
    hypercube,
    product_upper_bound,
    random_regular,
    verify_l_forcing,
    verify_pattern,
)
from leakyforce.bruteforce import is_l_forcing_bruteforce
from leakyforce.families import grid_sides
from leakyforce.forts import fort_is_minimal, fort_is_valid

sys.path.insert(0, os.path.dirname(__file__))
from conftest import ACCEPTANCE_LINES, connected_catalog, random_graph  # noqa: E402

LONG = os.environ.get("LFORCE_LONG") == "1"


def report(name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


# -- shared solver runs (their fort pools feed criterion 6) ----------------

def family_cases():
    cases = []
    for n in range(2, 8):
        cases += [(FamilySpec("path", (n,)), ell) for ell in range(n + 1)]
    for n in range(3, 8):
        cases += [(FamilySpec("cycle", (n,)), ell) for ell in range(n + 1)]
    for n in range(2, 7):
        cases += [(FamilySpec("complete", (n,)), ell) for ell in range(n + 1)]
    for n in range(3, 7):
        cases += [(FamilySpec("wheel", (n,)), ell) for ell in range(n + 1)]
    for t in range(2, 6):
        cases += [(FamilySpec("star", (t,)), ell) for ell in range(t + 1)]
    return cases


@functools.lru_cache(maxsize=None)
def run_families():
    rows = []
    for spec, ell in family_cases():
        res = compute_l_forcing_number(build_family(spec), ell)
        rows.append((spec, ell, res, closed_form_z(spec, ell)))
    return rows


CUBE_TARGETS = {(3, 0): 4, (3, 1): 4, (3, 2): 6, (3, 3): 8, (4, 2): 8, (4, 3): 10, (4, 4): 16}


@functools.lru_cache(maxsize=None)
def run_cubes():
    return [(d, ell, compute_l_forcing_number(hypercube(d), ell), want)
            for (d, ell), want in CUBE_TARGETS.items()]


def grid_targets():
    from leakyforce.families import GRID_Z1_TABLE
    want = {nm: z for nm, z in GRID_Z1_TABLE.items() if nm[1] <= 5}
    want.update({(2, m): z for (n, m), z in GRID_Z1_TABLE.items() if n == 2})
    return dict(sorted(want.items()))


@functools.lru_cache(maxsize=None)
def run_grids():
    return [(n, m, compute_l_forcing_number(grid(n, m), 1), z) for (n, m), z in grid_targets().items()]


@functools.lru_cache(maxsize=None)
def catalog():
    return tuple(connected_catalog(6))


@functools.lru_cache(maxsize=None)
def run_catalog():
    rows = []
    for g in catalog():
        for ell in (0, 1, 2):
            rows.append((g, ell, compute_l_forcing_number(g, ell), brute_force_z(g, ell)))
    return rows


# -- criteria ---------------------------------------------------------------

def test_criterion_1_family_formulas():
    rows, secs = timed(run_families)
    bad = [(spec.label, ell, res.z, cf.value) for spec, ell, res, cf in rows
           if not cf.exact or res.z != cf.value]
    ok = not bad and secs < 60
    report("1 family formulas", ok,
           f"{len(rows) - len(bad)}/{len(rows)} (family, l) pairs exact in {secs:.1f}s (< 60s)"
           + (f"; mismatches {bad[:5]}" if bad else ""))
    assert ok


def test_criterion_2_hypercube_table():
    rows, secs = timed(run_cubes)
    got = {(d, ell): res.z for d, ell, res, _ in rows}
    ok = got == CUBE_TARGETS and secs < 1800
    report("2 hypercube table", ok,
           f"Q3 l=0..3 -> {[got[3, i] for i in range(4)]}, Q4 l=2,3,4 -> "
           f"{[got[4, i] for i in (2, 3, 4)]} in {secs:.1f}s (< 1800s)")
    assert ok


@pytest.mark.skipif(not LONG, reason="stretch target; set LFORCE_LONG=1")
def test_criterion_2_stretch_q5():
    res, secs = timed(lambda: compute_l_forcing_number(hypercube(5), 3))
    report("2 stretch Z_3(Q5) = 16", res.z == 16, f"got {res.z} in {secs:.1f}s")
    assert res.z == 16


def test_criterion_3_grid_table():
    rows, secs = timed(run_grids)
    bad = [(n, m, res.z, z) for n, m, res, z in rows if res.z != z]
    ok = not bad and secs < 1200
    report("3 grid table", ok,
           f"{len(rows) - len(bad)}/{len(rows)} exact entries (n, m <= 5 and 2 x 2..7) in "
           f"{secs:.1f}s (< 1200s)" + (f"; mismatches {bad}" if bad else ""))
    assert ok


def test_criterion_3_stretch_6x6():
    res, secs = timed(lambda: compute_l_forcing_number(grid(6, 6), 1))
    report("3 stretch Z_1(6x6) = 6", res.z == 6, f"got {res.z} in {secs:.1f}s")
    assert res.z == 6


def _pattern_sweep(kind, max_m=12):
    expected_size = {"array": lambda n, m: 2 * m - n, "bar": lambda n, m: m, "wing": lambda n, m: m}
    checked, failures, size_bad = 0, [], []
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            try:
                pat = grid_pattern(kind, n, m)
            except ParameterError:
                continue
            checked += 1
            if len(pat.cells) != expected_size[kind](n, m):
                size_bad.append((n, m))
            v = verify_pattern(kind, n, m)
            if not v.passed:
                leak = next(iter(v.witness_leaks))
                failures.append(f"{n}x{m} leak at cell {divmod(leak, m)[0] + 1, leak % m + 1}")
    return checked, failures, size_bad


@pytest.mark.parametrize("kind", [
    "array",
    pytest.param("bar", marks=pytest.mark.xfail(
        strict=True, reason="bar pattern fails on two-row grids with m >= 5; see the decisions ledger")),
    "wing",
])
def test_criterion_4_patterns(kind):
    (checked, failures, size_bad), secs = timed(lambda: _pattern_sweep(kind))
    ok = not failures and not size_bad and checked > 0
    report(f"4 {kind} pattern", ok,
           f"{checked - len(failures)}/{checked} admissible grids with m <= 12 pass, "
           f"cardinality {'ok' if not size_bad else size_bad} ({secs:.1f}s)"
           + (f"; counterexamples: {', '.join(failures)}" if failures else ""))
    assert ok


def test_criterion_5_oracle_equivalence():
    rows, secs = timed(run_catalog)
    bad = [(g.label, ell, res.z, bz) for g, ell, res, (bz, _) in rows if res.z != bz]
    six = sum(1 for g in catalog() if g.n == 6)
    ok = not bad and six == 112 and secs < 1800
    report("5 oracle equivalence", ok,
           f"{len(rows) - len(bad)}/{len(rows)} (graph, l) agree on {len(catalog())} connected graphs "
           f"n <= 6 ({six} on 6 vertices), l in 0..2, {secs:.1f}s" + (f"; {bad[:5]}" if bad else ""))
    assert ok


def _random_order_closure(g, initial, leaks, rng):
    colored = set(initial)
    while True:
        moves = []
        for v in colored:
            if v in leaks:
                continue
            white = [u for u in g.neighbors(v) if u not in colored]
            if len(white) == 1:
                moves.append(white[0])
        if not moves:
            return colored
        colored.add(rng.choice(moves))


def _property_violations():
    rng = random.Random(6)
    out = {}

    bad = 0
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 12), rng.choice([0.2, 0.35, 0.5]))
        init = {v for v in range(g.n) if rng.random() < 0.35}
        leaks = {v for v in range(g.n) if rng.random() < 0.2}
        ref = closure(g, init, leaks)
        bad += sum(_random_order_closure(g, init, leaks, rng) != ref for _ in range(100))
    out["confluence (100 orders x 200 instances)"] = bad

    bad = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(2, 12), 0.35)
        init = {v for v in range(g.n) if rng.random() < 0.3}
        leaks = {v for v in range(g.n) if rng.random() < 0.3}
        more_init = init | {rng.randrange(g.n)}
        more_leaks = leaks | {rng.randrange(g.n)}
        bad += not closure(g, init, leaks) <= closure(g, more_init, leaks)
        bad += not closure(g, init, more_leaks) <= closure(g, init, leaks)
        for ell in range(3):
            if verify_l_forcing(g, init, ell + 1).passed:
                bad += not verify_l_forcing(g, init, ell).passed
    out["monotonicity"] = bad

    bad = 0
    zs = {}
    for g, ell, res, _ in run_catalog():
        zs[g.label, ell] = res.z
    for g in catalog():
        bad += not zs[g.label, 0] <= zs[g.label, 1] <= zs[g.label, 2]
    for spec, ell, res, _ in run_families():
        if ell > 0:
            prev = [r.z for s, e, r, _ in run_families() if s == spec and e == ell - 1][0]
            bad += prev > res.z
    out["chain Z_l <= Z_l+1"] = bad

    bad = 0
    for g in catalog():
        if g.n > 5:
            continue
        for ell in (0, 1, 2):
            z = zs[g.label, ell]
            low = {v for v in range(g.n) if g.degree(v) <= ell}
            for cand in itertools.combinations(range(g.n), z):
                if is_l_forcing_bruteforce(g, cand, ell):
                    bad += not low <= set(cand)
    for g, ell, res, _ in run_catalog():
        bad += not {v for v in range(g.n) if g.degree(v) <= ell} <= res.optimal_set
    out["low-degree containment in optimal sets"] = bad

    bad = forts = 0
    runs = ([(build_family(s), e, r) for s, e, r, _ in run_families()]
            + [(hypercube(d), e, r) for d, e, r, _ in run_cubes()]
            + [(grid(n, m), 1, r) for n, m, r, _ in run_grids()]
            + [(g, e, r) for g, e, r, _ in run_catalog()])
    for g, ell, res in runs:
        for f in res.fort_pool:
            forts += 1
            bad += not (fort_is_valid(g, f, ell) and fort_is_minimal(g, f))
    out[f"fort validity and minimality ({forts} forts)"] = bad

    bad = products = 0
    small = [g for g in catalog() if 2 <= g.n <= 5]
    pairs = list(itertools.combinations_with_replacement(small, 2))
    if not LONG:
        # every pair up to 4 x 4, and every 5-vertex graph against every factor of <= 3 vertices
        pairs = [(a, b) for a, b in pairs if (a.n <= 4 and b.n <= 4) or (a.n <= 3 and b.n == 5)]
    zsmall = {(g.label, e): zs[g.label, e] for g in small for e in (0, 1, 2)}
    for a, b in pairs:
        for ell in (0, 1, 2):
            products += 1
            z = compute_l_forcing_number(cartesian_product(a, b), ell).z
            bad += z > product_upper_bound(zsmall[a.label, ell], zsmall[b.label, ell], a.n, b.n)
    out[f"product bound ({products} products{', exhaustive' if LONG else ''})"] = bad

    bad = 0
    for n in range(1, 9):
        for m in range(n, 9):
            g = grid(n, m)
            for sides in (("top", "left"), ("top", "right"), ("bottom", "left"), ("bottom", "right")):
                bad += not verify_l_forcing(g, grid_sides(n, m, sides), 1).passed
    out["two sides of grids up to 8x8"] = bad
    return out


def test_criterion_6_property_suites():
    counts, secs = timed(_property_violations)
    ok = all(v == 0 for v in counts.values())
    report("6 property suites", ok,
           "; ".join(f"{k}: {v} violations" for k, v in counts.items()) + f" ({secs:.1f}s)")
    assert ok


def test_criterion_7_redundancy():
    covered_bad, fragile, pinned, total_removals = [], [], 0, 0
    t0 = time.perf_counter()
    for g in catalog():
        res = compute_with_redundancy(g, 1, k=2)
        s = res.optimal_set
        if not verify_l_forcing(g, s, 1).passed or any(
                len(s & f.members) < min(2, len(f.members)) for f in res.fort_pool):
            covered_bad.append(g.label)
        singles = {v for f in res.fort_pool if len(f.members) == 1 for v in f.members}
        for v in sorted(s):
            total_removals += 1
            if not verify_l_forcing(g, s - {v}, 1).passed:
                if v in singles:
                    pinned += 1  # a one-vertex fort cannot be covered twice
                else:
                    fragile.append(f"{g.label}-{v}")
    secs = time.perf_counter() - t0
    ok = not covered_bad
    resilient = total_removals - len(fragile) - pinned
    report("7 redundancy mode", ok,
           f"{len(catalog()) - len(covered_bad)}/{len(catalog())} k=2 solutions doubly cover every pool fort "
           f"(singleton forts once); single-vertex removal keeps the set 1-forcing in "
           f"{resilient}/{total_removals} cases, {pinned} failures remove a one-vertex fort, "
           f"{len(fragile)} failures come from forts missing from the generated pool"
           + (f" (e.g. {' '.join(fragile[:10])})" if fragile else "") + f" ({secs:.1f}s)")
    print("\n".join(["non-resilient removals (graph-vertex):"] + fragile))
    assert ok


def test_criterion_8_cubic_invariants():
    path = os.environ.get("LFORCE_CUBIC_G6")
    from leakyforce.cli import CUBIC_Z1
    checked, bad = 0, []
    t0 = time.perf_counter()
    graphs = []
    if path:
        from leakyforce import parse_graph6
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 2 and parts[0] in CUBIC_Z1:
                    graphs.append((parse_graph6(parts[1], parts[0]), CUBIC_Z1[parts[0]]))
    graphs += [(random_regular(n, 3, seed=s), None) for n in (20, 22, 24) for s in range(2)]
    for g, want in graphs:
        checked += 1
        r1 = compute_l_forcing_number(g, 1)
        r0 = compute_l_forcing_number(g, 0)
        fine = (verify_l_forcing(g, r1.optimal_set, 1).passed and r0.z <= r1.z <= g.n
                and set(g.degrees()) == {3} and (want is None or r1.z == want))
        if not fine:
            bad.append((g.label, r1.z, want))
    secs = time.perf_counter() - t0
    named = sum(1 for _, w in graphs if w is not None)
    report("8 cubic suite", not bad,
           f"{checked - len(bad)}/{checked} cubic graphs satisfy the invariants "
           f"({named} named graphs matched against the table; wall-clock not a target) ({secs:.1f}s)"
           + (f"; {bad}" if bad else ""))
    assert not bad


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    for t in tests:
        if t is test_criterion_4_patterns:
            for kind in ("array", "bar", "wing"):
                try:
                    t(kind)
                except AssertionError:
                    pass
            continue
        if t is test_criterion_2_stretch_q5 and not LONG:
            continue
        try:
            t()
        except AssertionError:
            pass
    print("\n".join(ACCEPTANCE_LINES))
