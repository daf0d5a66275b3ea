import pytest

from leakyforce import (
    FortError,
    complete,
    cycle,
    extract_fort,
    minimize_fort,
    path,
    seed_forts,
    star,
    verify_l_forcing,
)
from leakyforce.bruteforce import brute_force_z, enumerate_forts
from leakyforce.forts import Fort, fort_is_minimal, fort_is_valid

from conftest import random_graph


def test_extract_path_example():
    f = extract_fort(path(5), {0}, {0})
    assert f.members == {1, 3, 4}
    assert f.witness_leaks == {0}
    assert f.witness_initial == {0, 2}
    assert fort_is_valid(path(5), f) and fort_is_minimal(path(5), f)


def test_extract_small_path_fixed_scan():
    f = extract_fort(path(3), set(), set())
    assert f.members == {0, 2}  # {1} alone is forced by both ends
    assert f.members in enumerate_forts(path(3), 0)


def test_extract_cycle_example():
    f = extract_fort(cycle(4), {0}, set())
    assert f.members == {1, 3}
    assert f.witness_initial == {0, 2}


def test_extract_requires_failure():
    with pytest.raises(FortError):
        extract_fort(path(3), {0}, set())


def test_minimize_examples():
    assert minimize_fort(path(5), {1, 2, 3, 4}, {0}).members == {1, 3, 4}
    assert minimize_fort(cycle(4), {1, 2, 3}, set()).members == {1, 3}
    g = star(3)
    f = minimize_fort(g, {3}, set(g.neighbors(3)))
    assert f.members == {3}


def test_minimize_precondition():
    with pytest.raises(FortError):
        minimize_fort(path(3), {1}, set())


def test_seed_examples():
    assert [f.members for f in seed_forts(path(3), 1)] == [{0}, {2}]
    assert seed_forts(cycle(5), 1) == []
    assert [f.members for f in seed_forts(complete(4), 3)] == [{0}, {1}, {2}, {3}]
    for f in seed_forts(star(4), 1):
        assert fort_is_valid(star(4), f)


def test_invalid_fort_detected():
    bogus = Fort(frozenset({1}), frozenset({0, 2}), frozenset())
    assert not fort_is_valid(path(3), bogus)


def test_enumerated_forts_examples():
    assert {0} in enumerate_forts(path(3), 1, 1) and {2} in enumerate_forts(path(3), 1, 1)
    c4 = enumerate_forts(cycle(4), 0, 2)
    assert {1, 3} in c4 and {0, 2} in c4
    assert enumerate_forts(complete(3), 0, 1) == []


def test_extracted_forts_are_valid_minimal_and_enumerated(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 8), 0.45)
        ell = rng.choice([0, 1])
        all_forts = set(enumerate_forts(g, ell))
        for _ in range(4):
            init = {v for v in range(g.n) if rng.random() < 0.4}
            v = verify_l_forcing(g, init, ell)
            if v.passed:
                continue
            f = extract_fort(g, init, v.witness_leaks)
            assert fort_is_valid(g, f, ell)
            assert fort_is_minimal(g, f)
            assert f.members in all_forts


def test_every_forcing_set_meets_every_fort(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 7), 0.5)
        ell = rng.choice([0, 1, 2])
        _, best = brute_force_z(g, ell)
        for fort in enumerate_forts(g, ell):
            assert best & fort
