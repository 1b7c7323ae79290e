from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from lmcbound import classifier, connectivity, gf2, rivers
from lmcbound.gf2 import BinMatrix, CnotGate

from conftest import (
    CYCLE_3,
    VANISHING_MPRIME_5,
    VANISHING_MPRIME_RIVERS,
    mat,
    random_invertible,
    random_synthesis,
)


def test_enumerate_rivers_identity():
    rs = rivers.enumerate_rivers(BinMatrix.identity(4))
    assert rs.one_line_strings() == ["1234"]


def test_enumerate_rivers_vanishing_mprime_example():
    rs = rivers.enumerate_rivers(VANISHING_MPRIME_5)
    assert rs.one_line_strings() == sorted(VANISHING_MPRIME_RIVERS)
    assert len(rs.permutations) == 13


def test_enumerate_rivers_cap():
    with pytest.raises(gf2.DimensionError):
        rivers.enumerate_rivers(BinMatrix.identity(rivers.ORACLE_MAX_DIM + 1))


def test_mprime_matches_river_parity_sum():
    # the fast product formula equals I + sum of river permutation
    # matrices over GF(2)
    rng = random.Random(41)
    for _ in range(1000):
        n = rng.choice([2, 3, 4, 5, 6])
        m = random_invertible(rng, n)
        acc = BinMatrix.identity(n)
        for image in rivers.enumerate_rivers(m).permutations:
            acc = gf2.xor(acc, rivers.permutation_matrix(image, n))
        assert rivers.mprime(m) == acc


def test_mprime_of_transpose_is_transpose():
    rng = random.Random(42)
    for _ in range(300):
        n = rng.choice([2, 3, 4, 5])
        m = random_invertible(rng, n)
        assert rivers.mprime(gf2.transpose(m)) == gf2.transpose(rivers.mprime(m))


def test_emp_dup_counting():
    assert rivers.emp_dup(mat("000", "110", "110")) == (1, 1)
    # four equal nonzero rows pair off twice
    assert rivers.emp_dup(mat("1100", "1100", "1100", "1100")) == (0, 2)
    assert rivers.emp_dup(BinMatrix(3, (0, 0, 0))) == (3, 0)


def test_cperfect_identity():
    report = rivers.cperfect(BinMatrix.identity(5))
    assert report.emp == 5 and report.dup == 0
    assert report.cperfect == 5
    assert report.middle_lower_bound == 0


def test_cperfect_three_cycle():
    report = rivers.cperfect(CYCLE_3)
    assert report.cperfect_rational == Fraction(1)
    assert report.cperfect == 1
    assert report.middle_lower_bound == 2


def test_cperfect_vanishing_mprime():
    report = rivers.cperfect(VANISHING_MPRIME_5)
    assert report.mprime == BinMatrix(5, (0,) * 5)
    assert report.emp == 5
    assert report.cperfect == 5
    assert report.middle_lower_bound == 0
    assert rivers.glitch_detect(VANISHING_MPRIME_5)
    assert not rivers.glitch_detect(BinMatrix.identity(5))


def test_cperfect_invariants():
    rng = random.Random(43)
    for _ in range(500):
        n = rng.choice([2, 3, 4, 5, 6])
        m = random_invertible(rng, n)
        r = rivers.cperfect(m)
        assert 0 <= r.emp <= n
        assert 0 <= r.dup <= (n - r.emp) // 2
        assert r.cperfect <= n
        assert r.middle_lower_bound >= 0
        assert r.cperfect_rational == Fraction(n + 2 * r.emp + r.dup, 3)


def test_cperfect_rejects_singular():
    with pytest.raises(gf2.SingularMatrixError):
        rivers.cperfect(mat("11", "11"))


def test_full_component_is_always_in_nullspace():
    # the all-ones vector annihilates M' for every invertible matrix
    for key in range(1 << 9):
        m = gf2.decode(key, 3)
        if gf2.is_invertible(m):
            assert rivers.check_component_nullspace(m, range(1, 4))


def test_river_pair_parity_across_gate():
    # a CNOT creates or annihilates rivers in pairs that swap the
    # control and target positions
    rng = random.Random(44)
    for _ in range(300):
        n = rng.choice([3, 4, 5])
        m = random_invertible(rng, n)
        c, t = rng.sample(range(1, n + 1), 2)
        nmat = gf2.apply_cnot(m, CnotGate(c, t))
        sm = rivers.enumerate_rivers(m).permutations
        sn = rivers.enumerate_rivers(nmat).permutations
        for sigma in itertools.permutations(range(n)):
            swapped = list(sigma)
            swapped[c - 1], swapped[t - 1] = swapped[t - 1], swapped[c - 1]
            pair = {sigma, tuple(swapped)}
            assert len(pair & sm) % 2 == len(pair & sn) % 2


def test_class_parity_under_transposition_moves():
    # group permutations into classes under position swaps from a set S
    # containing the gate's swap; class intersections with the river set
    # keep their parity across the gate
    rng = random.Random(45)
    for _ in range(100):
        n = rng.choice([3, 4, 5])
        m = random_invertible(rng, n)
        c, t = rng.sample(range(1, n + 1), 2)
        nmat = gf2.apply_cnot(m, CnotGate(c, t))
        swaps = {(c - 1, t - 1)}
        for _ in range(rng.randrange(0, 3)):
            a, b = rng.sample(range(n), 2)
            swaps.add((a, b))

        parent: dict[tuple, tuple] = {}

        def find(x):
            while parent.get(x, x) != x:
                parent[x] = parent.get(parent[x], parent[x])
                x = parent[x]
            return x

        for sigma in itertools.permutations(range(n)):
            parent.setdefault(sigma, sigma)
            for a, b in swaps:
                moved = list(sigma)
                moved[a], moved[b] = moved[b], moved[a]
                ra, rb = find(sigma), find(tuple(moved))
                if ra != rb:
                    parent[ra] = rb

        sm = rivers.enumerate_rivers(m).permutations
        sn = rivers.enumerate_rivers(nmat).permutations
        classes: dict[tuple, list] = {}
        for sigma in itertools.permutations(range(n)):
            classes.setdefault(find(sigma), []).append(sigma)
        for members in classes.values():
            assert sum(1 for x in members if x in sm) % 2 == sum(
                1 for x in members if x in sn
            ) % 2


def test_middle_component_nullspace_on_random_syntheses():
    # the indicator of every connected component of the middle-gate
    # graph lies in the left nullspace of M'
    rng = random.Random(46)
    for _ in range(200):
        n = rng.choice([3, 4, 5])
        s = random_synthesis(rng, n, rng.randrange(1, 12))
        cs = classifier.classify_synthesis(s)
        m = cs.final_matrix
        uf = connectivity.UnionFind(n)
        for g, cls in zip(s.gates, cs.classes):
            if cls is classifier.GateClass.MIDDLE:
                uf.union(g.control - 1, g.target - 1)
        groups: dict[int, list[int]] = {}
        for q in range(n):
            groups.setdefault(uf.find(q), []).append(q)
        for members in groups.values():
            assert rivers.check_component_nullspace(m, [q + 1 for q in members])
