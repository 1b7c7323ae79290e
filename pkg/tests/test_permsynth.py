from __future__ import annotations

import itertools
import random

import pytest

from lmcbound import classifier, permsynth
from lmcbound.classifier import GateClass
from lmcbound.permsynth import ConstructionId, Permutation

from conftest import CYCLE_3

# Gate-graph shapes (link, middle, cut) each construction produces,
# derived by classifying the generated circuits.
EXPECTED_SHAPES = {
    ConstructionId.STAR_STAR_STAR: ("star", "star", "star"),
    ConstructionId.PATH_PATH_PATH: ("path", "path", "path"),
    ConstructionId.PATH_PATH_STAR: ("path", "path", "star"),
    ConstructionId.STAR_STAR_PATH: ("star", "star", "path"),
    ConstructionId.STAR_PATH_PATH: ("star", "path", "path"),
}


def expected_pattern(cid: ConstructionId, n: int) -> str:
    k = n - 1
    return {
        ConstructionId.STAR_STAR_STAR: "LMC" * k,
        ConstructionId.PATH_PATH_PATH: "LMC" * k,
        ConstructionId.PATH_PATH_STAR: "L" * k + "M" * k + "C" * k,
        ConstructionId.STAR_STAR_PATH: "LM" * k + "C" * k,
        ConstructionId.STAR_PATH_PATH: "L" * k + "MC" * k,
    }[cid]


def graph_shape(graph) -> str:
    if graph.is_star and graph.n <= 3:
        # stars and paths coincide below four nodes
        return "star-or-path"
    if graph.is_star:
        return "star"
    if graph.is_path:
        return "path"
    return "tree" if graph.is_spanning_tree else "none"


def test_permutation_cycles():
    sigma = Permutation(5, (3, 4, 1, 2, 5))
    assert sigma.cycles() == [(1, 3), (2, 4), (5,)]
    assert sigma.cycle_count() == 3
    assert Permutation.from_cycles([(1, 3), (2, 4)], 5) == sigma


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation(3, (1, 1, 2))
    with pytest.raises(ValueError):
        Permutation.from_cycles([(1, 2), (2, 3)], 3)
    with pytest.raises(ValueError):
        Permutation.from_cycles([(1, 4)], 3)


def test_parse_cycle_notation():
    sigma = permsynth.parse_cycle_notation("(1 3 5)(2 4)")
    assert sigma.n == 5
    assert sigma(1) == 3 and sigma(3) == 5 and sigma(5) == 1
    assert sigma(2) == 4 and sigma(4) == 2
    assert permsynth.parse_cycle_notation("(1, 2)", 4).n == 4
    with pytest.raises(ValueError):
        permsynth.parse_cycle_notation("1 2 3")
    with pytest.raises(ValueError):
        permsynth.parse_cycle_notation("(1 2)(2 3)")


def test_constructions_replay_count_and_classes():
    for cid in ConstructionId:
        for n in range(2, 11):
            s = permsynth.synth_cycle(list(range(1, n + 1)), cid)
            assert len(s.gates) == 3 * (n - 1)
            target = Permutation.from_cycles([tuple(range(1, n + 1))], n).matrix()
            assert s.replay() == target
            cs = classifier.classify_synthesis(s)
            assert cs.count(GateClass.LINK) == n - 1
            assert cs.count(GateClass.MIDDLE) == n - 1
            assert cs.count(GateClass.CUT) == n - 1
            assert cs.pattern == expected_pattern(cid, n)


def test_construction_gate_graph_shapes():
    for cid, want in EXPECTED_SHAPES.items():
        for n in (4, 5, 8):
            s = permsynth.synth_cycle(list(range(1, n + 1)), cid)
            cs = classifier.classify_synthesis(s)
            got = tuple(
                graph_shape(classifier.gate_graph(cs, cls))
                for cls in (GateClass.LINK, GateClass.MIDDLE, GateClass.CUT)
            )
            assert got == want, (cid, n, got)


def test_synth_cycle_relabeled():
    s = permsynth.synth_cycle([2, 5, 3], ConstructionId.PATH_PATH_PATH, n=5)
    sigma = Permutation.from_cycles([(2, 5, 3)], 5)
    assert s.replay() == sigma.matrix()
    assert len(s.gates) == 6


def test_synth_cycle_validation():
    with pytest.raises(ValueError):
        permsynth.synth_cycle([1])
    with pytest.raises(ValueError):
        permsynth.synth_cycle([1, 2, 1])


def test_synth_permutation_all_s4():
    for image in itertools.permutations(range(1, 5)):
        sigma = Permutation(4, image)
        for cid in ConstructionId:
            s = permsynth.synth_permutation(sigma, cid)
            assert s.replay() == sigma.matrix()
            assert len(s.gates) == 3 * (4 - sigma.cycle_count())


def test_synth_permutation_sample_s6():
    rng = random.Random(71)
    for _ in range(30):
        image = list(range(1, 7))
        rng.shuffle(image)
        sigma = Permutation(6, tuple(image))
        s = permsynth.synth_permutation(sigma)
        assert s.replay() == sigma.matrix()
        assert len(s.gates) == 3 * (6 - sigma.cycle_count())


def test_join_cycles():
    sigma = Permutation.from_cycles([(1, 2), (3, 4)], 4)
    s = permsynth.synth_permutation(sigma)
    joined = permsynth.join_cycles(s, 1, 3)
    merged = joined.replay()
    # swapping 1 and 3 after the two transpositions merges the cycles
    expected = Permutation.from_cycles([(1, 4, 3, 2)], 4)
    assert merged == expected.matrix()
    assert len(joined.gates) == len(s.gates) + 3


def test_three_cycle_construction_matches_reference():
    s = permsynth.synth_cycle([1, 2, 3])
    assert s.replay() == CYCLE_3
