import random

import pytest

from affineq.algebra import AlgebraId, affine_cartan, horizontal, parse_algebra
from affineq.weights import (
    AffineWeight,
    apply_word,
    depth_from_norm,
    finite_orbit_size,
    level,
    reflect,
    straighten,
    weyl_vector,
)
from conftest import finite_orbit_brute

A1 = AlgebraId("A", 1, 1)
E6 = AlgebraId("E", 6, 1)

SAMPLE_IDS = [
    parse_algebra(s)
    for s in ["A1~1", "A3~1", "B3~1", "C2~1", "D4~1", "G2~1", "F4~1",
              "A2~2", "A4~2", "A5~2", "D3~2", "E6~2", "D4~3"]
]


def test_weyl_vector():
    rho = weyl_vector(A1)
    assert rho.labels == (1, 1) and rho.depth == 0
    assert level(A1, rho) == 2
    rho6 = weyl_vector(E6)
    assert rho6.labels == (1,) * 7
    assert level(E6, rho6) == 12
    assert weyl_vector(AlgebraId("D", 4, 3)).labels == (1, 1, 1)


def test_reflect_a1():
    rho = weyl_vector(A1)
    w = reflect(A1, rho, 0)
    assert w.labels == (-1, 3) and w.depth == 1
    assert level(A1, w) == 2
    assert reflect(A1, w, 0) == rho


def test_reflect_fixes_zero_label():
    w = AffineWeight(labels=(0, 2, 5), depth=0)
    assert reflect(AlgebraId("A", 2, 1), w, 0) == w


def test_reflect_at_affine_node_e6():
    w = reflect(E6, weyl_vector(E6), 0)
    assert w.depth == 1
    res = straighten(E6, w)
    assert res.word == (0,)
    assert res.dominant == weyl_vector(E6)


def test_depth_from_norm_a1():
    assert depth_from_norm(A1, (1,)) == 0
    assert depth_from_norm(A1, (3,)) == 1
    assert depth_from_norm(A1, (2,)) is None


def test_straighten_examples():
    res = straighten(A1, AffineWeight(labels=(-1, 3), depth=1))
    assert res.dominant == AffineWeight(labels=(1, 1), depth=0)
    assert res.word == (0,)
    rho = weyl_vector(E6)
    assert straighten(E6, rho).word == ()


@pytest.mark.parametrize("aid", SAMPLE_IDS, ids=str)
def test_reflect_involution_and_level_invariance(aid):
    rng = random.Random(str(aid))
    n = affine_cartan(aid).n_nodes
    for _ in range(40):
        w = AffineWeight(
            labels=tuple(rng.randint(-5, 5) for _ in range(n)),
            depth=rng.randint(0, 5),
        )
        for i in range(n):
            assert reflect(aid, reflect(aid, w, i), i) == w
            assert level(aid, reflect(aid, w, i)) == level(aid, w)


@pytest.mark.parametrize("aid", SAMPLE_IDS, ids=str)
def test_straighten_round_trip(aid):
    rng = random.Random(f"rt-{aid}")
    n = affine_cartan(aid).n_nodes
    rho = weyl_vector(aid)
    for _ in range(25):
        word = [rng.randrange(n) for _ in range(rng.randint(0, 50))]
        w = apply_word(aid, rho, word)
        res = straighten(aid, w)
        assert res.dominant == rho
        assert apply_word(aid, w, res.word) == rho
        # depth recoverable from the finite part alone
        assert depth_from_norm(aid, w.finite) == w.depth


def test_finite_orbit_size_examples():
    assert finite_orbit_size(E6, (1, 1, 1, 1, 1, 1)) == 51840
    assert finite_orbit_size(AlgebraId("A", 2, 1), (1, 0)) == 3
    assert finite_orbit_size(AlgebraId("F", 4, 1), (0, 0, 0, 0)) == 1
    with pytest.raises(ValueError):
        finite_orbit_size(A1, (-1,))


# C2~1 covers the B2/C2 Weyl group; B3~1 exercises a rank-3 double bond
@pytest.mark.parametrize("name", ["A2~1", "A3~1", "C2~1", "G2~1", "B3~1"])
def test_finite_orbit_size_against_brute_force(name):
    aid = parse_algebra(name)
    hor = horizontal(aid)
    n = hor.rank
    labels = range(3)
    import itertools

    for f in itertools.product(labels, repeat=n):
        expected = len(finite_orbit_brute(hor.finite_cartan, f))
        assert finite_orbit_size(aid, f) == expected
