import pytest

from affineq.algebra import AlgebraId, horizontal, parse_algebra
from affineq.orbits import (
    BudgetExceededError,
    census_to_series,
    count_via_permutation_weights,
    enumerate_bfs,
)
from affineq.series import eta_quotient_series
from affineq.algebra import eta_table_entry
from affineq.weights import apply_word, depth_from_norm, weyl_vector

A1 = AlgebraId("A", 1, 1)
E6 = AlgebraId("E", 6, 1)

TRIANGULAR = {0, 1, 3, 6, 10, 15}


def test_bfs_a1_triangular():
    census = enumerate_bfs(A1, 10)
    assert census.counts == (2, 2, 0, 2, 0, 0, 2, 0, 0, 0, 2)
    assert census.c == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)


def test_bfs_depth_zero_slice():
    census = enumerate_bfs(parse_algebra("C3~1"), 0)
    assert census.counts == (48,)
    assert census.c == (1,)


def test_bfs_e6_small_depth():
    census = enumerate_bfs(E6, 4)
    assert tuple(x // 51840 for x in census.counts) == (1, 1, 1, 1, 2)
    assert all(x % 51840 == 0 for x in census.counts)


def test_bfs_budget_guard():
    with pytest.raises(BudgetExceededError):
        enumerate_bfs(AlgebraId("E", 8, 1), 6)


def test_permutation_weights_e6_table():
    census, records = count_via_permutation_weights(E6, 9)
    assert census.c == (1, 1, 1, 1, 2, 3, 3, 4, 6, 7)
    assert census.counts[0] == 51840
    depth1 = [r for r in records if r.depth == 1]
    assert len(depth1) == 1
    assert depth1[0].word == (0,)
    # depth-1 dominant is rho + highest root (orbit of a regular weight)
    assert depth1[0].orbit_size == 51840


def test_permutation_weights_a1():
    census, records = count_via_permutation_weights(A1, 10)
    assert [r.depth for r in records] == [1, 3, 6, 10]
    assert all(r.orbit_size == 2 for r in records)
    assert [r.dominant for r in records] == [(3,), (5,), (7,), (9,)]
    census2, records2 = count_via_permutation_weights(A1, 2)
    assert len(records2) == 1 and records2[0].depth == 1


@pytest.mark.parametrize(
    "name",
    ["A1~1", "A2~1", "A3~1", "B3~1", "C2~1", "C3~1", "D4~1", "G2~1", "F4~1",
     "A2~2", "A4~2", "A5~2", "A6~2", "D3~2", "D4~2", "E6~2", "D4~3"],
)
def test_oracle_equivalence(name):
    aid = parse_algebra(name)
    assert horizontal(aid).weyl_order <= 10**5
    bfs, dominants = enumerate_bfs(aid, 10, collect_dominants=True)
    census, records = count_via_permutation_weights(aid, 10)
    assert bfs.counts == census.counts
    assert bfs.c == census.c
    # the BFS nodes with dominant finite part are exactly the records,
    # plus the depth-zero seed itself
    assert sorted(d for d in dominants if d[0] > 0) == sorted(
        (r.depth, r.dominant) for r in records
    )


@pytest.mark.parametrize("name", ["A3~1", "C2~1", "A4~2", "D4~3"])
def test_record_invariants(name):
    aid = parse_algebra(name)
    _, records = count_via_permutation_weights(aid, 12)
    rho = weyl_vector(aid)
    for r in records:
        assert all(x >= 1 for x in r.dominant)
        assert depth_from_norm(aid, r.dominant) == r.depth
        w = apply_word(aid, rho, r.word)
        assert w.finite == r.dominant
        assert w.depth == r.depth
    # orbit-size decomposition per depth
    census, _ = count_via_permutation_weights(aid, 12)
    for m in range(1, 13):
        assert census.counts[m] == sum(
            r.orbit_size for r in records if r.depth == m
        )


def test_census_to_series():
    census = enumerate_bfs(A1, 6)
    series = census_to_series(census)
    assert series.truncation == 6
    assert series.coeffs == (2, 2, 0, 2, 0, 0, 2)
    assert census_to_series(enumerate_bfs(A1, 0)).coeffs == (2,)


def test_census_matches_eta_at_moderate_depth():
    for name in ["B4~1", "D5~1", "A7~2", "D5~2"]:
        aid = parse_algebra(name)
        census, _ = count_via_permutation_weights(aid, 15)
        eta = eta_quotient_series(eta_table_entry(aid), 15)
        assert census.counts == eta.coeffs, name
