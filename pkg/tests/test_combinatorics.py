import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sixvertex.combinatorics import (
    CombinatoricsError,
    NotStrictSector,
    OccupationVector,
    Partition,
    StrictPartition,
    admissible,
    enumerate_chains,
    format_partition,
    interlaces,
    interlacing_predecessors,
    lambda_of_x,
    new_parts_count,
    occupation_to_partition,
    occupation_to_strict,
    parse_partition,
    partitions_in_box,
    poincare_dual,
    strict_partitions,
    strict_to_occupation,
    x_of_lambda,
)

bits = st.lists(st.integers(0, 1), min_size=1, max_size=7)


def test_worked_occupation():
    # sites 1, 4, 5 occupied on five sites
    assert occupation_to_strict((1, 0, 0, 1, 1)) == (5, 4, 1)
    assert occupation_to_strict((0, 0, 1, 1, 0)) == (4, 3)


def test_multiple_occupation_not_strict():
    with pytest.raises(NotStrictSector):
        occupation_to_strict((2, 0))
    assert occupation_to_partition((2, 0, 1)) == (3, 1, 1)


def test_partition_validation():
    with pytest.raises(CombinatoricsError):
        Partition((1, 2))
    with pytest.raises(CombinatoricsError):
        StrictPartition((2, 2))
    with pytest.raises(CombinatoricsError):
        StrictPartition((1, 0))


def test_partition_text():
    assert parse_partition("3,1") == (3, 1)
    assert parse_partition("") == ()
    assert format_partition((3, 1)) == "3,1"
    with pytest.raises(CombinatoricsError):
        parse_partition("3,x")
    with pytest.raises(CombinatoricsError):
        parse_partition("1,3")


def test_staircase():
    assert lambda_of_x((4, 3), 2) == (2, 2)
    assert x_of_lambda((1, 0), 2) == (3, 1)


def test_poincare_dual():
    assert poincare_dual((2, 0), 4, 2) == (2, 0)
    assert poincare_dual((1, 1), 4, 2) == (1, 1)
    assert poincare_dual((0, 0), 5, 2) == (3, 3)


def test_interlacing():
    assert interlaces((5, 4, 1), (4, 3))
    assert interlaces((5, 4, 1), (4, 2))
    assert not interlaces((5, 4, 1), (3, 2))
    with pytest.raises(CombinatoricsError):
        interlaces((2, 1), (2, 1))


def test_admissible_worked_pair():
    assert admissible((1, 0, 0, 1, 1), (0, 0, 1, 1, 0))
    assert not admissible((1, 1, 0), (0, 0, 1))
    with pytest.raises(CombinatoricsError):
        admissible((1, 0), (1, 0))


def test_new_parts():
    assert new_parts_count((5, 4, 1), (4, 3)) == 2


def test_box_partitions_count_and_order():
    box = list(partitions_in_box(2, 2))
    assert box == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]


def test_chains_for_two_rows():
    chains = enumerate_chains((3, 1))
    assert chains == [((), (1,), (3, 1)), ((), (2,), (3, 1)), ((), (3,), (3, 1))]


def test_bits_round_trip():
    occ = OccupationVector.from_bits("00110")
    assert occ.to_bits() == "00110" and occ.N == 2 and occ.M == 5


@settings(max_examples=100, deadline=None)
@given(bits)
def test_occupation_strict_round_trip(occ):
    x = occupation_to_strict(occ)
    assert strict_to_occupation(x, len(occ)) == tuple(occ)


@settings(max_examples=100, deadline=None)
@given(bits)
def test_lambda_round_trip(occ):
    x = occupation_to_strict(occ)
    N = len(x)
    lam = lambda_of_x(x, N)
    assert x_of_lambda(lam, N) == x
    if N:
        assert lam[0] <= len(occ) - N


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(0, 4), st.data())
def test_dual_is_an_involution(N, width, data):
    lam = data.draw(st.sampled_from(list(partitions_in_box(N, width))))
    M = N + width
    assert poincare_dual(poincare_dual(lam, M, N), M, N) == lam


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.data())
def test_predecessors_are_exactly_interlacing(m, data):
    k = data.draw(st.integers(1, m))
    y = data.draw(st.sampled_from(list(strict_partitions(k, m))))
    preds = set(interlacing_predecessors(y))
    brute = {x for x in strict_partitions(k - 1, m) if interlaces(y, x)}
    assert preds == brute


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.data())
def test_admissible_iff_interlacing(M, data):
    N = data.draw(st.integers(0, M - 1))
    n = data.draw(st.sampled_from([o for o in _occs(M, N)]))
    m = data.draw(st.sampled_from([o for o in _occs(M, N + 1)]))
    assert admissible(m, n) == interlaces(occupation_to_strict(m), occupation_to_strict(n))


def _occs(M, N):
    from itertools import product

    return [o for o in product((0, 1), repeat=M) if sum(o) == N]
