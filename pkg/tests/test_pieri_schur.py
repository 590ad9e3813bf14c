import math
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lgbott.pieri_schur import (
    PartitionError,
    conjugate,
    decompose_wedges,
    make_partition,
    normalize_columns,
    pieri_wedge,
    sl_dim,
)
from oracles import conj, count_ssyt, count_ssyt_entries, vertical_strips


def test_pieri_examples():
    assert pieri_wedge((1,), 1, 3) == {(2,): 1, (1, 1): 1}
    assert pieri_wedge((), 3, 3) == {(1, 1, 1): 1}
    assert pieri_wedge((), 3, 5) == {(1, 1, 1): 1}
    assert pieri_wedge((2, 1), 2, 3) == {(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}


def test_pieri_discards_too_many_rows():
    assert pieri_wedge((1, 1), 1, 2) == {(2, 1): 1}
    assert pieri_wedge((1, 1, 1), 3, 3) == {(2, 2, 2): 1}


def test_pieri_errors():
    with pytest.raises(PartitionError):
        pieri_wedge((), 4, 3)
    with pytest.raises(PartitionError):
        pieri_wedge((1, 1, 1, 1), 1, 3)


@pytest.mark.parametrize("m", range(1, 6))
def test_pieri_against_cell_enumeration(m):
    partitions = {make_partition(sorted(p, reverse=True)) for p in product(range(4), repeat=m)}
    for pi in partitions:
        for j in range(m + 1):
            got = pieri_wedge(pi, j, m)
            assert set(got) == vertical_strips(pi, j, m)
            assert set(got.values()) <= {1}


def test_decompose_examples():
    assert decompose_wedges([1, 1], 3) == {(2,): 1, (1, 1): 1}
    assert decompose_wedges([2], 3) == {(1, 1): 1}
    assert decompose_wedges([], 3) == {(): 1}
    d = decompose_wedges([6, 5, 4, 3, 3, 2, 1], 8)
    assert d[(7, 6, 5, 3, 2, 1)] >= 1


def test_decompose_multiplicities_are_kostka_numbers():
    # e_mu = sum_lambda K_{lambda', mu} s_lambda
    for mu in ([2, 1, 1], [2, 2, 1], [3, 2, 1], [1, 1, 1, 1], [3, 3]):
        m = sum(mu)  # no row truncation
        got = decompose_wedges(mu, m)
        for lam, mult in got.items():
            assert mult == count_ssyt(conj(lam), sorted(mu, reverse=True))
        # everything with a positive Kostka number shows up
        assert sum(mult * count_ssyt_entries(lam, 2) for lam, mult in got.items()) == math.prod(
            math.comb(2, j) for j in mu
        )


def test_decompose_rejects_out_of_range():
    with pytest.raises(PartitionError):
        decompose_wedges([4], 3)


def test_decompose_returns_fresh_dict():
    d = decompose_wedges([1, 1], 3)
    d.clear()
    assert decompose_wedges([1, 1], 3) == {(2,): 1, (1, 1): 1}


@pytest.mark.parametrize("k", range(1, 6))
def test_dimension_bookkeeping(k):
    m = k + 1
    for js in product(*(range(q + 2) for q in range(1, k + 1))):
        d = decompose_wedges(js, m)
        assert all(len(pi) <= m and mult >= 1 for pi, mult in d.items())
        assert sum(mult * sl_dim(pi, m) for pi, mult in d.items()) == math.prod(
            math.comb(m, j) for j in js
        )
        lam = conjugate(make_partition(sorted(js, reverse=True)))
        if len(lam) <= m:
            assert lam in d


@given(st.integers(2, 6).flatmap(
    lambda m: st.tuples(st.just(m), st.lists(st.integers(0, m), max_size=5))
))
def test_order_independence(data):
    m, js = data
    assert decompose_wedges(js, m) == decompose_wedges(sorted(js), m)
    assert decompose_wedges(js, m) == decompose_wedges(list(reversed(js)), m)


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1, 1, 1)) == (5,)


@given(st.lists(st.integers(0, 9), max_size=8))
def test_conjugate_involutive(parts):
    pi = make_partition(sorted(parts, reverse=True))
    assert conjugate(conjugate(pi)) == pi
    assert sum(conjugate(pi)) == sum(pi)


def test_sl_dim_examples():
    assert sl_dim((1,), 3) == 3
    assert sl_dim((2,), 3) == 6
    assert sl_dim((1, 1), 3) == 3


@pytest.mark.parametrize("pi", [(), (1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2), (2, 1, 1)])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_sl_dim_against_tableau_count(pi, m):
    if len(pi) > m:
        return
    assert sl_dim(pi, m) == count_ssyt_entries(pi, m)


def test_normalize_columns():
    assert normalize_columns((2, 1, 1), 5, 3) == ((1,), 6)
    assert normalize_columns((1, 1, 1), 0, 3) == ((), 1)
    assert normalize_columns((3, 3, 3), -2, 3) == ((), 1)
    assert normalize_columns((2, 1), 4, 3) == ((2, 1), 4)


def test_make_partition_validation():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(PartitionError):
        make_partition([1, 2])
    with pytest.raises(PartitionError):
        make_partition([1, -1])
