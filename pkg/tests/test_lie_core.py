import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lgbott.lie_core import (
    RankError,
    from_epsilon,
    noncompact_roots,
    pair,
    positive_roots,
    rho,
    root_to_epsilon,
    to_epsilon,
)
from oracles import coroot_pairing, eps_positive_roots, eps_root_to_simple


def test_positive_roots_rank_two_matches_table():
    assert set(positive_roots(2)) == {(1, 0), (0, 1), (1, 1), (2, 1)}


def test_positive_roots_rank_one():
    assert positive_roots(1) == ((1,),)


def test_positive_roots_rank_three_against_epsilon_enumeration():
    roots = positive_roots(3)
    assert len(roots) == 9
    assert sum(1 for a in roots if a[-1] == 1) == 6
    assert set(roots) == {eps_root_to_simple(r) for r in eps_positive_roots(3)}


@pytest.mark.parametrize("m", range(1, 13))
def test_root_counts(m):
    roots = positive_roots(m)
    assert len(roots) == len(set(roots)) == m * m
    assert set(roots) == {eps_root_to_simple(r) for r in eps_positive_roots(m)}
    assert all(set(a) <= {0, 1, 2} and a[-1] in (0, 1) for a in roots)
    # noncompact roots count = dim LG(m-1)
    assert len(noncompact_roots(m)) == m * (m + 1) // 2


def test_zero_rank_rejected():
    with pytest.raises(RankError):
        positive_roots(0)
    with pytest.raises(RankError):
        rho(0)


def test_rho():
    assert rho(3) == (1, 1, 1)
    assert rho(1) == (1,)
    assert to_epsilon(rho(3)) == (3, 2, 1)


def test_pair_anchor_values():
    lam = (1, 2, 1, -2)  # omega_2 - 3 omega_4 + rho
    assert pair(lam, (0, 0, 0, 1)) == -4
    assert pair(lam, (0, 0, 1, 1)) == -3
    assert pair(rho(4), (1, 0, 0, 0)) == 1


def test_pair_length_mismatch():
    with pytest.raises(RankError):
        pair((1, 2), (1, 0, 0))


def test_epsilon_examples():
    assert to_epsilon((2, 2, 3, 2, 2, 2, 1, -8)) == (6, 4, 2, -1, -3, -5, -7, -8)
    assert to_epsilon((0, 0, 0)) == (0, 0, 0)
    assert from_epsilon((0, 0, 0)) == (0, 0, 0)


def test_epsilon_round_trip_random():
    rng = random.Random(20261016)
    for _ in range(10_000):
        m = rng.randint(1, 9)
        lam = tuple(rng.randint(-50, 50) for _ in range(m))
        assert from_epsilon(to_epsilon(lam)) == lam


def test_root_to_epsilon_inverts_oracle():
    for m in range(1, 7):
        for r in eps_positive_roots(m):
            assert root_to_epsilon(eps_root_to_simple(r)) == r


weights = st.integers(min_value=1, max_value=8).flatmap(
    lambda m: st.lists(st.integers(-30, 30), min_size=m, max_size=m).map(tuple)
)


@given(weights)
def test_pairing_sign_matches_coroot_pairing(lam):
    m = len(lam)
    for r in eps_positive_roots(m):
        ours = pair(lam, eps_root_to_simple(r))
        ref = coroot_pairing(lam, r)
        assert (ours > 0) == (ref > 0)
        assert (ours == 0) == (ref == 0)
        # doubled exactly on long roots
        assert ours == ref * (2 if max(map(abs, r)) == 2 else 1)


@given(weights, st.data())
def test_pairing_linear_in_weight(lam, data):
    m = len(lam)
    mu = tuple(data.draw(st.lists(st.integers(-30, 30), min_size=m, max_size=m)))
    c = data.draw(st.integers(-5, 5))
    for a in positive_roots(m):
        combo = tuple(c * x + y for x, y in zip(lam, mu))
        assert pair(combo, a) == c * pair(lam, a) + pair(mu, a)
