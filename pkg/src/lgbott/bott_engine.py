"""Bott's algorithm on LG(k) = Sp(2(k+1)) / P_{k+1}.

The degree is read off the pairings of ``lam + rho`` with the positive roots.
The dominant representative is obtained independently by sorting absolute
epsilon coordinates, and the number of inversions and sign flips of that sort
must reproduce the degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .lie_core import (
    Weight,
    add,
    from_epsilon,
    is_g_dominant,
    is_p_dominant,
    pair,
    positive_roots,
    rho,
    sub,
    to_epsilon,
)


class DominanceError(ValueError):
    """Input weight fails the dominance condition an operation requires."""


@dataclass(frozen=True)
class Singular:
    """All cohomology vanishes."""

    def __repr__(self) -> str:
        return "Singular"


SINGULAR = Singular()


@dataclass(frozen=True)
class NonSingular:
    """Cohomology is ``Gamma^dominant`` in exactly one degree."""

    degree: int
    dominant: Weight
    dimension: int


CohomologyResult = Union[Singular, NonSingular]


def degree_by_pairing(shifted: Weight) -> Union[Singular, int]:
    """Count positive roots pairing negatively with an already rho-shifted weight.

    Returns ``SINGULAR`` as soon as some pairing vanishes.
    """
    negative = 0
    for a in positive_roots(len(shifted)):
        value = pair(shifted, a)
        if value == 0:
            return SINGULAR
        if value < 0:
            negative += 1
    return negative


def epsilon_sort(shifted: Weight) -> tuple[int, tuple[int, ...]] | None:
    """Normalise ``shifted`` into the dominant chamber by a signed sort.

    Returns ``(length, sorted_abs)`` where ``sorted_abs`` is the descending
    sequence of absolute epsilon coordinates and ``length`` counts the sign
    flips plus the inversions the signed sort performs.  ``None`` if the
    weight lies on a wall (a zero or a repeated absolute value).
    """
    e = to_epsilon(shifted)
    mags = [abs(x) for x in e]
    m = len(e)
    if 0 in mags or len(set(mags)) != m:
        return None
    flips = sum(1 for x in e if x < 0)
    inversions = 0
    for i in range(m):
        for j in range(i + 1, m):
            if e[i] < 0:
                # a negative entry is out of place w.r.t. every later entry once,
                # and a second time if it also has to pass it in magnitude
                inversions += 1 + (mags[i] > mags[j])
            else:
                inversions += mags[i] < mags[j]
    return flips + inversions, tuple(sorted(mags, reverse=True))


def module_dimension(mu: Weight, m: int | None = None) -> int:
    """Weyl dimension of the irreducible Sp(2m)-module of highest weight ``mu``."""
    if m is None:
        m = len(mu)
    if len(mu) != m:
        raise ValueError(f"weight of length {len(mu)} for rank {m}")
    if not is_g_dominant(mu):
        raise DominanceError(f"{mu} is not G-dominant")
    return _module_dimension(tuple(mu))


@lru_cache(maxsize=None)
def _module_dimension(mu: Weight) -> int:
    m = len(mu)
    shifted = add(mu, rho(m))
    num = 1
    den = 1
    for a in positive_roots(m):
        num *= pair(shifted, a)
        den *= pair(rho(m), a)
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension formula produced a non-integer"
    return q


def bott(lam: Weight) -> CohomologyResult:
    """Cohomology of the irreducible homogeneous bundle with P-dominant weight ``lam``."""
    lam = tuple(lam)
    if not lam:
        raise ValueError("empty weight")
    if not is_p_dominant(lam):
        raise DominanceError(f"{lam} is not P-dominant")
    return _bott(lam)


@lru_cache(maxsize=1 << 16)
def _bott(lam: Weight) -> CohomologyResult:
    m = len(lam)
    shifted = add(lam, rho(m))
    degree = degree_by_pairing(shifted)
    normal = epsilon_sort(shifted)
    if degree is SINGULAR:
        if normal is not None:
            raise ArithmeticError(f"pairing test and epsilon sort disagree on {lam}")
        return SINGULAR
    if normal is None or normal[0] != degree:
        raise ArithmeticError(f"Weyl length mismatch for {lam}: {degree} vs {normal}")
    dominant = sub(from_epsilon(normal[1]), rho(m))
    return NonSingular(degree, dominant, _module_dimension(dominant))
