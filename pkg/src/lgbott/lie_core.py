"""Root system combinatorics for C_m = Sp(2m).

Weights are integer tuples in fundamental-weight coordinates, roots are
integer tuples in simple-root coordinates.  The last simple root
``alpha_m = 2 e_m`` is the long one.

The pairing used throughout is

    <lam, a> = sum_{i<m} lam_i a_i + 2 lam_m a_m,

which coincides with the Euclidean dot product in epsilon coordinates.  It is
the coroot pairing on short roots and twice it on long roots, so signs and
zeros agree with the coroot pairing.
"""

from __future__ import annotations

from functools import lru_cache

Weight = tuple[int, ...]
Root = tuple[int, ...]
EpsilonVector = tuple[int, ...]


class RankError(ValueError):
    """Raised for a non-positive rank or mismatched vector lengths."""


def _check_rank(m: int) -> None:
    if m < 1:
        raise RankError(f"rank must be >= 1, got {m}")


@lru_cache(maxsize=None)
def positive_roots(m: int) -> tuple[Root, ...]:
    """The m**2 positive roots of C_m in simple-root coordinates.

    Built from the two families of the standard table: contiguous sums
    ``alpha_i + ... + alpha_j`` and the long-tailed roots
    ``alpha_i + ... + alpha_{j-1} + 2 alpha_j + ... + 2 alpha_{m-1} + alpha_m``.
    """
    _check_rank(m)
    roots = []
    for i in range(m):
        for j in range(i, m):
            roots.append(tuple(1 if i <= p <= j else 0 for p in range(m)))
    for i in range(m - 1):
        for j in range(i, m - 1):
            coeffs = [0] * m
            for p in range(i, j):
                coeffs[p] = 1
            for p in range(j, m - 1):
                coeffs[p] = 2
            coeffs[m - 1] = 1
            roots.append(tuple(coeffs))
    return tuple(roots)


@lru_cache(maxsize=None)
def noncompact_roots(m: int) -> tuple[Root, ...]:
    """Positive roots whose alpha_m coefficient is non-zero (there are m(m+1)/2)."""
    return tuple(a for a in positive_roots(m) if a[-1])


def rho(m: int) -> Weight:
    _check_rank(m)
    return (1,) * m


def pair(lam: Weight, a: Root) -> int:
    m = len(lam)
    if len(a) != m:
        raise RankError(f"length mismatch: weight has {m} entries, root has {len(a)}")
    if m == 0:
        raise RankError("empty weight")
    total = 2 * lam[-1] * a[-1]
    for i in range(m - 1):
        total += lam[i] * a[i]
    return total


def add(lam: Weight, mu: Weight) -> Weight:
    if len(lam) != len(mu):
        raise RankError("length mismatch")
    return tuple(x + y for x, y in zip(lam, mu))


def sub(lam: Weight, mu: Weight) -> Weight:
    if len(lam) != len(mu):
        raise RankError("length mismatch")
    return tuple(x - y for x, y in zip(lam, mu))


def fundamental_weight(i: int, m: int) -> Weight:
    """omega_i for 1 <= i <= m."""
    _check_rank(m)
    if not 1 <= i <= m:
        raise ValueError(f"fundamental weight index {i} outside [1, {m}]")
    return tuple(1 if p == i - 1 else 0 for p in range(m))


def to_epsilon(lam: Weight) -> EpsilonVector:
    # e_j = lam_j + ... + lam_m
    out = []
    acc = 0
    for x in reversed(lam):
        acc += x
        out.append(acc)
    return tuple(reversed(out))


def from_epsilon(e: EpsilonVector) -> Weight:
    m = len(e)
    return tuple(e[i] - (e[i + 1] if i + 1 < m else 0) for i in range(m))


def root_to_epsilon(a: Root) -> EpsilonVector:
    """Epsilon coordinates of the root ``sum a_i alpha_i``."""
    m = len(a)
    out = []
    for j in range(m):
        if j == m - 1:
            out.append(2 * a[j] - (a[j - 1] if j > 0 else 0))
        else:
            out.append(a[j] - (a[j - 1] if j > 0 else 0))
    return tuple(out)


def is_p_dominant(lam: Weight) -> bool:
    """All coordinates except the last are non-negative."""
    return all(x >= 0 for x in lam[:-1])


def is_g_dominant(lam: Weight) -> bool:
    return all(x >= 0 for x in lam)


def dim_lg(k: int) -> int:
    """Dimension of LG(k), equal to the number of noncompact roots of C_{k+1}."""
    return (k + 1) * (k + 2) // 2
