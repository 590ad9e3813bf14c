"""Partitions and vertical-strip Pieri products for the Levi factor SL(m).

A partition is a tuple of positive integers in weakly decreasing order.
Decompositions are plain ``{partition: multiplicity}`` dicts.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import lru_cache
from itertools import combinations

Partition = tuple[int, ...]
Decomposition = dict[Partition, int]


class PartitionError(ValueError):
    pass


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and drop trailing zeros."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise PartitionError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise PartitionError(f"{parts} is not weakly decreasing")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def pad(pi: Partition, m: int) -> tuple[int, ...]:
    if len(pi) > m:
        raise PartitionError(f"{pi} has more than {m} rows")
    return tuple(pi) + (0,) * (m - len(pi))


def conjugate(pi: Partition) -> Partition:
    if not pi:
        return ()
    return tuple(sum(1 for p in pi if p > c) for c in range(pi[0]))


def pieri_wedge(pi: Partition, j: int, m: int) -> Decomposition:
    """``F^pi (x) wedge^j F`` for SL(m): add a vertical strip of ``j`` boxes."""
    if not 0 <= j <= m:
        raise PartitionError(f"wedge degree {j} outside [0, {m}]")
    rows = list(pad(make_partition(pi), m))
    out: Decomposition = {}
    for chosen in combinations(range(m), j):
        new = rows[:]
        for r in chosen:
            new[r] += 1
        if all(new[r] >= new[r + 1] for r in range(m - 1)):
            out[make_partition(new)] = 1
    return out


def decompose_wedges(j_list: Sequence[int], m: int) -> Decomposition:
    """Iterated Pieri decomposition of ``wedge^{j_1} F (x) ... (x) wedge^{j_r} F``."""
    for j in j_list:
        if not 0 <= j <= m:
            raise PartitionError(f"wedge degree {j} outside [0, {m}]")
    key = tuple(sorted(j for j in j_list if j))
    return dict(_decompose_sorted(key, m))


@lru_cache(maxsize=None)
def _decompose_sorted(key: tuple[int, ...], m: int) -> tuple[tuple[Partition, int], ...]:
    # memo keyed on the sorted multiset; each entry extends its longest proper prefix
    if not key:
        return (((), 1),)
    acc: Decomposition = {}
    for pi, mult in _decompose_sorted(key[:-1], m):
        for lam in pieri_wedge(pi, key[-1], m):
            acc[lam] = acc.get(lam, 0) + mult
    return tuple(sorted(acc.items()))


def sl_dim(pi: Partition, m: int) -> int:
    """Dimension of the SL(m) Schur module ``F^pi``."""
    rows = pad(make_partition(pi), m)
    num = 1
    den = 1
    for i in range(m):
        for j in range(i + 1, m):
            num *= rows[i] - rows[j] + j - i
            den *= j - i
    return num // den


def normalize_columns(pi: Sequence[int], t: int, m: int) -> tuple[Partition, int]:
    """Strip full columns: ``F^pi(t) = F^{pi - pi_m}(t + pi_m)``."""
    rows = pad(make_partition(pi), m)
    full = rows[-1]
    return make_partition(r - full for r in rows), t + full
