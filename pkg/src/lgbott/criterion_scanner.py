"""Exhaustive verification of splitting-criterion vanishing conditions on LG(k).

Two index families are enumerated:

``sufficient``
    ``0 <= j_q <= n - 2k + q`` and ``sum(j) <= i < sum(j) + n - 2k``, ``i > 0``.
``lagrangian``
    ``n = 2k + 1``, ``0 <= j_q <= q + 1`` and ``i = sum(j) > 0``.

For every condition tuple each distinct irreducible summand ``F^pi`` of the
(placeholder-reduced) tensor product is run through Bott's algorithm over its
critical twist window.  Outside that window the Bott degree is constantly 0 or
``dim LG(k)``, neither of which is a target degree, so the window is complete.
"""

from __future__ import annotations

import math
import os
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .bott_engine import NonSingular, bott
from .bundle_model import weight_of
from .lie_core import Weight, dim_lg, noncompact_roots, pair, rho, add
from .pieri_schur import Partition, decompose_wedges, make_partition

MODES = ("lagrangian", "sufficient")


class ConditionError(ValueError):
    pass


@dataclass(frozen=True)
class ConditionTuple:
    k: int
    n: int
    i: int
    wedges: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.k + 1

    @property
    def placeholders(self) -> tuple[bool, ...]:
        top = self.n - 2 * self.k
        return tuple(j == top + q for q, j in enumerate(self.wedges, start=1))

    @property
    def effective_wedges(self) -> tuple[int, ...]:
        return tuple(j for j, ph in zip(self.wedges, self.placeholders) if not ph)

    def sort_key(self):
        return (self.k, self.n, self.wedges, self.i)


@dataclass(frozen=True)
class Violation:
    tuple: ConditionTuple
    partition: Partition
    multiplicity: int
    twist: int
    degree: int
    dominant: Weight
    dimension: int

    def sort_key(self):
        return (self.tuple.sort_key(), self.partition, self.twist)


@dataclass
class ScanSummary:
    mode: str
    k: int
    tuples_checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.violations


def _check_mode(mode: str, k: int, n: int | None) -> int:
    if mode not in MODES:
        raise ConditionError(f"unknown mode {mode!r}; expected one of {MODES}")
    if k < 1:
        raise ConditionError(f"k must be >= 1, got {k}")
    if n is None:
        n = 2 * k + 1
    if n % 2 == 0:
        raise ConditionError(f"n must be odd, got {n}")
    if n < 2 * k + 1:
        raise ConditionError(f"n must be >= 2k+1 = {2 * k + 1}, got {n}")
    if mode == "lagrangian" and n != 2 * k + 1:
        raise ConditionError("lagrangian mode requires n = 2k+1")
    return n


def iter_conditions(mode: str, k: int, n: int | None = None) -> Iterator[ConditionTuple]:
    n = _check_mode(mode, k, n)
    top = n - 2 * k
    for wedges in product(*(range(top + q + 1) for q in range(1, k + 1))):
        s = sum(wedges)
        if mode == "lagrangian":
            if s > 0:
                yield ConditionTuple(k, n, s, wedges)
        else:
            for i in range(max(s, 1), s + top):
                yield ConditionTuple(k, n, i, wedges)


def enumerate_conditions(mode: str, k: int, n: int | None = None) -> list[ConditionTuple]:
    """All condition tuples of the given family, lexicographic in ``(wedges, i)``."""
    return list(iter_conditions(mode, k, n))


def count_conditions(mode: str, k: int, n: int | None = None) -> int:
    n = _check_mode(mode, k, n)
    if mode == "lagrangian":
        return math.prod(q + 2 for q in range(1, k + 1)) - 1
    return sum(1 for _ in iter_conditions(mode, k, n))


def twist_constants(pi: Sequence[int], k: int) -> list[int]:
    """Constants ``c`` with ``<weight_of(pi, t) + rho, a> = 2t + c`` over noncompact roots ``a``."""
    m = k + 1
    shifted = add(weight_of(pi, 0, m), rho(m))
    # every noncompact root has alpha_m coefficient 1, so the slope in t is exactly 2
    return [pair(shifted, a) for a in noncompact_roots(m)]


def critical_twist_window(pi: Sequence[int], k: int) -> tuple[int, int]:
    """Smallest interval of twists outside which the Bott degree is 0 or top.

    ``t_hi`` is the largest t with some noncompact pairing ``<= 0`` and
    ``t_lo`` the smallest t with some noncompact pairing ``>= 0``.
    """
    consts = twist_constants(make_partition(pi), k)
    return -(max(consts) // 2), (-min(consts)) // 2


def script_twist_range(k: int) -> tuple[int, int]:
    """The fixed twist loop ``t = -2 .. 3(k+1)`` of the original scripts, with the sign flipped
    to match the ``+t`` convention of :func:`weight_of`."""
    return -3 * (k + 1), 2


@lru_cache(maxsize=None)
def _twist_profile(pi: Partition, k: int, twists: str) -> tuple[tuple[int, NonSingular], ...]:
    """Non-singular Bott results of ``F^pi(t)`` for t across the chosen twist range."""
    lo, hi = critical_twist_window(pi, k) if twists == "exact" else script_twist_range(k)
    m = k + 1
    out = []
    for t in range(lo, hi + 1):
        result = bott(weight_of(pi, t, m))
        if isinstance(result, NonSingular):
            out.append((t, result))
    return tuple(out)


@lru_cache(maxsize=None)
def _degree_hits(
    effective: tuple[int, ...], k: int, twists: str
) -> dict[int, tuple[tuple[Partition, int, int, NonSingular], ...]]:
    """Index ``degree -> ((pi, mult, t, result), ...)`` for one effective wedge multiset."""
    decomposition = decompose_wedges(effective, k + 1)
    hits: dict[int, list] = {}
    for pi in sorted(decomposition):
        for t, result in _twist_profile(pi, k, twists):
            hits.setdefault(result.degree, []).append((pi, decomposition[pi], t, result))
    return {d: tuple(v) for d, v in hits.items()}


def scan_tuple(ct: ConditionTuple, twists: str = "exact") -> list[Violation]:
    """Violations of one condition tuple: non-vanishing ``H^i`` of some summand at some twist."""
    if ct.n != 2 * ct.k + 1:
        raise ConditionError("cohomology is only computed on LG(k), i.e. n = 2k+1")
    if twists not in ("exact", "script"):
        raise ConditionError(f"unknown twist range {twists!r}")
    effective = tuple(sorted(j for j in ct.effective_wedges if j))
    hits = _degree_hits(effective, ct.k, twists).get(ct.i, ())
    return [
        Violation(ct, pi, mult, t, result.degree, result.dominant, result.dimension)
        for pi, mult, t, result in hits
    ]


def _scan_chunk(chunk: Sequence[ConditionTuple], twists: str) -> tuple[int, list[Violation]]:
    found = []
    for ct in chunk:
        found.extend(scan_tuple(ct, twists))
    return len(chunk), found


def _chunks(items: Sequence, size: int) -> Iterable[Sequence]:
    for start in range(0, len(items), size):
        yield items[start:start + size]


def default_jobs() -> int:
    value = os.environ.get("LGBOTT_JOBS")
    if value:
        try:
            jobs = int(value)
        except ValueError:
            raise ConditionError(f"LGBOTT_JOBS must be an integer, got {value!r}") from None
        if jobs < 1:
            raise ConditionError("LGBOTT_JOBS must be >= 1")
        return jobs
    return 1


def verify_criterion(
    mode: str,
    k: int,
    jobs: int = 1,
    *,
    n: int | None = None,
    tuples: Iterable[ConditionTuple] | None = None,
    twists: str = "exact",
) -> ScanSummary:
    """Scan every condition tuple (or the given subset) and collect violations.

    The report is canonically sorted, so it does not depend on ``jobs``.
    """
    n = _check_mode(mode, k, n)
    if jobs < 1:
        raise ConditionError(f"jobs must be >= 1, got {jobs}")
    work = list(iter_conditions(mode, k, n) if tuples is None else tuples)
    summary = ScanSummary(mode, k)
    if jobs == 1 or len(work) < 2:
        results = [_scan_chunk(work, twists)]
    else:
        size = max(1, math.ceil(len(work) / (jobs * 8)))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_scan_chunk, _chunks(work, size), [twists] * math.ceil(len(work) / size))
            )
    for count, found in results:
        summary.tuples_checked += count
        summary.violations.extend(found)
    summary.violations.sort(key=Violation.sort_key)
    return summary


@dataclass(frozen=True)
class ChainFailure:
    i: int
    j: int
    twist: int
    degree: int


@dataclass
class ChainSummary:
    k: int
    checks: int = 0
    failures: list[ChainFailure] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.failures


def verify_chain_criterion(k: int) -> ChainSummary:
    """Check that ``wedge^j Q*(t)`` on each ``LG(i)``, ``1 <= i <= k``, ``1 <= j <= i+1``,
    has no cohomology in degrees ``1 .. min(2i+2, dim LG(i))`` for any twist."""
    if k < 1:
        raise ConditionError(f"k must be >= 1, got {k}")
    summary = ChainSummary(k)
    for i in range(1, k + 1):
        bound = min(2 * i + 2, dim_lg(i))
        for j in range(1, i + 2):
            pi = (1,) * j
            lo, hi = critical_twist_window(pi, i)
            for t in range(lo, hi + 1):
                summary.checks += 1
                result = bott(weight_of(pi, t, i + 1))
                if isinstance(result, NonSingular) and 1 <= result.degree <= bound:
                    summary.failures.append(ChainFailure(i, j, t, result.degree))
    return summary
