"""Bundles ``wedge^{j_k} Q* (x) ... (x) wedge^{j_1} Q* (t)`` on LG(k).

Slot ``q`` carries ``0 <= j_q <= q + 1``.  The top value ``j_q = q + 1`` is a
placeholder for a line bundle: it adds nothing to the tensor product but still
counts toward the degree sum ``sum(j_q)``.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass, field

from .bott_engine import CohomologyResult, NonSingular, bott
from .lie_core import Weight
from .pieri_schur import Partition, PartitionError, decompose_wedges, pad


class BundleError(ValueError):
    pass


class ParseError(BundleError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class BundleExpression:
    k: int
    wedges: tuple[int, ...]
    twist: int | None = None  # None means "all twists"

    def __post_init__(self):
        object.__setattr__(self, "wedges", tuple(self.wedges))
        if self.k < 1:
            raise BundleError(f"k must be >= 1, got {self.k}")
        if len(self.wedges) != self.k:
            raise BundleError(f"LG({self.k}) needs {self.k} wedge factors, got {len(self.wedges)}")
        for q, j in enumerate(self.wedges, start=1):
            if not 0 <= j <= q + 1:
                raise BundleError(f"j_{q} = {j} outside [0, {q + 1}]")

    @property
    def m(self) -> int:
        return self.k + 1

    @property
    def placeholders(self) -> tuple[bool, ...]:
        return tuple(j == q + 1 for q, j in enumerate(self.wedges, start=1))

    @property
    def effective_wedges(self) -> tuple[int, ...]:
        """Wedge degrees that actually enter the tensor product."""
        return tuple(j for j, ph in zip(self.wedges, self.placeholders) if not ph)

    @property
    def degree_target(self) -> int:
        return sum(self.wedges)

    def __str__(self) -> str:
        factors = "*".join(f"w{j}" for j in reversed(self.wedges))
        twist = "t" if self.twist is None else str(self.twist)
        return f"{factors}({twist}) @ LG({self.k})"


def assign_slots(values: Sequence[int], k: int) -> tuple[int, ...]:
    """Match a multiset of wedge degrees to slots ``q = 1..k`` in sorted order."""
    if len(values) != k:
        raise BundleError(f"LG({k}) needs {k} wedge factors, got {len(values)}")
    ordered = tuple(sorted(values))
    for q, j in enumerate(ordered, start=1):
        if j < 0:
            raise BundleError(f"negative wedge degree {j}")
        if j > q + 1:
            raise BundleError(
                f"wedge degrees {sorted(values, reverse=True)} cannot fill LG({k}): "
                f"slot {q} would need j <= {q + 1}, got {j}"
            )
    return ordered


@dataclass(frozen=True)
class SummandRecord:
    partition: Partition
    multiplicity: int
    twist: int
    result: CohomologyResult


@dataclass
class CohomologyReport:
    expression: BundleExpression
    records: list[SummandRecord] = field(default_factory=list)
    aggregate: dict[int, int] = field(default_factory=dict)

    @property
    def vanishes(self) -> bool:
        return not self.aggregate


def weight_of(pi: Sequence[int], t: int, m: int) -> Weight:
    """Bott input weight of the summand ``F^pi(t)``; the twist lands in the last slot."""
    if len(pi) > m:
        raise PartitionError(f"{tuple(pi)} has more than {m} rows")
    rows = pad(tuple(pi), m)
    return tuple(rows[i] - rows[i + 1] for i in range(m - 1)) + (rows[-1] + t,)


def bundle_cohomology(expr: BundleExpression) -> CohomologyReport:
    if expr.twist is None:
        raise BundleError("bundle_cohomology needs a concrete twist")
    report = CohomologyReport(expr)
    decomposition = decompose_wedges(expr.effective_wedges, expr.m)
    for pi in sorted(decomposition):
        mult = decomposition[pi]
        result = bott(weight_of(pi, expr.twist, expr.m))
        report.records.append(SummandRecord(pi, mult, expr.twist, result))
        if isinstance(result, NonSingular):
            report.aggregate[result.degree] = (
                report.aggregate.get(result.degree, 0) + mult * result.dimension
            )
    report.aggregate = dict(sorted(report.aggregate.items()))
    return report


_TOKEN = re.compile(r"\s*(?:(?P<lg>LG)|(?P<w>w)|(?P<int>[+-]?\d+)|(?P<sym>[*()@]))")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self):
        match = _TOKEN.match(self.text, self.pos)
        if match is None:
            rest = self.text[self.pos:]
            if not rest.strip():
                return None, len(self.text), self.pos
            offset = len(rest) - len(rest.lstrip())
            raise ParseError(f"unexpected character {rest.lstrip()[0]!r}", self.pos + offset)
        kind = match.lastgroup
        return (kind, match.group(kind)), match.start(kind), match.end()

    def take(self, kind: str, value: str | None = None) -> str:
        tok, start, end = self.peek()
        if tok is None:
            raise ParseError(f"expected {value or kind}, got end of input", start)
        if tok[0] != kind or (value is not None and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}", start)
        self.pos = end
        return tok[1]

    def at(self, kind: str, value: str | None = None) -> bool:
        tok, _, _ = self.peek()
        return tok is not None and tok[0] == kind and (value is None or tok[1] == value)


def parse_bundle_expression(text: str) -> BundleExpression:
    """Parse e.g. ``"w6*w5*w4*w3*w3*w2*w1(-9) @ LG(7)"``.

    Factors may come in any order; they are assigned to slots by sorted
    assignment.  The twist may be written as ``t`` to mean all twists.
    """
    cur = _Cursor(text)
    degrees = []
    positions = []
    while True:
        _, start, _ = cur.peek()
        cur.take("w")
        value = cur.take("int")
        if value.startswith(("+", "-")):
            raise ParseError("wedge degree must be an unsigned integer", start + 1)
        degrees.append(int(value))
        positions.append(start)
        if not cur.at("sym", "*"):
            break
        cur.take("sym", "*")
    cur.take("sym", "(")
    twist_text = text[cur.pos:].lstrip()
    if twist_text.startswith("t"):
        cur.pos = len(text) - len(twist_text) + 1
        twist = None
    else:
        twist = int(cur.take("int"))
    cur.take("sym", ")")
    cur.take("sym", "@")
    cur.take("lg")
    cur.take("sym", "(")
    _, k_start, _ = cur.peek()
    k = int(cur.take("int"))
    cur.take("sym", ")")
    tok, start, _ = cur.peek()
    if tok is not None:
        raise ParseError(f"trailing input {tok[1]!r}", start)
    if k < 1:
        raise ParseError(f"LG index must be >= 1, got {k}", k_start)
    if len(degrees) != k:
        raise ParseError(f"LG({k}) needs {k} wedge factors, got {len(degrees)}", 0)
    try:
        wedges = assign_slots(degrees, k)
    except BundleError as exc:
        bad = max(range(len(degrees)), key=lambda i: degrees[i])
        raise ParseError(str(exc), positions[bad]) from None
    return BundleExpression(k, wedges, twist)
