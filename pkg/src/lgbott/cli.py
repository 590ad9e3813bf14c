"""Command-line front end: ``lgbott {cohom,decompose,pairings,verify}``.

Exit codes: 0 clean, 1 violations found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager

from .bott_engine import NonSingular
from .bundle_model import (
    BundleError,
    BundleExpression,
    assign_slots,
    bundle_cohomology,
    parse_bundle_expression,
    weight_of,
)
from .criterion_scanner import (
    ConditionError,
    ConditionTuple,
    count_conditions,
    default_jobs,
    iter_conditions,
    twist_constants,
    verify_chain_criterion,
    verify_criterion,
)
from .lie_core import noncompact_roots
from .pieri_schur import PartitionError, decompose_wedges, sl_dim

EXIT_CLEAN = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2

RECORD_FIELDS = ("k", "tuple", "partition", "twist", "degree", "dominant", "dimension", "multiplicity")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _fmt(seq) -> str:
    return "(" + ",".join(str(x) for x in seq) + ")"


def violation_record(v) -> dict:
    return {
        "k": v.tuple.k,
        "tuple": list(v.tuple.wedges),
        "partition": list(v.partition),
        "twist": v.twist,
        "degree": v.degree,
        "dominant": list(v.dominant),
        "dimension": str(v.dimension),
        "multiplicity": v.multiplicity,
    }


def violation_text(v) -> str:
    return (
        f"k={v.tuple.k} tuple={_fmt(v.tuple.wedges)} partition={_fmt(v.partition)} "
        f"twist={v.twist} degree={v.degree} dominant={_fmt(v.dominant)} "
        f"dimension={v.dimension} multiplicity={v.multiplicity}"
    )


@contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _expression_from_args(args) -> BundleExpression:
    if args.expr:
        if args.k is not None or args.wedges is not None:
            raise UsageError("--expr cannot be combined with --k/--wedges")
        expr = parse_bundle_expression(args.expr)
        if args.twist is not None:
            expr = BundleExpression(expr.k, expr.wedges, args.twist)
        return expr
    if args.k is None or args.wedges is None:
        raise UsageError("give either --expr or both --k and --wedges")
    return BundleExpression(args.k, assign_slots(args.wedges, args.k), args.twist)


def cmd_cohom(args) -> int:
    expr = _expression_from_args(args)
    if expr.twist is None:
        raise UsageError("cohom needs a concrete --twist")
    report = bundle_cohomology(expr)
    if args.format == "json":
        payload = {
            "expression": str(expr),
            "k": expr.k,
            "wedges": list(expr.wedges),
            "twist": expr.twist,
            "summands": [
                {
                    "partition": list(r.partition),
                    "multiplicity": r.multiplicity,
                    "weight": list(weight_of(r.partition, r.twist, expr.m)),
                    "singular": not isinstance(r.result, NonSingular),
                    **(
                        {
                            "degree": r.result.degree,
                            "dominant": list(r.result.dominant),
                            "dimension": str(r.result.dimension),
                        }
                        if isinstance(r.result, NonSingular)
                        else {}
                    ),
                }
                for r in report.records
            ],
            "aggregate": {str(d): str(dim) for d, dim in report.aggregate.items()},
        }
        print(json.dumps(payload))
        return EXIT_CLEAN
    print(f"bundle: {expr}")
    placeholders = [q for q, ph in enumerate(expr.placeholders, start=1) if ph]
    if placeholders:
        print(f"line-bundle placeholders in slots: {placeholders}")
    for r in report.records:
        weight = weight_of(r.partition, r.twist, expr.m)
        if isinstance(r.result, NonSingular):
            outcome = (
                f"H^{r.result.degree} = Gamma{_fmt(r.result.dominant)} "
                f"dim={r.result.dimension}"
            )
        else:
            outcome = "singular"
        print(f"  F{_fmt(r.partition)} x{r.multiplicity}  weight={_fmt(weight)}  {outcome}")
    if report.vanishes:
        print("all cohomology vanishes")
    for degree, dim in report.aggregate.items():
        print(f"degree {degree}: total dimension {dim}")
    return EXIT_CLEAN


def cmd_decompose(args) -> int:
    expr = _expression_from_args(args)
    decomposition = decompose_wedges(expr.effective_wedges, expr.m)
    for pi in sorted(decomposition):
        print(f"{_fmt(pi)}\tmult={decomposition[pi]}\tsl_dim={sl_dim(pi, expr.m)}")
    return EXIT_CLEAN


def pairing_ladder(k: int, wedge: int) -> list[tuple[tuple[int, ...], int]]:
    """Noncompact roots of C_{k+1} with their constants ``c`` (pairing ``2t + c``) against
    ``weight_of(1^wedge, t) + rho``, in non-decreasing order of ``c``."""
    if k < 1:
        raise UsageError("k must be >= 1")
    if not 0 <= wedge <= k + 1:
        raise UsageError(f"--wedge must lie in [0, {k + 1}]")
    consts = twist_constants((1,) * wedge, k)
    rows = list(zip(noncompact_roots(k + 1), consts))
    # ties broken so that roots reaching further down the diagram come first
    rows.sort(key=lambda rc: (rc[1], tuple(-x for x in rc[0])))
    return rows


def _root_name(a) -> str:
    terms = []
    for idx, c in enumerate(a, start=1):
        if c:
            terms.append(f"{'' if c == 1 else c}a{idx}")
    return "+".join(terms)


def cmd_pairings(args) -> int:
    for root, c in pairing_ladder(args.k, args.wedge):
        value = f"2t+{c}" if args.twist is None else str(2 * args.twist + c)
        print(f"{_root_name(root)}\t{value}")
    return EXIT_CLEAN


def _write_violations(violations, fmt, fh) -> None:
    if fmt == "json":
        for v in violations:
            fh.write(json.dumps(violation_record(v)) + "\n")
    elif fmt == "csv":
        writer = csv.writer(fh)
        writer.writerow(RECORD_FIELDS)
        for v in violations:
            rec = violation_record(v)
            writer.writerow(
                [" ".join(map(str, x)) if isinstance(x, list) else x for x in rec.values()]
            )
    else:
        for v in violations:
            fh.write(violation_text(v) + "\n")


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if args.criterion == "chain":
        summary = verify_chain_criterion(args.k)
        with _output(args.out) as fh:
            for f in summary.failures:
                line = {"i": f.i, "j": f.j, "twist": f.twist, "degree": f.degree}
                fh.write((json.dumps(line) if args.format == "json" else str(line)) + "\n")
        print(
            f"chain criterion k={args.k}: {summary.checks} checks, "
            f"{len(summary.failures)} failures",
            file=sys.stderr,
        )
        return EXIT_CLEAN if summary.clean else EXIT_VIOLATIONS
    if args.criterion == "sufficient-enumerate":
        n = args.n if args.n is not None else 2 * args.k + 1
        with _output(args.out) as fh:
            for ct in iter_conditions("sufficient", args.k, n):
                if args.format == "json":
                    fh.write(json.dumps({"k": ct.k, "n": ct.n, "i": ct.i, "tuple": list(ct.wedges)}) + "\n")
                else:
                    fh.write(f"k={ct.k} n={ct.n} i={ct.i} tuple={_fmt(ct.wedges)}\n")
        print(f"{count_conditions('sufficient', args.k, n)} condition tuples", file=sys.stderr)
        return EXIT_CLEAN
    if args.n is not None and args.n != 2 * args.k + 1:
        raise UsageError("question1 runs on LG(k) only; --n must be 2k+1")
    tuples = None
    if args.tuple is not None:
        wedges = tuple(args.tuple)
        if len(wedges) != args.k:
            raise UsageError(f"--tuple needs {args.k} entries j_1..j_k")
        for q, j in enumerate(wedges, start=1):
            if not 0 <= j <= q + 1:
                raise UsageError(f"--tuple entry j_{q} = {j} outside [0, {q + 1}]")
        if sum(wedges) == 0:
            raise UsageError("--tuple must have positive degree sum")
        tuples = [ConditionTuple(args.k, 2 * args.k + 1, sum(wedges), wedges)]
    summary = verify_criterion("lagrangian", args.k, jobs, tuples=tuples, twists=args.twists)
    with _output(args.out) as fh:
        _write_violations(summary.violations, args.format, fh)
    status = "CLEAN" if summary.clean else "VIOLATIONS"
    print(
        f"question1 k={args.k}: {summary.tuples_checked} tuples checked, "
        f"{len(summary.violations)} violations [{status}]",
        file=sys.stderr,
    )
    return EXIT_CLEAN if summary.clean else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lgbott", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def bundle_args(p):
        p.add_argument("--k", type=_positive)
        p.add_argument("--wedges", type=_int_list, help="wedge degrees, any order, e.g. 6,5,4,3,3,2,1")
        p.add_argument("--expr", help='bundle expression, e.g. "w2*w1(-5) @ LG(2)"')

    p = sub.add_parser("cohom", help="cohomology of one bundle at one twist")
    bundle_args(p)
    p.add_argument("--twist", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_cohom)

    p = sub.add_parser("decompose", help="Pieri decomposition of the tensor product")
    bundle_args(p)
    p.add_argument("--twist", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("pairings", help="noncompact-root pairing ladder of wedge^i Q*(t)")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--wedge", type=int, required=True)
    p.add_argument("--twist", type=int)
    p.set_defaults(func=cmd_pairings)

    p = sub.add_parser("verify", help="exhaustive criterion scan")
    p.add_argument("--criterion", choices=("question1", "chain", "sufficient-enumerate"), required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--jobs", type=_positive, help="worker processes (default: $LGBOTT_JOBS or 1)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", help="output file for records (default: stdout)")
    p.add_argument("--tuple", type=_int_list, help="scan a single tuple j_1,...,j_k (slot order)")
    p.add_argument("--twists", choices=("exact", "script"), default="exact")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BundleError, PartitionError, ConditionError) as exc:
        print(f"lgbott: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
