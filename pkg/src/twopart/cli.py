"""Command-line entry point: ``twopart {construct,check,search,scan,bounds,asymptotics}``.

Exit codes: 0 success / property holds, 1 property violated, 2 usage or
parse error, 3 resource limit, 4 timeout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Any, Callable

from . import __version__, kernels
from . import asymptotics as asy
from . import constructions as con
from .core import (
    GroundSplit,
    InvalidInputError,
    ResourceLimitError,
    SearchTimeoutError,
    SetFamily,
    binomial,
    format_ratio,
    ratio_decimal,
)
from .formats import FormatError, dumps, read_file, set_label
from .properties import PropertyId, find_cross_violation, find_violation
from .search import (
    ScanSuite,
    SearchResult,
    max_cross_sperner_sum,
    max_property_family,
    max_union_intersecting,
    max_union_isp_pair,
    run_theorem_scan,
)

EXIT_OK, EXIT_VIOLATED, EXIT_USAGE, EXIT_RESOURCE, EXIT_TIMEOUT = 0, 1, 2, 3, 4

CONSTRUCTIONS = (
    "chain",
    "canonical",
    "canonical-modified",
    "2i-singleton",
    "2i-equal",
    "2i2s-smallpart",
    "2i2s-equal",
    "cross-sperner",
    "1i1s-product",
    "ff-pair",
)


def _exact(value: Any) -> Any:
    """JSON-safe exact rendering: ints verbatim, rationals as ``{"exact", "decimal"}``."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return {"exact": format_ratio(value), "decimal": ratio_decimal(value)}
    if isinstance(value, int):
        # big ints go out as strings so no JSON reader rounds them
        return value if abs(value) < 2**53 else str(value)
    if isinstance(value, dict):
        return {str(k): _exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_exact(v) for v in value]
    return value


def _cell(value: Any) -> str:
    if isinstance(value, Fraction):
        return format_ratio(value)
    if value is None:
        return "-"
    return str(value)


class Reporter:
    """Collects outputs for one command and renders them as text, JSON or CSV."""

    def __init__(self, args: argparse.Namespace, argv: list[str]):
        self.args = args
        self.argv = argv
        self.start = time.perf_counter()
        self.outputs: dict[str, Any] = {}
        self.table: list[dict[str, Any]] = []
        self.lines: list[str] = []

    def emit(self) -> None:
        fmt = getattr(self.args, "format", "text")
        if fmt == "json":
            inputs = {k: v for k, v in vars(self.args).items() if k not in ("func", "format", "command")}
            doc = {
                "command": " ".join(["twopart"] + self.argv),
                "inputs": _exact(inputs),
                "outputs": _exact(self.outputs),
                "table": _exact(self.table),
                "timing_seconds": round(time.perf_counter() - self.start, 6),
                "version": __version__,
                "backend": kernels.BACKEND,
            }
            print(json.dumps(doc, indent=2))
        elif fmt == "csv":
            rows = self.table or [self.outputs]
            buf = io.StringIO()
            writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()) if rows else [])
            writer.writeheader()
            for row in rows:
                writer.writerow({k: _cell(v) for k, v in row.items()})
            sys.stdout.write(buf.getvalue())
        else:
            for line in self.lines:
                print(line)
            if self.table:
                cols = list(self.table[0].keys())
                print("\t".join(cols))
                for row in self.table:
                    print("\t".join(_cell(row[c]) for c in cols))


def _write(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# construct -----------------------------------------------------------------


def cmd_construct(args: argparse.Namespace, rep: Reporter) -> int:
    name, n = args.name, args.n
    beta = Fraction(args.beta)
    k = args.k
    if name == "chain":
        obj, kind = con.chain_partition(n), "partition"
    elif name == "canonical":
        obj, kind = con.canonical_partition(n), "partition"
    elif name == "canonical-modified":
        obj, kind = con.modified_canonical_partition(n, beta), "partition"
    elif name == "2i-singleton":
        obj, kind, k = con.two_i_singleton(n), "family", 1
    elif name == "2i-equal":
        obj, kind, k = con.two_i_equal(n), "family", n // 2
    elif name == "2i2s-smallpart":
        k = 1 if k is None else k
        obj, kind = con.two_i2s_smallpart(GroundSplit(n, k)), "family"
    elif name == "2i2s-equal":
        obj, kind, k = con.two_i2s_equal(n, args.modified, beta), "family", n // 2
    elif name == "cross-sperner":
        variant = con.CrossVariant(args.variant)
        threshold = args.threshold
        if variant is con.CrossVariant.THRESHOLD and threshold is None:
            threshold = (n + 1) // 2
        obj, kind = con.cross_sperner_pair_example(n, variant, threshold), "pair"
    elif name == "1i1s-product":
        if k is None:
            raise InvalidInputError("1i1s-product needs --k")
        obj, kind = con.one_i1s_product(GroundSplit(n, k), args.star_a, args.star_b), "family"
    elif name == "ff-pair":
        if args.i is None:
            raise InvalidInputError("ff-pair needs --i")
        obj, kind = con.ff_pair(n, args.i), "pair"
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidInputError(name)

    style = "hex" if args.style == "hex" else "json"
    if args.out or args.format == "text":
        _write(args, dumps(obj, kind, k, style))
    if kind == "partition":
        sizes = obj.sizes()
        rep.outputs.update(size=sum(sizes), classes=len(obj), class_sizes=sizes, labels=obj.labels)
        rep.lines = [f"# {name}: {len(obj)} classes, {sum(sizes)} sets"]
    elif kind == "pair":
        rep.outputs.update(size=obj.total, first=len(obj.first), second=len(obj.second))
        rep.lines = [f"# {name}: |F|={len(obj.first)} |G|={len(obj.second)} total={obj.total}"]
    else:
        rep.outputs.update(size=len(obj), k=k)
        rep.lines = [f"# {name}: {len(obj)} sets"]
    if args.out is None and args.format == "text":
        # the file already went to stdout; keep the summary on stderr
        for line in rep.lines:
            print(line, file=sys.stderr)
        rep.lines = []
    return EXIT_OK


# check ---------------------------------------------------------------------


def cmd_check(args: argparse.Namespace, rep: Reporter) -> int:
    prop = PropertyId.parse(args.property)
    kind, obj, file_k = read_file(args.input)
    if prop is PropertyId.CROSS_SPERNER_PAIR:
        from .core import FamilyPair

        if kind == "pair":
            pair = obj
        elif args.input2:
            kind2, other, _ = read_file(args.input2)
            if kind2 != "family":
                raise FormatError("second input must be a family file")
            pair = FamilyPair(obj, other)
        else:
            raise InvalidInputError("cross-sperner check needs a pair file or two family files")
        bad = find_cross_violation(pair)
        rep.outputs.update(property=prop.value, holds=bad is None, size=pair.total)
    else:
        if kind != "family":
            raise FormatError(f"expected a family file, got a {kind}")
        family: SetFamily = obj
        k = args.k if args.k is not None else file_k
        if prop.two_part and k is None:
            raise InvalidInputError(f"{prop.value} needs a split: pass --k or put 'k' in the file")
        split = GroundSplit(family.n, k if k is not None else 0)
        bad = find_violation(prop, family, split)
        rep.outputs.update(property=prop.value, holds=bad is None, size=len(family), k=k)
    if bad is None:
        rep.lines = [f"{prop.value}: holds ({rep.outputs['size']} sets)"]
        return EXIT_OK
    rep.outputs["witness"] = [set_label(bad[0]), set_label(bad[1])]
    rep.lines = [f"{prop.value}: violated by {set_label(bad[0])} and {set_label(bad[1])}"]
    return EXIT_VIOLATED


# search --------------------------------------------------------------------


def cmd_search(args: argparse.Namespace, rep: Reporter) -> int:
    what = args.property.lower()
    if what == "kleitman":
        res = max_union_intersecting(args.n, args.m, timeout=args.timeout, backend=args.backend)
    elif what in ("gkk-pair", "isp-pair"):
        res = max_union_isp_pair(args.n, timeout=args.timeout, backend=args.backend)
    else:
        prop = PropertyId.parse(args.property)
        if prop is PropertyId.CROSS_SPERNER_PAIR:
            res = max_cross_sperner_sum(args.n, timeout=args.timeout, backend=args.backend)
        else:
            if args.k is None:
                raise InvalidInputError(f"{prop.value} search needs --k")
            res = max_property_family(
                prop, GroundSplit(args.n, args.k), args.threads, args.timeout, args.backend
            )
    _report_search(res, rep)
    return EXIT_OK


def _report_search(res: SearchResult, rep: Reporter) -> None:
    from .core import FamilyPair

    if isinstance(res.witness, FamilyPair):
        witness: Any = {"first": res.witness.first.as_lists(), "second": res.witness.second.as_lists()}
        shown = (
            "F=" + " ".join(set_label(m) for m in res.witness.first)
            + "  G=" + " ".join(set_label(m) for m in res.witness.second)
        )
    else:
        witness = res.witness.as_lists()
        shown = " ".join(set_label(m) for m in res.witness)
    rep.outputs.update(
        problem=res.problem,
        optimum=res.optimum,
        witness=witness,
        nodes_explored=res.nodes_explored,
        exact=res.exact,
        extremal_count=res.extremal_count,
        backend=res.backend,
    )
    rep.table = [{"problem": res.problem, "optimum": res.optimum, "nodes": res.nodes_explored}]
    rep.lines = [
        f"problem: {res.problem}",
        f"optimum: {res.optimum}",
        f"witness: {shown}",
        f"nodes explored: {res.nodes_explored}",
    ]
    if res.extremal_count is not None:
        rep.lines.append(f"extremal count: {res.extremal_count}")
    rep.table = []


# scan ----------------------------------------------------------------------


def cmd_scan(args: argparse.Namespace, rep: Reporter) -> int:
    report = run_theorem_scan(ScanSuite.parse(args.suite), args.n, args.samples, args.seed)
    rep.outputs.update(
        suite=report.suite.name,
        n=report.n,
        instances_scanned=report.instances_scanned,
        violations=len(report.violations),
        extremal_count=report.extremal_count,
        exhaustive=report.exhaustive,
        details=report.details,
    )
    rep.lines = [
        f"suite: {report.suite.name} n={report.n}",
        f"instances scanned: {report.instances_scanned}",
        f"violations: {len(report.violations)}",
        f"extremal: {report.extremal_count}",
    ]
    return EXIT_OK if report.holds else EXIT_VIOLATED


# bounds --------------------------------------------------------------------


def bounds_row(n: int, m: int = 2) -> dict[str, Any]:
    half = (n + 1) // 2
    row: dict[str, Any] = {"n": n}
    row["2I-upper"] = Fraction(3 * 2**n, 8)
    row["2I-equal-construction"] = (2**n + 2) // 3 if n % 2 == 0 else None
    row["2partSperner"] = binomial(n, half)
    row["1I1S"] = 2 ** (n - 2) if n >= 2 else None
    row["crossSperner"] = 2 ** (n - 1) if n >= 1 else None
    row[f"kleitman-m{m}"] = 2**n - 2 ** (n - m) if n >= m else 2**n - 1
    ell = (n - 1) // 2
    row["isp-pair"] = binomial(n, ell + 1) + binomial(n, ell + 2) if n % 2 else None
    return row


def cmd_bounds(args: argparse.Namespace, rep: Reporter) -> int:
    lo = args.n if args.n is not None else args.n_min
    hi = args.n if args.n is not None else args.n_max
    if lo is None or hi is None or lo > hi or lo < 0:
        raise InvalidInputError("bounds needs --n or a valid --n-min/--n-max range")
    rep.table = [bounds_row(n, args.m) for n in range(lo, hi + 1)]
    rep.outputs["rows"] = rep.table
    return EXIT_OK


# asymptotics ---------------------------------------------------------------


def _parse_ratio_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"bad rational list {text!r}") from exc


def cmd_asymptotics(args: argparse.Namespace, rep: Reporter) -> int:
    series = args.series
    if series == "s-profile":
        s, r = asy.s_profile(args.n, args.i)
        rep.outputs.update(S=s, ratio=r)
        rep.lines = [f"S_{args.i} = {s}", f"ratio = {format_ratio(r)} ~ {ratio_decimal(r)}"]
    elif series == "rd":
        rs = asy.rd_sequences(args.n, args.i)
        d = rs.extra["d"]
        rep.table = [{"l": ell, "r": r, "d": d.get(ell)} for ell, r in rs.terms]
        rep.outputs.update(sum=rs.total())
        rep.lines = [f"sum of r = {format_ratio(rs.total())}"]
    elif series == "f1":
        f1, r, ok = asy.f1_profile(args.n)
        rep.outputs.update(F1=f1, ratio=r, vandermonde=ok)
        rep.lines = [f"F1 = {f1}", f"ratio = {format_ratio(r)} ~ {ratio_decimal(r)}", f"vandermonde: {ok}"]
    elif series == "coverage":
        r = asy.coverage_fraction(args.n, args.K)
        rep.outputs.update(coverage=r)
        rep.lines = [f"coverage = {format_ratio(r)} ~ {ratio_decimal(r)}"]
    elif series == "ff-coverage":
        r = asy.ff_coverage(args.n, args.i)
        rep.outputs.update(coverage=r)
        rep.lines = [f"ff coverage = {format_ratio(r)} ~ {ratio_decimal(r)}"]
    elif series == "fact3":
        r = asy.fact3_ratio(_parse_ratio_list(args.values or ""))
        rep.outputs.update(sum_of_squares=r)
        rep.lines = [f"sum of squares = {format_ratio(r)} ~ {ratio_decimal(r)}"]
    elif series == "construction":
        ns = [int(t) for t in (args.ns or "8,16,32,64,128,256,512,1024").split(",")]
        rs = asy.construction_ratio_series(ns, args.modified, Fraction(args.beta))
        rep.table = [{"n": n, "ratio": r} for n, r in rs.terms]
        rep.outputs["rows"] = rep.table
    else:  # pragma: no cover
        raise InvalidInputError(series)
    return EXIT_OK


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twopart", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", default=None, help="write the primary output here")

    p = sub.add_parser("construct", help="materialize a construction or partition")
    p.add_argument("name", choices=CONSTRUCTIONS)
    p.add_argument("--n", type=int, required=True, help="ground size (partition size y for partitions)")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i", type=int, default=None, help="level for ff-pair")
    p.add_argument("--beta", default="1", help="rational beta for modified constructions")
    p.add_argument("--modified", action="store_true")
    p.add_argument("--variant", choices=[v.value for v in con.CrossVariant], default="threshold")
    p.add_argument("--threshold", type=int, default=None, help="k for the threshold cross-Sperner pair")
    p.add_argument("--star-a", type=int, default=None)
    p.add_argument("--star-b", type=int, default=None)
    p.add_argument("--style", choices=("json", "hex"), default="json")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="check a property of a family file")
    p.add_argument("--property", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--input2", default=None)
    p.add_argument("--k", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exact maximum search")
    p.add_argument("--property", required=True, help="2I, 2I2S, 1I1S, 2PS, cross-sperner, kleitman, gkk-pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timeout", type=float, default=None)
    p.add_argument("--backend", choices=("cython", "python"), default=None)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("scan", help="exhaustive theorem scan")
    p.add_argument("--suite", required=True, help="ms, ad, dc, gkk, cross")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=20000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bounds", help="tabulate the closed-form bounds")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--m", type=int, default=2, help="number of families in the union bound column")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("asymptotics", help="exact ratio sequences")
    p.add_argument(
        "series", choices=("s-profile", "rd", "f1", "coverage", "ff-coverage", "fact3", "construction")
    )
    p.add_argument("--n", type=int, default=None, help="n, or y for coverage/ff-coverage")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--K", type=int, default=1)
    p.add_argument("--ns", default=None, help="comma-separated n values")
    p.add_argument("--values", default=None, help="comma-separated rationals for fact3")
    p.add_argument("--modified", action="store_true")
    p.add_argument("--beta", default="1")
    common(p)
    p.set_defaults(func=cmd_asymptotics)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Reporter(args, argv)
    handler: Callable[[argparse.Namespace, Reporter], int] = args.func
    try:
        code = handler(args, rep)
    except SearchTimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidInputError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command != "construct" or args.format != "text" or args.out:
        rep.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
