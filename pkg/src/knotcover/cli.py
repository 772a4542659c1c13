"""Command line front end.

    knotcover compute --knot 6_2 --n 1..12
    knotcover compute --genus 2 --a 1 --b -4 --n 7 --format records
    knotcover table --knot 7_7 --n-max 12
    knotcover verify --a-range=-3..3 --b-range=-3..3 --n-max 16
    knotcover verify --catalog default --n-max 12
    knotcover catalog list|add|validate [--catalog PATH]

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from . import catalog as cat
from .homology import homology
from .knotmodel import AlexanderPoly, Genus1, Genus2
from .oracle import cross_check, cross_check_many

FORMAT_VERSION = 1


class UsageError(Exception):
    pass


@dataclass
class ResultRecord:
    knot: Optional[str]
    genus: int
    a: Optional[int]
    b: int
    n: int
    free_rank: int
    torsion: list[int]
    branch: str
    intermediates: dict = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)
    verification: Optional[dict] = None

    def to_json(self) -> str:
        return json.dumps({"format": FORMAT_VERSION, **asdict(self)}, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> ResultRecord:
        obj = json.loads(line)
        obj.pop("format", None)
        return cls(**obj)

    @property
    def group_text(self) -> str:
        parts = [f"Z_{d}" for d in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def parse_range(text: str) -> range:
    """'5' -> 5..5, 'lo..hi' -> inclusive range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _poly_from_args(args) -> tuple[Optional[str], AlexanderPoly]:
    if args.knot:
        try:
            records = cat.load_catalog(args.catalog)
            rec = cat.find(records, args.knot)
        except KeyError:
            raise UsageError(f"unknown knot {args.knot!r}") from None
        except cat.CatalogError as exc:
            raise UsageError(str(exc)) from None
        return rec.name, rec.poly
    if args.genus is None or args.b is None:
        raise UsageError("give --knot NAME or inline --genus and --b (and --a for genus 2)")
    try:
        if args.genus == 1:
            if args.a is not None:
                raise UsageError("genus 1 takes no --a")
            if args.b == 0:
                raise UsageError("b = 0 is the trivial knot (A(z) = 1); nothing to compute")
            return None, Genus1(args.b)
        if args.genus == 2:
            if args.a is None:
                raise UsageError("genus 2 needs --a")
            return None, Genus2(args.a, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"genus must be 1 or 2, got {args.genus}")


def _n_values(args) -> range:
    if args.n is not None:
        ns = parse_range(args.n)
    elif args.n_max is not None:
        ns = range(1, args.n_max + 1)
    else:
        raise UsageError("give --n N, --n LO..HI or --n-max N")
    if ns.start < 1:
        raise UsageError("n must be >= 1")
    return ns


def result_record(name: Optional[str], poly: AlexanderPoly, n: int, verify: bool = False) -> ResultRecord:
    group, cert = homology(poly, n)
    verification = None
    if verify:
        report = cross_check(poly, n)
        verification = {
            "agree": report.agree,
            "ok": report.ok,
            "pipelines": {k: str(g) for k, g in report.groups.items()},
        }
        for key, flag in (
            ("lemma", report.lemma_ok),
            ("determinant", report.determinant_ok),
            ("exact_sequence", report.exact_sequence_ok),
        ):
            if flag is not None:
                verification[key] = flag
    return ResultRecord(
        knot=name,
        genus=poly.genus,
        a=getattr(poly, "a", None),
        b=poly.b,
        n=n,
        free_rank=group.free_rank,
        torsion=list(group.torsion),
        branch=cert.branch,
        intermediates=dict(cert.intermediates),
        diagnostics=list(cert.diagnostics),
        verification=verification,
    )


def _label(name: Optional[str], poly: AlexanderPoly) -> str:
    params = f"a={poly.a}, b={poly.b}" if isinstance(poly, Genus2) else f"b={poly.b}"
    head = name if name else "inline"
    return f"{head} (genus {poly.genus}, {params})"


def cmd_compute(args, out) -> int:
    name, poly = _poly_from_args(args)
    ns = _n_values(args)
    records = [result_record(name, poly, n, verify=args.verify) for n in ns]
    if args.format == "records":
        for r in records:
            print(r.to_json(), file=out)
    else:
        print(_label(name, poly), file=out)
        for r in records:
            extra = " ".join(f"{k}={v}" for k, v in r.intermediates.items())
            line = f"  n={r.n:<3} {r.group_text:<40} [{r.branch}{' ' + extra if extra else ''}]"
            if r.verification is not None:
                line += " verified" if r.verification["ok"] else " MISMATCH"
            print(line, file=out)
    if args.verify and not all(r.verification["ok"] for r in records):
        return 1
    return 0


def table_rows(poly: AlexanderPoly, n_max: int) -> list[tuple[int, int, int]]:
    rows = []
    for n in range(1, n_max + 1):
        _, cert = homology(poly, n)
        alpha, beta = cert.table_pair()
        rows.append((n, alpha, beta))
    return rows


def cmd_table(args, out) -> int:
    name, poly = _poly_from_args(args)
    if args.n_max is None or args.n_max < 1:
        raise UsageError("table needs --n-max N with N >= 1")
    rows = table_rows(poly, args.n_max)
    if args.format == "records":
        for n, alpha, beta in rows:
            print(json.dumps({"n": n, "alpha": alpha, "beta": beta}, sort_keys=True), file=out)
        return 0
    title = f"H_1(M_n) data for {_label(name, poly)}"
    if isinstance(poly, Genus1):
        title += " [genus-1 alpha(n), beta(n)]"
    print(title, file=out)
    cells = [["n"] + [str(n) for n, _, _ in rows],
             ["alpha"] + [str(x) for _, x, _ in rows],
             ["beta"] + [str(y) for _, _, y in rows]]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    for row in cells:
        print(" ".join(c.rjust(w) for c, w in zip(row, widths)), file=out)
    return 0


def cmd_verify(args, out) -> int:
    n_max = 16 if args.n_max is None else args.n_max
    if n_max < 1:
        raise UsageError("--n-max must be >= 1")
    if args.catalog_given:
        try:
            polys = [rec.poly for rec in cat.load_catalog(args.catalog)]
        except cat.CatalogError as exc:
            raise UsageError(str(exc)) from None
    else:
        b_range = parse_range(args.b_range)
        if args.genus == 1:
            polys = [Genus1(b) for b in b_range if b != 0]
        else:
            a_range = parse_range(args.a_range)
            polys = [Genus2(a, b) for a in a_range if a != 0 for b in b_range]
        if not polys:
            raise UsageError("parameter grid is empty")
    items = [(p, n) for p in polys for n in range(1, n_max + 1)]
    reports = cross_check_many(items, jobs=args.jobs)
    failures = [r for r in reports if not r.ok]
    for r in failures:
        print(r.describe(), file=out)
    print(f"checked {len(reports)} cases, {len(failures)} mismatches", file=out)
    return 1 if failures else 0


def cmd_catalog(args, out) -> int:
    action = args.action
    try:
        if action == "list":
            for rec in cat.load_catalog(args.catalog):
                print(cat.format_record(rec), file=out)
            return 0
        if action == "validate":
            records = cat.load_catalog(args.catalog)
            print(f"{len(records)} records ok", file=out)
            return 0
        if args.catalog == cat.DEFAULT:
            raise UsageError("catalog add needs --catalog PATH (the bundled catalog is read-only)")
        if not args.name:
            raise UsageError("catalog add needs --name")
        try:
            obj = {"name": args.name, "genus": args.genus, "b": args.b}
            if args.a is not None:
                obj["a"] = args.a
            if args.slope is not None:
                obj["slope"] = args.slope
            if args.source is not None:
                obj["source"] = args.source
            rec = cat.record_from_dict(obj)
        except ValueError as exc:
            raise UsageError(f"invalid record: {exc}") from None
        cat.append_record(args.catalog, rec)
        print(cat.format_record(rec), file=out)
        return 0
    except cat.CatalogError as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotcover",
        description="Homology of cyclic branched covers of 2-bridge knots of genus 1 and 2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_opts(p):
        p.add_argument("--knot", help="knot name from the catalog")
        p.add_argument("--genus", type=int, choices=(1, 2))
        p.add_argument("--a", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--catalog", default=cat.DEFAULT, help="catalog path or 'default'")
        p.add_argument("--format", choices=("table", "records"), default="table")

    p = sub.add_parser("compute", help="compute H_1(M_n) for one knot")
    knot_opts(p)
    p.add_argument("--n", help="N or LO..HI")
    p.add_argument("--n-max", type=int)
    p.add_argument("--verify", action="store_true", help="cross-check against Smith-form pipelines")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="alpha(n), beta(n) table for one knot")
    knot_opts(p)
    p.add_argument("--n-max", type=int, default=12)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check closed forms over a grid or a catalog")
    p.add_argument("--catalog", help="verify every knot in this catalog ('default' for bundled)")
    p.add_argument("--genus", type=int, choices=(1, 2), default=2)
    p.add_argument("--a-range", default="-3..3")
    p.add_argument("--b-range", default="-3..3")
    p.add_argument("--n-max", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list, add to, or validate a knot catalog")
    p.add_argument("action", choices=("list", "add", "validate"))
    p.add_argument("--catalog", default=cat.DEFAULT)
    p.add_argument("--name")
    p.add_argument("--genus", type=int, choices=(1, 2))
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--slope")
    p.add_argument("--source")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify":
        args.catalog_given = args.catalog is not None
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"knotcover: error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    sys.exit(main())
