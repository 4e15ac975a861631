"""Command-line front end: ``curve``, ``surface``, ``scan`` and ``verify``.

Exit codes: 0 success, 1 invalid input, 2 internal consistency failure.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import checks
from .curve import curve_a_number, frobenius_matrix, genus, is_bijective, is_zero_map
from .relations import infer, reconcile_height
from .residue import InvalidInput, make_context, primes_below, residue_context, units
from .surface import surface_invariants

EXIT_OK, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2


class ConsistencyError(RuntimeError):
    pass


@dataclass(frozen=True)
class ScanRow:
    m: int
    p: int | None
    d: int
    genus: int
    curve_ordinary: bool
    a_closed: int
    a_tensor: int | None
    a_brute: int
    y_count: int
    p_g: int
    h11: int
    height_class: str
    b_status: str
    h_status: str


FIELDS = [f.name for f in dataclasses.fields(ScanRow)]


def compute_row(m: int, p: int | None = None, d: int | None = None) -> tuple[ScanRow, tuple]:
    """One scan row plus the relation notes; raises ConsistencyError on route mismatch."""
    ctx = make_context(m, p) if p is not None else residue_context(m, d)
    inv = surface_invariants(ctx)
    if not inv.routes_agree:
        raise ConsistencyError(
            f"routes disagree for m={m}, p={p}, d={ctx.d}: closed={inv.a_closed} "
            f"brute={inv.a_brute} tensor={inv.a_tensor}")
    report = reconcile_height(infer(inv.a_closed, inv.p_g, inv.h11), inv.height_class)
    row = ScanRow(
        m=m, p=inv.p, d=inv.d, genus=inv.genus_curve,
        curve_ordinary=curve_a_number(ctx) == 0,
        a_closed=inv.a_closed, a_tensor=inv.a_tensor, a_brute=inv.a_brute,
        y_count=inv.y_count, p_g=inv.p_g, h11=inv.h11,
        height_class=str(inv.height_class),
        b_status=str(report.b), h_status=str(report.h),
    )
    return row, report.notes


def _row_task(args):
    return compute_row(*args)[0]


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(rows: list[ScanRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([dataclasses.asdict(r) for r in rows], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n", quoting=csv.QUOTE_NONE)
        w.writerow(FIELDS)
        for r in rows:
            w.writerow([_csv_cell(getattr(r, f)) for f in FIELDS])
        return buf.getvalue()
    cells = [FIELDS] + [[_csv_cell(getattr(r, f)) or "-" for f in FIELDS] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(FIELDS))]
    return "".join(
        "  ".join(c.rjust(w) for c, w in zip(line, widths)).rstrip() + "\n" for line in cells)


def parse_int_list(text: str) -> list[int]:
    """``"4..10,12"`` -> [4, 5, ..., 10, 12]."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                out.extend(range(int(lo), int(hi) + 1))
            elif part:
                out.append(int(part))
    except ValueError:
        raise InvalidInput(f"cannot parse integer list {text!r}") from None
    if not out:
        raise InvalidInput(f"empty integer list {text!r}")
    return out


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as f:
            f.write(text)
    except OSError as e:
        raise InvalidInput(f"cannot write {out}: {e}") from None


def cmd_curve(args) -> int:
    ctx = make_context(args.m, args.p)
    fm = frobenius_matrix(ctx)
    a = curve_a_number(ctx)
    info = {
        "m": ctx.m, "p": ctx.p, "d": ctx.d, "n": ctx.n, "genus": genus(ctx.m),
        "ordinary": is_bijective(fm), "zero_frobenius": is_zero_map(fm), "a": a,
    }
    entries = [
        {"a": k.a, "b": k.b,
         "sign": None if v is None else v[0],
         "image": None if v is None else [v[1].a, v[1].b]}
        for k, v in fm.entries.items()
    ]
    if args.format == "json":
        if args.show_matrix:
            info["frobenius"] = entries
        _emit(json.dumps(info, indent=2) + "\n", args.out)
    elif args.format == "csv":
        keys = list(info)
        text = ",".join(keys) + "\n" + ",".join(_csv_cell(info[k]) for k in keys) + "\n"
        _emit(text, args.out)
    else:
        lines = [f"{k}: {_csv_cell(v)}" for k, v in info.items()]
        if args.show_matrix:
            lines.append("frobenius on H^1(O):")
            for e in entries:
                if e["image"] is None:
                    lines.append(f"  ({e['a']},{e['b']}) -> 0")
                else:
                    s = "+" if e["sign"] > 0 else "-"
                    lines.append(f"  ({e['a']},{e['b']}) -> {s}({e['image'][0]},{e['image'][1]})")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_surface(args) -> int:
    if (args.p is None) == (args.d is None):
        raise InvalidInput("give exactly one of --p and --d")
    row, notes = compute_row(args.m, p=args.p, d=args.d)
    if args.format == "text":
        text = "".join(f"{f}: {_csv_cell(getattr(row, f)) or '-'}\n" for f in FIELDS)
        text += "".join(f"note: {n}\n" for n in notes)
        _emit(text, args.out)
    else:
        _emit(render([row], args.format), args.out)
    return EXIT_OK


def scan_jobs(ms: list[int], args) -> list[tuple]:
    jobs = []
    for m in ms:
        if args.all_units:
            jobs.extend((m, None, d) for d in units(m))
            continue
        if args.p_below is not None:
            ps = primes_below(args.p_below)
        else:
            ps = parse_int_list(args.p)
        explicit = args.p_below is None
        for p in ps:
            if math.gcd(p, m) != 1:
                if explicit:
                    raise InvalidInput(f"gcd({m}, {p}) > 1")
                continue
            jobs.append((m, p, None))
    return jobs


def cmd_scan(args) -> int:
    modes = sum([args.p is not None, args.p_below is not None, args.all_units])
    if modes != 1:
        raise InvalidInput("give exactly one of --p/--p-set, --p-below, --all-units")
    jobs = scan_jobs(parse_int_list(args.m), args)
    # validate everything up front so bad input never yields a partial file
    for m, p, d in jobs:
        make_context(m, p) if p is not None else residue_context(m, d)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            rows = list(ex.map(_row_task, jobs, chunksize=8))
    else:
        rows = [_row_task(j) for j in jobs]
    _emit(render(rows, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.m_max < 4:
        raise InvalidInput("--m-max must be at least 4")
    names = None
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in names if c not in checks.CHECKS]
        if unknown:
            raise InvalidInput(f"unknown checks {unknown}; choose from {sorted(checks.CHECKS)}")
    results = checks.run_checks(args.m_max, names)
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_INCONSISTENT


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fermat-invariants",
                     description="a-numbers and heights of Fermat curves and surfaces")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=["text", "csv", "json"], default="text")
        sp.add_argument("--out", metavar="PATH")

    sp = sub.add_parser("curve", help="Frobenius on H^1(O) of the Fermat curve C_m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--show-matrix", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("surface", help="invariants of the Fermat surface X_m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--p", type=int)
    sp.add_argument("--d", type=int, help="residue of p mod m; skips the tensor route")
    common(sp)
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("scan", help="table of surface invariants over a grid")
    sp.add_argument("--m", required=True, help="e.g. 5, 4..10 or 4,6..9")
    sp.add_argument("--p", "--p-set", dest="p", metavar="LIST", help="explicit primes")
    sp.add_argument("--p-below", type=int, metavar="N", help="all primes < N coprime to m")
    sp.add_argument("--all-units", action="store_true", help="one row per unit d mod m")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="run the self-verification checks")
    sp.add_argument("--m-max", type=int, required=True)
    sp.add_argument("--checks", metavar="LIST", help=",".join(checks.CHECKS))
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidInput as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as e:
        print(f"consistency error: {e}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
