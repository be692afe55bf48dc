"""Command-line front end.

Subcommands: chi, leading, segre, canonical, table1, minmult, lines, k3scan,
gysin, pieri, summands.  Numeric output is exact ("p/q") unless --float is
given; --format selects table, csv or json (scan commands emit one JSON
object per line).  Exit codes: 0 success, 2 malformed input, 3 domain error.

All chi values are reported per unit covering degree.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction

from . import orbifold, thresholds
from .errors import DomainError, OrbichernError, PairFormatError
from .gysin import gysin_coefficient, jump_data
from .partitions import decompose_sym_tensor, graded_summands
from .pairfile import load_pair
from .ring import INFINITE_ORDER

_FLOAT_CONTEXT = Context(prec=12, rounding=ROUND_HALF_EVEN)


def format_float(x) -> str:
    return str(_FLOAT_CONTEXT.plus(Decimal(float(x))))


def _fmt(value, as_float=False) -> str:
    if value is None:
        return "-"
    if value is True:
        return "yes"
    if value is False:
        return "no"
    if isinstance(value, Fraction):
        return format_float(value) if as_float else str(value)
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _emit(rows, columns, fmt, out):
    if fmt == "csv":
        out.write(",".join(columns) + "\n")
        for row in rows:
            out.write(",".join(row[c] for c in columns) + "\n")
        return
    if fmt == "json":
        for row in rows:  # one object per line, scans included
            out.write(json.dumps({c: row[c] for c in columns}) + "\n")
        return
    if len(columns) == 1 and len(rows) == 1:
        out.write(rows[0][columns[0]] + "\n")
        return
    widths = {c: max(len(c), *(len(row[c]) for row in rows)) if rows else len(c)
              for c in columns}
    out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(row[c].ljust(widths[c]) for c in columns).rstrip() + "\n")


def _parse_order(text):
    if text in ("inf", "infinity", "oo"):
        return INFINITE_ORDER
    return int(text)  # ValueError on malformed input maps to exit 2


def _map(fn, items, workers):
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# -- subcommand handlers -------------------------------------------------------

def _cmd_chi(args, out):
    pair = load_pair(args.pair)
    value = orbifold.chi_k(pair, _require_int_order(args.k), numeric=args.float)
    _emit([{"chi": _fmt(value, args.float)}], ["chi"], args.format, out)
    return 0


def _cmd_leading(args, out):
    pair = load_pair(args.pair)
    report = orbifold.chi_leading_term(pair, _require_int_order(args.k))
    row = {"k": str(report.k),
           "chi": _fmt(report.chi, args.float),
           "leading_scale": _fmt(report.leading_scale, args.float),
           "canonical_positive": "unknown" if report.canonical_positive is None
           else _fmt(report.canonical_positive)}
    _emit([row], ["k", "chi", "leading_scale", "canonical_positive"],
          args.format, out)
    return 0


def _cmd_segre(args, out):
    pair = load_pair(args.pair)
    cls = orbifold.cotangent_segre(pair, _require_int_order(args.k))
    _emit([{"segre": str(cls)}], ["segre"], args.format, out)
    return 0


def _cmd_canonical(args, out):
    pair = load_pair(args.pair)
    cls, positive = orbifold.canonical_k(pair, _parse_order(args.k))
    row = {"class": str(cls),
           "positive": "unknown" if positive is None else _fmt(positive)}
    _emit([row], ["class", "positive"], args.format, out)
    return 0


def _range_label(row):
    if row.d_hi is None:
        return "%d-inf" % row.d_lo
    if row.d_hi == row.d_lo:
        return str(row.d_lo)
    return "%d-%d" % (row.d_lo, row.d_hi)


def _cmd_table1(args, out):
    rows = thresholds.table1(workers=args.parallel)
    data = [{"parameter": _range_label(r), "minimal_value": str(r.a_min),
             "chi_at_min": _fmt(r.chi_at_min, args.float),
             "chi_below_min": _fmt(r.chi_below_min, args.float)}
            for r in rows]
    _emit(data, ["parameter", "minimal_value", "chi_at_min", "chi_below_min"],
          args.format, out)
    return 0


def _cmd_minmult(args, out):
    rec = thresholds.min_multiplicity_for_degree(args.d)
    if rec is None:
        row = {"parameter": str(args.d), "minimal_value": "none",
               "chi_at_min": "-", "chi_below_min": "-"}
    else:
        row = {"parameter": str(rec.parameter),
               "minimal_value": str(rec.minimal_value),
               "chi_at_min": _fmt(rec.chi_at_min, args.float),
               "chi_below_min": _fmt(rec.chi_below_min, args.float)}
    _emit([row], ["parameter", "minimal_value", "chi_at_min", "chi_below_min"],
          args.format, out)
    return 0


def _cmd_lines(args, out):
    cs = [args.c] if args.c is not None else list(range(4, args.c_max + 1))
    records = _map(thresholds.line_arrangement_threshold, cs, args.parallel)
    data = []
    for c, rec in zip(cs, records):
        if rec is None:
            data.append({"parameter": str(c), "minimal_value": "none",
                         "chi_at_min": "-", "chi_below_min": "-"})
        else:
            data.append({"parameter": str(c),
                         "minimal_value": str(rec.minimal_value),
                         "chi_at_min": _fmt(rec.chi_at_min, args.float),
                         "chi_below_min": _fmt(rec.chi_below_min, args.float)})
    _emit(data, ["parameter", "minimal_value", "chi_at_min", "chi_below_min"],
          args.format, out)
    return 0


def _one_k3_row(m, as_float):
    cm = thresholds.k3_coefficient(m)
    ratio = thresholds.k3_ratio_bound(m) if cm > 0 else None
    return {"m": str(m), "coefficient": _fmt(cm, as_float), "ratio": _fmt(ratio)}


def _cmd_k3scan(args, out):
    ms = list(range(2, args.m_max + 1))
    rows = _map(lambda m: _one_k3_row(m, args.float), ms, args.parallel)
    _emit(rows, ["m", "coefficient", "ratio"], args.format, out)
    return 0


def _cmd_gysin(args, out):
    lam = [int(p) for p in args.lam.split(",") if p.strip() != ""]
    data = jump_data(args.n, lam)
    kappa = gysin_coefficient(args.n, lam)
    row = {"defect": str(data.defect), "coefficient": _fmt(kappa, args.float)}
    _emit([row], ["defect", "coefficient"], args.format, out)
    return 0


def _cmd_pieri(args, out):
    degrees = [int(p) for p in args.degrees.split(",") if p.strip() != ""]
    expansion = decompose_sym_tensor(degrees)
    rows = [{"multiplicity": str(mult),
             "parts": " ".join(str(p) for p in lam.parts) or "0"}
            for lam, mult in expansion.sorted_terms()]
    _emit(rows, ["multiplicity", "parts"], args.format, out)
    return 0


def _cmd_summands(args, out):
    pair = load_pair(args.pair)
    rows = []
    for ell, factors in graded_summands(pair, _require_int_order(args.k), args.N):
        label = " ".join(str(v) for v in ell)
        if factors:
            text = " (x) ".join("S^%d Omega(%d)" % (lj, j) for j, lj, _ in factors)
            coeffs = "; ".join(
                "order %d: %s" % (j, " ".join(str(t.coefficient) for t in profile))
                for j, _, profile in factors)
        else:
            text = "trivial"
            coeffs = "-"
        rows.append({"l": label, "summand": text, "coefficients": coeffs})
    _emit(rows, ["l", "summand", "coefficients"], args.format, out)
    return 0


def _require_int_order(k):
    if not isinstance(k, int):
        k = _parse_order(k)
    if k is INFINITE_ORDER:
        raise DomainError("this command needs a finite order")
    return k


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbichern",
        description="Characteristic-class invariants of smooth orbifold pairs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pair=False, k=False):
        p.add_argument("--format", choices=("table", "csv", "json"),
                       default="table")
        p.add_argument("--float", action="store_true",
                       help="binary64 evaluation and 12-digit printing")
        p.add_argument("--parallel", type=int, default=1, metavar="W",
                       help="worker count for scan commands")
        if pair:
            p.add_argument("--pair", required=True, metavar="FILE",
                           help="JSON pair description")
        if k:
            p.add_argument("--k", required=True, help="jet order")

    p = sub.add_parser("chi", help="Euler-characteristic coefficient chi_k")
    common(p, pair=True, k=True)
    p.set_defaults(fn=_cmd_chi)

    p = sub.add_parser("leading", help="chi_k with its Riemann-Roch scale")
    common(p, pair=True, k=True)
    p.set_defaults(fn=_cmd_leading)

    p = sub.add_parser("segre", help="total Segre class of the order-k bundle")
    common(p, pair=True, k=True)
    p.set_defaults(fn=_cmd_segre)

    p = sub.add_parser("canonical", help="order-k canonical class (k may be inf)")
    common(p, pair=True, k=True)
    p.set_defaults(fn=_cmd_canonical)

    p = sub.add_parser("table1", help="minimal ramification orders by degree")
    common(p)
    p.set_defaults(fn=_cmd_table1)

    p = sub.add_parser("minmult", help="minimal order for one plane degree")
    common(p)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(fn=_cmd_minmult)

    p = sub.add_parser("lines", help="minimal equal degree for c components")
    common(p)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--c-max", type=int, default=11)
    p.set_defaults(fn=_cmd_lines)

    p = sub.add_parser("k3scan", help="trivial-canonical coefficient scan")
    common(p)
    p.add_argument("--m-max", type=int, default=200)
    p.set_defaults(fn=_cmd_k3scan)

    p = sub.add_parser("gysin", help="flag-bundle Gysin coefficient")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True,
                   help="partition, e.g. 2,2,1")
    p.set_defaults(fn=_cmd_gysin)

    p = sub.add_parser("pieri", help="Schur decomposition of Sym powers")
    common(p)
    p.add_argument("--degrees", required=True, help="e.g. 2,1")
    p.set_defaults(fn=_cmd_pieri)

    p = sub.add_parser("summands", help="graded jet-bundle summands")
    common(p, pair=True, k=True)
    p.add_argument("--N", type=int, required=True, help="weighted degree")
    p.set_defaults(fn=_cmd_summands)

    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.fn(args, out)
    except PairFormatError as exc:
        err.write("error: %s\n" % exc)
        return 2
    except OSError as exc:
        err.write("error: %s\n" % exc)
        return 2
    except OrbichernError as exc:
        err.write("error: %s\n" % exc)
        return 3
    except ValueError as exc:
        err.write("error: %s\n" % exc)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
