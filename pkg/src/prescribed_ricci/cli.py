"""Command-line front end.

    prescribed-ricci ric --space so17 --xyz 1,1,1/2
    prescribed-ricci solve-ct --space generic --params 7,7,7/6,7/6 --t=0.8333333333,-1.1666666667
    prescribed-ricci sweep --mode region --x-range=-3:0:0.05 --y-range 0.05:3:0.05 --out grid.csv
    prescribed-ricci verify
    prescribed-ricci classify --label I.16

Numbers accept fractions ("7/6"); they are parsed exactly before any float
conversion. Negative leading values need the ``--opt=-1,2`` form so that
argparse does not read them as flags. ``--json`` switches to one JSON object
per line. Exit status: 0 on success (including "not in image" answers),
1 when ``verify`` finds a failing check, 2 on usage errors.
"""
import argparse
from concurrent.futures import ProcessPoolExecutor
import csv
from fractions import Fraction
import io
import json
import math
import sys

from . import generic_prp as gp
from . import registry
from . import so17_prp as sp

SIG = 12


# --- parsing and formatting -----------------------------------------------------

def parse_number(text):
    text = text.strip().replace("−", "-")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from exc


def number_list(n):
    def parse(text):
        parts = text.split(",")
        if len(parts) != n:
            raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {len(parts)}")
        return tuple(parse_number(p) for p in parts)
    parse.__name__ = f"{n} numbers"
    return parse


def grid_range(text):
    """lo:hi:step, inclusive of hi when it lies on the grid."""
    parts = text.replace("−", "-").split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("range must look like lo:hi:step")
    lo, hi, step = (parse_number(p) for p in parts)
    if not step > 0:
        raise argparse.ArgumentTypeError("step must be positive")
    if hi < lo:
        return []
    n = int((hi - lo) / step) + 1
    return [float(lo + i * step) for i in range(n)]


def fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, float, Fraction)):
        return format(float(v), f".{SIG}g")
    return str(v)


def jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, float, Fraction)):
        f = float(v)
        return float(format(f, f".{SIG}g")) if math.isfinite(f) else str(f)
    if isinstance(v, dict):
        return {k: jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        return [jsonable(x) for x in (sorted(v) if isinstance(v, (set, frozenset)) else v)]
    return str(v)


def emit(record, args, out):
    if args.json:
        out.write(json.dumps(jsonable(record), sort_keys=False) + "\n")
        return
    for k, v in record.items():
        if isinstance(v, (list, tuple)):
            v = ", ".join(fmt(x) for x in v) if v else "-"
        elif isinstance(v, dict):
            v = ", ".join(f"{a}={fmt(b)}" for a, b in v.items()) or "-"
        out.write(f"{k} = {fmt(v)}\n")
    out.write("\n")


def _params(args, parser):
    if args.params is None:
        parser.error("--params d1,d2,p1,p2 is required for --space generic")
    try:
        return gp.TwoSummandParams(*args.params)
    except ValueError as exc:
        parser.error(f"invalid parameters: {exc}")


# --- subcommands -----------------------------------------------------------------

def cmd_ric(args, parser, out):
    if args.space == "generic":
        params = _params(args, parser)
        if args.lam is None:
            parser.error("--lambda is required for --space generic")
        if not args.lam > 0:
            emit({"error": "lambda must be positive"}, args, out)
            return 0
        r = gp.ric_diag(params, float(args.lam))
        emit({"r1": r.t1, "r2": r.t2}, args, out)
        return 0
    if (args.xyz is None) == (args.abc is None):
        parser.error("give exactly one of --xyz or --abc")
    try:
        if args.xyz is not None:
            r = sp.ric_xyz(args.xyz)
        else:
            r = sp.ric_abc(tuple(float(v) for v in args.abc))
    except ValueError as exc:
        emit({"error": str(exc)}, args, out)
        return 0
    rec = {"r1": r.r1, "r2": r.r2, "r3": r.r3}
    if all(isinstance(v, Fraction) for v in r):
        rec["exact"] = [str(v) for v in r]
    emit(rec, args, out)
    return 0


def cmd_solve_t(args, parser, out):
    if args.space == "generic":
        params = _params(args, parser)
        if args.t is None or len(args.t) != 2:
            parser.error("--t t1,t2 is required for --space generic")
        t1, t2 = (float(v) for v in args.t)
        try:
            expect, lam = gp.solve_T(params, t2)
        except gp.NotInImage as exc:
            emit({"in_image": False, "reason": str(exc)}, args, out)
            return 0
        ok = abs(expect - t1) <= 1e-9 * max(1.0, abs(expect))
        emit({"in_image": ok, "t1_required": expect, "lambda": lam if ok else None}, args, out)
        return 0
    if args.t is None or len(args.t) != 3:
        parser.error("--t t1,t2,t3 is required for --space so17")
    v = sp.solve_T_so17(tuple(float(x) for x in args.t))
    emit({"in_image": v.member, "branch": v.branch, "t1_required": v.expected_t1,
          "reason": v.reason}, args, out)
    return 0


def cmd_solve_ct(args, parser, out):
    if args.space == "generic":
        params = _params(args, parser)
        if args.t is None or len(args.t) != 2:
            parser.error("--t t1,t2 is required for --space generic")
        t1, t2 = (float(v) for v in args.t)
        try:
            res = gp.analyze_cT(params, t1, t2)
        except ValueError as exc:
            emit({"solvable": False, "reason": str(exc)}, args, out)
            return 0
        rec = {"solvable": bool(res.solutions), "c": [s.c for s in res.solutions],
               "lambda": [s.lam for s in res.solutions], "branch": [s.branch for s in res.solutions],
               "tau": res.tau, "ratio": res.ratio, "boundary": res.boundary}
        if res.diagnostics:
            rec["diagnostics"] = res.diagnostics
        emit(rec, args, out)
        return 0
    if args.t is None or len(args.t) != 3:
        parser.error("--t t1,t2,t3 is required for --space so17")
    try:
        res = sp.solve_cT_so17(tuple(float(x) for x in args.t))
    except ValueError as exc:
        emit({"solvable": False, "reason": str(exc)}, args, out)
        return 0
    emit({"solvable": bool(res.solutions), "c": res.c_values,
          "branch": [b for _, b in res.solutions], "in_region": res.in_region,
          "region_ids": res.region_ids, "diagnostics": res.diagnostics}, args, out)
    return 0


def cmd_region(args, parser, out):
    l, m = (float(v) for v in args.point)
    if m == 0:
        rec = {"in_R": sp.diagonal_contains(l), "region_ids": [], "boundary": False}
    elif m < 0:
        parser.error("m must be nonnegative")
    else:
        v = sp.region_contains((l, m))
        rec = {"in_R": v.contained, "region_ids": v.region_ids, "boundary": v.boundary,
               "diagnostics": v.diagnostics}
    if args.oracle and m > 0:
        o = sp.region_oracle((l, m))
        rec["oracle"] = o.verdict
        rec["oracle_residual"] = o.residual
    emit(rec, args, out)
    return 0


def _solve_t_row(pt):
    t2, t3 = pt
    branch = sp.t_branch(t2, t3)
    if branch is None:
        return [t2, t3, None, False]
    if branch == "diagonal":
        t1 = 6 * t2 * t2 + 6 * t2 + 15 / 8
    elif branch == "exceptional":
        t1 = 0.75
    else:
        t1 = sp.f1(t2, t3)
    return [t2, t3, t1, True]


def _region_row(pt):
    l, m = pt
    if m == 0:
        ids, inside = [], sp.diagonal_contains(l)
    else:
        v = sp.region_contains((l, m))
        ids, inside = v.region_ids, v.contained
    cs = sp.solve_cT_so17((1.0, l, m)).c_values
    return [l, m, inside, ";".join(str(i) for i in ids), ";".join(fmt(c) for c in cs)]


SWEEP_MODES = {
    "solve-t": (("t2", "t3", "t1", "in_image"), _solve_t_row),
    "region": (("l", "m", "in_R", "region_ids", "c_list"), _region_row),
}


def run_sweep(mode, xs, ys, jobs=1):
    """Rows of the sweep in row-major (x outer, y inner) order."""
    _, fn = SWEEP_MODES[mode]
    pts = [(x, y) for x in xs for y in ys]
    if jobs > 1 and len(pts) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, pts, chunksize=max(1, len(pts) // (4 * jobs))))
    return [fn(p) for p in pts]


def write_sweep_csv(mode, rows, fh):
    header, _ = SWEEP_MODES[mode]
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])


def cmd_sweep(args, parser, out):
    if args.mode == "region" and any(y < 0 for y in args.y_range):
        parser.error("m must be nonnegative in region sweeps")
    rows = run_sweep(args.mode, args.x_range, args.y_range, args.jobs)
    buf = io.StringIO()
    write_sweep_csv(args.mode, rows, buf)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 0


def cmd_verify(args, parser, out):
    from .invariants import run_all
    results = run_all()
    for r in results:
        if args.json:
            emit({"check": r.name, "ok": r.ok, "detail": r.detail}, args, out)
        else:
            out.write(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}\n")
    failed = [r.name for r in results if not r.ok]
    if not args.json:
        out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return 1 if failed else 0


def cmd_classify(args, parser, out):
    if args.label:
        try:
            rows = [registry.lookup(args.label)]
        except registry.UnknownLabel as exc:
            emit({"error": str(exc.args[0])}, args, out)
            return 0
    else:
        rows = registry.filter_entries(family=args.family, flag=args.flag,
                                       g_prefix=args.g_prefix, table=args.table)
    for e in rows:
        rec = e.as_dict()
        sc = e.structural_constants()
        if sc is not None:
            rec["structural_constants"] = [str(v) for v in sc]
        emit(rec, args, out)
    return 0


# --- parser ------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="prescribed-ricci",
                                description="Prescribed Ricci curvature on two-summand homogeneous spaces.")
    p.add_argument("--json", action="store_true", help="emit one JSON object per line")
    sub = p.add_subparsers(dest="command", required=True)

    def space_opts(sp_, n_t):
        sp_.add_argument("--space", choices=("so17", "generic"), default="so17")
        sp_.add_argument("--params", type=number_list(4), metavar="d1,d2,p1,p2")
        sp_.add_argument("--t", type=_flex_list, metavar="T",
                         help=f"tensor coefficients ({n_t})")

    r = sub.add_parser("ric", help="Ricci coefficients of a metric")
    r.add_argument("--space", choices=("so17", "generic"), default="so17")
    r.add_argument("--xyz", type=number_list(3), help="Phi = [[x, z], [z, y]]")
    r.add_argument("--abc", type=number_list(3), help="phi = [[a, c], [c, b]]")
    r.add_argument("--params", type=number_list(4), metavar="d1,d2,p1,p2")
    r.add_argument("--lambda", dest="lam", type=parse_number, help="metric ratio x1/x2")
    r.set_defaults(func=cmd_ric)

    st = sub.add_parser("solve-t", help="is T a Ricci tensor?")
    space_opts(st, "t1,t2,t3 for so17; t1,t2 for generic")
    st.set_defaults(func=cmd_solve_t)

    sc = sub.add_parser("solve-ct", help="find c > 0 with ric = cT")
    space_opts(sc, "t1,t2,t3 for so17; t1,t2 for generic")
    sc.set_defaults(func=cmd_solve_ct)

    rg = sub.add_parser("region", help="membership of (l, m) in the ric = cT region")
    rg.add_argument("--point", type=number_list(2), required=True, metavar="l,m")
    rg.add_argument("--oracle", action="store_true", help="also run the numeric preimage search")
    rg.set_defaults(func=cmd_region)

    sw = sub.add_parser("sweep", help="evaluate a grid and write CSV")
    sw.add_argument("--mode", choices=tuple(SWEEP_MODES), required=True)
    sw.add_argument("--x-range", type=grid_range, required=True, metavar="lo:hi:step",
                    help="t2 (solve-t) or l (region)")
    sw.add_argument("--y-range", type=grid_range, required=True, metavar="lo:hi:step",
                    help="t3 (solve-t) or m (region)")
    sw.add_argument("--out", help="output file (default stdout)")
    sw.add_argument("--jobs", type=int, default=1, help="worker processes; output order is unchanged")
    sw.set_defaults(func=cmd_sweep)

    v = sub.add_parser("verify", help="run the invariant suite")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="query the classification table")
    c.add_argument("--label")
    c.add_argument("--family", choices=sorted(registry.FAMILIES))
    c.add_argument("--flag", choices=sorted(registry.FLAGS))
    c.add_argument("--g-prefix")
    c.add_argument("--table", type=int, choices=(1, 2, 3, 4))
    c.set_defaults(func=cmd_classify)
    return p


def _flex_list(text):
    return tuple(parse_number(t) for t in text.split(","))


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    return args.func(args, parser, out)


if __name__ == "__main__":
    sys.exit(main())
