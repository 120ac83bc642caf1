"""Command line entry point: ``eqcarp {solve,exact,bounds,ratio-table,verify,generate}``.

Exit codes: 0 ok, 2 parse/usage error, 3 infeasible instance, 4 size cap
exceeded, 5 verification violation.
"""
from __future__ import annotations

import argparse
import dataclasses
import sys

from .algorithm import solve_metric
from .analysis import bound_suite, jansen_ratio, lower_bounds, ratio_closed_form
from .exact import CARP_CAP, exact_carp
from .instances import format_native, generate, parse_classic_format, parse_instance
from .model import (InfeasibleInstance, InputError, Route, SizeCapError, Solution,
                    check_solution)
from .preprocess import lift_solution, normalize
from .sweep import run_sweep

EXIT_OK, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_SIZE, EXIT_VIOLATION = 0, 2, 3, 4, 5


def fmt(x: float) -> str:
    x = float(x)
    return str(int(x)) if x.is_integer() else repr(x)


def fmt_served(served) -> str:
    return ",".join(f"{i}{'+-'[o]}" for i, o in served)


def parse_served(text: str):
    return tuple((int(tok[:-1]), "+-".index(tok[-1])) for tok in text.split(","))


def parse_report(text: str) -> Solution:
    """Rebuild the metric Solution from a machine-readable solve report."""
    routes = []
    total = None
    for line in text.splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "route":
            routes.append(Route(parse_served(parts[2]), float(parts[3])))
        elif parts[0] == "total_cost":
            total = float(parts[1])
    return Solution(tuple(routes), total)


def _load(args):
    reader = parse_classic_format if args.format == "classic" else parse_instance
    raw = reader(args.input)
    if args.capacity is not None:
        raw = dataclasses.replace(raw, capacity_k=args.capacity)
    return raw


def _emit_routes(sol: Solution, out, walks=None):
    for r, route in enumerate(sol.routes):
        out.append(f"route {r} {fmt_served(route.served)} {fmt(route.cost)}")
    for r, w in enumerate(walks or ()):
        out.append(f"walk {r} {','.join(map(str, w.vertices))} {fmt(w.cost)}")


def cmd_solve(args) -> int:
    raw = _load(args)
    inst, lift = normalize(raw)
    res = solve_metric(inst, partition=args.partition, rpp=args.rpp)
    walks = lift_solution(res.solution, lift, inst)
    raw_total = sum(w.cost for w in walks)
    problems = check_solution(res.solution, inst)
    if args.output == "report":
        out = [f"m {inst.m}", f"k {inst.capacity_k}", f"rpp {res.used}",
               f"rpp_cost {fmt(res.tour.cost)}"]
        if res.h1 is not None:
            out.append(f"h1_cost {fmt(res.h1.tour.cost)}")
        if res.h2 is not None:
            out.append(f"h2_cost {fmt(res.h2.tour.cost)}")
        out += [f"partition {args.partition}", f"routes {len(res.solution.routes)}",
                f"total_cost {fmt(res.solution.total_cost)}", f"raw_total_cost {fmt(raw_total)}"]
        _emit_routes(res.solution, out, walks)
    else:
        out = [f"customers: {inst.m}  capacity: {inst.capacity_k}"]
        if res.h1 is not None and res.h2 is not None:
            out.append(f"RPP tours: H1 = {fmt(res.h1.tour.cost)}, H2 = {fmt(res.h2.tour.cost)}"
                       f" -> partitioning {res.used.upper()}")
        else:
            out.append(f"RPP tour {res.used.upper()} = {fmt(res.tour.cost)}")
        for r, (route, w) in enumerate(zip(res.solution.routes, walks)):
            out.append(f"  route {r}: cost {fmt(route.cost)}  customers "
                       f"{fmt_served(route.served)}  walk {' '.join(map(str, w.vertices))}")
        out.append(f"total cost: {fmt(res.solution.total_cost)}")
        if lift.service_excess:
            out.append(f"raw walk cost: {fmt(raw_total)} (includes service excess "
                       f"{fmt(lift.service_excess)})")
    print("\n".join(out))
    if problems:
        print("\n".join(problems), file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_exact(args) -> int:
    raw = _load(args)
    inst, _ = normalize(raw)
    opt = exact_carp(inst, cap=CARP_CAP)
    out = [f"m {inst.m}", f"k {inst.capacity_k}", f"opt {fmt(opt.total_cost)}"]
    _emit_routes(opt, out)
    print("\n".join(out))
    return EXIT_OK


def cmd_bounds(args) -> int:
    raw = _load(args)
    inst, _ = normalize(raw)
    lb = lower_bounds(inst)
    out = [f"lb_delta {fmt(lb.lb_delta)}",
           f"lb_rpp {fmt(lb.lb_rpp) if lb.lb_rpp is not None else 'n/a'}"]
    status = EXIT_OK
    if inst.m <= CARP_CAP:
        rep = bound_suite(inst, partition=args.partition)
        out.append(f"opt {fmt(rep.values['opt'])}")
        out += [str(c) for c in rep.checks]
        out += rep.problems
        if not rep.ok:
            status = EXIT_VIOLATION
    print("\n".join(out))
    return status


def _k_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo < 3 or hi < lo:
        raise argparse.ArgumentTypeError("need 3 <= A <= B")
    return range(lo, hi + 1)


def cmd_ratio_table(args) -> int:
    out = ["k l ratio ratio_3dp earlier"]
    for k in args.k_range:
        p = ratio_closed_form(k)
        out.append(f"{k} {p.l_tilde} {p.ratio:.6f} {p.ratio:.3f} {jansen_ratio(k):.3f}")
    print("\n".join(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    summary = run_sweep(args.trials, base_seed=args.seed, max_m=args.max_m,
                        max_k=args.max_k, partition=args.partition, workers=args.workers)
    for trial, v in summary.violations:
        print(f"trial {trial}: {v}")
    counts = summary.route_counts()
    n_checks = sum(r.n_checks for r in summary.results)
    print(f"trials {len(summary.results)}  checks {n_checks}  "
          f"violations {len(summary.violations)}")
    print(f"optimal routes: odd {counts['odd']}  even {counts['even']}  "
          f"zero-cost {counts['degenerate']}")
    print(f"worst ALG/OPT {summary.worst_ratio():.6f}")
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def cmd_generate(args) -> int:
    raw = generate(args.m, args.capacity, args.mode, args.seed, args.range)
    text = format_native(raw)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eqcarp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p):
        p.add_argument("--input", required=True, help="instance file")
        p.add_argument("--format", choices=("native", "classic"), default="native")
        p.add_argument("--capacity", type=int, help="override the file's capacity")
        p.add_argument("--partition", choices=("candidates", "dp"), default="candidates")

    p = sub.add_parser("solve", help="run the approximation algorithm")
    instance_args(p)
    p.add_argument("--rpp", choices=("h1", "h2", "best"), default="best")
    p.add_argument("--output", choices=("text", "report"), default="text")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", help=f"optimal solution (m <= {CARP_CAP})")
    instance_args(p)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bounds", help="lower bounds and inequality checks")
    instance_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ratio-table", help="closed-form ratio for a range of k")
    p.add_argument("--k-range", type=_k_range, default=range(3, 9))
    p.set_defaults(func=cmd_ratio_table)

    p = sub.add_parser("verify", help="random sweep of the inequality suite")
    p.add_argument("--trials", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-m", type=int, default=7)
    p.add_argument("--max-k", type=int, default=5)
    p.add_argument("--partition", choices=("candidates", "dp"), default="candidates")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random native instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--capacity", type=int, required=True)
    p.add_argument("--mode", choices=("euclidean", "random-metric"), default="euclidean")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=int, default=100)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_m", 0) > CARP_CAP:
        print(f"error: --max-m is capped at {CARP_CAP}", file=sys.stderr)
        return EXIT_SIZE
    try:
        return args.func(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except InfeasibleInstance as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
