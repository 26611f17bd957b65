"""Command line entry points: build, verify, audit, sweep, oracle, analyze, export.

Every command exits 0 only if all of its assertions pass, so the whole
acceptance story is scriptable from shell CI.  Parallelism is controlled by
``--jobs`` with the ``RINGFILL_JOBS`` environment variable as fallback.
"""
from __future__ import annotations

import argparse
import random
import sys

from .analysis import (
    check_core_inequality,
    constants_report,
    profile_integral,
    run_sweep,
)
from .builder import Params, ScheduleError, as_fraction, build_filling, predict_density
from .oracle import min_isometric_vertices
from .serialize import (
    build_to_dict,
    complex_from_dict,
    dump_json,
    load_json,
    report_to_dict,
    triangulation_to_dict,
    write_obj,
    write_off,
)
from .simplicial import validate_disk
from .verify import (
    cycle_dist,
    drift_audit,
    separation_lower_bounds,
    step_profile_eps,
    verify_filling,
)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringfill", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a filling and optionally write it as JSON")
    _add_params(p_build, required=True)
    p_build.add_argument("--out", help="write the build (complex + schedule + ledger) as JSON")

    p_verify = sub.add_parser("verify", help="exact isometry verification by boundary BFS")
    _add_source(p_verify)
    p_verify.add_argument("--jobs", type=int, help="BFS worker threads (default: RINGFILL_JOBS or 1)")
    p_verify.add_argument("--out", help="write the verification report as JSON")
    p_verify.add_argument("--dump-witness", action="store_true", help="print the worst shortcut path")
    p_verify.add_argument(
        "--check-bound",
        type=int,
        metavar="COUNT",
        help="also check the analytic lower bound against BFS on COUNT sampled pairs",
    )
    p_verify.add_argument("--seed", type=int, default=0, help="seed for sampled pair checks")

    p_audit = sub.add_parser("audit", help="exact slanted-edge drift audit per annulus")
    _add_source(p_audit)

    p_sweep = sub.add_parser("sweep", help="build/validate/audit/verify over a list of n")
    p_sweep.add_argument("--n-list", required=True, help="comma-separated boundary lengths")
    p_sweep.add_argument("--rho", required=True, help="collar fraction, e.g. 0.1")
    p_sweep.add_argument("--eta", required=True, help="stopping scale, e.g. 0.25")
    p_sweep.add_argument("--jobs", type=int, help="BFS worker threads")
    p_sweep.add_argument("--out", help="CSV output path")

    p_oracle = sub.add_parser("oracle", help="exhaustive minimum search for tiny boundaries")
    p_oracle.add_argument("--n", type=int, required=True)
    p_oracle.add_argument("--max-interior", type=int, default=4)
    p_oracle.add_argument("--out", help="write the minimal witness as JSON")

    p_analyze = sub.add_parser("analyze", help="numeric certification of the closed forms")
    p_analyze.add_argument("--constants", action="store_true")
    p_analyze.add_argument("--core-inequality", action="store_true")
    p_analyze.add_argument("--profile-integral", action="store_true")
    p_analyze.add_argument("--eta", default="0.25")
    p_analyze.add_argument("--grid-t", type=int, default=1000)
    p_analyze.add_argument("--grid-s", type=int, default=1000)

    p_export = sub.add_parser("export", help="export a complex to OFF or OBJ")
    p_export.add_argument("--in", dest="in_path", required=True)
    p_export.add_argument("--format", choices=("off", "obj"), required=True)
    p_export.add_argument("--out", required=True)
    return parser


def _add_params(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--n", type=int, required=required)
    parser.add_argument("--rho", required=required, help="collar fraction, e.g. 0.1")
    parser.add_argument("--eta", required=required, help="stopping scale, e.g. 0.25")


def _add_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--in", dest="in_path", help="complex or build JSON file")
    _add_params(parser, required=False)


def _load_source(args: argparse.Namespace):
    """Triangulation plus build metadata, from a file or built on the spot."""
    if args.in_path:
        t, build = complex_from_dict(load_json(args.in_path))
        return t, build
    if args.n is None or args.rho is None or args.eta is None:
        raise ScheduleError("either --in FILE or all of --n/--rho/--eta are required")
    build = build_filling(Params(args.n, as_fraction(args.rho), as_fraction(args.eta)))
    return build.triangulation, build


def _cmd_build(args: argparse.Namespace) -> int:
    params = Params(args.n, as_fraction(args.rho), as_fraction(args.eta))
    build = build_filling(params)
    report = validate_disk(build.triangulation)
    if not report.ok:
        for failure in report.failures:
            print(f"invalid: {failure}", file=sys.stderr)
        return 1
    t = build.triangulation
    s = build.schedule
    print(f"n={t.n} vertices={t.num_vertices} triangles={t.num_triangles} edges={t.num_edges}")
    print(
        f"collar_layers={s.collar_layers} blocks={s.num_blocks} layers_per_block={s.layers_per_block} "
        f"innermost={s.block_lengths[-1]}"
    )
    print(f"density={float(build.density)!r} asymptotic_bound={float(predict_density(params))!r}")
    if args.out:
        dump_json(build_to_dict(build), args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    t, build = _load_source(args)
    validation = validate_disk(t)
    if not validation.ok:
        for failure in validation.failures:
            print(f"invalid: {failure}", file=sys.stderr)
        return 1
    report = verify_filling(t, jobs=args.jobs)
    if build is not None:
        report.eps = step_profile_eps(build)
    x, y, d_k, d_c = report.worst_pair
    print(f"n={report.n} delta={report.delta} ({float(report.delta)!r}) isometric={report.is_isometric}")
    print(f"worst pair: ({x}, {y}) graph distance {d_k}, cycle distance {d_c}")
    if report.eps is not None:
        print(f"step-profile eps={report.eps!r}")
    if args.dump_witness and report.witness_path is not None:
        print("witness path:", " ".join(map(str, report.witness_path)))
    ok = True
    if args.check_bound:
        if build is None:
            print("bound check needs a build file with a ledger", file=sys.stderr)
            return 1
        rng = random.Random(args.seed)
        table = separation_lower_bounds(build)
        dist = report.boundary_distances
        violations = 0
        for _ in range(args.check_bound):
            a = rng.randrange(t.n)
            b = rng.randrange(t.n)
            if table[cycle_dist(a, b, t.n)] > dist[a, b]:
                violations += 1
                print(f"lower bound {table[cycle_dist(a, b, t.n)]} exceeds distance {dist[a, b]} for ({a}, {b})")
        print(f"bound check: {args.check_bound} pairs sampled, {violations} violations")
        ok = violations == 0
    if args.out:
        dump_json(report_to_dict(report, include_witness=args.dump_witness), args.out)
        print(f"wrote {args.out}")
    return 0 if ok else 1


def _cmd_audit(args: argparse.Namespace) -> int:
    t, build = _load_source(args)
    if build is None:
        print("audit needs a build file with a ledger (or --n/--rho/--eta)", file=sys.stderr)
        return 1
    audit = drift_audit(build)
    tight = sum(1 for row in audit.rows if row.kind != "shrink" and row.tight)
    equalish = sum(1 for row in audit.rows if row.kind != "shrink")
    print(f"n={t.n} annuli={len(audit.rows)} within_bounds={audit.ok}")
    print(f"equal-length annuli achieving their bound exactly: {tight}/{equalish}")
    for row in audit.failures():
        print(
            f"violation: annulus {row.layer} ({row.kind}) observed {row.max_observed} > bound {row.bound}",
            file=sys.stderr,
        )
    return 0 if audit.ok else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    n_list = [int(x) for x in args.n_list.split(",") if x]
    rows = run_sweep(n_list, args.rho, args.eta, jobs=args.jobs, csv_path=args.out)
    failed = False
    for row in rows:
        if row.error is not None:
            failed = True
            print(f"n={row.n}: FAILED ({row.error})", file=sys.stderr)
        else:
            print(
                f"n={row.n} vertices={row.vertices} density={row.density!r} delta={row.delta!r} "
                f"isometric={row.is_isometric} eps={row.eps!r}"
            )
    if args.out:
        print(f"wrote {args.out}")
    return 1 if failed else 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    result = min_isometric_vertices(args.n, args.max_interior)
    if result.known:
        print(f"n={args.n}: minimum isometric filling has {result.min_vertices} vertices")
    else:
        note = " (search truncated)" if result.truncated else ""
        print(
            f"n={args.n}: no isometric filling within {args.max_interior} interior vertices; "
            f"minimum unknown{note}"
        )
    print(f"candidates examined: {result.enumerated}")
    if args.out and result.witness is not None:
        dump_json(triangulation_to_dict(result.witness), args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    run_all = not (args.constants or args.core_inequality or args.profile_integral)
    ok = True
    if args.constants or run_all:
        constants = constants_report()
        for line in constants.lines():
            print(line)
        ok = ok and constants.ordering_ok
    if args.core_inequality or run_all:
        rep = check_core_inequality(args.grid_t, args.grid_s, float(as_fraction(args.eta)))
        t_at, s_at = rep.argmin
        print(
            f"core inequality: min slack {rep.min_slack!r} at (t={t_at!r}, s={s_at!r}) "
            f"on a {rep.grid_t}x{rep.grid_s} grid; boundary |slack| max {rep.boundary_max_abs!r}"
        )
        ok = ok and rep.ok
    if args.profile_integral or run_all:
        try:
            check = profile_integral(args.eta)
        except RuntimeError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        print(
            f"profile integral at eta={args.eta}: closed form {float(check.closed_form)!r} "
            f"({check.closed_form}), quadrature {check.quadrature!r}, error {check.error:.3e}"
        )
    return 0 if ok else 1


def _cmd_export(args: argparse.Namespace) -> int:
    t, _ = complex_from_dict(load_json(args.in_path))
    if args.format == "off":
        write_off(t, args.out)
    else:
        write_obj(t, args.out)
    print(f"wrote {args.out} ({t.num_vertices} vertices, {t.num_triangles} faces)")
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "sweep": _cmd_sweep,
    "oracle": _cmd_oracle,
    "analyze": _cmd_analyze,
    "export": _cmd_export,
}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ScheduleError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
