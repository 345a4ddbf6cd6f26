"""Command-line front end: quote, translate, sweep, angle, verify, geometry.

All commands read curve specs as JSON ({"form": ..., ...fields}) and write
JSON (CSV is available for sweeps).  Numbers are serialized as shortest
round-trip decimals, so identical inputs produce byte-identical output.

Exit codes: 0 success, 1 verification failure, 2 input or domain error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import random
import sys

from .curves import curve_for, geometry
from .errors import ConvergenceFailure, CurveError, DomainError
from .hypertrig import hyperbolic_angle, t_hat_from_price, trig_identities, u_hat_from_price
from .params import PoolState, apply_delta, load_spec, spec_to_dict
from .quadrature import oracle_compare, random_admissible_swap, random_cases
from .rosetta import translate_with_report

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2))


def _load(args):
    if not args.spec:
        raise DomainError("spec", "a --spec file is required for this command")
    return load_spec(args.spec)


def _state(curve, args) -> PoolState:
    state = PoolState(args.x, args.y)
    if not curve.on_curve(state, rel_tol=args.tolerance):
        raise DomainError("state", "balances do not satisfy the curve invariant")
    return state


def cmd_quote(args) -> int:
    curve = curve_for(_load(args))
    state = _state(curve, args)
    if args.dx is not None:
        delta = curve.swap_exact_in_x(state, args.dx)
    else:
        delta = curve.swap_exact_out_y(state, args.dy)
    after = apply_delta(state, delta)
    quote = {"dx": delta.dx, "dy": delta.dy}
    if delta.dx != 0:
        quote["effective_price"] = delta.dy / delta.dx
    quote["marginal_before"] = curve.marginal_price(state)
    quote["marginal_after"] = curve.marginal_price(after)
    _emit(quote)
    return EXIT_OK


def cmd_translate(args) -> int:
    params = _load(args)
    target, report = translate_with_report(params, args.to)
    _emit({"spec": spec_to_dict(target), "report": dataclasses.asdict(report)})
    return EXIT_OK


def cmd_geometry(args) -> int:
    geom = geometry(_load(args))
    payload = dataclasses.asdict(geom)
    if not all(math.isfinite(v) for v in payload.values()):
        raise DomainError("spec", "curve has no finite geometry")
    _emit(payload)
    return EXIT_OK


def cmd_angle(args) -> int:
    if args.p_high is not None or args.p_low is not None:
        if args.p_high is None or args.p_low is None:
            raise DomainError("p_high", "--p-high and --p-low must be given together")
        p_high, p_low = args.p_high, args.p_low
    else:
        geom = geometry(_load(args))
        p_high, p_low = geom.p_high, geom.p_low
    if not (math.isfinite(p_high) and math.isfinite(p_low)):
        raise DomainError("spec", "curve has no finite price bounds")
    phi = hyperbolic_angle(p_high, p_low).phi
    trig = trig_identities(phi)
    _emit({
        "phi": phi,
        "sinh": trig.sinh,
        "cosh": trig.cosh,
        "tanh": trig.tanh,
        "c": math.sqrt(p_high / p_low),
    })
    return EXIT_OK


def _sweep_rows(curve, axis: str, points: int):
    geom = curve.geom
    if not math.isfinite(geom.x_int):
        raise DomainError("spec", "sweeps need a curve with finite intercepts")
    rows = []
    for i in range(points):
        frac = i / (points - 1)
        if axis == "x":
            state = curve.state_from_x(geom.x_int * frac)
        else:
            price = geom.p_high + (geom.p_low - geom.p_high) * frac
            state = curve.state_at_price(price)
        marginal = curve.marginal_price(state)
        magnitude = -marginal
        rows.append({
            "x": state.x,
            "y": state.y,
            "marginal_price": marginal,
            "t_hat": t_hat_from_price(magnitude),
            "u_hat": u_hat_from_price(magnitude),
        })
    return rows


def cmd_sweep(args) -> int:
    if args.points < 2:
        raise DomainError("points", "must be at least 2")
    curve = curve_for(_load(args))
    rows = _sweep_rows(curve, args.axis, args.points)
    if args.output == "csv":
        print("x,y,marginal_price,t_hat,u_hat")
        for row in rows:
            print(",".join(repr(row[k]) for k in ("x", "y", "marginal_price", "t_hat", "u_hat")))
    else:
        _emit(rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.spec:
        curve = curve_for(load_spec(args.spec))
        rng = random.Random(args.seed)
        cases = [(curve, *random_admissible_swap(rng, curve)) for _ in range(args.cases)]
    else:
        cases = [(params, state, dx) for params, state, dx in random_cases(args.seed, args.cases)]
    failed = 0
    worst = 0.0
    for target, state, dx in cases:
        try:
            report = oracle_compare(target, state, dx, rel_tol=args.rel_tol)
        except ConvergenceFailure:
            failed += 1
            continue
        worst = max(worst, report.rel_deviation)
        if not report.passed:
            failed += 1
    _emit({
        "cases": len(cases),
        "passed": len(cases) - failed,
        "failed": failed,
        "max_rel_deviation": worst,
    })
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="path to a curve spec JSON file")
    common.add_argument("--tolerance", type=float, default=1e-9,
                        help="relative tolerance for on-curve checks (default 1e-9)")
    common.add_argument("--output", choices=("json", "csv"), default="json",
                        help="output format (csv applies to sweeps)")

    parser = argparse.ArgumentParser(prog="clamm",
                                     description="Concentrated-liquidity curve math")
    sub = parser.add_subparsers(dest="command", required=True)

    quote = sub.add_parser("quote", parents=[common], help="price a trade against a curve")
    quote.add_argument("--x", type=float, required=True, help="current x balance")
    quote.add_argument("--y", type=float, required=True, help="current y balance")
    group = quote.add_mutually_exclusive_group(required=True)
    group.add_argument("--dx", type=float, help="signed x amount traded in")
    group.add_argument("--dy", type=float, help="signed y amount traded out")
    quote.set_defaults(handler=cmd_quote)

    trans = sub.add_parser("translate", parents=[common], help="re-express a spec in another form")
    trans.add_argument("--to", required=True, help="target form tag")
    trans.set_defaults(handler=cmd_translate)

    sweep = sub.add_parser("sweep", parents=[common], help="tabulate the curve for plotting")
    sweep.add_argument("--axis", choices=("x", "price"), default="x")
    sweep.add_argument("--points", type=int, default=101)
    sweep.set_defaults(handler=cmd_sweep)

    angle = sub.add_parser("angle", parents=[common], help="hyperbolic angle of the price range")
    angle.add_argument("--p-high", type=float, dest="p_high")
    angle.add_argument("--p-low", type=float, dest="p_low")
    angle.set_defaults(handler=cmd_angle)

    verify = sub.add_parser("verify", parents=[common], help="run the quadrature oracle battery")
    verify.add_argument("--cases", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--rel-tol", type=float, default=1e-8, dest="rel_tol")
    verify.set_defaults(handler=cmd_verify)

    geom = sub.add_parser("geometry", parents=[common], help="derived constants of a curve")
    geom.set_defaults(handler=cmd_geometry)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except CurveError as exc:
        error = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        print(json.dumps(error), file=sys.stderr)
        if isinstance(exc, ConvergenceFailure):
            return EXIT_VERIFY_FAILED
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(json.dumps({"error": {"type": "OSError", "message": str(exc)}}), file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
