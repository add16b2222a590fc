"""Command-line front end.

Exit codes: 0 success (all requested checks passed), 1 check failure,
2 usage error, 3 I/O or parse error.  Output is deterministic for fixed
(argv, seed, input files); all numbers are exact rational strings except
clearly-labeled float columns in CSV sampling output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bodies import (
    DEGREE_1,
    DEGREE_NP1,
    OPERATORS,
    ValuationSpec,
    apply_valuation_eval,
    operator_body,
    valuation_support_point,
)
from .checks import (
    CheckReport,
    check_bp_inequality,
    check_mstar_independence,
    jsonable,
    recover_degree1_coeffs,
    recover_degree_np1_coeffs,
    run_all,
)
from .errors import GeometryError, ParseError
from .io import (
    FORMAT_VERSION,
    default_extra_dirs,
    default_seed,
    emit_polytope,
    parse_directions,
    parse_polytope,
    polytope_to_dict,
)
from .linalg import vec
from .polytope import convex_hull, volume
from .randgen import TrialConfig, direction_set
from .rational import Q, rat_str

USAGE_ERROR = 2
IO_ERROR = 3

OPERATOR_ALIASES = {
    "M": "MomentBody",
    "Mstar": "MomentBodyStar",
    "m": "MomentVec",
    "mstar": "MomentVecStar",
    "Pi": "ProjBody",
    "Gamma": "CentroidBody",
    "D": "DiffBody",
    "Ko": "OHull",
}


def _parse_spec(text: str) -> ValuationSpec:
    """Parse "d1:a1,a2,a3,a4" or "np1:a1,a2,a3,a4" with rational entries."""
    try:
        family_txt, coeffs_txt = text.split(":", 1)
        family = {"d1": DEGREE_1, "np1": DEGREE_NP1}[family_txt.strip()]
        coeffs = [Q(c.strip()) for c in coeffs_txt.split(",")]
        if len(coeffs) != 4:
            raise ValueError("need four coefficients")
        return ValuationSpec(family, *coeffs)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad spec {text!r}: {exc}") from exc


def cmd_hull(args) -> int:
    P = parse_polytope(args.input)
    if args.output:
        emit_polytope(P, args.output)
    else:
        json.dump(polytope_to_dict(P), sys.stdout, indent=1)
        print()
    return 0


def _direction_list(args, dim):
    if args.dirs:
        return parse_directions(args.dirs, expect_dim=dim)
    return direction_set(dim, default_extra_dirs(), args.seed)


def cmd_op(args) -> int:
    K = parse_polytope(args.body)
    dirs = _direction_list(args, K.ambient_dim)
    if args.spec:
        spec = _parse_spec(args.spec)
        for u in dirs:
            val = apply_valuation_eval(spec, K, u)
            pt = valuation_support_point(spec, K, u)
            print(json.dumps({"direction": [rat_str(c) for c in u], "value": rat_str(val), "point": [rat_str(c) for c in pt]}))
        return 0
    name = OPERATOR_ALIASES.get(args.name, args.name)
    if name not in OPERATORS:
        print(f"unknown operator {args.name!r}; choose from {sorted(OPERATORS) + sorted(OPERATOR_ALIASES)}", file=sys.stderr)
        return USAGE_ERROR
    if name == "CentroidBody" and volume(K) == 0:
        print("centroid body needs a full-dimensional body", file=sys.stderr)
        return USAGE_ERROR
    if OPERATORS[name].is_vector:
        v = OPERATORS[name].vector(K)
        print(json.dumps({"vector": [rat_str(c) for c in v]}))
        return 0
    body = operator_body(name, K) if name != "CentroidBody" else None
    for u in dirs:
        if body is not None:
            val, pt = body.eval(u)
            out = {"direction": [rat_str(c) for c in u], "value": rat_str(val), "point": [rat_str(c) for c in pt]}
        else:
            val = OPERATORS[name].support(K, u)
            out = {"direction": [rat_str(c) for c in u], "value": rat_str(val)}
        print(json.dumps(out))
    return 0


def cmd_check(args) -> int:
    cfg = TrialConfig(n=args.n, trials=args.trials, seed=args.seed, extra_dirs=default_extra_dirs())
    reports = []

    def progress(rep: CheckReport):
        print(json.dumps(rep.to_dict()))
        sys.stdout.flush()

    if args.all:
        reports = run_all(cfg, include_bp=not args.skip_bp, progress=progress)
    else:
        print("nothing to do: pass --all", file=sys.stderr)
        return USAGE_ERROR
    bad = [r for r in reports if not r.ok]
    return 1 if bad else 0


def cmd_recover(args) -> int:
    spec = _parse_spec(args.via) if ":" in args.via else _parse_spec(open(args.via).read().strip())
    n = args.n

    def evaluator(K, u):
        return apply_valuation_eval(spec, K, u)

    if args.family == "d1":
        coeffs = recover_degree1_coeffs(evaluator, n, TrialConfig(n=n, seed=args.seed))
    else:
        coeffs = recover_degree_np1_coeffs(evaluator, n, TrialConfig(n=n, seed=args.seed))
    print(json.dumps({"family": args.family, "coefficients": [rat_str(c) for c in coeffs]}))
    return 0 if coeffs == spec.coefficients else 1


def cmd_demo(args) -> int:
    cfg = TrialConfig(n=args.n, trials=args.trials, seed=args.seed)
    if args.which == "independence":
        rep = check_mstar_independence(cfg)
        print(json.dumps(rep.to_dict(), indent=1))
        return 0 if rep.ok else 1
    # corollary sandwich on the centered cube and the standard simplex
    from itertools import product

    cube = convex_hull([tuple(Q(s) for s in signs) for signs in product((-1, 1), repeat=args.n)])
    T = convex_hull([tuple(Q(0) for _ in range(args.n))] + [tuple(Q(1) if j == i else Q(0) for j in range(args.n)) for i in range(args.n)])
    ok = True
    for label, body in (("centered-cube", cube), ("simplex", T)):
        rep = check_bp_inequality(body, cfg, budget=args.budget)
        out = rep.to_dict()
        out["body"] = label
        print(json.dumps(out, indent=1))
        ok = ok and rep.ok
    return 0 if ok else 1


def cmd_sample(args) -> int:
    K = parse_polytope(args.body)
    if K.ambient_dim != 3:
        print("sampling grid is 3-dimensional", file=sys.stderr)
        return USAGE_ERROR
    name = OPERATOR_ALIASES.get(args.op, args.op)
    if name not in OPERATORS or OPERATORS[name].is_vector:
        print(f"need a body-valued operator, got {args.op!r}", file=sys.stderr)
        return USAGE_ERROR
    body = operator_body(name, K)
    # cube-sphere grid: k x k points per face, about args.grid directions total
    k = max(2, round((args.grid / 6) ** 0.5))
    dirs = []
    steps = [Q(2 * i, k - 1) - 1 for i in range(k)] if k > 1 else [Q(0)]
    for axis in range(3):
        for sign in (-1, 1):
            for a in steps:
                for b in steps:
                    u = [a, b]
                    u.insert(axis, Q(sign))
                    dirs.append(tuple(u))
    print("u1,u2,u3,value,value_float_approx")
    for u in dirs:
        val = body.eval(u)[0]
        print(f"{rat_str(u[0])},{rat_str(u[1])},{rat_str(u[2])},{rat_str(val)},{float(val):.12g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="minkval", description="Exact Minkowski-valuation operators on polytopes, with a verification harness.")
    p.add_argument("--version", action="version", version=f"minkval {__version__} (report format {FORMAT_VERSION})")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("hull", help="canonicalize a polytope JSON file")
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    sp.set_defaults(fn=cmd_hull)

    sp = sub.add_parser("op", help="evaluate an operator on a body at directions")
    sp.add_argument("--name", default=None, help=f"operator name, one of {sorted(OPERATORS)}")
    sp.add_argument("--spec", default=None, help='family member, e.g. "np1:1,0,2,1"')
    sp.add_argument("--body", required=True, help="polytope JSON file")
    sp.add_argument("--dirs", default=None, help="direction JSON file (default: built-in set)")
    sp.add_argument("--seed", type=int, default=default_seed())
    sp.set_defaults(fn=cmd_op)

    sp = sub.add_parser("check", help="run the verification harness")
    sp.add_argument("--all", action="store_true", help="run the full battery")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=default_seed())
    sp.add_argument("--skip-bp", action="store_true", help="skip the Busemann-Petty sandwich")
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("recover", help="round-trip coefficient recovery")
    sp.add_argument("--family", choices=("d1", "np1"), required=True)
    sp.add_argument("--via", required=True, help='spec text "d1:1,0,0,0" or a file containing it')
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--seed", type=int, default=default_seed())
    sp.set_defaults(fn=cmd_recover)

    sp = sub.add_parser("demo", help="counterexample and corollary demos")
    sp.add_argument("which", choices=("independence", "corollary"))
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=default_seed())
    sp.add_argument("--budget", type=int, default=300, help="direction budget for the corollary sandwich")
    sp.set_defaults(fn=cmd_demo)

    sp = sub.add_parser("sample", help="CSV support samples for external plotting")
    sp.add_argument("--body", required=True)
    sp.add_argument("--op", default="MomentBody")
    sp.add_argument("--grid", type=int, default=64)
    sp.set_defaults(fn=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "op" and bool(args.name) == bool(args.spec):
        parser.error("op needs exactly one of --name or --spec")
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return IO_ERROR
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
