"""Command-line front end: parse symbol expressions, run engine operations,
emit JSON reports.

Exit codes: 0 on success, 2 on certified rejection or invalid input, 3 on
numerical-ambiguity errors (boundary classification, escaped roots,
truncation instability).

JSON schema: complex numbers as [re, im] pairs; polynomials as ascending
coefficient lists; Blaschke products as {constant, zeros}; every report
echoes the tolerances it was computed with.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings

import numpy as np

from . import __version__
from .blaschke import BlaschkeProduct, blaschke_from_rational
from .errors import (
    BoundaryAmbiguous,
    ParseError,
    RootEscapedDisk,
    StabilityWarning,
    ToepkernError,
)
from .expr import parse_symbol
from .frostman import (
    Perturbation,
    crofoot_shift_rep,
    frostman_kernel_rep,
    gamma_of,
    generalized_shift,
    isometric_condition_check,
    minimal_alpha,
)
from .hardy import inner_outer
from .kernel_engine import (
    KernelRep,
    RationalSymbol,
    Rejection,
    kernel_of_rational_symbol,
    maximal_divisible_by_B,
    verify_maximal,
)
from .oracle import check_prediction
from .ratfun import RationalFunction
from .representations import represent_blaschke

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_AMBIGUOUS = 3

_AMBIGUOUS = (BoundaryAmbiguous, RootEscapedDisk)


# -- JSON encoding -------------------------------------------------------

def _c(z):
    z = complex(z)
    return [z.real, z.imag]


def _poly(p):
    return [_c(c) for c in p.coeffs]


def encode(obj):
    if isinstance(obj, complex):
        return _c(obj)
    if isinstance(obj, RationalFunction):
        return {"num": _poly(obj.num), "den": _poly(obj.den)}
    if isinstance(obj, BlaschkeProduct):
        return {"constant": _c(obj.constant), "zeros": [_c(z) for z in obj.zeros]}
    if isinstance(obj, KernelRep):
        return {
            "multiplier": encode(obj.multiplier),
            "theta": encode(obj.theta),
            "isometric": obj.isometric,
            "dim": obj.dim,
        }
    raise TypeError("cannot encode %r" % type(obj))


def _tolerances(args):
    return {"tol": args.tol, "samples": args.samples, "seed": args.seed}


def _parse_complex(text):
    text = text.strip().replace("i", "j")
    return complex(text)


def _parse_points(text):
    return [_parse_complex(part) for part in text.split(",") if part.strip()]


# -- command implementations ---------------------------------------------

def _cmd_kernel(args):
    g = parse_symbol(args.expr)
    result = kernel_of_rational_symbol(g, tol_boundary=args.tol)
    report = {
        "command": "kernel",
        "expr": args.expr,
        "trivial": result.trivial,
        "dim": result.dim,
        "counts": result.counts,
    }
    if not result.trivial:
        report["multiplier"] = encode(result.rep.multiplier)
        report["theta"] = encode(result.rep.theta)
        report["containing"] = encode(result.containing)
        report["containing_zeros"] = [_c(z) for z in result.containing.zeros]
    return report, EXIT_OK


def _cmd_minmodel(args):
    g = parse_symbol(args.expr)
    result = kernel_of_rational_symbol(g, tol_boundary=args.tol)
    report = {"command": "minmodel", "expr": args.expr, "trivial": result.trivial}
    if result.trivial:
        report["note"] = "kernel is trivial; every model space contains it"
        return report, EXIT_OK
    report["dim"] = result.dim
    report["containing"] = encode(result.containing)
    report["containing_zeros"] = [_c(z) for z in result.containing.zeros]
    return report, EXIT_OK


def _cmd_maxfunc(args):
    g = parse_symbol(args.expr)
    symbol = RationalSymbol(g)
    result = kernel_of_rational_symbol(symbol, tol_boundary=args.tol)
    report = {"command": "maxfunc", "expr": args.expr}
    if result.trivial:
        report["rejected"] = "kernel is trivial; no maximal function exists"
        return report, EXIT_REJECTED
    rep = result.rep
    z_top = RationalFunction([0.0] * (rep.dim - 1) + [1.0])
    candidate = rep.multiplier * z_top
    cert = verify_maximal(candidate, symbol)
    if isinstance(cert, Rejection):
        report["rejected"] = cert.reason
        return report, EXIT_REJECTED
    report["maximal"] = encode(cert.f)
    report["outer_witness"] = encode(cert.O_witness)
    if args.vanish:
        lams = _parse_points(args.vanish)
        fm = inner_outer(cert.f)
        cascade = maximal_divisible_by_B(fm, lams)
        cert_big = verify_maximal(cascade.F_B, symbol)
        if isinstance(cert_big, Rejection):
            report["rejected"] = "vanishing construction failed: " + cert_big.reason
            return report, EXIT_REJECTED
        report["vanish"] = {
            "points": [_c(l) for l in lams],
            "maximal": encode(cascade.F_B),
            "subkernel_maximal": encode(cascade.f_B),
            "inner_factor": encode(cascade.I_N),
            "outer_factor": encode(cascade.O_N),
        }
    return report, EXIT_OK


def _cmd_represent(args):
    theta = blaschke_from_rational(parse_symbol(args.theta))
    lams = _parse_points(args.B)
    reps = represent_blaschke(theta, lams)
    chosen = {"plain": reps.plain, "isometric": reps.isometric, "hayashi": reps.hayashi}[
        args.mode
    ]
    report = {
        "command": "represent",
        "theta": args.theta,
        "B": args.B,
        "mode": args.mode,
        "rep": encode(chosen),
    }
    return report, EXIT_OK


def _cmd_frostman(args):
    theta = blaschke_from_rational(parse_symbol(args.theta))
    if args.h is not None:
        h = parse_symbol(args.h)
    elif args.C is not None and args.p is not None:
        alpha_fn = parse_symbol(args.alpha) if args.alpha else parse_symbol("z")
        h = RationalFunction([_parse_complex(args.C)]) - _parse_complex(args.p) * alpha_fn
    else:
        raise ToepkernError("frostman needs --h, or --C with --p")
    pert = Perturbation(theta=theta, h=h)
    rep = frostman_kernel_rep(pert)
    shift_fn = generalized_shift(pert)
    alpha = (
        blaschke_from_rational(parse_symbol(args.alpha))
        if args.alpha
        else minimal_alpha(h)
    )
    report = {
        "command": "frostman",
        "theta": args.theta,
        "h": args.h,
        "rep": encode(rep),
        "generalized_shift": encode(shift_fn),
        "alpha_used": encode(alpha),
    }
    gamma = gamma_of(pert, alpha)
    report["gamma"] = encode(gamma)
    if args.p is not None:
        p_val = _parse_complex(args.p)
        crep = crofoot_shift_rep(pert, alpha, p_val)
        report["crofoot_rep"] = encode(crep)
    if args.C is not None:
        report["isometric_condition"] = isometric_condition_check(
            pert, _parse_complex(args.C), n_samples=args.samples
        )
    return report, EXIT_OK


def _rep_basis_from_json(rep_json):
    mult = RationalFunction(
        [complex(a, b) for a, b in rep_json["multiplier"]["num"]],
        [complex(a, b) for a, b in rep_json["multiplier"]["den"]],
    )
    theta = BlaschkeProduct(
        complex(*rep_json["theta"]["constant"]),
        tuple(complex(a, b) for a, b in rep_json["theta"]["zeros"]),
    )
    return KernelRep(multiplier=mult, theta=theta, isometric=rep_json["isometric"])


def _cmd_verify(args):
    with open(args.result_file, "r", encoding="utf-8") as fh:
        stored = json.load(fh)
    payload = stored["result"] if "result" in stored else stored
    command = payload.get("command")
    report = {"command": "verify", "verifying": command, "oracle_size": args.oracle_size}
    if command in ("kernel", "maxfunc", "minmodel"):
        g = parse_symbol(payload["expr"])
        recomputed = kernel_of_rational_symbol(g, tol_boundary=args.tol)
        report["dim_stored"] = payload.get("dim", 0)
        report["dim_recomputed"] = recomputed.dim
        if recomputed.trivial:
            oracle = check_prediction(g, [], args.oracle_size)
            report["dim_oracle"] = oracle.dim_numeric
            report["agreed"] = (
                recomputed.dim == oracle.dim_numeric == report["dim_stored"]
            )
        else:
            oracle = check_prediction(g, recomputed.rep.basis(), args.oracle_size)
            report["dim_oracle"] = oracle.dim_numeric
            report["angle"] = oracle.angle
            report["M_used"] = oracle.M_used
            report["agreed"] = bool(
                oracle.agreed and recomputed.dim == report["dim_stored"]
            )
    elif command == "represent":
        theta = blaschke_from_rational(parse_symbol(payload["theta"]))
        lams = _parse_points(payload["B"])
        rep = _rep_basis_from_json(payload["rep"])
        sym = represent_blaschke(theta, lams).symbol
        oracle = check_prediction(sym.to_rational(), rep.basis(), args.oracle_size)
        report["dim_oracle"] = oracle.dim_numeric
        report["angle"] = oracle.angle
        report["agreed"] = oracle.agreed
    elif command == "frostman":
        theta = blaschke_from_rational(parse_symbol(payload["theta"]))
        h = parse_symbol(payload["h"])
        pert = Perturbation(theta=theta, h=h)
        rep = _rep_basis_from_json(payload["rep"])
        oracle = check_prediction(
            pert.symbol().to_rational(), rep.basis(), args.oracle_size
        )
        report["dim_oracle"] = oracle.dim_numeric
        report["angle"] = oracle.angle
        report["agreed"] = oracle.agreed
    else:
        raise ToepkernError("cannot verify results of command %r" % command)
    return report, (EXIT_OK if report.get("agreed") else EXIT_REJECTED)


# -- driver ---------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="toepkern",
        description="Toeplitz kernels of rational symbols and their model space representations",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--tol", type=float, default=1e-8, help="boundary classification tolerance")
    parser.add_argument("--samples", type=int, default=2048, help="circle quadrature sample count")
    parser.add_argument("--seed", type=int, default=0, help="seed echoed into reports")
    parser.add_argument("--json", action="store_true", help="print the JSON report to stdout")
    parser.add_argument("--out", help="write the JSON report to a file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kernel", help="kernel of a rational symbol")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("minmodel", help="minimal model space containing the kernel")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_minmodel)

    p = sub.add_parser("maxfunc", help="a maximal function in the kernel")
    p.add_argument("expr")
    p.add_argument("--vanish", help="comma-separated points where the maximal function must vanish")
    p.set_defaults(func=_cmd_maxfunc)

    p = sub.add_parser("represent", help="representations of ker T_{bar(theta) B}")
    p.add_argument("--theta", required=True)
    p.add_argument("--B", required=True, help="comma-separated Blaschke zeros")
    p.add_argument("--mode", choices=("plain", "isometric", "hayashi"), default="plain")
    p.set_defaults(func=_cmd_represent)

    p = sub.add_parser("frostman", help="kernel of bar(theta) - h")
    p.add_argument("--theta", required=True)
    p.add_argument("--h")
    p.add_argument("--C")
    p.add_argument("--p")
    p.add_argument("--alpha")
    p.set_defaults(func=_cmd_frostman)

    p = sub.add_parser("verify", help="re-check a stored result against the oracle")
    p.add_argument("result_file")
    p.add_argument("--oracle-size", type=int, default=32)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.time()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", StabilityWarning)
            report, code = args.func(args)
    except _AMBIGUOUS as exc:
        _emit_error(args, exc, getattr(exc, "code", "ambiguous"))
        return EXIT_AMBIGUOUS
    except StabilityWarning as exc:
        _emit_error(args, exc, "stability_warning")
        return EXIT_AMBIGUOUS
    except ToepkernError as exc:
        _emit_error(args, exc, getattr(exc, "code", "error"))
        return EXIT_REJECTED
    report["tolerances"] = _tolerances(args)
    report["elapsed_s"] = round(time.time() - started, 6)
    text = json.dumps(report, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    if args.json or not args.out:
        print(text)
    return code


def _emit_error(args, exc, code):
    payload = json.dumps({"error": {"code": code, "message": str(exc)}}, indent=2)
    print(payload)
    print(str(exc), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
