"""Command-line interface.

Subcommands:
  eval       evaluate the bump function at a point
  ft         Fourier transform at one k (numeric, asymptotic, or both)
  sweep      numeric-vs-asymptotic comparison over a k grid (CSV/JSON)
  fit        decay-law fit over a previously emitted sweep file
  normalize  int_0^1 f dx
  saddle     saddle-point diagnostics at one k, as JSON

All numeric output carries 17 significant digits.  Exit codes: 0 on
success, 1 on quadrature non-convergence, 2 on invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bump import BumpParams, eval_bump
from .harness import emit, fit_decay, load_records, normalization, run_sweep
from .oscquad import fourier_transform_numeric
from .saddle import asymptotic_ft, saddle_data


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, default=2.0, help="exponent order, > 1")
    p.add_argument("--beta", type=float, default=1.0, help="strength, > 0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bumpft",
        description="Fourier transforms of smooth bump functions: "
        "oscillatory quadrature vs saddle-point asymptotics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate f_{alpha,beta}(x)")
    _add_params(p)
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("ft", help="Fourier transform at one frequency")
    _add_params(p)
    p.add_argument("--k", type=float, required=True)
    p.add_argument(
        "--method", choices=["numeric", "asymptotic", "both"], default="both"
    )
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("sweep", help="compare both methods over a k grid")
    _add_params(p)
    p.add_argument("--kmin", type=float, default=0.5)
    p.add_argument("--kmax", type=float, default=150.0)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--spacing", choices=["linear", "log"], default="linear")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("fit", help="fit the decay law to a sweep file")
    p.add_argument("--in", dest="infile", required=True, help="sweep CSV/JSON path")
    p.add_argument("--use", choices=["numeric", "asymptotic"], default="numeric")

    p = sub.add_parser("normalize", help="normalization integral of f")
    _add_params(p)
    p.add_argument("--tol", type=float, default=1e-12)

    p = sub.add_parser("saddle", help="saddle-point diagnostics as JSON")
    _add_params(p)
    p.add_argument("--k", type=float, required=True)

    return parser


def _complex_dict(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _run(args: argparse.Namespace) -> int:
    if args.command == "eval":
        params = BumpParams(args.alpha, args.beta)
        print(_fmt(eval_bump(params, args.x)))
        return 0

    if args.command == "ft":
        params = BumpParams(args.alpha, args.beta)
        code = 0
        if args.method in ("numeric", "both"):
            quad = fourier_transform_numeric(params, args.k, args.tol)
            if not quad.converged:
                print(
                    f"warning: quadrature did not converge "
                    f"(abs_error={quad.abs_error:.3e})",
                    file=sys.stderr,
                )
                code = 1
            if args.method == "both":
                print(f"numeric {_fmt(quad.value)}")
            else:
                print(_fmt(quad.value))
        if args.method in ("asymptotic", "both"):
            value = asymptotic_ft(params, args.k)
            if args.method == "both":
                print(f"asymptotic {_fmt(value)}")
            else:
                print(_fmt(value))
        return code

    if args.command == "sweep":
        params = BumpParams(args.alpha, args.beta)
        records = run_sweep(
            params, args.kmin, args.kmax, args.points, args.spacing, args.tol
        )
        emit(records, format=args.format, destination=args.out)
        return 0

    if args.command == "fit":
        records = load_records(args.infile)
        fit = fit_decay(records, use=args.use)
        print(
            json.dumps(
                {
                    "p_exponent": fit.p_exponent,
                    "c_root": fit.c_root,
                    "log_amplitude": fit.log_amplitude,
                    "residual_rms": fit.residual_rms,
                },
                indent=2,
            )
        )
        return 0

    if args.command == "normalize":
        params = BumpParams(args.alpha, args.beta)
        print(_fmt(normalization(params, args.tol)))
        return 0

    if args.command == "saddle":
        params = BumpParams(args.alpha, args.beta)
        data = saddle_data(params, args.k)
        print(
            json.dumps(
                {
                    "t0": _complex_dict(data.t0),
                    "g_at_t0": _complex_dict(data.g_at_t0),
                    "g2_at_t0": _complex_dict(data.g2_at_t0),
                    "a_coeff": data.a_coeff,
                    "k": data.k,
                },
                indent=2,
            )
        )
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
