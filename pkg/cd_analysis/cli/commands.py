"""
Subcommands of the command line. Each handler takes the parsed arguments and returns the rows
to print; the engine raises, main.run turns errors into exit codes.
"""
from __future__ import annotations

import argparse
from dataclasses import replace
import json
from typing import Any, Callable


from .Expression import Expression
from .selftest import SUITES, run_selftest
from cd_analysis.algebra.CdNumber import CdNumber
from cd_analysis.contour.Path import Path
from cd_analysis.contour.argument import delta_arg_n
from cd_analysis.contour.integral import line_integral, residue_n
from cd_analysis.exceptions import CdAnalysisError
from cd_analysis.qcx.ExtensionSpec import ExtensionSpec
from cd_analysis.qcx.extension import eval_extension
from cd_analysis.special.ZetaRep import REPRESENTATIONS, ZetaRep
from cd_analysis.special.scan import critical_line_scan
from cd_analysis.special.zeta import VIAS, zeta
from cd_analysis.xform.BromwichLine import BromwichLine
from cd_analysis.xform.Original import Original
from cd_analysis.xform.TransformSpec import KERNELS, TransformSpec
from cd_analysis.xform.checks import quasi_regularity_check, symmetry_report
from cd_analysis.xform.inversion import INVERSION_TOL, invert, invert_mellin
from cd_analysis.xform.transforms import image, transform
from config.config import BISECTION_WIDTH, IMAG_CUTOFF, INITIAL_TRUNCATION, LINE_INTEGRAL_TOL, QUAD_TOL
from logger.logger import Logger
from utils.shared.decorators.try_except import try_except
logger = Logger(logger_name=__name__)


SUPPORTS = {"laplace": "right", "laplace2": "two_sided", "mellin": "multiplicative"}


class UsageError(Exception):
    """Bad command-line input that argparse itself cannot catch."""


class _Parser(argparse.ArgumentParser):

    def error(self, message: str):
        raise UsageError(message)


def coefficients(value: Any, level: int) -> list[float]:
    """Coefficients at the command's level; entries below IMAG_CUTOFF relative to |value| print as 0."""
    value = CdNumber.coerce(value)
    value = value.embed(max(value.level, level))
    cutoff = IMAG_CUTOFF * max(1.0, value.norm())
    return [0.0 if abs(c) <= cutoff else float(c) for c in value.coeffs]


def _point(text: str, args: argparse.Namespace) -> CdNumber:
    return Expression.constant(text, args.level)


def _path(text: str) -> Path:
    try:
        return Path.from_json(text)
    except (ValueError, KeyError, TypeError, IndexError) as e:
        raise UsageError(f"Malformed path JSON: {e}") from e


def _spec(args: argparse.Namespace, q: str = "0") -> TransformSpec:
    return TransformSpec(kernel=args.kernel, level=args.level, q=_point(q, args), tol=args.tol or QUAD_TOL)


# Handlers

@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_eval(args: argparse.Namespace) -> list[dict]:
    expr = Expression(args.expr, level=args.level)
    values = {name: _point(getattr(args, name), args) for name in ("t", "z", "p", "y") if getattr(args, name) is not None}
    return [{"value": coefficients(expr.evaluate(values, args.branch), args.level)}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_extend(args: argparse.Namespace) -> list[dict]:
    seed = Expression(args.seed, variables=("z",), level=args.level).function("z", args.branch)
    spec = ExtensionSpec.from_callable(lambda y: seed(CdNumber.from_complex(y)).to_complex(), level=args.level,
                                       center=args.center, spherical=args.spherical, name=args.seed)
    return [{"value": coefficients(eval_extension(spec, _point(args.z, args)), args.level)}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_integral(args: argparse.Namespace) -> list[dict]:
    f = Expression(args.f, variables=("z",), level=args.level).function("z", args.branch)
    value = line_integral(f, _path(args.path), args.tol or LINE_INTEGRAL_TOL, order=args.order)
    return [{"value": coefficients(value, args.level)}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_residue(args: argparse.Namespace) -> list[dict]:
    y = _point(args.y, args)
    f = Expression(args.f, variables=("z", "y"), level=args.level).function("z", args.branch, y=y)
    a = [_point(text, args) for text in args.a]
    if args.n is not None and args.n != len(a) + 1:
        raise UsageError(f"An {args.n}-residue needs {args.n - 1} values of --a, got {len(a)}")
    value = residue_n(f, y, _point(args.axis, args), args.rho, a, tol=args.tol or LINE_INTEGRAL_TOL)
    return [{"res": coefficients(value, args.level)}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_argn(args: argparse.Namespace) -> list[dict]:
    f = Expression(args.f, variables=("z",), level=args.level).function("z", args.branch)
    a = [_point(text, args) for text in args.a]
    value = delta_arg_n(f, _path(args.path), a, center=_point(args.center, args), radius=args.radius)
    return [{"delta_arg": coefficients(value, args.level)}]


def _original(args: argparse.Namespace, support: str) -> Original:
    f = Expression(args.f, variables=("t",), level=args.level).function("t", args.branch)
    return Original(func=f, s0=args.s0, s1=args.s1, support=support, bound=args.bound, name=args.f)


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_transform(args: argparse.Namespace) -> list[dict]:
    orig = _original(args, SUPPORTS[args.kind])
    value = transform(orig, _point(args.p, args), _spec(args, args.q))
    return [{"value": coefficients(value, args.level)}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_invert(args: argparse.Namespace) -> list[dict]:
    F = Expression(args.F, variables=("p",), level=args.level).function("p", args.branch)
    line = BromwichLine(args.a, _point(args.axis, args), args.truncation)
    spec = _spec(args, args.q)
    if args.kind == "mellin":
        value = invert_mellin(F, args.t, line, spec, tol=args.tol or INVERSION_TOL)
    else:
        value = invert(F, args.t, line, spec, tol=args.tol or INVERSION_TOL)
    return [{"value": coefficients(value, args.level)}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_symmetry(args: argparse.Namespace) -> list[dict]:
    orig = _original(args, args.support)
    spec = _spec(args)
    probes = [_point(text, args) for text in args.probes.split(";") if text.strip()]
    if not probes:
        raise UsageError("--probes needs at least one point")
    row = symmetry_report(image(orig, spec), probes, spec).to_json()
    if args.quasi:
        row["quasi_regularity"] = quasi_regularity_check(orig, spec, probes)
    return [row]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_zeta(args: argparse.Namespace) -> list[dict]:
    z = _point(args.z, args)
    rep = ZetaRep.coerce(args.rep, z.re)
    if args.tol:
        rep = replace(rep, tol=args.tol)
    return [{"value": coefficients(zeta(z, rep, args.via), args.level), "representation": rep.representation}]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_scan(args: argparse.Namespace) -> list[dict]:
    brackets = critical_line_scan(args.t_lo, args.t_hi, args.step, axis=_point(args.axis, args),
                                  width=args.tol or BISECTION_WIDTH, save=args.save)
    return [b.to_json() for b in brackets]


@try_except(exception=[CdAnalysisError], raise_exception=True, logger=logger)
def handle_selftest(args: argparse.Namespace) -> list[dict]:
    return [check.to_json() for check in run_selftest(args.suite or None)]


HANDLERS: dict[str, Callable[[argparse.Namespace], list[dict]]] = {
    "eval": handle_eval,
    "extend": handle_extend,
    "integral": handle_integral,
    "residue": handle_residue,
    "argn": handle_argn,
    "transform": handle_transform,
    "invert": handle_invert,
    "symmetry": handle_symmetry,
    "zeta": handle_zeta,
    "scan": handle_scan,
    "selftest": handle_selftest,
}


def _add_original_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--f", required=True, help="original f(t)")
    parser.add_argument("--s0", type=float, default=0.0, help="growth exponent for t >= 0")
    parser.add_argument("--s1", type=float, default=float("inf"), help="growth exponent for t < 0")
    parser.add_argument("--bound", type=float, default=1.0, help="growth constant C")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="tolerance passed to every numeric kernel")
    common.add_argument("--level", type=int, choices=(2, 3), default=2)
    common.add_argument("--kernel", choices=KERNELS, default="linear")
    common.add_argument("--branch", type=int, default=0)
    common.add_argument("--out", choices=("json", "csv"), default="json")
    common.add_argument("--config", default=None, help="YAML file overriding NUMERICS, CONTOUR, TRANSFORM and SPECIAL")

    parser = _Parser(prog="cd_analysis", description="Analysis over the complex numbers, quaternions and octonions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula")
    p.add_argument("--expr", required=True)
    for name in ("t", "z", "p", "y"):
        p.add_argument(f"--{name}", default=None)

    p = sub.add_parser("extend", parents=[common], help="quasi-conformal extension of a complex seed")
    p.add_argument("--seed", required=True, help="seed g(z) with real Taylor coefficients")
    p.add_argument("--z", required=True)
    p.add_argument("--center", type=float, default=0.0)
    p.add_argument("--spherical", action="store_true")

    p = sub.add_parser("integral", parents=[common], help="line integral along a JSON path")
    p.add_argument("--f", required=True)
    p.add_argument("--path", required=True)
    p.add_argument("--order", choices=("right", "left"), default="right")

    p = sub.add_parser("residue", parents=[common], help="residue or n-residue at y along an axis")
    p.add_argument("--f", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--axis", default="i1")
    p.add_argument("--rho", type=float, default=0.5)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--a", action="append", default=[])

    p = sub.add_parser("argn", parents=[common], help="change of the n-th argument along a path")
    p.add_argument("--f", required=True)
    p.add_argument("--path", required=True)
    p.add_argument("--a", action="append", default=[])
    p.add_argument("--center", default="0")
    p.add_argument("--radius", type=float, default=1.0)

    p = sub.add_parser("transform", parents=[common], help="Laplace and Mellin transforms")
    p.add_argument("kind", choices=tuple(SUPPORTS))
    _add_original_flags(p)
    p.add_argument("--p", required=True)
    p.add_argument("--q", default="0")

    p = sub.add_parser("invert", parents=[common], help="invert an image along a line a + S tau")
    p.add_argument("kind", choices=("laplace", "mellin"))
    p.add_argument("--F", required=True)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--axis", default="i1")
    p.add_argument("--q", default="0")
    p.add_argument("--truncation", type=float, default=INITIAL_TRUNCATION)

    p = sub.add_parser("symmetry", parents=[common], help="symmetry residuals of an image")
    _add_original_flags(p)
    p.add_argument("--support", choices=tuple(SUPPORTS.values()), default="right")
    p.add_argument("--probes", required=True, help="points separated by ';'")
    p.add_argument("--quasi", action="store_true", help="also report the quasi-regularity residual")

    p = sub.add_parser("zeta", parents=[common], help="Riemann zeta")
    p.add_argument("--z", required=True)
    p.add_argument("--rep", choices=("auto",) + REPRESENTATIONS, default="auto")
    p.add_argument("--via", choices=VIAS, default="plane")

    p = sub.add_parser("scan", parents=[common], help="zero brackets on the critical line")
    p.add_argument("--t-lo", dest="t_lo", type=float, required=True)
    p.add_argument("--t-hi", dest="t_hi", type=float, required=True)
    p.add_argument("--step", type=float, default=0.25)
    p.add_argument("--axis", default="i1")
    p.add_argument("--save", action="store_true")

    p = sub.add_parser("selftest", parents=[common], help="acceptance checks")
    p.add_argument("--suite", action="append", choices=tuple(SUITES), default=[])
    return parser


def to_json_line(row: dict) -> str:
    return json.dumps(row, separators=(",", ":"))
