"""Command-line front end.

Every core operation is reachable as a subcommand; expressions travel as
the JSON documents of :mod:`l2transform.serialization` ("-" reads standard
input).  Success prints a JSON result on stdout and exits 0.  Failures
print {"code", "message"} on stderr and exit 2 for schema or precondition
errors, 3 for numerical failures, 4 for impulse content.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction

from . import convolution, growth, pde, quadrature, serialization
from . import transform as tf
from .errors import (
    DivergentIntegralError,
    GridDomainError,
    ImpulseContentError,
    NonPositiveSampleError,
    QuadratureFailureError,
    SchemaError,
)
from .serialization import (
    loads,
    object_to_document,
    render_json,
    rational_from_string,
    rational_to_string,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_typed(path: str, kind: str):
    obj = loads(_read_source(path))
    got = serialization.object_to_document(obj)["kind"]
    if got != kind:
        raise SchemaError(f"expected a {kind} document, got {got}", "$.kind")
    return obj


def _linspace(lo: float, hi: float, n: int) -> list[float]:
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def _parse_samples(text: str) -> list[float]:
    try:
        lo, hi, n = text.split(",")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError as exc:
        raise _UsageError(f"samples must be 'x0,x1,count', got {text!r}") from exc
    if n < 1 or hi <= lo:
        raise _UsageError("samples need x1 > x0 and count >= 1")
    return _linspace(lo, hi, n)


def _parse_grid(text: str):
    parts = text.split(",")
    try:
        if len(parts) != 6:
            raise ValueError
        x0, x1, t0, t1 = float(parts[0]), float(parts[1]), float(parts[3]), float(parts[4])
        nx, nt = int(parts[2]), int(parts[5])
    except ValueError as exc:
        raise _UsageError(f"grid must be 'x0,x1,nx,t0,t1,nt', got {text!r}") from exc
    return x0, x1, nx, t0, t1, nt


_FAMILIES = {f.value: f for f in pde.Family}
_CONVENTIONS = {c.value: c for c in pde.Convention}


def _build_solution(args) -> pde.SeriesSolution:
    family = _FAMILIES[args.family]
    convention = _CONVENTIONS[args.convention]
    depth = args.n
    if family is pde.Family.A:
        if args.ratio is not None:
            raise _UsageError("family A takes no --ratio")
        return pde.solve_family_a(depth)
    if args.ratio is None:
        raise _UsageError(f"family {family.value} needs --ratio <lpoly.json>")
    ratio = _load_typed(args.ratio, "lpoly")
    if family is pde.Family.B:
        return pde.solve_family_b(ratio, depth, convention)
    if family is pde.Family.C:
        return pde.solve_family_c(ratio, depth, convention)
    return pde.solve_family_d(ratio, depth)


def _solution_terms(sol: pde.SeriesSolution) -> list:
    fam = sol.problem.family
    if fam is pde.Family.A:
        return [
            {"n": n, "c": rational_to_string(c), "x_half_degree": n, "t_power": -2 * n}
            for n, c in enumerate(sol.coeffs)
        ]
    if fam is pde.Family.B:
        if sol.problem.convention is pde.Convention.DERIVED:
            return [
                {
                    "n": n,
                    "c": rational_to_string(Fraction(-1, 2) ** n / _fact(n) ** 2),
                    "x_half_degree": n,
                    "mm_power": n,
                }
                for n in range(sol.depth + 1)
            ]
        return [
            {
                "p": p,
                "mm_power": p,
                "monomials": [
                    {
                        "c": rational_to_string(Fraction(1, _fact(i) ** 2 * 2 ** i * _fact(p - i))),
                        "x_half_degree": i,
                    }
                    for i in range(p + 1)
                ],
            }
            for p in range(sol.depth + 1)
        ]
    if fam is pde.Family.C:
        out = []
        for n in range(1, sol.depth + 1):
            (term,) = sol.star_part(n).terms
            out.append({
                "n": n,
                "c": rational_to_string(Fraction(sol.sign) ** n * term.c / _fact(n)),
                "x_half_degree": term.k,
                "gauss_rate": rational_to_string(term.a),
                "hh_power": n,
            })
        return out
    return [{"form": "exp(-MM(t))"}]


def _fact(n: int) -> int:
    return math.factorial(n)


def _cmd_transform(args):
    return object_to_document(tf.forward(_load_typed(args.expr, "gexpr")))


def _cmd_invert(args):
    return object_to_document(tf.inverse(_load_typed(args.expr, "sexpr")))


def _cmd_convolve(args):
    f = _load_typed(args.f, "gexpr")
    g = _load_typed(args.g, "gexpr")
    return object_to_document(convolution.convolve_symbolic(f, g))


def _cmd_starpow(args):
    f = _load_typed(args.f, "gexpr")
    if args.n < 1:
        raise _UsageError("--n must be >= 1")
    return object_to_document(convolution.star_power(f, args.n))


def _cmd_quad(args):
    f = _load_typed(args.expr, "gexpr")
    value = quadrature.l2_quadrature(f, args.s)
    return {"kind": "quadrature", "s": args.s, "sigma": args.s * args.s, "value": value}


def _cmd_solve(args):
    sol = _build_solution(args)
    if args.freeze_t is not None:
        t0 = rational_from_string(args.freeze_t, "--freeze-t")
        return object_to_document(pde.profile_gexpr(sol, t0))
    ratio = getattr(sol, "ratio", None)
    anti = getattr(sol, "anti", None)
    return {
        "kind": "solution",
        "family": sol.problem.family.value,
        "convention": sol.problem.convention.value if sol.problem.convention else None,
        "depth": sol.depth,
        "equation": sol.problem.describe(),
        "ratio": object_to_document(ratio) if ratio is not None else None,
        "ratio_antiderivative": object_to_document(anti) if anti is not None else None,
        "terms": _solution_terms(sol),
        "metadata": sol.metadata,
    }


def _cmd_residual(args):
    sol = _build_solution(args)
    x0, x1, nx, t0, t1, nt = _parse_grid(args.grid)
    grid = pde.default_grid(x0, x1, nx, t0, t1, nt)
    report = pde.residual(sol.problem, sol, grid)
    bound = pde.truncation_bound(sol, x1, (t0, t1))
    return {
        "kind": "residual_report",
        "family": report.family.value,
        "convention": report.convention.value if report.convention else None,
        "depth": report.depth,
        "equation": sol.problem.describe(),
        "grid": {"x_lo": x0, "x_hi": x1, "nx": nx,
                 "t_lo": t0, "t_hi": t1, "nt": nt, "spacing": "log"},
        "points": [
            {"x": x, "t": t, "residual": r, "fd_residual": fr}
            for (x, t), r, fr in zip(report.points, report.exact, report.finite_difference)
        ],
        "max_abs": report.max_abs,
        "fd_max_deviation": report.fd_max_deviation,
        "truncation_bound": bound,
        "metadata": report.metadata,
    }


def _growth_flag(value):
    return "unknown" if value is None else value


def _cmd_classify(args):
    e = _load_typed(args.expr, "gexpr")
    exact = growth.classify_exact(e)
    out = {
        "kind": "growth_report",
        "exact_rate": rational_to_string(exact.exact_rate),
        "is_exponential_order": exact.is_exponential_order,
        "is_exp_squared_order": exact.is_exp_squared_order,
    }
    if args.samples:
        est = growth.estimate_rate(e, _parse_samples(args.samples))
        out["estimated_rate"] = est.estimated_rate
        out["r_squared"] = est.r_squared
        out["estimate_is_exponential_order"] = _growth_flag(est.is_exponential_order)
        out["estimate_is_exp_squared_order"] = _growth_flag(est.is_exp_squared_order)
    return out


def _cmd_bound_check(args):
    f = _load_typed(args.f, "gexpr")
    g = _load_typed(args.g, "gexpr")
    xs = _parse_samples(args.samples)
    holds = growth.check_bound(f, g, xs)
    return {"kind": "bound_check", "holds": holds,
            "samples": {"x_lo": xs[0], "x_hi": xs[-1], "count": len(xs)}}


def _build_parser() -> _Parser:
    parser = _Parser(prog="l2t", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="forward transform of a gexpr document")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("invert", help="inverse transform of an sexpr document")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_invert)

    p = sub.add_parser("convolve", help="symbolic convolution of two gexpr documents")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(handler=_cmd_convolve)

    p = sub.add_parser("starpow", help="n-fold convolution power")
    p.add_argument("f")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_starpow)

    p = sub.add_parser("quad", help="numeric transform integral at s")
    p.add_argument("expr")
    p.add_argument("--s", type=float, required=True)
    p.set_defaults(handler=_cmd_quad)

    for name, handler in (("solve", _cmd_solve), ("residual", _cmd_residual)):
        p = sub.add_parser(name)
        p.add_argument("--family", choices=sorted(_FAMILIES), required=True)
        p.add_argument("--ratio", default=None, help="lpoly.json coefficient ratio")
        p.add_argument("--n", type=int, default=40, help="truncation depth")
        p.add_argument("--convention", choices=sorted(_CONVENTIONS), default="derived")
        if name == "solve":
            p.add_argument("--freeze-t", default=None, metavar="T",
                           help="emit the exact x-profile gexpr at rational t = T")
        else:
            p.add_argument("--grid", default="0.1,2,10,0.5,2,10",
                           metavar="x0,x1,nx,t0,t1,nt")
        p.set_defaults(handler=handler)

    p = sub.add_parser("classify", help="growth-order classification of a gexpr")
    p.add_argument("expr")
    p.add_argument("--samples", default=None, metavar="x0,x1,count",
                   help="also run the sampled-rate estimate")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("bound-check", help="pointwise f <= g on a sample range")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--samples", default="0.5,4,40", metavar="x0,x1,count")
    p.set_defaults(handler=_cmd_bound_check)

    return parser


def _fail(code: int, message: str) -> int:
    sys.stderr.write(render_json({"code": code, "message": message}) + "\n")
    return code


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.handler(args)
    except (_UsageError, SchemaError, ValueError, GridDomainError,
            NonPositiveSampleError, OSError) as exc:
        return _fail(2, str(exc))
    except (DivergentIntegralError, QuadratureFailureError, OverflowError) as exc:
        return _fail(3, f"{type(exc).__name__}: {exc}")
    except ImpulseContentError as exc:
        return _fail(4, str(exc))
    sys.stdout.write(render_json(payload) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
