"""Independent numerical evaluation of the defining transform integral

    integral_0^inf  x * exp(-x^2 s^2) * f(x) dx

used to validate every symbolic result in this package.  The integrand is
truncated at a cutoff X* chosen from an analytic bound on the tail of the
term-wise envelope C x**(2k+1) exp((rho - s^2) x^2); the finite interval is
then handled by adaptive Gauss-Kronrod quadrature (scipy's QUADPACK).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .algebra import GExpr
from .errors import DivergentIntegralError, QuadratureFailureError


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_refinements: int = 60
    tail_epsilon: float = 1e-16

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol", "tail_epsilon"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be strictly positive")
        if not isinstance(self.max_refinements, int) or self.max_refinements < 1:
            raise ValueError("max_refinements must be an integer >= 1")


DEFAULT_CONFIG = QuadratureConfig()


def integrate_interval(fn: Callable[[float], float], lo: float, hi: float,
                       cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Adaptive quadrature of fn over [lo, hi] at the config tolerances.

    QUADPACK's non-convergence diagnostics (budget exhausted, roundoff
    limits, bad behavior) all surface as QuadratureFailureError.
    """
    if hi <= lo:
        return 0.0
    from scipy.integrate import quad  # deferred: saves ~0.8 s of CLI startup

    result = quad(
        fn, lo, hi,
        epsabs=cfg.abs_tol, epsrel=cfg.rel_tol,
        limit=cfg.max_refinements, full_output=1,
    )
    if len(result) > 3:
        raise QuadratureFailureError(
            f"adaptive refinement did not converge on [{lo}, {hi}]: {result[3]}"
        )
    return result[0]


def _tail_bound(envelope: list[tuple[float, int, float]], x: float) -> float:
    """Exact tail integral of the envelope beyond x.

    For one envelope term C u**(2k+1) exp(-beta u^2), substituting u^2 gives
    integral_x^inf = C * k!/(2 beta^(k+1)) * exp(-beta x^2)
                       * sum_{j<=k} (beta x^2)^j / j!.
    """
    total = 0.0
    for coeff, k, beta in envelope:
        z = beta * x * x
        if z > 745.0:  # exp underflows to 0 beyond this; the bound is 0
            continue
        partial = sum(z ** j / math.factorial(j) for j in range(k + 1))
        total += coeff * math.factorial(k) / (2 * beta ** (k + 1)) * math.exp(-z) * partial
    return total


def truncation_cutoff(envelope: list[tuple[float, int, float]], tail_epsilon: float) -> float:
    """Smallest cutoff (up to bisection width) with envelope tail below
    tail_epsilon, found by doubling then bisection."""
    x = 1.0
    doubles = 0
    while _tail_bound(envelope, x) >= tail_epsilon:
        x *= 2.0
        doubles += 1
        if doubles > 200:
            raise QuadratureFailureError("tail bound does not fall below tail_epsilon")
    lo, hi = x / 2.0, x
    if doubles == 0:
        lo = 0.0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if _tail_bound(envelope, mid) < tail_epsilon:
            hi = mid
        else:
            lo = mid
    return hi


def l2_quadrature(
    f: Union[GExpr, Callable[[float], float]],
    s: float,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
    *,
    growth_rate: Optional[float] = None,
    envelope_coeff: float = 1.0,
) -> float:
    """Numerically evaluate the transform of f at s > 0.

    For a GExpr the growth rate and envelope come from its terms; for a bare
    evaluator callers must declare `growth_rate` rho (and optionally the
    envelope constant C) bounding |f| <= C exp(rho x^2).  The integral
    diverges unless s**2 > rho.
    """
    if s <= 0:
        raise ValueError("s must be strictly positive")
    sigma = s * s

    if isinstance(f, GExpr):
        if not f.terms:
            return 0.0
        rho = float(f.max_rate())
        if sigma <= rho:
            raise DivergentIntegralError(
                f"s^2 = {sigma} does not exceed the Gaussian rate {rho}"
            )
        envelope = [
            (abs(float(t.c)), t.k, sigma - float(t.a)) for t in f.terms
        ]
        pieces = [(float(t.c), t.k, float(t.a) - sigma) for t in f.terms]

        def integrand(x: float) -> float:
            return sum(c * x ** (2 * k + 1) * math.exp(g * x * x) for c, k, g in pieces)

    else:
        if growth_rate is None:
            raise ValueError("a bare evaluator needs a declared growth_rate rho")
        rho = float(growth_rate)
        if sigma <= rho:
            raise DivergentIntegralError(
                f"s^2 = {sigma} does not exceed the declared rate {rho}"
            )
        envelope = [(float(envelope_coeff), 0, sigma - rho)]

        def integrand(x: float) -> float:
            return x * math.exp(-sigma * x * x) * f(x)

    cutoff = truncation_cutoff(envelope, cfg.tail_epsilon)
    return integrate_interval(integrand, 0.0, cutoff, cfg)
