"""Exact forward and inverse transform between the function algebra and
rational expressions in sigma = s**2.

The transform of c * x**(2k) * exp(a x^2) is c * k!/2 * (sigma - a)**-(k+1),
valid on sigma > a, so every image is a proper rational function of sigma
with rational poles.  Transform-domain expressions are finite sums of terms
c * (sigma - a)**(-m); the m = 0 case is a sigma-constant ("formal unit
impulse" content), which arises from the derivation identity and has no
function-valued inverse.

All arithmetic here is exact.  Products are re-expressed in canonical
partial-fraction form via residue-style Taylor-coefficient extraction at
each pole, so coefficients stay rational with no tolerances anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .algebra import GExpr, GTerm, RationalLike, as_rational
from .errors import ImpulseContentError


@dataclass(frozen=True)
class STerm:
    """One term c * (sigma - a)**(-m); m = 0 encodes the constant c."""

    c: Fraction
    a: Fraction
    m: int

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        object.__setattr__(self, "a", as_rational(self.a))
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError(f"multiplicity m must be a nonnegative integer, got {self.m!r}")


@dataclass(frozen=True)
class SExpr:
    """Canonical transform-domain expression.

    Terms are sorted by (a, m), like terms merged, zeros dropped.  Constant
    (m = 0) terms have their pole slot normalized to a = 0 so constants
    compare equal regardless of how they were produced.

    `region` records the validity half-line sigma > region for expressions
    produced by the forward transform; arithmetic keeps the max of the
    operands.  It is metadata and excluded from equality.
    """

    terms: tuple[STerm, ...] = ()
    region: Optional[Fraction] = field(default=None, compare=False)

    def __post_init__(self):
        merged: dict[tuple[Fraction, int], Fraction] = {}
        for t in self.terms:
            key = (Fraction(0) if t.m == 0 else t.a, t.m)
            merged[key] = merged.get(key, Fraction(0)) + t.c
        canon = tuple(
            STerm(c, a, m)
            for (a, m), c in sorted(merged.items())
            if c != 0
        )
        object.__setattr__(self, "terms", canon)

    def __add__(self, other: "SExpr") -> "SExpr":
        return add(self, other)

    def __sub__(self, other: "SExpr") -> "SExpr":
        return add(self, scale(other, Fraction(-1)))

    def __neg__(self) -> "SExpr":
        return scale(self, Fraction(-1))

    def __mul__(self, other: "SExpr") -> "SExpr":
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_proper(self) -> bool:
        """True when every term has m >= 1 (no constant content)."""
        return all(t.m >= 1 for t in self.terms)


def _combine_region(r1: Optional[Fraction], r2: Optional[Fraction]) -> Optional[Fraction]:
    if r1 is None:
        return r2
    if r2 is None:
        return r1
    return max(r1, r2)


def constant(c: RationalLike) -> SExpr:
    return SExpr((STerm(as_rational(c), Fraction(0), 0),))


def pole(c: RationalLike, a: RationalLike, m: int) -> SExpr:
    return SExpr((STerm(as_rational(c), as_rational(a), m),))


def add(s1: SExpr, s2: SExpr) -> SExpr:
    return SExpr(s1.terms + s2.terms, region=_combine_region(s1.region, s2.region))


def scale(s: SExpr, c: RationalLike) -> SExpr:
    c = as_rational(c)
    return SExpr(tuple(STerm(t.c * c, t.a, t.m) for t in s.terms), region=s.region)


def forward(e: GExpr) -> SExpr:
    """Transform of a function-algebra element.

    Term rule: c x**(2k) e^(a x^2)  ->  c * k!/2 * (sigma - a)**-(k+1).
    The result is valid on sigma > max a, recorded in `region`.
    """
    terms = tuple(
        STerm(t.c * math.factorial(t.k) / 2, t.a, t.k + 1)
        for t in e.terms
    )
    region = e.max_rate() if e.terms else None
    return SExpr(terms, region=region)


def inverse(s: SExpr) -> GExpr:
    """Function-algebra preimage; exact inverse of :func:`forward`.

    Term rule: c (sigma - a)**(-m)  ->  2c x**(2(m-1)) e^(a x^2) / (m-1)!.
    Constant (m = 0) content has no function inverse and raises.
    """
    bad = [t for t in s.terms if t.m == 0]
    if bad:
        raise ImpulseContentError(
            f"sigma-constant content {bad[0].c} has no function-valued inverse"
        )
    return GExpr(tuple(
        GTerm(2 * t.c / math.factorial(t.m - 1), t.m - 1, t.a)
        for t in s.terms
    ))


def delta_s(s: SExpr) -> SExpr:
    """(1/s) d/ds = 2 d/dsigma; constants map to zero.

    Term rule: c (sigma - a)**(-m)  ->  -2 m c (sigma - a)**-(m+1).
    """
    return SExpr(
        tuple(STerm(-2 * t.m * t.c, t.a, t.m + 1) for t in s.terms if t.m >= 1),
        region=s.region,
    )


def mul_sigma(s: SExpr) -> SExpr:
    """Multiply by sigma, using sigma (sigma-a)^-m = (sigma-a)^-(m-1) + a (sigma-a)^-m.

    Requires a proper input: sigma times a constant would be a positive
    power of sigma, which this representation cannot hold.
    """
    out = []
    for t in s.terms:
        if t.m == 0:
            raise ValueError(
                "sigma * constant leaves the representable class; input must be proper"
            )
        out.append(STerm(t.c, t.a, t.m - 1))
        out.append(STerm(t.a * t.c, t.a, t.m))
    return SExpr(tuple(out), region=s.region)


def _taylor_at_pole(
    others: list[tuple[Fraction, int]], center: Fraction, order: int
) -> list[Fraction]:
    """Taylor coefficients, up to u**order, of prod (sigma - a)**(-m) about
    sigma = center (u = sigma - center), for poles a != center.

    Each factor expands as a binomial series in u/(center - a); factors are
    multiplied as truncated exact power series.
    """
    series = [Fraction(1)] + [Fraction(0)] * order
    for a, m in others:
        d = center - a
        fac = [
            Fraction((-1) ** j * math.comb(m + j - 1, j), 1) / d ** (m + j)
            for j in range(order + 1)
        ]
        series = [
            sum((series[i] * fac[j - i] for i in range(j + 1)), Fraction(0))
            for j in range(order + 1)
        ]
    return series


def partial_fractions(factors: Iterable[tuple[RationalLike, int]]) -> SExpr:
    """Partial-fraction form of 1 / prod (sigma - a_i)**(m_i).

    Repeated poles in the input are grouped by total multiplicity.  The
    coefficient of (sigma - a_i)**(-j) is the Taylor coefficient of order
    m_i - j, about a_i, of the product of the remaining factors, so all
    coefficients are exact rationals and recombination over the common
    denominator reproduces the numerator 1 identically.
    """
    grouped: dict[Fraction, int] = {}
    for a, m in factors:
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"factor multiplicity must be a positive integer, got {m!r}")
        a = as_rational(a)
        grouped[a] = grouped.get(a, 0) + m
    if not grouped:
        return constant(1)
    out = []
    for a, m in grouped.items():
        others = [(b, n) for b, n in grouped.items() if b != a]
        coeffs = _taylor_at_pole(others, a, m - 1)
        for j in range(1, m + 1):
            out.append(STerm(coeffs[m - j], a, j))
    return SExpr(tuple(out))


def multiply(s1: SExpr, s2: SExpr) -> SExpr:
    """Exact product, re-expressed in canonical partial-fraction form."""
    out: list[STerm] = []
    for t1 in s1.terms:
        for t2 in s2.terms:
            c = t1.c * t2.c
            if t1.m == 0:
                out.append(STerm(c, t2.a, t2.m))
            elif t2.m == 0:
                out.append(STerm(c, t1.a, t1.m))
            elif t1.a == t2.a:
                out.append(STerm(c, t1.a, t1.m + t2.m))
            else:
                split = partial_fractions([(t1.a, t1.m), (t2.a, t2.m)])
                out.extend(STerm(c * u.c, u.a, u.m) for u in split.terms)
    return SExpr(tuple(out), region=_combine_region(s1.region, s2.region))


def power(s: SExpr, n: int) -> SExpr:
    """n-th product power, n >= 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"power expects a positive integer, got {n!r}")
    out = s
    for _ in range(n - 1):
        out = multiply(out, s)
    return out


def evaluate_at(s: SExpr, sigma: float) -> float:
    """Floating-point value at a sigma off every pole."""
    total = 0.0
    for t in s.terms:
        if t.m == 0:
            total += float(t.c)
        else:
            total += float(t.c) / (sigma - float(t.a)) ** t.m
    return total
