"""Exact arithmetic on the closed function algebra spanned by terms

    c * x**(2k) * exp(a * x**2)        (c, a rational, k a nonnegative integer)

on the half line [0, inf).  The class is closed under addition,
multiplication, the ring derivation delta_x = (1/x) d/dx, the transform,
and its convolution, which is what makes every identity in this package
checkable with exact rationals.

Scalars are `fractions.Fraction` throughout; floating point enters only in
:func:`evaluate` and in the numeric oracle module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, strings like "3/4", and Fractions to Fraction.

    Floats are rejected: silently converting binary floats would smuggle
    rounding error into an algebra whose whole point is exactness.
    """
    if isinstance(value, float):
        raise TypeError("refusing to coerce float to exact rational; pass a Fraction, int, or 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class GTerm:
    """One term c * x**(2k) * exp(a * x**2)."""

    c: Fraction
    k: int
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        object.__setattr__(self, "a", as_rational(self.a))
        if not isinstance(self.k, int) or self.k < 0:
            raise ValueError(f"half-degree k must be a nonnegative integer, got {self.k!r}")


@dataclass(frozen=True)
class GExpr:
    """Canonical finite sum of GTerms.

    Canonical form is enforced on construction: terms sorted by (a, k),
    like terms merged, zero coefficients dropped.  The zero function is the
    empty sum.  Instances are immutable and safe to share across threads.
    """

    terms: tuple[GTerm, ...] = ()

    def __post_init__(self):
        merged: dict[tuple[Fraction, int], Fraction] = {}
        for t in self.terms:
            key = (t.a, t.k)
            merged[key] = merged.get(key, Fraction(0)) + t.c
        canon = tuple(
            GTerm(c, k, a)
            for (a, k), c in sorted(merged.items())
            if c != 0
        )
        object.__setattr__(self, "terms", canon)

    def __add__(self, other: "GExpr") -> "GExpr":
        return GExpr(self.terms + other.terms)

    def __sub__(self, other: "GExpr") -> "GExpr":
        return self + (-other)

    def __neg__(self) -> "GExpr":
        return scale(self, Fraction(-1))

    def __mul__(self, other: "GExpr") -> "GExpr":
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def max_rate(self) -> Fraction:
        """Largest Gaussian rate a; 0 for the zero expression."""
        if not self.terms:
            return Fraction(0)
        return max(t.a for t in self.terms)


def canonicalize(terms: Iterable[GTerm]) -> GExpr:
    """Canonical form of an arbitrary term sequence (merge, drop zeros, sort)."""
    return GExpr(tuple(terms))


def zero() -> GExpr:
    return GExpr()


def constant(c: RationalLike) -> GExpr:
    return GExpr((GTerm(as_rational(c), 0, Fraction(0)),))


def monomial(c: RationalLike, k: int) -> GExpr:
    """c * x**(2k)."""
    return GExpr((GTerm(as_rational(c), k, Fraction(0)),))


def gaussian(a: RationalLike, c: RationalLike = 1, k: int = 0) -> GExpr:
    """c * x**(2k) * exp(a x**2)."""
    return GExpr((GTerm(as_rational(c), k, as_rational(a)),))


def add(e1: GExpr, e2: GExpr) -> GExpr:
    return e1 + e2


def scale(e: GExpr, c: RationalLike) -> GExpr:
    c = as_rational(c)
    return GExpr(tuple(GTerm(t.c * c, t.k, t.a) for t in e.terms))


def multiply(e1: GExpr, e2: GExpr) -> GExpr:
    """Exact product; degrees and Gaussian rates add term by term."""
    out = []
    for s in e1.terms:
        for t in e2.terms:
            out.append(GTerm(s.c * t.c, s.k + t.k, s.a + t.a))
    return GExpr(tuple(out))


def evaluate(e: GExpr, x: float) -> float:
    """Floating-point value of e at x >= 0.

    math.exp raises OverflowError when some a * x**2 leaves the double
    exponent range; that is the documented overflow report.
    """
    if x < 0:
        raise ValueError("the algebra lives on [0, inf)")
    total = 0.0
    for t in e.terms:
        total += float(t.c) * x ** (2 * t.k) * math.exp(float(t.a) * x * x)
    return total


def delta_x(e: GExpr) -> GExpr:
    """Image under (1/x) d/dx.

    Term rule: c x**(2k) e^(a x^2)  ->  2k c x**(2k-2) e^(a x^2)
                                        + 2a c x**(2k) e^(a x^2).
    The algebra is closed: the k = 0 part of the first piece vanishes.
    """
    out = []
    for t in e.terms:
        if t.k >= 1:
            out.append(GTerm(2 * t.k * t.c, t.k - 1, t.a))
        if t.a != 0:
            out.append(GTerm(2 * t.a * t.c, t.k, t.a))
    return GExpr(tuple(out))


def limit_at_zero(e: GExpr) -> Fraction:
    """lim_{x -> 0+} e(x); only k = 0 terms survive."""
    return sum((t.c for t in e.terms if t.k == 0), Fraction(0))


def log_abs_envelope(e: GExpr, x: float) -> float:
    """log of the term-wise absolute-value envelope sum(|c| x^(2k) e^(a x^2)).

    Computed in log space so growth classification can probe x far beyond
    the overflow range of :func:`evaluate`.  Returns -inf for the zero
    expression.  An upper bound for log|e(x)|.
    """
    if not e.terms:
        return -math.inf
    if x <= 0:
        raise ValueError("envelope is defined for x > 0")
    logs = [
        math.log(abs(float(t.c))) + 2 * t.k * math.log(x) + float(t.a) * x * x
        for t in e.terms
    ]
    top = max(logs)
    return top + math.log(sum(math.exp(v - top) for v in logs))
