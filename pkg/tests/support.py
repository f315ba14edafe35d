"""Shared test helpers: seeded random expression generators and an
independent dense-polynomial oracle for recombining partial fractions.

The polynomial helpers deliberately know nothing about the package's
transform module; they manipulate plain coefficient lists of Fractions so
recombination checks stay an independent route.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from l2transform import GExpr, GTerm
from l2transform.transform import SExpr


def linspace(lo: float, hi: float, n: int) -> list[float]:
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def rand_fraction(rng: random.Random, lo: int = -4, hi: int = 4,
                  max_den: int = 8, nonzero: bool = False) -> Fraction:
    while True:
        den = rng.randint(1, max_den)
        num = rng.randint(lo * den, hi * den)
        f = Fraction(num, den)
        if not nonzero or f != 0:
            return f


def rand_gexpr(rng: random.Random, max_terms: int = 4, max_k: int = 3,
               rate_lo: int = -2, rate_hi: int = 1, coeff_hi: int = 4) -> GExpr:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        c = rand_fraction(rng, -coeff_hi, coeff_hi, nonzero=True)
        k = rng.randint(0, max_k)
        a = rand_fraction(rng, rate_lo, rate_hi)
        terms.append(GTerm(c, k, a))
    return GExpr(tuple(terms))


# --- dense polynomials over Fraction, ascending coefficient order ---------


def poly_add(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_scale(p: list[Fraction], c: Fraction) -> list[Fraction]:
    out = [x * c for x in p]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_pow(p: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def linear_factor(a: Fraction) -> list[Fraction]:
    """sigma - a."""
    return [-Fraction(a), Fraction(1)]


def sexpr_as_rational(s: SExpr) -> tuple[list[Fraction], list[Fraction]]:
    """(numerator, denominator) of an SExpr as one unreduced rational
    function in sigma, built by plain fraction addition."""
    num, den = [Fraction(0)], [Fraction(1)]
    for t in s.terms:
        t_den = poly_pow(linear_factor(t.a), t.m)
        num = poly_add(poly_mul(num, t_den), poly_scale(den, t.c))
        den = poly_mul(den, t_den)
    return num, den


def rational_equal(s1: SExpr, s2: SExpr) -> bool:
    """Equality of SExprs as rational functions (cross-multiplication)."""
    n1, d1 = sexpr_as_rational(s1)
    n2, d2 = sexpr_as_rational(s2)
    return poly_mul(n1, d2) == poly_mul(n2, d1)


def recombines_to_one(s: SExpr, factors: list[tuple[Fraction, int]]) -> bool:
    """True iff s equals 1 / prod (sigma - a)**m as a rational function."""
    num, den = sexpr_as_rational(s)
    common = [Fraction(1)]
    for a, m in factors:
        common = poly_mul(common, poly_pow(linear_factor(Fraction(a)), m))
    return poly_mul(num, common) == den


def direct_term_sum(terms, x: float) -> float:
    """Evaluate a raw GTerm sequence by direct summation in input order,
    independent of canonicalization."""
    return sum(float(t.c) * x ** (2 * t.k) * math.exp(float(t.a) * x * x) for t in terms)
