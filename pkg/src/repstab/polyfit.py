"""Exact fitting of integer sequences by polynomials in binomial bases."""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .linalg import solve


def gen_binom(x, r: int) -> Fraction:
    """``x (x-1) ... (x-r+1) / r!`` for any rational ``x``; zero for ``r < 0``."""
    if r < 0:
        return Fraction(0)
    out = Fraction(1)
    for i in range(r):
        out *= Fraction(x) - i
    return out / factorial(r)


def newton_fit(f: Callable[[int], int], base: int, degree: int) -> list[Fraction]:
    """Coefficients ``d_r`` with ``f(n) = sum_r d_r binom(n - base, r)`` on ``base..base+degree``."""
    values = [Fraction(f(base + i)) for i in range(degree + 1)]
    coeffs = []
    for _ in range(degree + 1):
        coeffs.append(values[0])
        values = [b - a for a, b in zip(values, values[1:])]
    return coeffs


def newton_eval(coeffs: Sequence[Fraction], base: int, n: int) -> Fraction:
    return sum((d * gen_binom(n - base, r) for r, d in enumerate(coeffs)), Fraction(0))


def additive_basis(r: int, n: int) -> Fraction:
    """``binom(n, r) - binom(n, r-1)`` read as a polynomial in ``n``."""
    return gen_binom(n, r) - gen_binom(n, r - 1)


def additive_fit(f: Callable[[int], int], start: int, delta: int) -> list[Fraction]:
    """Coefficients ``b_r`` with ``f(n) = sum_{r<=delta} b_r (binom(n,r) - binom(n,r-1))`` on ``start..start+delta``."""
    if delta < 0:
        return []
    pts = range(start, start + delta + 1)
    matrix = [[additive_basis(r, n) for r in range(delta + 1)] for n in pts]
    return solve(matrix, [f(n) for n in pts])


def additive_eval(coeffs: Sequence[Fraction], n: int) -> Fraction:
    return sum((b * additive_basis(r, n) for r, b in enumerate(coeffs)), Fraction(0))
