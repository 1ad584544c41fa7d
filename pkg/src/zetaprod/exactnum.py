"""Exact integer and rational kernels.

Binomial coefficients, harmonic numbers, Bernoulli numbers and polynomials,
and unsigned Stirling numbers of the first kind, all in exact arithmetic.
These back both the floating-point evaluators (which convert on demand) and
the exact identity tests, so nothing here ever rounds.

Conventions:
  * Bernoulli numbers follow the x/(e^x - 1) generating function, so
    B_1 = -1/2 and B_k = 0 for odd k > 1.
  * stirling1_unsigned(n, m) is the coefficient of x^m in the rising
    factorial x(x+1)...(x+n-1).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BigRational",
    "RationalPoly",
    "binomial",
    "bernoulli_number",
    "bernoulli_poly",
    "harmonic",
    "stirling1_unsigned",
    "falling_factorial_int",
]

# Exact rational backbone.  fractions.Fraction already guarantees the
# invariants we need: always reduced, positive denominator, exact arithmetic
# on arbitrary-size integers.
BigRational = Fraction

_lock = threading.Lock()

# Memo tables, grown on demand (default sizing keeps repeated desk-scale
# evaluations cheap; growth is unbounded because exactness never overflows).
_DEFAULT_CAP = 64
_bernoulli: list[Fraction] = [Fraction(1)]
_harmonic: list[Fraction] = [Fraction(0)]
_stirling_rows: list[list[int]] = [[1]]


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, index = degree.

    Trailing zero coefficients are trimmed; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs) -> "RationalPoly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return RationalPoly(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Evaluate by Horner's rule; exact for Fraction x, float otherwise."""
        acc = x * 0  # zero of the caller's arithmetic
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RationalPoly":
        return RationalPoly.from_coeffs(
            [i * c for i, c in enumerate(self.coeffs)][1:]
        )


def binomial(n: int, k: int) -> int:
    """C(n, k) exactly; 0 for k < 0 or k > n.  Requires n >= 0."""
    if n < 0:
        raise ValueError("binomial: n must be >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _extend_bernoulli(k: int) -> None:
    # Recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    while len(_bernoulli) <= k:
        m = len(_bernoulli)
        s = Fraction(0)
        for j in range(m):
            s += binomial(m + 1, j) * _bernoulli[j]
        _bernoulli.append(-s / (m + 1))


def bernoulli_number(k: int) -> Fraction:
    """B_k under the x/(e^x-1) convention (B_1 = -1/2)."""
    if k < 0:
        raise ValueError("bernoulli_number: k must be >= 0")
    with _lock:
        _extend_bernoulli(max(k, _DEFAULT_CAP) if k >= len(_bernoulli) else k)
        return _bernoulli[k]


def bernoulli_poly(m: int) -> RationalPoly:
    """B_m(u) = sum_j C(m, j) B_j u^(m-j) as an exact polynomial."""
    if m < 0:
        raise ValueError("bernoulli_poly: m must be >= 0")
    coeffs = [binomial(m, i) * bernoulli_number(m - i) for i in range(m + 1)]
    return RationalPoly.from_coeffs(coeffs)


def harmonic(k: int) -> Fraction:
    """H_k = 1 + 1/2 + ... + 1/k exactly, with H_0 = 0."""
    if k < 0:
        raise ValueError("harmonic: k must be >= 0")
    with _lock:
        while len(_harmonic) <= k:
            j = len(_harmonic)
            _harmonic.append(_harmonic[-1] + Fraction(1, j))
        return _harmonic[k]


def stirling1_unsigned(n: int, m: int) -> int:
    """Unsigned Stirling number of the first kind.

    Coefficient of x^m in x(x+1)...(x+n-1); zero outside 0 <= m <= n,
    with the empty product giving [0, 0] = 1.
    """
    if n < 0:
        raise ValueError("stirling1_unsigned: n must be >= 0")
    if m < 0 or m > n:
        return 0
    with _lock:
        while len(_stirling_rows) <= n:
            prev = _stirling_rows[-1]
            nn = len(_stirling_rows)  # building row nn from row nn-1
            row = [0] * (nn + 1)
            for j in range(nn):
                # multiply by (x + nn - 1)
                row[j + 1] += prev[j]
                row[j] += (nn - 1) * prev[j]
            _stirling_rows.append(row)
        return _stirling_rows[n][m]


def falling_factorial_int(n: int) -> int:
    """n! as an exact integer (convenience wrapper used by closed forms)."""
    if n < 0:
        raise ValueError("factorial: n must be >= 0")
    return math.factorial(n)
