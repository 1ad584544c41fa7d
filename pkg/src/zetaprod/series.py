"""Direct series evaluation of the alternating-binomial products.

Central objects:

  log t_n(u)        = sum_{k=0}^n (-1)^(k+1) C(n,k) log(k+u)
                      (the n-th forward difference of log at u, up to sign)
  S_alpha(s, u)     = sum_{n>=0} 1/(n+alpha+1) * D_n(s, u)
  D_n(s, u)         = sum_{k=0}^n (-1)^k C(n,k) (k+u)^(1-s)
  log z_alpha(u)    = sum_{n>=1} log t_n(u) / (n+alpha+1)

The alternating inner sums lose roughly one bit per order n, so two methods
are provided and cross-checked:

  * alternating_sum: the literal sum, evaluated in high-precision decimal
    arithmetic so cancellation cannot pollute the result; capped at n <= 40.
  * frullani_quadrature: the integral representations

        log t_n(u) = int_0^inf (1-e^-t)^n e^(-ut) dt/t          (n >= 1)
        D_n(s, u)  = (1/Gamma(s-1)) int_0^inf (1-e^-t)^n e^(-ut) t^(s-2) dt

    on a double-exponential grid t = exp(tau - exp(-tau)).  The D_n form
    holds for s > 1 and extends by analytic continuation to s > 1-n; for
    positive integer powers m = 1-s the sums terminate (D_n = 0 for n > m)
    and the quadrature is skipped in favour of that exact zero.

Truncated sums report an err_est from an empirical decay model fitted to
the computed terms (|log t_n| ~ C n^-u up to slowly varying factors); the
model is a runtime fit, not a theorem.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from .exactnum import binomial, bernoulli_poly, falling_factorial_int
from .rstirling import row_by_gf, shift_from_u

__all__ = [
    "EvalParams",
    "Approximation",
    "DifferenceMethod",
    "ALTERNATING_MAX_N",
    "log_tn",
    "log_tn_sweep",
    "s_alpha_truncated",
    "log_z_direct",
    "resummed_power_partial",
    "functional_eq_residual",
    "inner_diff_exact",
    "finite_bernoulli_identity_sides",
]

ROUTE_TAGS = ("series", "closed_form", "integral_single",
              "integral_double", "integral_prelim")

# 53-bit floats lose ~n bits to the alternating cancellation; beyond this
# order the quadrature representation is the only safe route.
ALTERNATING_MAX_N = 40


class DifferenceMethod(str, Enum):
    ALTERNATING = "alternating_sum"
    FRULLANI = "frullani_quadrature"


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x) == int(x)


@dataclass(frozen=True)
class EvalParams:
    """Evaluation point (alpha, u[, s]); d mirrors an integer alpha.

    u must be positive.  alpha = -2, -3, ... is never a valid product
    shift; alpha = -1, -2, ... is never a valid S_alpha shift (the checks
    are per-operation because the two domains differ at alpha = -1).
    """

    alpha: float
    u: float
    s: Optional[float] = None
    d: Optional[int] = None

    def __post_init__(self):
        if not self.u > 0:
            raise ValueError("EvalParams: u must be > 0")
        if self.d is not None:
            if self.d < 0 or float(self.d) != float(self.alpha):
                raise ValueError("EvalParams: d must be a nonnegative integer "
                                 "equal to alpha")

    def require_product_valid(self):
        if self.alpha <= -2 and float(self.alpha) == int(self.alpha):
            raise ValueError(f"alpha = {self.alpha}: the product is undefined "
                             "for integer alpha <= -2")

    def require_s_alpha_valid(self):
        if self.alpha <= -1 and float(self.alpha) == int(self.alpha):
            raise ValueError(f"alpha = {self.alpha}: S_alpha is undefined "
                             "for integer alpha <= -1")


@dataclass(frozen=True)
class Approximation:
    """A floating value with an error estimate and provenance tag."""

    value: float
    err_est: float
    terms_used: int
    route: str

    def __post_init__(self):
        if not (math.isfinite(self.err_est) and self.err_est >= 0):
            raise ValueError("Approximation: err_est must be finite and >= 0")
        if self.route not in ROUTE_TAGS:
            raise ValueError(f"Approximation: unknown route tag {self.route!r}")
        if self.route == "series" and self.terms_used < 1:
            raise ValueError("Approximation: series routes use >= 1 term")


# --------------------------------------------------------------------------
# high-precision alternating sums (decimal arithmetic)
# --------------------------------------------------------------------------

_DEC_PREC = 50


def _decimal_of(x) -> Decimal:
    fr = x if isinstance(x, Fraction) else Fraction(x)
    return Decimal(fr.numerator) / Decimal(fr.denominator)


def _log_tn_alternating(n: int, u: float) -> float:
    with localcontext() as ctx:
        ctx.prec = _DEC_PREC
        uu = _decimal_of(u)
        total = Decimal(0)
        for k in range(n + 1):
            term = Decimal(binomial(n, k)) * (uu + k).ln()
            total += term if k % 2 == 1 else -term
        return float(total)


def _inner_diff_alternating(n: int, s: float, u: float) -> float:
    """D_n(s,u) by the literal sum in high-precision decimal."""
    with localcontext() as ctx:
        ctx.prec = _DEC_PREC
        uu = _decimal_of(u)
        e = Decimal(1) - _decimal_of(s)
        total = Decimal(0)
        for k in range(n + 1):
            term = Decimal(binomial(n, k)) * (uu + k) ** e
            total += -term if k % 2 == 1 else term
        return float(total)


# --------------------------------------------------------------------------
# double-exponential half-line quadrature for the (1-e^-t)^n kernels
# --------------------------------------------------------------------------

_H_DE = 1.0 / 16.0
_TAU_LO = -3.8


def _halfline_nodes(u: float, n_max: int, s: float = 2.0):
    """Nodes/weights for int_0^inf f(t) dt with f decaying like e^(-ut).

    The map t = exp(tau - exp(-tau)) sends both tails to double-exponential
    decay.  The upper cutoff tracks the integrand support: the kernel
    (1-e^-t)^n suppresses t below log(n/u) and e^(-ut) t^(s-2) dies past it.
    """
    t_peak = math.log(max(n_max, 1) / u + 10.0)
    t_max = t_peak + (52.0 + 8.0 * max(0.0, s - 2.0)) / u
    tau_hi = math.log(t_max) + 0.2
    taus = np.arange(_TAU_LO, tau_hi + _H_DE, _H_DE)
    emt = np.exp(-taus)
    t = np.exp(taus - emt)
    w = _H_DE * t * (1.0 + emt)
    return t, w


def log_tn_sweep(u: float, n_max: int) -> np.ndarray:
    """log t_n(u) for n = 0..n_max in one vectorized quadrature sweep.

    Entry n holds log t_n(u); entry 0 is the exact value -log u.  This is
    the bulk producer behind the direct product series and the truncated
    product oracles.
    """
    t, w = _halfline_nodes(u, n_max)
    base = -np.expm1(-t)                      # 1 - e^-t, accurate near 0
    c = w * np.exp(-u * t) / t
    out = np.empty(n_max + 1)
    out[0] = -math.log(u)
    p = base.copy()
    for n in range(1, n_max + 1):
        out[n] = float(np.dot(p, c))
        p *= base
    return out


def _log_tn_quadrature(n: int, u: float) -> float:
    t, w = _halfline_nodes(u, n)
    base = -np.expm1(-t)
    integrand = np.exp(n * np.log(base) - u * t) / t
    return float(np.dot(w, integrand))


def _inner_diff_quad_sweep(s: float, u: float, n_lo: int, n_hi: int) -> np.ndarray:
    """D_n(s,u) for n = n_lo..n_hi via the Gamma(s-1)-normalized integral.

    Valid (by analytic continuation) for s > 1 - n_lo with s not an integer
    <= 1; the caller handles terminating integer cases exactly.
    """
    if n_lo + s <= 1.0:
        raise ValueError("inner-difference quadrature needs s > 1 - n")
    norm = 1.0 / math.gamma(s - 1.0)
    t, w = _halfline_nodes(u, n_hi, s)
    base = -np.expm1(-t)
    logbase = np.log(base)
    cc = w * np.exp(-u * t) * t ** (s - 2.0)
    out = np.empty(n_hi - n_lo + 1)
    p = np.exp(n_lo * logbase)
    for i, _n in enumerate(range(n_lo, n_hi + 1)):
        out[i] = norm * float(np.dot(p, cc))
        p *= base
    return out


def _inner_differences(s: float, u: float, N: int,
                       method: DifferenceMethod) -> np.ndarray:
    """D_n(s,u) for n = 0..N with the chosen cancellation control.

    alternating_sum is rejected beyond ALTERNATING_MAX_N.  The quadrature
    method uses exact small-n sums below the cancellation cap and the
    normalized integral beyond it; positive-integer powers 1-s terminate
    exactly (D_n = 0 for n > 1-s), and that exact zero is used directly
    because the Gamma normalization degenerates there.
    """
    if s == 1.0:
        out = np.zeros(N + 1)
        out[0] = 1.0
        return out
    if method is DifferenceMethod.ALTERNATING and N > ALTERNATING_MAX_N:
        raise ValueError(f"alternating_sum is limited to n <= {ALTERNATING_MAX_N} "
                         "in 53-bit precision; use frullani_quadrature")
    out = np.empty(N + 1)
    cap = min(N, ALTERNATING_MAX_N)
    for n in range(cap + 1):
        out[n] = _inner_diff_alternating(n, s, u)
    if N > cap:
        if float(s) == int(s) and s <= 1.0:
            # terminating positive-integer power: exact zeros past n = 1-s
            if 1.0 - s > cap:
                raise ValueError("terminating powers with 1-s beyond the "
                                 "exact-sum cap are not supported")
            out[cap + 1:] = 0.0
        else:
            out[cap + 1:] = _inner_diff_quad_sweep(s, u, cap + 1, N)
    return out


# --------------------------------------------------------------------------
# public operations
# --------------------------------------------------------------------------

def log_tn(n: int, u: float,
           method: DifferenceMethod = DifferenceMethod.FRULLANI) -> float:
    """log t_n(u), the signed n-th forward difference of log at u.

    alternating_sum evaluates the literal sum (n <= 40); frullani_quadrature
    evaluates the equivalent half-line integral, which is the only
    cancellation-safe route for large n.
    """
    if n < 0:
        raise ValueError("log_tn: n must be >= 0")
    if not u > 0:
        raise ValueError("log_tn: u must be > 0")
    if n == 0:
        return -math.log(u)
    if method is DifferenceMethod.ALTERNATING:
        if n > ALTERNATING_MAX_N:
            raise ValueError(f"log_tn: alternating_sum is limited to "
                             f"n <= {ALTERNATING_MAX_N}")
        return _log_tn_alternating(n, u)
    return _log_tn_quadrature(n, u)


def _fit_decay_coefficient(mags: np.ndarray, ns: np.ndarray, u: float) -> float:
    """Median of |term| * n^u over the last decade [N/10, N] (plateau fit)."""
    scaled = mags * ns.astype(float) ** u
    lo = min(max(0, len(ns) // 10 - 1), len(ns) - 1)
    window = scaled[lo:]
    return float(np.median(window)) if len(window) else 0.0


def s_alpha_truncated(p: EvalParams, N: int,
                      method: DifferenceMethod = DifferenceMethod.FRULLANI
                      ) -> Approximation:
    """Partial sum of S_alpha(s, u) over n = 0..N.

    err_est comes from the fitted decay model c*n^-u for the inner
    differences, giving a tail estimate ~ c N^-u / u.
    """
    p.require_s_alpha_valid()
    if p.s is None:
        raise ValueError("s_alpha_truncated: params must carry s")
    if N < 1:
        raise ValueError("s_alpha_truncated: N must be >= 1")
    inner = _inner_differences(p.s, p.u, N, method)
    ns = np.arange(N + 1, dtype=float)
    weights = 1.0 / (ns + p.alpha + 1.0)
    value = math.fsum(inner * weights)
    if p.s == 1.0 or (float(p.s) == int(p.s) and p.s <= 1.0 and N > 1 - p.s):
        err = 1e-15 * (1.0 + abs(value))  # terminated exactly
    else:
        c = _fit_decay_coefficient(np.abs(inner[1:]), np.arange(1, N + 1), p.u)
        err = c * N ** (-p.u) / p.u + 1e-15 * (1.0 + abs(value))
    return Approximation(value, err, N + 1, "series")


def _tail_model(terms_abs: np.ndarray, ns: np.ndarray, u: float, alpha: float,
                N: int) -> tuple[float, float]:
    """Fitted tail of sum_{n>N} |log t_n|/(n+alpha+1).

    Model: |log t_n| * n^u ~ c / (log n + q), fitted linearly on the
    reciprocal over the trailing window, then summed explicitly to 20N with
    an integral remainder.  Returns (tail, uncertainty).
    """
    lo = max(2, N // 4)
    window_ns = ns[lo - 1:]
    window = terms_abs[lo - 1:] * window_ns.astype(float) ** u
    good = window > 0
    if good.sum() < 8:
        return 0.0, 0.0
    x = np.log(window_ns[good].astype(float))
    y = 1.0 / window[good]
    a, b = np.polyfit(x, y, 1)  # 1/r ~ a*log n + b
    if a <= 0 or not math.isfinite(a) or not math.isfinite(b):
        c = float(np.median(window))
        tail = c * N ** (-u) / u
        return tail, tail * 0.5
    c, q = 1.0 / a, b / a
    m = np.arange(N + 1, 20 * N + 1, dtype=float)
    guard = np.maximum(np.log(m) + q, 0.3)
    explicit = float(np.sum(c / (guard * m ** u * (m + alpha + 1.0))))
    M = 20.0 * N
    remainder = c * M ** (-u) / (u * max(math.log(M) + q, 0.3))
    tail = explicit + remainder
    # model error is O(1/log N) relative: charge a conservative slice of it
    return tail, tail * 2.5 / math.log(N)


def log_z_direct(p: EvalParams, N: int,
                 method: DifferenceMethod = DifferenceMethod.FRULLANI,
                 tightened: bool = False) -> Approximation:
    """Partial sum sum_{n=1}^N log t_n(u) / (n+alpha+1).

    With tightened=False the raw partial sum is returned with the decay
    model tail as err_est.  With tightened=True the fitted tail is added
    and one Richardson level (exponent u, halved N) is applied on top;
    raw and refined values are available through the two modes.
    """
    p.require_product_valid()
    if N < 1:
        raise ValueError("log_z_direct: N must be >= 1")
    if method is DifferenceMethod.ALTERNATING:
        if N > ALTERNATING_MAX_N:
            raise ValueError(f"log_z_direct: alternating_sum is limited to "
                             f"N <= {ALTERNATING_MAX_N}")
        logt = np.array([0.0] + [_log_tn_alternating(n, p.u)
                                 for n in range(1, N + 1)])
    else:
        logt = log_tn_sweep(p.u, N)
    ns = np.arange(N + 1, dtype=float)
    terms = logt[1:] / (ns[1:] + p.alpha + 1.0)
    partial = np.cumsum(terms)

    def raw_at(M: int) -> float:
        return float(partial[M - 1])

    c_plateau = _fit_decay_coefficient(np.abs(logt[1:]), np.arange(1, N + 1), p.u)
    err_raw = c_plateau * N ** (-p.u) / p.u
    if not tightened:
        return Approximation(raw_at(N), err_raw + 4e-15 * N ** 0.5, N, "series")

    ns_all = np.arange(1, N + 1)
    tail_N, unc_N = _tail_model(np.abs(logt[1:]), ns_all, p.u, p.alpha, N)
    corrected_N = raw_at(N) + tail_N
    half = N // 2
    if half >= 8:
        tail_h, _ = _tail_model(np.abs(logt[1:half + 1]), ns_all[:half],
                                p.u, p.alpha, half)
        corrected_h = raw_at(half) + tail_h
        r = 2.0 ** (-p.u)
        extrapolated = (corrected_N - r * corrected_h) / (1.0 - r)
        spread = abs(corrected_N - corrected_h)
        err = max(unc_N, 0.6 * spread) + 4e-15 * N ** 0.5
        return Approximation(extrapolated, err, N, "series")
    return Approximation(corrected_N, unc_N + 4e-15 * N ** 0.5, N, "series")


def resummed_power_partial(s: float, u: float, N: int) -> float:
    """Partial double sum sum_{n<=N} D_n(s, u+1); the limit is u^(1-s)."""
    if not u > 0:
        raise ValueError("resummed_power_partial: u must be > 0")
    if N < 0:
        raise ValueError("resummed_power_partial: N must be >= 0")
    inner = _inner_differences(s, u + 1.0, max(N, 1), DifferenceMethod.FRULLANI)
    return math.fsum(inner[:N + 1])


def functional_eq_residual(p: EvalParams, N: int) -> float:
    """Truncation residual of the three-term shift identity

        alpha S_alpha(s,u) - S_{alpha-1}(s-1,u) - (alpha-u) S_{alpha-1}(s,u).

    Truncations are index-matched per the shift n -> n+1 (the alpha-1 sums
    run one term longer), so no spurious O(1/N) mismatch is introduced; the
    residual converges to 0 at the rate of the resummation tail.
    """
    if float(p.alpha) == int(p.alpha) and p.alpha <= 0:
        raise ValueError("functional_eq_residual: alpha must not be a "
                         "nonpositive integer")
    if p.s is None:
        raise ValueError("functional_eq_residual: params must carry s")
    a, s, u = p.alpha, p.s, p.u
    sa = s_alpha_truncated(EvalParams(a, u, s=s), N).value
    sb = s_alpha_truncated(EvalParams(a - 1.0, u, s=s - 1.0), N + 1).value
    sc = s_alpha_truncated(EvalParams(a - 1.0, u, s=s), N + 1).value
    return a * sa - sb - (a - u) * sc


# --------------------------------------------------------------------------
# exact finite identities (rational arithmetic)
# --------------------------------------------------------------------------

def inner_diff_exact(n: int, m: int, u: Fraction) -> Fraction:
    """sum_k (-1)^k C(n,k) (k+u)^m exactly (m a nonnegative integer)."""
    if n < 0 or m < 0:
        raise ValueError("inner_diff_exact: n, m must be >= 0")
    u = Fraction(u)
    acc = Fraction(0)
    for k in range(n + 1):
        term = binomial(n, k) * (u + k) ** m
        acc += -term if k % 2 else term
    return acc


def finite_bernoulli_identity_sides(m: int, d: int, u: Fraction
                                    ) -> tuple[Fraction, Fraction]:
    """Both sides of the terminating-power identity, exactly:

      LHS = sum_{n=0}^m 1/(n+d+1) sum_k (-1)^k C(n,k) (k+u)^m
      RHS = (1/d!) sum_{k=0}^d row(d, 1-u)[k] * B_{m+k}(u)

    with row the exact shifted r-Stirling row.  The two are equal for every
    m >= 1, d >= 0, rational u; at d = 0 this is the classical explicit
    formula for B_m(u).
    """
    if m < 1 or d < 0:
        raise ValueError("identity requires m >= 1 and d >= 0")
    u = Fraction(u)
    lhs = Fraction(0)
    for n in range(m + 1):
        lhs += Fraction(1, n + d + 1) * inner_diff_exact(n, m, u)
    row = row_by_gf(d, shift_from_u(u))
    rhs = Fraction(0)
    for k in range(d + 1):
        rhs += row.coeffs[k] * bernoulli_poly(m + k)(u)
    rhs /= falling_factorial_int(d)
    return lhs, rhs
