"""Tanh-sinh quadrature and the integral routes to the product logarithms.

Engine: the double-exponential substitution x = (1 + tanh((pi/2) sinh tau))/2
on (0, 1), refined by halving the step until two levels agree.  Integrands
receive the node x together with its distance to the nearest endpoint
computed without cancellation, so endpoint-singular factors such as x^(u-1)
or (1-x)^(-d) stay stable at node distances down to ~1e-290.

Routes (d or alpha is the *integrand* index; the value is the log-product
one step down, log z_{d-1} / log z_{alpha-1}):

  integrate_single_d(d, u)    int_0^1 x^(u-1) [ (1-x)^-d
                                + (1/log x) sum_{m=1}^d 1/(m (1-x)^(d-m)) ] dx
  integrate_double(alpha, u)  - iint (1-p)^a (pq)^(u-1) / ((1-pq)^a log pq)
  integrate_prelim(alpha, u)  - int x^(u-1) G(1-x) / ((1-x)^a log x) dx,
                              G(w) = sum_{n>=1} w^(n+a)/(n+a)
                                   = int_0^w y^a/(1-y) dy
  integrate_elementary_half() int (1/log x)(1 - atanh(sqrt(1-x))/sqrt(1-x)) dx
                              = sum_{n>=1} log t_n(1)/(2n+1)  (alpha=1/2, u=1)

Near x = 1 the single-d bracket is a cancellation of O((1-x)^-d) pieces with
a finite limit; inside edge_guard it is evaluated from its exact expansion
in (1-x), whose coefficients come from the Bernoulli numbers of the second
kind (the power-series coefficients of y/log(1+y)).
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .series import Approximation, EvalParams

__all__ = [
    "QuadConfig",
    "IntegrandSpec",
    "QuadratureNonConvergence",
    "tanh_sinh_01",
    "integrate_single_d",
    "integrate_double",
    "integrate_prelim",
    "integrate_elementary_half",
    "evaluate_integrand_route",
]

_EPS = 2.0 ** -52


class QuadratureNonConvergence(RuntimeError):
    """Raised when level_max is exhausted; carries the partial estimate."""

    def __init__(self, value: float, err_est: float, level: int):
        super().__init__(f"tanh-sinh did not converge by level {level} "
                         f"(partial value {value!r}, last change {err_est:.3e})")
        self.value = value
        self.err_est = err_est
        self.level = level


@dataclass(frozen=True)
class QuadConfig:
    """Tanh-sinh tuning: halving depth, absolute tolerance, endpoint guard."""

    level_max: int = 12
    abs_tol: float = 1e-11
    edge_guard: float = 0.05

    def __post_init__(self):
        if not 1 <= self.level_max <= 14:
            raise ValueError("QuadConfig: level_max must be in 1..14")
        if not self.abs_tol >= 1e-14:
            raise ValueError("QuadConfig: abs_tol must be >= 1e-14")
        if not 0.0 < self.edge_guard < 0.1:
            raise ValueError("QuadConfig: edge_guard must lie in (0, 0.1)")


DEFAULT_QUAD = QuadConfig()


@dataclass(frozen=True)
class IntegrandSpec:
    """Dispatch record for the integral routes."""

    kind: str  # single_d | double_alpha | prelim_alpha | elementary_half
    params: EvalParams

    def __post_init__(self):
        if self.kind not in ("single_d", "double_alpha", "prelim_alpha",
                             "elementary_half"):
            raise ValueError(f"IntegrandSpec: unknown kind {self.kind!r}")
        if self.kind == "single_d":
            a = self.params.alpha
            if not (float(a) == int(a) and a >= 0):
                raise ValueError("single_d requires integer d >= 0")
        if self.kind in ("double_alpha", "prelim_alpha"):
            if not self.params.alpha > -1:
                raise ValueError(f"{self.kind} requires alpha > -1")
        if self.kind == "elementary_half":
            if self.params.alpha != 0.5 or self.params.u != 1.0:
                raise ValueError("elementary_half is pinned to alpha=1/2, u=1")


# --------------------------------------------------------------------------
# node tables
# --------------------------------------------------------------------------

_TAU_MAX = 6.2          # node distances bottom out near exp(-2*(pi/2)*sinh)
_MIN_DELTA = 1e-290     # keep exponentials like delta^(-0.95) finite
_node_cache: dict[int, tuple] = {}
_node_lock = threading.Lock()


def _level_nodes(level: int):
    """(x, delta, logd, w) for the nodes new at this level.

    delta = distance to the nearest endpoint (x on the left half, 1-x on
    the right half) and logd = log(delta), both free of cancellation.
    """
    with _node_lock:
        cached = _node_cache.get(level)
        if cached is not None:
            return cached
        h = 2.0 ** -level
        kmax = int(_TAU_MAX / h)
        ks = np.arange(-kmax, kmax + 1)
        if level > 0:
            ks = ks[ks % 2 != 0]
        tau = ks * h
        z = 0.5 * math.pi * np.sinh(tau)
        two_z = 2.0 * np.abs(z)
        e2 = np.exp(-two_z)
        delta = e2 / (1.0 + e2)
        logd = -two_z - np.log1p(e2)
        # dx/dtau = (pi/4) cosh(tau) / cosh^2(z), written via e^{-2|z|}
        w = math.pi * np.cosh(tau) * e2 / (1.0 + e2) ** 2
        x = np.where(tau >= 0, 1.0 - delta, delta)
        keep = (w > 0) & (delta > _MIN_DELTA)
        out = (x[keep], delta[keep], logd[keep], w[keep])
        _node_cache[level] = out
        return out


def tanh_sinh_01(f, cfg: QuadConfig = DEFAULT_QUAD) -> tuple[float, float, int]:
    """Integrate f over (0, 1); returns (value, err_est, nodes_used).

    f(x, delta, logd, right) is called with numpy arrays: delta is the
    distance to the nearest endpoint, logd its log, and right a boolean mask
    (True where delta measures the distance to 1).  Raises
    QuadratureNonConvergence when level_max is exhausted.
    """
    S = 0.0
    prev = None
    value = math.nan
    change = math.inf
    nodes_used = 0
    for level in range(cfg.level_max + 1):
        x, delta, logd, w = _level_nodes(level)
        right = x > 0.5
        fx = np.asarray(f(x, delta, logd, right), dtype=float)
        if not np.all(np.isfinite(fx)):
            bad = x[~np.isfinite(fx)][:3]
            raise ValueError(f"integrand returned non-finite values near x={bad}")
        S += float(np.dot(w, fx))
        nodes_used += len(x)
        value = 2.0 ** -level * S
        if prev is not None:
            change = abs(value - prev)
            if level >= 3 and change <= cfg.abs_tol:
                return value, max(change, 8.0 * _EPS * abs(value)), nodes_used
        prev = value
    raise QuadratureNonConvergence(value, change, cfg.level_max)


# --------------------------------------------------------------------------
# the guarded single-d bracket
# --------------------------------------------------------------------------

_bern2_cache: list[Fraction] = [Fraction(1)]
_bracket_cache: dict[tuple[int, int], np.ndarray] = {}
_coef_lock = threading.Lock()


def _bernoulli_second(n: int) -> Fraction:
    """Bernoulli numbers of the second kind: y/log(1+y) = sum b_n y^n."""
    with _coef_lock:
        while len(_bern2_cache) <= n:
            m = len(_bern2_cache)
            s = Fraction(0)
            for k in range(m):
                s += _bern2_cache[k] * Fraction((-1) ** (m - k), m - k + 1)
            _bern2_cache.append(-s)
        return _bern2_cache[n]


def _bracket_series(d: int, nterms: int) -> np.ndarray:
    """Expansion coefficients beta_j of the single-d bracket around x = 1:

        (1-x)^-d + (1/log x) sum_{m=1}^d (1-x)^(m-d)/m = sum_j beta_j (1-x)^j.

    All negative powers cancel exactly (the defining recurrence of the
    second-kind Bernoulli numbers); beta_j = sum_{m=1}^d (-1)^(n-1) b_n / m
    with n = d+1+j-m.
    """
    key = (d, nterms)
    cached = _bracket_cache.get(key)
    if cached is not None:
        return cached
    coeffs = []
    for j in range(nterms):
        acc = Fraction(0)
        for m in range(1, d + 1):
            n = d + 1 + j - m
            acc += Fraction((-1) ** (n - 1), m) * _bernoulli_second(n)
        coeffs.append(float(acc))
    out = np.array(coeffs)
    _bracket_cache[key] = out
    return out


def _bracket_values(d: int, eps: np.ndarray, log_x: np.ndarray,
                    guard: float) -> np.ndarray:
    """The single-d bracket; eps = 1-x and log_x are cancellation-free."""
    if d == 0:
        return np.ones_like(eps)
    out = np.empty_like(eps)
    near = eps < guard
    if near.any():
        nterms = max(10, int(math.ceil(40.0 / -math.log10(guard))))
        beta = _bracket_series(d, nterms)
        e = eps[near]
        acc = np.zeros_like(e)
        for c in beta[::-1]:
            acc = acc * e + c
        out[near] = acc
    far = ~near
    if far.any():
        ef = eps[far]
        s = np.zeros_like(ef)
        for m in range(1, d + 1):
            s += ef ** (m - d) / m
        out[far] = ef ** (-d) + s / log_x[far]
    return out


def integrate_single_d(d: int, u: float,
                       cfg: QuadConfig = DEFAULT_QUAD) -> Approximation:
    """Single-integral route for integer d >= 0; the value is log z_{d-1}(u)."""
    if d < 0:
        raise ValueError("integrate_single_d: d must be >= 0")
    if not u > 0:
        raise ValueError("integrate_single_d: u must be > 0")

    def f(x, delta, logd, right):
        eps = np.where(right, delta, 1.0 - x)
        log_x = np.where(right, np.log1p(-delta * right), logd)
        xp = np.exp((u - 1.0) * log_x)
        return xp * _bracket_values(d, eps, log_x, cfg.edge_guard)

    value, err, nodes = tanh_sinh_01(f, cfg)
    return Approximation(value, err, nodes, "integral_single")


# --------------------------------------------------------------------------
# double integral (iterated; inner pass vectorized across outer nodes)
# --------------------------------------------------------------------------

def integrate_double(alpha: float, u: float,
                     cfg: QuadConfig = DEFAULT_QUAD) -> Approximation:
    """Double-integral route; the value is log z_{alpha-1}(u), alpha > -1.

    Iterated tanh-sinh: the inner (q) quadrature runs once per outer level,
    vectorized across that level's new outer (p) nodes, and its convergence
    is measured in the outer-weighted norm so that deep, negligible-weight
    outer nodes cannot stall refinement.
    """
    if not alpha > -1:
        raise ValueError("integrate_double: requires alpha > -1")
    if not u > 0:
        raise ValueError("integrate_double: u must be > 0")
    inner_tol = cfg.abs_tol / 10.0

    def inner_batch(eps_p, log_p, scaled_wp):
        S = np.zeros(len(eps_p))
        prev = None
        for level in range(cfg.level_max + 1):
            xq, dq, logdq, wq = _level_nodes(level)
            rq = xq > 0.5
            eps_q = np.where(rq, dq, 1.0 - xq)
            log_q = np.where(rq, np.log1p(-dq * rq), logdq)
            log_pq = log_p[:, None] + log_q[None, :]
            one_minus_pq = (eps_p[:, None] + eps_q[None, :]
                            - eps_p[:, None] * eps_q[None, :])
            expo = (alpha * (np.log(eps_p)[:, None] - np.log(one_minus_pq))
                    + (u - 1.0) * log_pq)
            F = -np.exp(expo) / log_pq
            S += F @ wq
            val = 2.0 ** -level * S
            if prev is not None and level >= 3:
                drift = float(np.max(np.abs(val - prev) * scaled_wp))
                if drift <= inner_tol:
                    return val
            prev = val
        raise QuadratureNonConvergence(float(np.max(np.abs(prev))), math.inf,
                                       cfg.level_max)

    S = 0.0
    prev = None
    value = math.nan
    change = math.inf
    nodes = 0
    for level in range(cfg.level_max + 1):
        xp, dp, logdp, wp = _level_nodes(level)
        rp = xp > 0.5
        eps_p = np.where(rp, dp, 1.0 - xp)
        log_p = np.where(rp, np.log1p(-dp * rp), logdp)
        g = inner_batch(eps_p, log_p, wp * 2.0 ** -level)
        S += float(np.dot(wp, g))
        nodes += len(xp)
        value = 2.0 ** -level * S
        if prev is not None:
            change = abs(value - prev)
            if level >= 3 and change <= cfg.abs_tol:
                return Approximation(value, max(change, 8.0 * _EPS * abs(value)),
                                     nodes, "integral_double")
        prev = value
    raise QuadratureNonConvergence(value, change, cfg.level_max)


# --------------------------------------------------------------------------
# preliminary single-integral route for real alpha > -1
# --------------------------------------------------------------------------

def _geom_tail_series_scaled(alpha: float, w: np.ndarray, tol: float) -> np.ndarray:
    """w^-alpha G(w) = sum_{n>=1} w^n/(n+alpha) by direct series; w <= 0.6.

    The w^alpha factor of G is kept out so the caller's division by
    (1-x)^alpha cancels symbolically (no overflow for alpha > 1 at the
    deepest nodes).
    """
    out = np.zeros_like(w)
    if len(w) == 0:
        return out
    wmax = float(np.max(w))
    if wmax <= 0.0:
        return out
    nmax = max(8, int(math.ceil(math.log(tol) / math.log(max(wmax, 1e-12)))) + 2)
    p = w.copy()
    for n in range(1, nmax + 1):
        out += p / (n + alpha)
        p = p * w
    return out


def _bounded_ratio_integral(alpha: float, w: np.ndarray, xcomp: np.ndarray,
                            cfg: QuadConfig, tol: float) -> np.ndarray:
    """H(w) = int_0^w (1 - y^alpha)/(1 - y) dy for w = 1 - xcomp near 1.

    Substituting y = w v gives a bounded integrand on (0, 1) (limit alpha at
    v -> 1), evaluated in one shared tanh-sinh pass across all w.  Both
    1 - y = xcomp + w (1-v) and log y = log w + log v are assembled from
    complements, so no node can produce 0/0.
    """
    log_w = np.log1p(-xcomp)
    S = np.zeros(len(w))
    prev = None
    for level in range(cfg.level_max + 1):
        xv, dv, logdv, wt = _level_nodes(level)
        rv = xv > 0.5
        eps_v = np.where(rv, dv, 1.0 - xv)            # 1 - v
        log_v = np.where(rv, np.log1p(-dv * rv), logdv)
        log_y = log_w[:, None] + log_v[None, :]
        one_minus_y = xcomp[:, None] + w[:, None] * eps_v[None, :]
        num = -np.expm1(alpha * log_y)                # 1 - y^alpha
        F = w[:, None] * num / one_minus_y
        S += F @ wt
        val = 2.0 ** -level * S
        if prev is not None and level >= 3:
            if float(np.max(np.abs(val - prev))) <= tol:
                return val
        prev = val
    raise QuadratureNonConvergence(float(np.max(np.abs(prev))), math.inf,
                                   cfg.level_max)


def integrate_prelim(alpha: float, u: float,
                     cfg: QuadConfig = DEFAULT_QUAD) -> Approximation:
    """Preliminary-representation route, real alpha > -1:

        - int_0^1 x^(u-1) G(1-x) / ((1-x)^alpha log x) dx,
        G(w) = int_0^w y^alpha/(1-y) dy = sum_{n>=1} w^(n+alpha)/(n+alpha).

    The value is log z_{alpha-1}(u).  G uses the direct series for
    w <= 0.6 and the decomposition G = -log x - H(w) beyond it (H bounded,
    one nested quadrature level at tolerance abs_tol/10); -log x dominates
    H there, so the subtraction is benign.
    """
    if not alpha > -1:
        raise ValueError("integrate_prelim: requires alpha > -1")
    if not u > 0:
        raise ValueError("integrate_prelim: u must be > 0")
    inner_tol = cfg.abs_tol / 10.0

    def f(x, delta, logd, right):
        eps = np.where(right, delta, 1.0 - x)          # w = 1 - x
        log_x = np.where(right, np.log1p(-delta * right), logd)
        ratio = np.empty_like(x)                       # G(w) / w^alpha
        small = eps <= 0.6
        if small.any():
            ratio[small] = _geom_tail_series_scaled(alpha, eps[small], inner_tol)
        big = ~small
        if big.any():
            xc = np.where(right, 1.0 - eps, x)[big]    # x, exact on the left
            H = _bounded_ratio_integral(alpha, eps[big], xc, cfg, inner_tol)
            G = -log_x[big] - H
            ratio[big] = G * np.exp(-alpha * np.log(eps[big]))
        xp = np.exp((u - 1.0) * log_x)
        return -xp * ratio / log_x

    value, err, nodes = tanh_sinh_01(f, cfg)
    return Approximation(value, err, nodes, "integral_prelim")


# --------------------------------------------------------------------------
# the elementary integrand at alpha = 1/2, u = 1
# --------------------------------------------------------------------------

def integrate_elementary_half(cfg: QuadConfig = DEFAULT_QUAD) -> Approximation:
    """int_0^1 (1/log x)(1 - atanh(sqrt(1-x))/sqrt(1-x)) dx.

    Equals sum_{n>=1} log t_n(1)/(2n+1): half of the alpha = 1/2
    preliminary integral.  (The exponent normalization is pinned by the
    series oracle in the tests, not assumed.)  The integrand has finite
    endpoint limits: 1/3 at x = 1 and 1/2 at x = 0.
    """
    guard = cfg.edge_guard

    def f(x, delta, logd, right):
        eps = np.where(right, delta, 1.0 - x)          # 1 - x
        log_x = np.where(right, np.log1p(-delta * right), logd)
        out = np.empty_like(x)
        near1 = eps < guard
        if near1.any():
            # 1 - atanh(sqrt(e))/sqrt(e) = -sum_{m>=1} e^m/(2m+1)
            e = eps[near1]
            nterms = max(8, int(math.ceil(18.0 / -math.log10(guard))))
            acc = np.zeros_like(e)
            for m in range(nterms, 0, -1):
                acc = acc * e + 1.0 / (2 * m + 1)
            out[near1] = (acc * e) / (-log_x[near1])
        far = ~near1
        if far.any():
            r = np.sqrt(eps[far])
            # atanh(r) = log1p(r) - log(x)/2 via 1 - r^2 = x
            atanh_r = np.log1p(r) - 0.5 * log_x[far]
            out[far] = (1.0 - atanh_r / r) / log_x[far]
        return out

    value, err, nodes = tanh_sinh_01(f, cfg)
    return Approximation(value, err, nodes, "integral_prelim")


def evaluate_integrand_route(spec: IntegrandSpec,
                             cfg: QuadConfig = DEFAULT_QUAD) -> Approximation:
    """Dispatch an IntegrandSpec to its route."""
    p = spec.params
    if spec.kind == "single_d":
        return integrate_single_d(int(p.alpha), p.u, cfg)
    if spec.kind == "double_alpha":
        return integrate_double(p.alpha, p.u, cfg)
    if spec.kind == "prelim_alpha":
        return integrate_prelim(p.alpha, p.u, cfg)
    return integrate_elementary_half(cfg)
