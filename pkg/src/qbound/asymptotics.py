"""
Asymptotic exponent curves (log2 K)/n or (log2 S)/n against delta = w/n.

Plain double precision.  The finite-n certificates live in
:mod:`qbound.certificates`; everything here is a limit curve or the machinery
used to derive one (entropy, root asymptotics, Krawtchouk log-asymptotics,
the exponent objectives and their scans).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate, optimize

LOG2_3 = math.log2(3)

#: proven range of the binary first LP bound
LP1_BINARY_DELTA_MAX = 0.1865

QUAD_EPSABS = 1e-12
ROOT_RESIDUAL = 1e-10


class DomainError(ValueError):
    pass


class NoSignChange(ArithmeticError):
    pass


@dataclass(frozen=True)
class CurvePoint:
    delta: float
    exponent: float
    curve_id: str
    valid: bool = True


def entropy(x: float) -> float:
    """Binary entropy in bits, H(0) = H(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"entropy argument {x} outside [0, 1]")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def gv_exponent(delta: float) -> float:
    """Gilbert-Varshamov existence curve 1 - delta log2(3) - H(delta)."""
    if not 0.0 <= delta <= 0.75:
        raise DomainError(f"GV exponent defined on [0, 3/4], got {delta}")
    return 1.0 - delta * LOG2_3 - entropy(delta)


def singleton_exponent(delta: float) -> float:
    if not 0.0 <= delta <= 0.5:
        raise DomainError(f"Singleton exponent defined on [0, 1/2], got {delta}")
    return 1.0 - 2.0 * delta


def xi_e(tau: float) -> float:
    """Limit of r_e/n, r_e the smallest root of the quaternary P_e, e = tau n."""
    if not 0.0 <= tau <= 1.0:
        raise DomainError(f"tau outside [0, 1]: {tau}")
    return 0.75 - tau / 2 - 0.5 * math.sqrt(3 * tau * (1 - tau))


def binary_first_root(tau: float) -> float:
    """Limit of x_1(t)/n for the binary P_t, t = tau n."""
    if not 0.0 <= tau <= 1.0:
        raise DomainError(f"tau outside [0, 1]: {tau}")
    return 0.5 - math.sqrt(tau * (1 - tau))


def hamming_exponent(delta: float) -> CurvePoint:
    """1 - (delta/2) log2(3) - H(delta/2), flagged valid iff delta <= xi_e(delta/2)."""
    if not 0.0 <= delta <= 1.0:
        raise DomainError(f"delta outside [0, 1]: {delta}")
    tau = delta / 2
    value = 1.0 - tau * LOG2_3 - entropy(tau)
    return CurvePoint(delta, value, "hamming", delta <= xi_e(tau))


def hamming_validity_limit() -> float:
    """The fixed point delta = xi_e(delta/2) ending the proven Hamming range."""
    return optimize.brentq(lambda d: d - xi_e(d / 2), 1e-6, 0.75, xtol=1e-14)


def hamming_zero() -> float:
    """delta at which the Hamming curve reaches zero."""
    return optimize.brentq(lambda d: hamming_exponent(d).exponent, 0.2, 0.6, xtol=1e-14)


def gv_zero() -> float:
    return optimize.brentq(gv_exponent, 0.05, 0.5, xtol=1e-14)


def lp1_exponent_binary(delta: float) -> CurvePoint:
    """H(1/2 - sqrt(delta(1 - delta))), proven for delta <= 0.1865."""
    if not 0.0 <= delta <= 0.5:
        raise DomainError(f"delta outside [0, 1/2]: {delta}")
    value = entropy(binary_first_root(delta))
    return CurvePoint(delta, value, "lp1_binary", delta <= LP1_BINARY_DELTA_MAX)


# -- alpha(tau, xi) ------------------------------------------------------------


def alpha_equation(nu, tau: float, xi: float):
    """d/dnu of xi H((2xi+2nu-2tau)/xi) + (1-xi) H(nu/(1-xi)) + nu log2 3.

    Accepts a scalar or an array of ``nu``.
    """
    u = (2 * xi + 2 * np.asarray(nu, dtype=float) - 2 * tau) / xi
    v = np.asarray(nu, dtype=float) / (1 - xi)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = 2 * np.log2(1 - u) - 2 * np.log2(u) + np.log2(1 - v) - np.log2(v) + LOG2_3
    return float(out) if out.ndim == 0 else out


def alpha_interval(tau: float, xi: float) -> tuple[float, float]:
    return max(0.0, tau - xi), tau - xi / 2


def alpha_root(tau: float, xi: float, scan_points: int = 1000) -> float:
    """The unique root in nu of :func:`alpha_equation` on [max(0, tau-xi), tau-xi/2].

    The function runs from +inf at the left end to -inf at the right end; a
    scan of ``scan_points`` interior points checks that it crosses zero once.
    """
    if not 0.0 < xi < 1.0 or tau <= 0.0:
        raise DomainError(f"need 0 < xi < 1 and tau > 0, got tau={tau}, xi={xi}")
    lo, hi = alpha_interval(tau, xi)
    if hi <= lo:
        raise DomainError(f"empty interval for tau={tau}, xi={xi}")
    grid = lo + (hi - lo) * (np.arange(1, scan_points + 1) / (scan_points + 1))
    vals = alpha_equation(grid, tau, xi)
    if not np.all(np.isfinite(vals)):
        raise DomainError(f"non-finite values on the alpha interval at tau={tau}, xi={xi}")
    changes = np.flatnonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))
    if vals[0] <= 0 or vals[-1] >= 0 or len(changes) != 1:
        raise NoSignChange(
            f"expected a single + to - crossing on [{lo}, {hi}], found {len(changes)}"
        )
    k = changes[0]
    root = optimize.brentq(
        alpha_equation, grid[k], grid[k + 1], args=(tau, xi), xtol=1e-16, rtol=1e-15
    )
    if abs(alpha_equation(root, tau, xi)) >= ROOT_RESIDUAL:
        # steep log terms: polish with a few bisection steps on the residual
        a, b = grid[k], grid[k + 1]
        for _ in range(200):
            m = 0.5 * (a + b)
            if alpha_equation(m, tau, xi) > 0:
                a = m
            else:
                b = m
        root = 0.5 * (a + b)
    return root


# -- Krawtchouk log-asymptotics ----------------------------------------------


def _kalai_integrand(q: int, tau: float) -> Callable[[float], float]:
    if q == 4:

        def g(z):
            b = 3 - 2 * z - 4 * tau
            disc = b * b - 12 * z * (1 - z)
            return math.log2((b + math.sqrt(max(disc, 0.0))) / (6 * (1 - z)))

    elif q == 2:

        def g(z):
            b = 1 - 2 * tau
            disc = b * b - 4 * z * (1 - z)
            return math.log2((b + math.sqrt(max(disc, 0.0))) / (2 - 2 * z))

    else:
        raise ValueError(f"q must be 2 or 4, got {q}")
    return g


def first_root_limit(q: int, tau: float) -> float:
    return xi_e(tau) if q == 4 else binary_first_root(tau)


def kalai_integral(q: int, tau: float, xi: float) -> float:
    """int_0^xi of the log2 ratio limit of P_t(j+1)/P_t(j)."""
    if xi < 0:
        raise DomainError(f"xi must be non-negative, got {xi}")
    if xi == 0:
        return 0.0
    limit = first_root_limit(q, tau)
    if xi > limit + 1e-15:
        raise DomainError(f"xi={xi} beyond the first-root limit {limit} (tau={tau}, q={q})")
    val, err = integrate.quad(
        _kalai_integrand(q, tau), 0.0, min(xi, limit), epsabs=QUAD_EPSABS, epsrel=0, limit=200
    )
    return val


def kalai_log_kraw(q: int, tau: float, xi: float) -> float:
    """Limit of (1/n) log2 P_t(x) for t = tau n, x = xi n below the first root.

    q=4: H(tau) + tau log2 3 + integral; q=2: H(tau) + integral.
    """
    if not 0.0 <= tau <= 1.0:
        raise DomainError(f"tau outside [0, 1]: {tau}")
    start = entropy(tau) + (tau * LOG2_3 if q == 4 else 0.0)
    return start + kalai_integral(q, tau, xi)


def antiderivative_closed_form(tau: float, z: float) -> float:
    """Closed-form antiderivative in z of the q=4 integrand (log base 2).

    With a = 3 - 4 tau, c = a - 2z, s = sqrt(c^2 - 12 z(1 - z)):
    -z log 6 + (1-z) log(1-z) + z log(c+s) + (a-1)/4 log(3+a-8z-2s)
    - 1/2 log(6 + 2a - a^2 - 10z + 2az - (a-2)s).  The z-free constant
    log(a-2) - log 2 is dropped; it cancels in F(xi) - F(0).
    """
    a = 3 - 4 * tau
    c = a - 2 * z
    disc = c * c - 12 * z * (1 - z)
    if disc < 0 or not 0 <= z < 1:
        raise DomainError(f"z={z} outside the integrand domain for tau={tau}")
    s = math.sqrt(disc)
    val = (
        -z * math.log(6)
        + ((1 - z) * math.log(1 - z) if z < 1 else 0.0)
        + (z * math.log(c + s) if z > 0 else 0.0)
        + (a - 1) / 4 * math.log(3 + a - 8 * z - 2 * s)
        - 0.5 * math.log(6 + 2 * a - a * a - 10 * z + 2 * a * z - (a - 2) * s)
    )
    return val / math.log(2)


def kalai_integral_closed_form(tau: float, xi: float) -> float:
    return antiderivative_closed_form(tau, xi) - antiderivative_closed_form(tau, 0.0)


# -- exponent objectives and scans ---------------------------------------------


def hamming_point_exponent(tau: float, xi: float) -> float:
    """Limit of (1/n) log2 f(x) for the Hamming polynomial:
    2 + xi + xi H(u) + (1-xi) H(alpha/(1-xi)) + alpha log2 3."""
    if xi == 0:
        return 2.0 + entropy(tau) + tau * LOG2_3
    lo, hi = alpha_interval(tau, xi)
    al = lo if hi - lo < 1e-13 else alpha_root(tau, xi)
    u = min(max((2 * xi + 2 * al - 2 * tau) / xi, 0.0), 1.0)
    v = al / (1 - xi)
    return 2.0 + xi + xi * entropy(u) + (1 - xi) * entropy(v) + al * LOG2_3


def hamming_coeff_exponent(tau: float, xi: float) -> float:
    """Limit of (1/n) log2 f_x with f_x = P_e(x)^2."""
    return 2 * tau * LOG2_3 + 2 * entropy(tau) + 2 * kalai_integral(4, tau, xi)


def hamming_objective(delta: float, xi: float) -> float:
    """Exponent of f(x)/f_x minus 1 (K = S/2^n), tau = delta/2.

    The integral enters once here, with coefficient 1, although f_x is a
    square.  At xi = 0 this reduces to the Hamming curve either way.
    """
    tau = delta / 2
    return (
        hamming_point_exponent(tau, xi)
        - 1.0
        - 2 * tau * LOG2_3
        - 2 * entropy(tau)
        - kalai_integral(4, tau, xi)
    )


def hamming_objective_squared(delta: float, xi: float) -> float:
    """Same objective with f_x's exponent taken as twice the log-Krawtchouk limit."""
    tau = delta / 2
    return hamming_point_exponent(tau, xi) - 1.0 - hamming_coeff_exponent(tau, xi)


def binary_lp_objective(tau: float, xi: float) -> float:
    """Limit of (1/n) log2 f(x)/f_x for the binary first-LP polynomial:
    2H(tau) + 2 int_0^xi ... - (1-xi) H((2tau-xi)/(2-2xi)) - xi."""
    arg = (2 * tau - xi) / (2 - 2 * xi)
    return (
        2 * entropy(tau)
        + 2 * kalai_integral(2, tau, xi)
        - (1 - xi) * entropy(min(max(arg, 0.0), 1.0))
        - xi
    )


@dataclass(frozen=True)
class ScanResult:
    argmax_xi: float
    max_value: float
    value_at_zero: float
    upper: float
    errors: tuple[tuple[float, str], ...] = ()


def maximize_on_interval(
    func: Callable[[float], float], upper: float, grid: int = 201, resolution: float = 1e-4
) -> ScanResult:
    """Grid maximization on [0, upper], zooming around the best node until the
    spacing is below ``resolution``.  Points raising a domain error are recorded
    and skipped."""
    errors: list[tuple[float, str]] = []

    def safe(x):
        try:
            return func(x)
        except (DomainError, NoSignChange) as exc:
            errors.append((x, str(exc)))
            return -math.inf

    at_zero = safe(0.0)
    lo, hi = 0.0, upper
    xs = np.linspace(lo, hi, grid)
    vals = np.array([safe(x) for x in xs])
    best = int(np.argmax(vals))
    best_x, best_v = float(xs[best]), float(vals[best])
    spacing = (hi - lo) / (grid - 1)
    while spacing > resolution:
        lo, hi = max(0.0, best_x - spacing), min(upper, best_x + spacing)
        xs = np.linspace(lo, hi, 21)
        vals = np.array([safe(x) for x in xs])
        k = int(np.argmax(vals))
        if vals[k] > best_v:
            best_x, best_v = float(xs[k]), float(vals[k])
        spacing = (hi - lo) / 20
    return ScanResult(best_x, best_v, at_zero, upper, tuple(errors))


def hamming_exponent_scan(delta: float, squared_integral: bool = False) -> ScanResult:
    """Maximize the Hamming-type exponent objective over xi in [0, delta]."""
    if not 0.0 < delta <= 0.34:
        raise DomainError(f"scan defined for 0 < delta <= 0.34, got {delta}")
    obj = hamming_objective_squared if squared_integral else hamming_objective
    return maximize_on_interval(lambda x: obj(delta, x), delta)


def binary_lp_scan(tau: float) -> ScanResult:
    """Maximize :func:`binary_lp_objective` over xi in [0, min(delta, 2 tau)]."""
    if not 0.0 < tau < 0.5:
        raise DomainError(f"tau outside (0, 1/2): {tau}")
    upper = min(binary_first_root(tau), 2 * tau)
    return maximize_on_interval(lambda x: binary_lp_objective(tau, x), upper)


# -- exact finite-n diagnostics -------------------------------------------------


def exact_log_kraw(q: int, n: int, i: int, x: int) -> float:
    """(1/n) log2 |P_i(x)| from the exact integer value."""
    from .kraw import kraw_value

    v = abs(kraw_value(q, n, i, x))
    if v == 0:
        return -math.inf
    return (v.bit_length() - 1 + math.log2(v / 2 ** (v.bit_length() - 1))) / n


def exact_hamming_ratio_exponent(n: int, e: int, x: int) -> float:
    """(1/n) log2(f(x)/f_x) - 1 for the exact Hamming certificate with w = 2e+1."""
    from .kraw import kraw_table, linearize_product

    fx = 4**n * linearize_product(4, n, e, e)[x]
    coeff = kraw_table(4, n)(e, x) ** 2
    if fx == 0 or coeff == 0:
        return -math.inf
    return (_log2_int(fx) - _log2_int(coeff)) / n - 1.0


def _log2_int(v: int) -> float:
    b = v.bit_length() - 1
    return b + math.log2(v / 2**b)


# -- tabulation ----------------------------------------------------------------

CURVES: dict[str, Callable[[float], CurvePoint]] = {
    "hamming": hamming_exponent,
    "gv": lambda d: CurvePoint(d, gv_exponent(d), "gv", True),
    "singleton": lambda d: CurvePoint(d, singleton_exponent(d), "singleton", True),
    "lp1_binary": lp1_exponent_binary,
}


def tabulate_curve(curve_id: str, delta_min: float, delta_max: float, step: float) -> list[CurvePoint]:
    """Sample a named curve at delta_min, delta_min + step, ... <= delta_max.

    Points are generated as delta_min + k*step (no accumulated rounding) and
    rounded to 12 decimals.
    """
    if curve_id not in CURVES:
        raise KeyError(f"unknown curve {curve_id!r}; choose from {sorted(CURVES)}")
    if step <= 0:
        raise ValueError("step must be positive")
    if delta_max < delta_min:
        raise ValueError("empty delta range")
    count = int(math.floor((delta_max - delta_min) / step + 1e-9)) + 1
    func = CURVES[curve_id]
    return [func(round(delta_min + k * step, 12)) for k in range(count)]
