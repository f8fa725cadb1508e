"""
Dual polynomial certificates for the enumerator LP.

A certificate is a coefficient vector f_0..f_n in the Krawtchouk basis.  If
f_i >= 0, f(x) > 0 for x < w and f(x) <= 0 for x >= w, every ((n, K, w))
code satisfies S <= max_{j<w} f(j)/f_j, hence K <= 2^-n max_{j<w} f(j)/f_j
in the quaternary case.  :func:`check_certificate` re-derives all of this
from the coefficients alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .kraw import (
    Rational,
    binomial,
    bisect_sign_change,
    evaluate_expansion,
    expand_in_kraw,
    first_root_bracket,
    kraw_at,
    kraw_table,
    linearize_product,
)


class CertificateError(Exception):
    """A certificate fails one of the key-inequality conditions."""


class SignViolation(CertificateError):
    def __init__(self, condition: str, index: int, value):
        self.condition = condition
        self.index = index
        self.value = value
        super().__init__(f"{condition} violated at index {index} (value {value})")


class ZeroDenominator(CertificateError):
    """f_j = 0 while f(j) > 0 for some j < w: the ratio bound is infinite."""

    def __init__(self, index: int):
        self.condition = "f_j > 0 where f(j) > 0, j < w"
        self.index = index
        super().__init__(f"coefficient f_{index} is zero while f({index}) > 0")


class NoValidA(CertificateError):
    pass


@dataclass(frozen=True)
class DualCertificate:
    q: int
    n: int
    w: int
    coeffs: tuple[Fraction, ...]
    bound: Fraction
    argmax_j: int
    # construction metadata, not part of the proof
    info: dict = field(default_factory=dict, compare=False)

    @property
    def bound_on(self) -> str:
        return "K" if self.q == 4 else "S"

    def values(self) -> list[Rational]:
        return evaluate_expansion(self.q, self.n, self.coeffs)


def _certify(q: int, n: int, w: int, coeffs: Sequence[Rational]) -> tuple[Fraction, int]:
    if q not in (2, 4):
        raise ValueError(f"q must be 2 or 4, got {q}")
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    if not 1 <= w <= n:
        raise ValueError(f"w must lie in [1, n], got {w}")
    for i, c in enumerate(coeffs):
        if c < 0:
            raise SignViolation("f_i >= 0", i, c)
    values = evaluate_expansion(q, n, coeffs)
    for x in range(w):
        if values[x] <= 0:
            raise SignViolation("f(x) > 0 for x < w", x, values[x])
    for x in range(w, n + 1):
        if values[x] > 0:
            raise SignViolation("f(x) <= 0 for x >= w", x, values[x])
    best, arg = None, 0
    for j in range(w):
        if coeffs[j] == 0:
            raise ZeroDenominator(j)
        ratio = Fraction(values[j]) / coeffs[j]
        if best is None or ratio > best:
            best, arg = ratio, j
    if q == 4:
        best /= 2**n
    return best, arg


def check_certificate(cert: DualCertificate) -> Fraction:
    """Verify every condition exactly and return the bound (on K for q=4, on S for q=2).

    The stored ``bound`` and ``argmax_j`` are not trusted; they are recomputed.
    """
    bound, _ = _certify(cert.q, cert.n, cert.w, cert.coeffs)
    return bound


def make_certificate(q: int, n: int, w: int, coeffs: Sequence[Rational], **info) -> DualCertificate:
    coeffs = tuple(Fraction(c) for c in coeffs)
    bound, arg = _certify(q, n, w, coeffs)
    return DualCertificate(q, n, w, coeffs, bound, arg, info)


def singleton_certificate(n: int, w: int) -> DualCertificate:
    """f_x = C(n-x, w-1)/C(n, w-1); the bound is exactly 2^(n-2w+2)."""
    if not 1 <= w or 2 * w > n + 2:
        raise ValueError(f"need 1 <= w <= (n+2)/2, got n={n}, w={w}")
    denom = binomial(n, w - 1)
    coeffs = [Fraction(binomial(n - x, w - 1), denom) for x in range(n + 1)]
    return make_certificate(4, n, w, coeffs, kind="singleton")


def singleton_point_values(n: int, w: int) -> list[Fraction]:
    """Closed form f(x) = 4^(n-w+1) C(n-x, n-w+1)/C(n, w-1) of the Singleton polynomial."""
    denom = binomial(n, w - 1)
    return [Fraction(4 ** (n - w + 1) * binomial(n - x, n - w + 1), denom) for x in range(n + 1)]


def hamming_certificate(n: int, w: int) -> DualCertificate:
    """f_i = P_e(i)^2 with e = (w-1)/2.

    Point values are f(x) = 4^n c_x where c linearizes P_e^2, so f vanishes
    for x > 2e.  Raises :class:`ZeroDenominator` when P_e has an integer root
    below w.
    """
    if w < 3 or w % 2 == 0:
        raise ValueError(f"Hamming certificate needs odd w >= 3, got {w}")
    if w > n:
        raise ValueError(f"need w <= n, got n={n}, w={w}")
    e = (w - 1) // 2
    row = kraw_table(4, n).row(e)
    coeffs = [row[i] ** 2 for i in range(n + 1)]
    return make_certificate(4, n, w, coeffs, kind="hamming", e=e)


def hamming_point_values(n: int, w: int) -> list[int]:
    """f(x) = 4^n c_x, with c from the closed-form product linearization."""
    e = (w - 1) // 2
    return [4**n * c for c in linearize_product(4, n, e, e)]


# -- binary first LP bound ---------------------------------------------------

_A_WIDTH = Fraction(1, 2**16)


@dataclass(frozen=True)
class FirstLPParams:
    n: int
    w: int
    t: int
    a: Fraction


def prescribed_t(n: int, w: int) -> int:
    """round(n (1/2 - sqrt(d(1-d)))), d = w/n."""
    d = w / n
    return int(round(n * (0.5 - math.sqrt(d * (1 - d)))))


def first_lp_point_values(n: int, t: int, a: Rational) -> list[Fraction]:
    """f(x) = {P_{t+1}(x)P_t(a) - P_t(x)P_{t+1}(a)}^2 / (a - x) at x = 0..n.

    Evaluated through the Christoffel-Darboux kernel, so the integer x = a
    is handled as the polynomial it is.
    """
    a = Fraction(a)
    table = kraw_table(2, n)
    pa = [Fraction(kraw_at(2, n, i, a)) for i in range(t + 2)]
    scale = Fraction(2 * binomial(n, t), t + 1)
    out = []
    for x in range(n + 1):
        bracket = table(t + 1, x) * pa[t] - table(t, x) * pa[t + 1]
        kernel = sum(table(i, x) * pa[i] / binomial(n, i) for i in range(t + 1))
        out.append(scale * bracket * kernel)
    return out


def _root_or_inf(n: int, t: int, width: Fraction) -> tuple[Fraction, Fraction]:
    if t == 0:
        big = Fraction(n + 1)
        return big, big
    return first_root_bracket(2, n, t, width)


def _a_candidates(n: int, w: int, t: int) -> list[Fraction]:
    """Rational points a with x_1(t+1) < a < x_1(t) and w-1 < a <= w."""
    if t + 1 > n:
        return []
    # integer prefilter: first nonpositive entry of a row sits just past its first root
    table = kraw_table(2, n)
    first_nonpos = lambda s: next(x for x in range(n + 1) if table(s, x) <= 0)
    if first_nonpos(t + 1) > w or (t > 0 and first_nonpos(t) < w):
        return []
    _, hi_next = first_root_bracket(2, n, t + 1, _A_WIDTH)
    lo_cur, _ = _root_or_inf(n, t, _A_WIDTH)
    lo = max(Fraction(w - 1), hi_next)
    hi = min(Fraction(w), lo_cur)
    if lo >= hi:
        return []
    if hi == w and hi < lo_cur:
        top = hi
    else:
        top = hi - (hi - lo) / 64
    bottom = lo + (hi - lo) / 64
    # the optimal point solves P_t(a) = -P_{t+1}(a); clamp it into the window
    if t == 0:
        target = top
    else:
        s = lambda v: kraw_at(2, n, t, v) + kraw_at(2, n, t + 1, v)
        r_lo, r_hi = bisect_sign_change(s, hi_next, lo_cur, _A_WIDTH)
        target = min(max((r_lo + r_hi) / 2, bottom), top)
    cands = [target, (lo + hi) / 2, top, bottom]
    seen, out = set(), []
    for c in cands:
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def first_lp_binary_certificate(n: int, w: int, t: Optional[int] = None) -> DualCertificate:
    """Binary first-LP certificate built on the Christoffel-Darboux kernel.

    Every degree t whose root window (x_1(t+1), x_1(t)) meets (w-1, w] is
    tried (or only ``t`` if given), with a few rational a inside the window
    starting from the one closest to P_t(a) = -P_{t+1}(a).  The certificate
    with the smallest exactly verified bound is returned.
    """
    if not 1 <= w <= n:
        raise ValueError(f"need 1 <= w <= n, got n={n}, w={w}")
    t0 = prescribed_t(n, w)
    ts = [t] if t is not None else sorted(range(n), key=lambda s: (abs(s - t0), s))
    best: Optional[DualCertificate] = None
    tried = []
    for tt in ts:
        for a in _a_candidates(n, w, tt):
            tried.append((tt, a))
            values = first_lp_point_values(n, tt, a)
            coeffs = expand_in_kraw(2, n, values).coeffs
            try:
                cert = make_certificate(
                    2, n, w, coeffs, kind="first_lp_binary", t=tt, a=a, t_prescribed=t0
                )
            except CertificateError:
                continue
            if best is None or cert.bound < best.bound:
                best = cert
    if best is None:
        raise NoValidA(f"no rational a passed verification for n={n}, w={w} ({len(tried)} tried)")
    return best
