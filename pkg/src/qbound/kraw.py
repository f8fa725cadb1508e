"""
Exact Krawtchouk polynomials for the binary (q=2) and quaternary (q=4) cases.

All values are exact: integers for integer arguments, ``Fraction`` for
rational ones.  Tables are memoized per ``(q, n)`` and filled with the
three-term recurrence; the defining sum :func:`kraw_value` is kept as an
independent reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Rational = Union[int, Fraction]

ALPHABETS = (2, 4)

#: default width of the bracket returned by :func:`first_root_bracket`
ROOT_BRACKET_WIDTH = Fraction(1, 2**30)


def _check_q(q: int) -> None:
    if q not in ALPHABETS:
        raise ValueError(f"alphabet parameter q must be 2 or 4, got {q!r}")


def _check_index(n: int, *idx: int) -> None:
    if n < 0:
        raise ValueError(f"length n must be non-negative, got {n}")
    for i in idx:
        if not 0 <= i <= n:
            raise ValueError(f"index {i} outside [0, {n}]")


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n.  Negative ``n`` is rejected."""
    if n < 0:
        raise ValueError(f"binomial: negative n={n} not supported")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gbinom(a: Rational, j: int) -> Rational:
    """Generalized binomial a(a-1)...(a-j+1)/j! for rational ``a``."""
    if j < 0:
        return 0
    num = Fraction(1)
    for m in range(j):
        num *= a - m
    num /= math.factorial(j)
    return num.numerator if num.denominator == 1 else num


def kraw_value(q: int, n: int, i: int, x: int) -> int:
    """P_i(x) from the defining sum sum_j (-1)^j (q-1)^(i-j) C(x,j) C(n-x,i-j)."""
    _check_q(q)
    _check_index(n, i, x)
    return sum(
        (-1) ** j * (q - 1) ** (i - j) * binomial(x, j) * binomial(n - x, i - j)
        for j in range(i + 1)
    )


def kraw_at(q: int, n: int, i: int, a: Rational) -> Rational:
    """P_i(a) at an arbitrary rational point, via generalized binomials."""
    _check_q(q)
    _check_index(n, i)
    a = Fraction(a)
    total = Fraction(0)
    for j in range(i + 1):
        total += (-1) ** j * (q - 1) ** (i - j) * gbinom(a, j) * gbinom(n - a, i - j)
    return total.numerator if total.denominator == 1 else total


@dataclass(frozen=True)
class KrawTable:
    """Values P_i(x) for 0 <= i, x <= n; ``values[i][x]``."""

    q: int
    n: int
    values: tuple[tuple[int, ...], ...]

    def __call__(self, i: int, x: int) -> int:
        return self.values[i][x]

    def row(self, i: int) -> tuple[int, ...]:
        return self.values[i]


@lru_cache(maxsize=None)
def kraw_table(q: int, n: int) -> KrawTable:
    """Build the (n+1)x(n+1) table with the three-term recurrence.

    (i+1) P_{i+1}(x) = ((q-1)(n-i) + i - q x) P_i(x) - (q-1)(n-i+1) P_{i-1}(x)
    """
    _check_q(q)
    _check_index(n)
    rows = [[1] * (n + 1)]
    if n >= 1:
        rows.append([(q - 1) * n - q * x for x in range(n + 1)])
    for i in range(1, n):
        prev, cur = rows[i - 1], rows[i]
        nxt = []
        for x in range(n + 1):
            val = ((q - 1) * (n - i) + i - q * x) * cur[x] - (q - 1) * (n - i + 1) * prev[x]
            quo, rem = divmod(val, i + 1)
            assert rem == 0
            nxt.append(quo)
        rows.append(nxt)
    return KrawTable(q, n, tuple(tuple(r) for r in rows))


def kraw_recurrence_check(q: int, n: int) -> bool:
    """Check the memoized table against the defining sum and the recurrence.

    For q=4 the recurrence checked is
    (i+1) P_{i+1}(x) = (3n - 2i - 4x) P_i(x) - 3(n-i+1) P_{i-1}(x).
    """
    table = kraw_table(q, n)
    for i in range(n + 1):
        for x in range(n + 1):
            if table(i, x) != kraw_value(q, n, i, x):
                return False
    for i in range(1, n):
        for x in range(n + 1):
            lhs = (i + 1) * table(i + 1, x)
            if q == 4:
                rhs = (3 * n - 2 * i - 4 * x) * table(i, x) - 3 * (n - i + 1) * table(i - 1, x)
            else:
                rhs = (n - 2 * x) * table(i, x) - (n - i + 1) * table(i - 1, x)
            if lhs != rhs:
                return False
    return True


def evaluate_expansion(q: int, n: int, coeffs: Sequence[Rational]) -> list[Rational]:
    """Point values f(0..n) of f(x) = sum_i coeffs[i] P_i(x)."""
    if len(coeffs) != n + 1:
        raise ValueError(f"expected {n + 1} coefficients, got {len(coeffs)}")
    table = kraw_table(q, n)
    return [sum(c * table(i, x) for i, c in enumerate(coeffs)) for x in range(n + 1)]


@dataclass(frozen=True)
class KrawExpansion:
    """f(x) = sum_i coeffs[i] P_i(x) in the q-ary Krawtchouk basis of length n."""

    q: int
    n: int
    coeffs: tuple[Rational, ...]

    def values(self) -> list[Rational]:
        return evaluate_expansion(self.q, self.n, self.coeffs)


def _normalize(v: Fraction) -> Rational:
    return v.numerator if v.denominator == 1 else v


def expand_in_kraw(q: int, n: int, point_values: Sequence[Rational]) -> KrawExpansion:
    """Coefficients f_i = q^-n sum_j f(j) P_j(i) of the polynomial through f(0..n)."""
    if len(point_values) != n + 1:
        raise ValueError(f"expected {n + 1} point values, got {len(point_values)}")
    table = kraw_table(q, n)
    scale = Fraction(1, q**n)
    coeffs = tuple(
        _normalize(scale * sum(Fraction(fj) * table(j, i) for j, fj in enumerate(point_values)))
        for i in range(n + 1)
    )
    return KrawExpansion(q, n, coeffs)


def _linearize_quaternary(n: int, r: int, s: int) -> list[int]:
    out = []
    for k in range(n + 1):
        c = 0
        for m in range(n - k + 1):
            top = 2 * k + 2 * m - r - s
            if top < 0:
                continue
            term = binomial(k, top) * binomial(n - k, m) * binomial(top, k + m - s)
            if term:
                # top <= k forces r + s - 2m - k >= 0
                c += term * 2 ** (r + s - 2 * m - k) * 3**m
        out.append(c)
    return out


def _linearize_binary(n: int, r: int, s: int) -> list[int]:
    out = []
    for j in range(n + 1):
        if (r + s - j) % 2:
            out.append(0)
            continue
        u, v = (r + s - j) // 2, (r - s + j) // 2
        out.append(binomial(n - j, u) * binomial(j, v) if u >= 0 and v >= 0 else 0)
    return out


def linearize_product(q: int, n: int, r: int, s: int) -> list[int]:
    """Coefficients c_k with P_r(x) P_s(x) = sum_k c_k P_k(x).

    Closed forms only; :func:`expand_in_kraw` of the pointwise product is the
    brute-force cross-check used in the tests.
    """
    _check_q(q)
    _check_index(n, r, s)
    if q == 4:
        return _linearize_quaternary(n, r, s)
    return _linearize_binary(n, r, s)


def christoffel_darboux_check(n: int, t: int, x: int, a: Rational) -> bool:
    """Exact check of the binary Christoffel-Darboux identity at (x, a).

    P_{t+1}(x)P_t(a) - P_t(x)P_{t+1}(a)
        = 2(a-x)/(t+1) C(n,t) sum_{i<=t} P_i(x)P_i(a)/C(n,i)
    """
    if not 0 <= t < n:
        raise ValueError(f"need 0 <= t < n, got t={t}, n={n}")
    _check_index(n, x)
    a = Fraction(a)
    pa = [Fraction(kraw_at(2, n, i, a)) for i in range(t + 2)]
    table = kraw_table(2, n)
    lhs = table(t + 1, x) * pa[t] - table(t, x) * pa[t + 1]
    kernel = sum(Fraction(table(i, x)) * pa[i] / binomial(n, i) for i in range(t + 1))
    rhs = 2 * (a - x) / (t + 1) * binomial(n, t) * kernel
    return lhs == rhs


def _sign(v: Rational) -> int:
    return (v > 0) - (v < 0)


def bisect_sign_change(f, lo: Rational, hi: Rational, width: Rational) -> tuple[Fraction, Fraction]:
    """Shrink [lo, hi] around a sign change of ``f`` until hi - lo <= width.

    ``f`` must take opposite non-zero signs at ``lo`` and ``hi``.  An exact
    zero at a midpoint collapses the bracket to that point.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    s_lo = _sign(f(lo))
    if s_lo == 0:
        return lo, lo
    while hi - lo > width:
        mid = (lo + hi) / 2
        s_mid = _sign(f(mid))
        if s_mid == 0:
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def first_root_bracket(
    q: int, n: int, t: int, width: Rational = ROOT_BRACKET_WIDTH
) -> tuple[Fraction, Fraction]:
    """Rational bracket [lo, hi] around the smallest real root of P_t.

    Scans the integers for the first sign change (P_t(0) > 0), then bisects
    exactly.  Consecutive integers never enclose two roots of a Krawtchouk
    polynomial, so the first sign change locates the first root.
    """
    _check_q(q)
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    row = kraw_table(q, n).row(t)
    for x in range(n + 1):
        if row[x] == 0:
            return Fraction(x), Fraction(x)
        if row[x] < 0:
            return bisect_sign_change(lambda a: kraw_at(q, n, t, a), x - 1, x, width)
    raise RuntimeError(f"P_{t} has no sign change on [0, {n}] (q={q})")
