"""
Quantum weight enumerators and the exact enumerator-feasibility LP.

For an ((n, K, w)) code the enumerators satisfy B_0 = B_0^perp = 1,
0 <= B_i <= B_i^perp, B_i = B_i^perp for i < w and the quaternary MacWilliams
relation B = (1/S) M B^perp with M[i][t] = P_i(t), S = K 2^n.  For fixed K the
rescaled variables A_i = K^2 B_i, A_i^perp = K B_i^perp make every one of these
constraints linear.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .kraw import kraw_table
from .simplex import EQ, LE, Constraint, check_farkas, check_solution, solve_feasibility


@dataclass(frozen=True)
class EnumeratorPair:
    n: int
    B: tuple[Fraction, ...]
    Bperp: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.B) != self.n + 1 or len(self.Bperp) != self.n + 1:
            raise ValueError("enumerators must have n+1 entries")

    @property
    def S(self) -> Fraction:
        return sum(self.Bperp, Fraction(0))

    def is_valid(self) -> bool:
        if self.B[0] != 1 or self.Bperp[0] != 1:
            return False
        if any(not 0 <= b <= bp for b, bp in zip(self.B, self.Bperp)):
            return False
        return self.S >= 1


@dataclass(frozen=True)
class CodeParams:
    n: int
    K: int
    w: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.K < 1:
            raise ValueError(f"K must be >= 1, got {self.K}")
        if not 1 <= self.w <= self.n + 1:
            raise ValueError(f"w must lie in [1, n+1], got {self.w}")

    @property
    def S(self) -> int:
        return self.K * 2**self.n


def macwilliams_image(Bperp: Sequence, n: int) -> list[Fraction]:
    """B_i = (1/S) sum_t Bperp_t P_i(t) with S = sum(Bperp), quaternary P."""
    if len(Bperp) != n + 1:
        raise ValueError(f"expected {n + 1} entries, got {len(Bperp)}")
    if any(b < 0 for b in Bperp):
        raise ValueError("enumerator entries must be non-negative")
    S = sum((Fraction(b) for b in Bperp), Fraction(0))
    if S == 0:
        raise ValueError("all-zero enumerator")
    table = kraw_table(4, n)
    return [sum(Fraction(b) * table(i, t) for t, b in enumerate(Bperp)) / S for i in range(n + 1)]


def min_distance_of_pair(pair: EnumeratorPair) -> int:
    """Largest w with B_i = Bperp_i for all i <= w-1 (n+1 if they agree everywhere)."""
    for i, (b, bp) in enumerate(zip(pair.B, pair.Bperp)):
        if b != bp:
            return i
    return pair.n + 1


@dataclass
class EnumLP:
    """Constraint system over x = (A_0..A_n, Aperp_0..Aperp_n)."""

    params: CodeParams
    constraints: list[Constraint]

    @property
    def num_vars(self) -> int:
        return 2 * (self.params.n + 1)

    def A(self, i: int) -> int:
        return i

    def Aperp(self, i: int) -> int:
        return self.params.n + 1 + i


def build_enum_lp(n: int, K: int, w: int) -> EnumLP:
    params = CodeParams(n, K, w)
    lp = EnumLP(params, [])
    cons = lp.constraints
    table = kraw_table(4, n)
    scale = Fraction(1, 2**n)
    for i in range(n + 1):
        coeffs = {lp.A(i): Fraction(1)}
        for t in range(n + 1):
            c = -scale * table(i, t)
            if c:
                coeffs[lp.Aperp(t)] = coeffs.get(lp.Aperp(t), Fraction(0)) + c
        cons.append(Constraint(coeffs, EQ, Fraction(0), f"macwilliams[{i}]"))
    cons.append(Constraint({lp.A(0): Fraction(1)}, EQ, Fraction(K * K), "A0"))
    cons.append(Constraint({lp.Aperp(0): Fraction(1)}, EQ, Fraction(K), "Aperp0"))
    for i in range(1, n + 1):
        sense = EQ if i < w else LE
        cons.append(
            Constraint({lp.A(i): Fraction(1), lp.Aperp(i): Fraction(-K)}, sense, Fraction(0), f"dist[{i}]")
        )
    return lp


@dataclass
class LPResult:
    n: int
    K: int
    w: int
    feasible: bool
    A: Optional[list[Fraction]] = None
    Aperp: Optional[list[Fraction]] = None
    farkas: Optional[list[Fraction]] = None

    def verify(self) -> bool:
        """Re-check the attached witness or Farkas certificate by substitution."""
        lp = build_enum_lp(self.n, self.K, self.w)
        if self.feasible:
            return check_solution(lp.constraints, list(self.A) + list(self.Aperp))
        return check_farkas(lp.constraints, lp.num_vars, self.farkas)

    def enumerators(self) -> EnumeratorPair:
        """The witness rescaled back to (B, Bperp)."""
        if not self.feasible:
            raise ValueError("infeasible LP has no witness")
        K = self.K
        return EnumeratorPair(
            self.n, tuple(a / (K * K) for a in self.A), tuple(a / K for a in self.Aperp)
        )


def lp_feasible(n: int, K: int, w: int) -> LPResult:
    lp = build_enum_lp(n, K, w)
    res = solve_feasibility(lp.constraints, lp.num_vars)
    if res.feasible:
        x = res.x
        return LPResult(n, K, w, True, A=x[: n + 1], Aperp=x[n + 1 :])
    return LPResult(n, K, w, False, farkas=res.farkas)


def singleton_cap(n: int, w: int) -> int:
    """floor(2^(n-2w+2)), 0 when the exponent is negative."""
    e = n - 2 * w + 2
    return 2**e if e >= 0 else 0


def lp_max_K(n: int, w: int) -> int:
    """Largest integer K <= 2^(n-2w+2) for which the LP is feasible, else 0.

    Every K below the cap is tried from the top; feasibility is not assumed
    monotone in K.
    """
    CodeParams(n, 1, w)
    for K in range(singleton_cap(n, w), 0, -1):
        if lp_feasible(n, K, w).feasible:
            return K
    return 0
