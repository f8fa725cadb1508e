"""
Exact rational phase-1 simplex with Bland's rule.

Only feasibility is decided.  A feasible answer carries a basic solution; an
infeasible one carries Farkas multipliers.  Both can be re-checked by plain
substitution with :func:`check_solution` and :func:`check_farkas`, which do
not depend on the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

EQ = "=="
LE = "<="
GE = ">="


@dataclass(frozen=True)
class Constraint:
    coeffs: dict[int, Fraction]
    sense: str
    rhs: Fraction
    name: str = ""


@dataclass
class FeasibilityResult:
    feasible: bool
    x: Optional[list[Fraction]] = None
    # one multiplier per constraint, in the order they were given
    farkas: Optional[list[Fraction]] = None
    pivots: int = 0


def _dot(coeffs: dict[int, Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum((c * x[j] for j, c in coeffs.items()), Fraction(0))


def check_solution(constraints: Sequence[Constraint], x: Sequence[Fraction]) -> bool:
    """True iff x >= 0 and every constraint holds exactly."""
    if any(v < 0 for v in x):
        return False
    for con in constraints:
        lhs = _dot(con.coeffs, x)
        if con.sense == EQ and lhs != con.rhs:
            return False
        if con.sense == LE and lhs > con.rhs:
            return False
        if con.sense == GE and lhs < con.rhs:
            return False
    return True


def check_farkas(constraints: Sequence[Constraint], num_vars: int, y: Sequence[Fraction]) -> bool:
    """True iff ``y`` proves {x >= 0, constraints} empty.

    Requires y_i >= 0 on "<=" rows, y_i <= 0 on ">=" rows, sum_i y_i a_i >= 0
    componentwise and sum_i y_i b_i < 0.  Any feasible x would then give
    0 <= (sum_i y_i a_i) x <= sum_i y_i b_i < 0.
    """
    if len(y) != len(constraints):
        return False
    combo = [Fraction(0)] * num_vars
    rhs = Fraction(0)
    for yi, con in zip(y, constraints):
        if con.sense == LE and yi < 0:
            return False
        if con.sense == GE and yi > 0:
            return False
        for j, c in con.coeffs.items():
            combo[j] += yi * c
        rhs += yi * con.rhs
    return all(v >= 0 for v in combo) and rhs < 0


def solve_feasibility(
    constraints: Sequence[Constraint], num_vars: int, max_pivots: int = 100_000
) -> FeasibilityResult:
    """Phase 1: minimize the sum of artificials over {x >= 0, constraints}."""
    m = len(constraints)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    flips: list[int] = []
    num_slack = sum(con.sense != EQ for con in constraints)
    width = num_vars + num_slack + m
    slack_col = num_vars
    for con in constraints:
        row = [Fraction(0)] * width
        for j, c in con.coeffs.items():
            row[j] = Fraction(c)
        b = Fraction(con.rhs)
        if con.sense == LE:
            row[slack_col] = Fraction(1)
            slack_col += 1
        elif con.sense == GE:
            row[slack_col] = Fraction(-1)
            slack_col += 1
        flip = -1 if b < 0 else 1
        if flip < 0:
            row = [-v for v in row]
            b = -b
        flips.append(flip)
        rows.append(row)
        rhs.append(b)
    art0 = num_vars + num_slack
    for i in range(m):
        rows[i][art0 + i] = Fraction(1)
    basis = [art0 + i for i in range(m)]

    # phase-1 objective: cost 1 on artificials; reduced cost d_j = c_j - sum_i c_B(i) a_ij
    cost = [Fraction(0)] * art0 + [Fraction(1)] * m
    pivots = 0
    while True:
        reduced = list(cost)
        for i, bj in enumerate(basis):
            cb = cost[bj]
            if cb:
                r = rows[i]
                for j in range(width):
                    if r[j]:
                        reduced[j] -= cb * r[j]
        entering = next((j for j in range(width) if reduced[j] < 0), None)
        if entering is None:
            break
        # ratio test, Bland: smallest basis index among ties
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise RuntimeError("phase-1 objective unbounded; cannot happen")
        p = best[1]
        piv = rows[p][entering]
        rows[p] = [v / piv for v in rows[p]]
        rhs[p] /= piv
        for i in range(m):
            if i != p and rows[i][entering]:
                f = rows[i][entering]
                rp = rows[p]
                rows[i] = [vi - f * vp for vi, vp in zip(rows[i], rp)]
                rhs[i] -= f * rhs[p]
        basis[p] = entering
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("pivot limit exceeded")

    value = sum((rhs[i] for i, bj in enumerate(basis) if bj >= art0), Fraction(0))
    if value == 0:
        x = [Fraction(0)] * width
        for i, bj in enumerate(basis):
            x[bj] = rhs[i]
        return FeasibilityResult(True, x=x[:num_vars], pivots=pivots)

    # dual of phase 1: y = c_B B^-1, read off the artificial columns.  Then
    # A^T y <= c = 0 on structural columns and b^T y = value > 0, so -y is a
    # Farkas vector for the flipped system; undo the row flips.
    y = [Fraction(0)] * m
    for i, bj in enumerate(basis):
        cb = cost[bj]
        if cb:
            for k in range(m):
                y[k] += cb * rows[i][art0 + k]
    farkas = [-yk * flips[k] for k, yk in enumerate(y)]
    return FeasibilityResult(False, farkas=farkas, pivots=pivots)
