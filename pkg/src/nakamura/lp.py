"""Exact rational linear programming via the two-phase simplex method.

Everything is computed in ``fractions.Fraction``: feasibility and
optimality decisions never touch floating point, and Bland's pivoting rule
makes the solver deterministic and immune to cycling.  Problem sizes here
are desk scale (tens of rows, up to a few thousand columns), where exact
pivoting is entirely affordable.

Minimization only; callers maximize by negating the cost vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass
class LpResult:
    """Outcome of a solve.

    ``duals`` holds one multiplier per input constraint row, signed so that
    ``sum_i duals[i] * rhs[i]`` equals the optimal objective and
    ``A^T duals <= costs`` componentwise (complementary-slackness certificate
    for minimization).
    """

    status: str
    objective: Optional[Fraction] = None
    x: Optional[list[Fraction]] = None
    duals: Optional[list[Fraction]] = None


def solve_lp(
    costs: Sequence, rows: Sequence[tuple[Sequence, str, object]]
) -> LpResult:
    """Minimize ``costs . x`` subject to ``rows`` and ``x >= 0``.

    Each row is ``(coeffs, rel, rhs)`` with ``rel`` one of ``"<="``,
    ``">="``, ``"=="``.
    """
    n = len(costs)
    costs = [Fraction(c) for c in costs]
    m = len(rows)

    # normalize rows to non-negative rhs and assign marker columns
    norm = []
    flip = []
    for coeffs, rel, rhs in rows:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != n:
            raise ValueError("coefficient row length mismatch")
        rhs = Fraction(rhs)
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "==": "=="}[rel]
            flip.append(-1)
        else:
            flip.append(1)
        norm.append((coeffs, rel, rhs))

    n_slack = sum(1 for _, rel, _ in norm if rel in ("<=", ">="))
    n_art = sum(1 for _, rel, _ in norm if rel in (">=", "=="))
    total = n + n_slack + n_art
    art_start = n + n_slack

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    # marker[i] = (column, sign) used to read the dual of row i at the end
    marker: list[tuple[int, int]] = []
    s_idx = n
    a_idx = art_start
    artificial_rows = []
    for i, (coeffs, rel, rhs) in enumerate(norm):
        row = coeffs + [_ZERO] * (total - n) + [rhs]
        if rel == "<=":
            row[s_idx] = _ONE
            basis.append(s_idx)
            marker.append((s_idx, -1))
            s_idx += 1
        elif rel == ">=":
            row[s_idx] = -_ONE
            marker.append((s_idx, +1))
            s_idx += 1
            row[a_idx] = _ONE
            basis.append(a_idx)
            artificial_rows.append(i)
            a_idx += 1
        else:
            row[a_idx] = _ONE
            basis.append(a_idx)
            marker.append((a_idx, -1))
            artificial_rows.append(i)
            a_idx += 1
        tableau.append(row)

    def pivot(z: list[Fraction], r: int, c: int) -> None:
        prow = tableau[r]
        inv = _ONE / prow[c]
        if inv != 1:
            tableau[r] = prow = [v * inv for v in prow]
        for row in tableau:
            if row is prow:
                continue
            f = row[c]
            if f:
                for j in range(total + 1):
                    if prow[j]:
                        row[j] -= f * prow[j]
        f = z[c]
        if f:
            for j in range(total + 1):
                if prow[j]:
                    z[j] -= f * prow[j]
        basis[r] = c

    def run(z: list[Fraction], allowed: int) -> str:
        # Bland's rule: lowest-index entering column with negative reduced
        # cost, lowest basis index among ratio ties.
        while True:
            enter = -1
            for j in range(allowed):
                if z[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return OPTIMAL
            best = None
            leave = -1
            for i, row in enumerate(tableau):
                a = row[enter]
                if a > 0:
                    ratio = row[total] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return UNBOUNDED
            pivot(z, leave, enter)

    # phase 1: minimize the sum of artificials
    if n_art:
        z = [_ZERO] * (total + 1)
        for j in range(art_start, total):
            z[j] = _ONE
        for i in artificial_rows:
            row = tableau[i]
            for j in range(total + 1):
                if row[j]:
                    z[j] -= row[j]
        run(z, total)
        if -z[total] > 0:
            return LpResult(INFEASIBLE)
        # pivot leftover artificials out of the basis where possible
        for i in range(m):
            if basis[i] >= art_start:
                row = tableau[i]
                for j in range(art_start):
                    if row[j]:
                        pivot(z, i, j)
                        break

    # phase 2 on the true costs; artificial columns may not re-enter
    z = costs + [_ZERO] * (n_slack + n_art) + [_ZERO]
    for i, b in enumerate(basis):
        if b >= art_start:
            continue
        f = z[b]
        if f:
            row = tableau[i]
            for j in range(total + 1):
                if row[j]:
                    z[j] -= f * row[j]
    status = run(z, art_start)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED)

    x = [_ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tableau[i][total]
    duals = [f * sign * z[col] for f, (col, sign) in zip(flip, marker)]
    return LpResult(OPTIMAL, objective=-z[total], x=x, duals=duals)
