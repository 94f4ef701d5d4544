"""Exact rational linear programming: two-phase primal simplex.

Minimizes c.x subject to rows (a.x >= b, a.x <= b or a.x = b) and
elementwise lower bounds on x (default 0). Everything is computed over
exact rationals; there is no floating point anywhere in the solve path and
all comparisons are exact.

Pivoting follows Bland's rule (lowest-index entering variable with
negative reduced cost; ties in the ratio test broken by lowest basic
variable index), which guarantees termination on degenerate instances.
Duals are read from the final basis, so the optimal dual vector comes from
the same solve as the primal. Identical inputs always produce identical
pivot sequences and therefore identical certified outputs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch
from .rationals import ONE, ZERO, Rational, format_rational


class Sense(enum.Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpProblem:
    """min objective . x  subject to  rows[i] . x  (senses[i])  rhs[i],
    x >= lower_bounds (default 0)."""

    objective: tuple
    rows: tuple
    senses: tuple
    rhs: tuple
    lower_bounds: tuple

    @classmethod
    def minimize(cls, objective, constraints, lower_bounds=None) -> "LpProblem":
        """constraints: iterable of (coefficients, Sense, rhs)."""
        obj = tuple(Rational(c) for c in objective)
        nvars = len(obj)
        rows, senses, rhs = [], [], []
        for coeffs, sense, b in constraints:
            row = tuple(Rational(c) for c in coeffs)
            if len(row) != nvars:
                raise DimensionMismatch(
                    f"constraint has {len(row)} coefficients, expected {nvars}"
                )
            if not isinstance(sense, Sense):
                sense = Sense(sense)
            rows.append(row)
            senses.append(sense)
            rhs.append(Rational(b))
        if lower_bounds is None:
            lb = tuple([ZERO] * nvars)
        else:
            lb = tuple(Rational(x) for x in lower_bounds)
            if len(lb) != nvars:
                raise DimensionMismatch("lower bound vector length mismatch")
        return cls(obj, tuple(rows), tuple(senses), tuple(rhs), lb)

    @property
    def nvars(self) -> int:
        return len(self.objective)

    @property
    def nrows(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class LpSolution:
    status: LpStatus
    objective: object | None
    primal: tuple | None
    dual: tuple | None
    pivots: int


def solve(problem: LpProblem) -> LpSolution:
    """Exact optimal basic solution with the matching dual vector."""
    nvars = problem.nvars
    m = problem.nrows

    # Shift to y = x - lb >= 0; report back in x terms at the end.
    lb = problem.lower_bounds
    shift = any(v != 0 for v in lb)
    rhs = []
    for i in range(m):
        b = problem.rhs[i]
        if shift:
            b = b - sum(problem.rows[i][j] * lb[j] for j in range(nvars) if lb[j] != 0)
        rhs.append(b)

    # Normalize rows to nonnegative rhs, remembering flips for the duals.
    rows, senses, flipped = [], [], []
    for i in range(m):
        row, sense, b = list(problem.rows[i]), problem.senses[i], rhs[i]
        if b < 0:
            row = [-c for c in row]
            b = -b
            sense = {Sense.LE: Sense.GE, Sense.GE: Sense.LE, Sense.EQ: Sense.EQ}[sense]
            flipped.append(True)
        else:
            flipped.append(False)
        rows.append(row)
        senses.append(sense)
        rhs[i] = b

    # Column layout: structural | one slack per inequality | one artificial
    # per row. Artificials start basic, give phase 1 its objective, and
    # their reduced costs hand back the duals after phase 2.
    slack_of = {}
    ncols = nvars
    for i in range(m):
        if senses[i] is not Sense.EQ:
            slack_of[i] = ncols
            ncols += 1
    art_of = {i: ncols + i for i in range(m)}
    total = ncols + m

    tableau = []
    for i in range(m):
        row = rows[i] + [ZERO] * (total - nvars) + [rhs[i]]
        if i in slack_of:
            row[slack_of[i]] = ONE if senses[i] is Sense.LE else -ONE
        row[art_of[i]] = ONE
        tableau.append(row)
    basis = [art_of[i] for i in range(m)]

    # Reduced-cost rows; last cell holds -(current objective value).
    phase2 = [Rational(c) for c in problem.objective] + [ZERO] * (total - nvars + 1)
    phase1 = [ZERO] * (total + 1)
    for i in range(m):
        for j in range(total):
            phase1[j] -= tableau[i][j]
        phase1[total] -= tableau[i][total]
    for i in range(m):
        phase1[art_of[i]] = ZERO

    pivots = 0

    def pivot(pr: int, pc: int) -> None:
        nonlocal pivots
        pivots += 1
        prow = tableau[pr]
        piv = prow[pc]
        if piv != 1:
            inv = ONE / piv
            tableau[pr] = prow = [c * inv for c in prow]
        for row in tableau:
            if row is prow:
                continue
            f = row[pc]
            if f:
                row[:] = [a - f * b if b else a for a, b in zip(row, prow)]
        for obj in (phase1, phase2):
            f = obj[pc]
            if f:
                obj[:] = [a - f * b if b else a for a, b in zip(obj, prow)]
        basis[pr] = pc

    def run(obj_row: list, allowed: int) -> str:
        """Bland iterations; `allowed` is the number of leading columns the
        entering variable may come from."""
        while True:
            enter = -1
            for j in range(allowed):
                if obj_row[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best = None
            for i in range(m):
                a = tableau[i][enter]
                if a > 0:
                    ratio = tableau[i][total] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            pivot(leave, enter)

    # Phase 1: drive artificial mass to zero.
    status = run(phase1, total)
    if status != "optimal" or phase1[total] != 0:
        return LpSolution(LpStatus.INFEASIBLE, None, None, None, pivots)

    # Pivot lingering artificials out of the basis where possible; an
    # all-zero row is a redundant constraint and stays parked at zero.
    for i in range(m):
        if basis[i] >= ncols:
            for j in range(ncols):
                if tableau[i][j] != 0:
                    pivot(i, j)
                    break

    # Phase 2 over the real objective; artificials may not re-enter.
    status = run(phase2, ncols)
    if status == "unbounded":
        return LpSolution(LpStatus.UNBOUNDED, None, None, None, pivots)

    values = [ZERO] * total
    for i in range(m):
        values[basis[i]] = tableau[i][total]
    primal = [values[j] + lb[j] for j in range(nvars)]
    objective = -phase2[total]
    if shift:
        objective = objective + sum(
            problem.objective[j] * lb[j] for j in range(nvars) if lb[j] != 0
        )

    # Duals: artificial column j holds -y_i in the reduced-cost row; undo
    # any row flips from the rhs normalization.
    dual = []
    for i in range(m):
        y = -phase2[art_of[i]]
        dual.append(-y if flipped[i] else y)

    return LpSolution(
        LpStatus.OPTIMAL, objective, tuple(primal), tuple(dual), pivots
    )


def verify_certificate(problem: LpProblem, solution: LpSolution) -> bool:
    """Recheck a claimed optimal solution by plain arithmetic: primal
    feasibility, dual feasibility, and exact equality of objectives."""
    if solution.status is not LpStatus.OPTIMAL:
        return False
    if solution.primal is None or solution.dual is None:
        return False
    x, y = solution.primal, solution.dual
    if len(x) != problem.nvars or len(y) != problem.nrows:
        return False
    for j in range(problem.nvars):
        if x[j] < problem.lower_bounds[j]:
            return False
    for i in range(problem.nrows):
        lhs = sum(problem.rows[i][j] * x[j] for j in range(problem.nvars))
        b, sense = problem.rhs[i], problem.senses[i]
        if sense is Sense.GE and lhs < b:
            return False
        if sense is Sense.LE and lhs > b:
            return False
        if sense is Sense.EQ and lhs != b:
            return False
        if sense is Sense.GE and y[i] < 0:
            return False
        if sense is Sense.LE and y[i] > 0:
            return False
    reduced = []
    for j in range(problem.nvars):
        rc = problem.objective[j] - sum(
            y[i] * problem.rows[i][j] for i in range(problem.nrows)
        )
        if rc < 0:
            return False
        reduced.append(rc)
    primal_value = sum(
        problem.objective[j] * x[j] for j in range(problem.nvars)
    )
    dual_value = sum(y[i] * problem.rhs[i] for i in range(problem.nrows)) + sum(
        reduced[j] * problem.lower_bounds[j] for j in range(problem.nvars)
    )
    return primal_value == dual_value == solution.objective


def format_lp(problem: LpProblem) -> str:
    """Line-based debug dump; not a stable interchange format."""
    lines = ["min " + " ".join(format_rational(c) for c in problem.objective), "st"]
    for row, sense, b in zip(problem.rows, problem.senses, problem.rhs):
        lines.append(
            " ".join(format_rational(c) for c in row)
            + f" {sense.value} {format_rational(b)}"
        )
    return "\n".join(lines) + "\n"
