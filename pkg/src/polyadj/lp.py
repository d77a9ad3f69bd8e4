"""Exact rational linear programming over systems A x <= b with free x.

A two-phase primal simplex on Fraction tableaus. Free variables are split
as x = u - w with u, w >= 0; rows with negative right hand side are sign
normalized and receive artificial variables for phase 1. Pivoting follows
Bland's rule (lexicographically smallest entering index, ratio ties broken
by the smallest basis variable index), so runs are deterministic and never
cycle. Every optimal solve recovers dual multipliers from the final basis
and validates weak duality exactly; a violation raises
InternalInconsistencyError since it can only mean a bug, never roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .errors import DimensionMismatchError, InternalInconsistencyError
from .ratmath import dot, solve_linear

Status = Literal["optimal", "infeasible", "unbounded"]


@dataclass(frozen=True)
class LpProblem:
    normals: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    objective: tuple[Fraction, ...]
    direction: Literal["max", "min"] = "max"


@dataclass(frozen=True)
class LpResult:
    status: Status
    value: Optional[Fraction]
    point: Optional[tuple[Fraction, ...]]
    tight: tuple[int, ...]


def make_problem(normals, rhs, objective, direction="max") -> LpProblem:
    normals = tuple(tuple(Fraction(x) for x in row) for row in normals)
    rhs = tuple(Fraction(b) for b in rhs)
    objective = tuple(Fraction(c) for c in objective)
    d = len(objective)
    if any(len(row) != d for row in normals) or len(normals) != len(rhs):
        raise DimensionMismatchError("inconsistent LP dimensions")
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    return LpProblem(normals, rhs, objective, direction)


class _Tableau:
    """Dense simplex tableau over Fractions with Bland pivoting."""

    def __init__(self, columns, rhs):
        # columns: list of column vectors; rows indexed like rhs
        self.m = len(rhs)
        self.ncols = len(columns)
        self.rows = [[columns[j][i] for j in range(self.ncols)] + [rhs[i]] for i in range(self.m)]
        self.basis: list[int] = [-1] * self.m
        self.row_ids = list(range(self.m))  # original constraint index per row

    def pivot(self, r, c):
        row = self.rows[r]
        piv = row[c]
        inv = 1 / piv
        self.rows[r] = [a * inv for a in row]
        prow = self.rows[r]
        for i in range(self.m):
            if i == r:
                continue
            f = self.rows[i][c]
            if f != 0:
                self.rows[i] = [a - f * b for a, b in zip(self.rows[i], prow)]
        self.basis[r] = c

    def reduced_costs(self, cost):
        # cost: per-column objective (to minimize); returns the reduced cost row
        rc = list(cost) + [Fraction(0)]
        for i, bj in enumerate(self.basis):
            cb = cost[bj]
            if cb != 0:
                row = self.rows[i]
                rc = [a - cb * b for a, b in zip(rc, row)]
        return rc

    def run(self, cost, allowed) -> Status:
        """Minimize cost over the current basis; allowed marks usable columns."""
        rc = self.reduced_costs(cost)
        while True:
            enter = next((j for j in range(self.ncols) if allowed[j] and rc[j] < 0), None)
            if enter is None:
                return "optimal"
            leave = None
            best = None
            for i in range(self.m):
                a = self.rows[i][enter]
                if a > 0:
                    ratio = self.rows[i][-1] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return "unbounded"
            self.pivot(leave, enter)
            f = rc[enter]
            rc = [a - f * b for a, b in zip(rc, self.rows[leave])]


def _setup(problem: LpProblem):
    # internal minimization of c~.z over M z = r, z >= 0
    n = len(problem.rhs)
    d = len(problem.objective)
    sigma = [1 if b >= 0 else -1 for b in problem.rhs]
    ncols = 2 * d + n
    columns = []
    for j in range(d):  # u_j
        columns.append([sigma[i] * problem.normals[i][j] for i in range(n)])
    for j in range(d):  # w_j
        columns.append([-sigma[i] * problem.normals[i][j] for i in range(n)])
    for i in range(n):  # slack s_i
        col = [Fraction(0)] * n
        col[i] = Fraction(sigma[i])
        columns.append(col)
    rhs = [sigma[i] * problem.rhs[i] for i in range(n)]
    return sigma, columns, rhs, ncols


def _phase1(tab: _Tableau, sigma, ncols_core):
    n = tab.m
    art_cols = {}
    for i in range(n):
        if sigma[i] >= 0:
            tab.basis[i] = ncols_core - n + i  # its own slack column
        else:
            col = [Fraction(0)] * n
            col[i] = Fraction(1)
            for k in range(n):
                tab.rows[k].insert(len(tab.rows[k]) - 1, col[k])
            art_cols[i] = tab.ncols
            tab.basis[i] = tab.ncols
            tab.ncols += 1
    if not art_cols:
        return True
    cost = [Fraction(0)] * tab.ncols
    for c in art_cols.values():
        cost[c] = Fraction(1)
    allowed = [True] * tab.ncols
    status = tab.run(cost, allowed)
    assert status == "optimal"  # phase 1 is bounded below by 0
    value = sum((cost[bj] * tab.rows[i][-1] for i, bj in enumerate(tab.basis)), Fraction(0))
    if value != 0:
        return False
    # pivot leftover artificials out, dropping rows that became redundant
    art_set = set(art_cols.values())
    drop = []
    for i in range(tab.m):
        if tab.basis[i] in art_set:
            c = next((j for j in range(ncols_core) if tab.rows[i][j] != 0), None)
            if c is None:
                drop.append(i)
            else:
                tab.pivot(i, c)
    for i in sorted(drop, reverse=True):
        del tab.rows[i]
        del tab.basis[i]
        del tab.row_ids[i]
        tab.m -= 1
    return True


def solve(problem: LpProblem) -> LpResult:
    """Solve an LP exactly; see the module docstring for the method."""
    problem = make_problem(problem.normals, problem.rhs, problem.objective, problem.direction)
    n = len(problem.rhs)
    d = len(problem.objective)
    obj = problem.objective if problem.direction == "max" else tuple(-c for c in problem.objective)

    if n == 0:
        # no constraints: optimal at 0 only for a zero objective
        if all(c == 0 for c in obj):
            return LpResult("optimal", Fraction(0), tuple(Fraction(0) for _ in range(d)), ())
        return LpResult("unbounded", None, None, ())

    sigma, columns, rhs, ncols_core = _setup(problem)
    tab = _Tableau(columns, rhs)
    if not _phase1(tab, sigma, ncols_core):
        return LpResult("infeasible", None, None, ())

    cost = [Fraction(0)] * tab.ncols
    for j in range(d):
        cost[j] = -obj[j]
        cost[d + j] = obj[j]
    allowed = [j < ncols_core for j in range(tab.ncols)]
    status = tab.run(cost, allowed)
    if status == "unbounded":
        return LpResult("unbounded", None, None, ())

    z = [Fraction(0)] * tab.ncols
    for i, bj in enumerate(tab.basis):
        z[bj] = tab.rows[i][-1]
    point = tuple(z[j] - z[d + j] for j in range(d))
    value = dot(obj, point)
    _validate_certificate(problem, tab, cost, columns, sigma, obj, value)
    tight = tuple(i for i in range(n) if dot(problem.normals[i], point) == problem.rhs[i])
    out_value = value if problem.direction == "max" else -value
    return LpResult("optimal", out_value, point, tight)


def _validate_certificate(problem, tab, cost, columns, sigma, obj, value):
    # recover duals from the optimal basis and check weak duality exactly
    n0 = len(problem.rhs)
    for bj in tab.basis:
        if bj >= len(columns):
            raise InternalInconsistencyError("artificial variable left in the final basis")
    live = tab.row_ids  # original constraint index per surviving tableau row
    basis_matrix = []  # rows of B^T, i.e. columns of B restricted to live rows
    for bj in tab.basis:
        col = columns[bj]
        basis_matrix.append([col[i] for i in live])
    sol = solve_linear(basis_matrix, [cost[bj] for bj in tab.basis])
    if sol is None:
        raise InternalInconsistencyError("dual system inconsistent at the optimal basis")
    pi, _ = sol
    y = [Fraction(0)] * n0
    for pos, orig in enumerate(live):
        y[orig] = -sigma[orig] * pi[pos]
    if any(yi < 0 for yi in y):
        raise InternalInconsistencyError("negative dual multiplier")
    for j in range(len(obj)):
        if sum(y[i] * problem.normals[i][j] for i in range(n0)) != obj[j]:
            raise InternalInconsistencyError("dual multipliers do not reproduce the objective")
    if sum(y[i] * problem.rhs[i] for i in range(n0)) != value:
        raise InternalInconsistencyError("duality gap in exact arithmetic")


def is_feasible(normals: Sequence, rhs: Sequence) -> bool:
    """Exact feasibility of A x <= b via phase 1 only. Empty systems are feasible."""
    rows = [tuple(Fraction(x) for x in row) for row in normals]
    b = [Fraction(v) for v in rhs]
    if len(rows) != len(b):
        raise DimensionMismatchError("inconsistent system dimensions")
    if not rows:
        return True
    d = len(rows[0])
    problem = make_problem(rows, b, [Fraction(0)] * d, "max")
    sigma, columns, rhs_n, ncols_core = _setup(problem)
    tab = _Tableau(columns, rhs_n)
    return _phase1(tab, sigma, ncols_core)
