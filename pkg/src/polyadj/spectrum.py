"""Finite candidate sets for Q-codegrees with a prescribed core normal set.

A core normal configuration is a finite set of primitive integer vectors
positively spanning the space (the origin is in the relative interior of
their convex hull). For such a configuration A the values c admitting a
point y with A y + c 1 integral form a group g Z; the step g is computed
exactly from a lattice basis, every achievable critical shift is a
multiple of g, and the Q-codegrees above a cutoff epsilon therefore lie in
the finite set {1 / (k g) : k >= 1, 1 / (k g) >= epsilon}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Optional, Sequence

from . import lp
from .errors import InternalInconsistencyError, InvalidConfigError
from .ratmath import (
    IntVector,
    dot,
    ext_gcd_list,
    fraction_gcd,
    primitivize,
    saturate,
    solve_linear,
)


@dataclass(frozen=True)
class CoreNormalConfig:
    """Primitive integer vectors whose convex hull has 0 in its relative interior."""

    dim: int
    normals: tuple[IntVector, ...]

    @property
    def n_rows(self) -> int:
        return len(self.normals)


@dataclass(frozen=True)
class SpectrumSuperset:
    """Descending candidate Q-codegrees 1/(k*step) at or above epsilon."""

    step: Fraction
    epsilon: Fraction
    values: tuple[Fraction, ...]


def make_config(rows: Sequence[Sequence[int]]) -> CoreNormalConfig:
    """Validate and wrap a configuration; see validate_config for the rules."""
    if not rows:
        raise InvalidConfigError("a configuration needs at least one row")
    d = len(rows[0])
    normals = []
    for a in rows:
        if len(a) != d:
            raise InvalidConfigError("mixed row lengths")
        vec = tuple(int(x) for x in a)
        if vec != tuple(Fraction(x) for x in a):
            raise InvalidConfigError("rows must be integer vectors")
        if all(x == 0 for x in vec):
            raise InvalidConfigError("zero vector is not a valid normal")
        if primitivize(vec)[0] != vec:
            raise InvalidConfigError(f"row {vec} is not primitive")
        normals.append(vec)
    if len(set(normals)) != len(normals):
        raise InvalidConfigError("duplicate rows")
    cfg = CoreNormalConfig(d, tuple(normals))
    validate_config(cfg)
    return cfg


def validate_config(cfg: CoreNormalConfig) -> None:
    """Require 0 strictly inside conv(rows) relative to its affine hull.

    Checked by maximizing t subject to sum(lambda_i row_i) = 0,
    sum(lambda_i) = 1, lambda_i >= t, t <= 1; a positive optimum is exactly
    a barycentric expression of 0 with all weights positive.
    """
    m = cfg.n_rows
    d = cfg.dim
    rows = []
    rhs = []
    for j in range(d):
        coeffs = tuple(a[j] for a in cfg.normals) + (0,)
        rows.append(coeffs)
        rhs.append(Fraction(0))
        rows.append(tuple(-x for x in coeffs))
        rhs.append(Fraction(0))
    ones = tuple([1] * m) + (0,)
    rows.append(ones)
    rhs.append(Fraction(1))
    rows.append(tuple(-x for x in ones))
    rhs.append(Fraction(-1))
    for i in range(m):
        rows.append(tuple(-1 if k == i else 0 for k in range(m)) + (1,))
        rhs.append(Fraction(0))
    rows.append(tuple([0] * m) + (1,))
    rhs.append(Fraction(1))
    objective = [Fraction(0)] * m + [Fraction(1)]
    res = lp.solve(lp.make_problem(rows, rhs, objective, "max"))
    if res.status == "infeasible" or (res.status == "optimal" and res.value <= 0):
        raise InvalidConfigError("0 must lie in the relative interior of conv(rows)")
    if res.status != "optimal":
        raise InternalInconsistencyError("capped barycentric LP cannot be unbounded")


def _phi(cfg: CoreNormalConfig, vector: Sequence[Fraction]) -> Fraction:
    """Coefficient of the all-ones column in vector = A y + c 1.

    Well defined because the configuration admits no y with A y = 1: any
    positive barycentric combination of the rows kills A y but not 1.
    """
    matrix = [list(a) + [1] for a in cfg.normals]
    sol = solve_linear(matrix, list(vector))
    if sol is None:
        raise InternalInconsistencyError("vector left the spanned lattice")
    for basis_vec in sol[1]:
        if basis_vec[cfg.dim] != 0:
            raise InvalidConfigError("configuration admits A y = 1; step is undefined")
    return sol[0][cfg.dim]


def codegree_step(cfg: CoreNormalConfig) -> Fraction:
    """The positive generator g of {c : A y + c 1 is integral for some y}.

    The achievable integral vectors A y + c 1 are exactly the lattice
    Z^m intersected with span(columns of A, 1); g is the gcd of the
    1-coefficients of a basis of that lattice. Returns 0 when only c = 0
    is achievable.
    """
    m = cfg.n_rows
    cols = [tuple(a[j] for a in cfg.normals) for j in range(cfg.dim)]
    basis = saturate(cols + [tuple([1] * m)])
    return fraction_gcd([_phi(cfg, v) for v in basis])


def spectrum_superset(cfg: CoreNormalConfig, epsilon) -> SpectrumSuperset:
    """All candidate Q-codegrees >= epsilon for polytopes with this core
    normal set, in descending order."""
    eps = Fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    g = codegree_step(cfg)
    if g == 0:
        return SpectrumSuperset(g, eps, ())
    kmax = floor(1 / (eps * g))
    values = tuple(Fraction(g.denominator, k * g.numerator) for k in range(1, kmax + 1))
    return SpectrumSuperset(g, eps, values)


def check_necessary_condition(cfg: CoreNormalConfig, c) -> tuple[bool, Optional[tuple[Fraction, ...]]]:
    """Whether some y makes A y + c 1 integral; returns (ok, witness y).

    ok iff c is a multiple of the step; the witness is assembled from the
    gcd combination of the basis contributions.
    """
    c = Fraction(c)
    m = cfg.n_rows
    cols = [tuple(a[j] for a in cfg.normals) for j in range(cfg.dim)]
    basis = saturate(cols + [tuple([1] * m)])
    phis = [_phi(cfg, v) for v in basis]
    g = fraction_gcd(phis)
    if g == 0:
        if c != 0:
            return False, None
        return True, tuple(Fraction(0) for _ in range(cfg.dim))
    if (c / g).denominator != 1:
        return False, None
    k = c / g
    denom = lcm(*[p.denominator for p in phis]) if phis else 1
    gd, coeffs = ext_gcd_list([int(p * denom) for p in phis])
    if Fraction(gd, denom) != g:
        raise InternalInconsistencyError("gcd combination disagrees with the step")
    target = [Fraction(0)] * m
    for coef, vec in zip(coeffs, basis):
        for i in range(m):
            target[i] += k * coef * vec[i]
    # target is in Z^m with phi(target) = c; peel off c * 1 and solve for y
    rhs = [target[i] - c for i in range(m)]
    sol = solve_linear([list(a) for a in cfg.normals], rhs)
    if sol is None:
        raise InternalInconsistencyError("witness system must be solvable")
    y = tuple(sol[0])
    for i, a in enumerate(cfg.normals):
        if (dot(a, y) + c).denominator != 1:
            raise InternalInconsistencyError("constructed witness is not integral")
    return True, y
