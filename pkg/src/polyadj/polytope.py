"""Exact polytopes: H and V representations, canonicalization, hulls,
lattice point enumeration, and embeddings of lower-dimensional sets.

Conventions. An HPolytope is always bounded, full-dimensional, and
irredundant, with primitive integer facet normals, rational right hand
sides, and rows sorted by normal; two HPolytopes are equal iff their row
sets are. Possibly empty or degenerate intersections of halfspaces live in
InequalitySystem, and lower-dimensional compact sets are represented as an
AffineSubspace plus a full-dimensional polytope in local coordinates
(EmbeddedPolytope). Nothing here uses floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Optional, Sequence

from . import lp
from .errors import (
    DimensionMismatchError,
    EmptyPolytopeError,
    InternalInconsistencyError,
    LowerDimensionalError,
    NonUnimodularError,
    UnboundedPolytopeError,
)
from .ratmath import (
    IntVector,
    det,
    dot,
    integer_kernel_basis,
    primitivize,
    rank,
    saturate,
    scale_to_integer,
    solve_linear,
    vec_add,
    vec_sub,
)


@dataclass(frozen=True)
class HPolytope:
    """Bounded full-dimensional polytope {x : normals[i] . x <= rhs[i]}."""

    dim: int
    normals: tuple[IntVector, ...]
    rhs: tuple[Fraction, ...]

    @property
    def n_facets(self) -> int:
        return len(self.normals)

    def slack(self, i: int, point: Sequence) -> Fraction:
        return self.rhs[i] - dot(self.normals[i], point)

    def contains(self, point: Sequence, strict: bool = False) -> bool:
        if strict:
            return all(dot(a, point) < b for a, b in zip(self.normals, self.rhs))
        return all(dot(a, point) <= b for a, b in zip(self.normals, self.rhs))


@dataclass(frozen=True)
class VPolytope:
    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class AffineSubspace:
    """Affine subspace as equations and as a rational parametrization.

    equations: primitive integer normals with rational offsets, sign and
    order normalized. base + span(directions) is the same set; directions
    are a basis of the saturated direction lattice, so when the subspace
    contains integer points their local coordinates are integers.
    """

    dim: int
    ambient_dim: int
    equations: tuple[tuple[IntVector, Fraction], ...]
    base: tuple[Fraction, ...]
    directions: tuple[IntVector, ...]

    def contains(self, point: Sequence) -> bool:
        return all(dot(a, point) == beta for a, beta in self.equations)

    def to_ambient(self, local: Sequence) -> tuple[Fraction, ...]:
        x = list(Fraction(c) for c in self.base)
        for t, direction in zip(local, self.directions):
            for j, dj in enumerate(direction):
                x[j] += Fraction(t) * dj
        return tuple(x)

    def to_local(self, point: Sequence) -> Optional[tuple[Fraction, ...]]:
        """Local coordinates of an ambient point, or None when off the subspace."""
        if not self.contains(point):
            return None
        if not self.directions:
            return ()
        matrix = [[self.directions[i][j] for i in range(len(self.directions))]
                  for j in range(self.ambient_dim)]
        sol = solve_linear(matrix, vec_sub(point, self.base))
        if sol is None:
            return None
        return sol[0]


@dataclass(frozen=True)
class EmbeddedPolytope:
    """A compact convex set of any dimension inside R^d.

    subspace is its affine hull; local is a full-dimensional HPolytope in
    the subspace coordinates (None when the set is a single point);
    vertices are in ambient coordinates.
    """

    subspace: AffineSubspace
    local: Optional[HPolytope]
    vertices: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return self.subspace.dim

    @property
    def ambient_dim(self) -> int:
        return self.subspace.ambient_dim

    def contains(self, point: Sequence, strict: bool = False) -> bool:
        """Membership; strict means relative interior."""
        local = self.subspace.to_local(point)
        if local is None:
            return False
        if self.local is None:
            return True
        return self.local.contains(local, strict=strict)


@dataclass(frozen=True)
class InequalitySystem:
    """Raw finite system A x <= b, possibly empty, redundant, or degenerate."""

    dim: int
    normals: tuple[IntVector, ...]
    rhs: tuple[Fraction, ...]

    def contains(self, point: Sequence, strict: bool = False) -> bool:
        if strict:
            return all(dot(a, point) < b for a, b in zip(self.normals, self.rhs))
        return all(dot(a, point) <= b for a, b in zip(self.normals, self.rhs))

    def is_empty(self) -> bool:
        return not lp.is_feasible(self.normals, self.rhs)


_VERTEX_CACHE: dict[HPolytope, VPolytope] = {}


def _as_int_vector(v: Sequence) -> IntVector:
    out = []
    for x in v:
        f = Fraction(x)
        if f.denominator != 1:
            raise ValueError(f"expected integer entry, got {x}")
        out.append(int(f))
    return tuple(out)


def make_system(rows: Sequence[tuple[Sequence, object]], dim: Optional[int] = None) -> InequalitySystem:
    """Build an InequalitySystem from (normal, rhs) pairs without canonicalizing."""
    normals = []
    rhs = []
    for a, b in rows:
        normals.append(_as_int_vector(a))
        rhs.append(Fraction(b))
    if dim is None:
        if not normals:
            raise DimensionMismatchError("cannot infer dimension of an empty system")
        dim = len(normals[0])
    if any(len(a) != dim for a in normals):
        raise DimensionMismatchError("mixed normal lengths")
    return InequalitySystem(dim, tuple(normals), tuple(rhs))


def from_inequalities(rows: Sequence[tuple[Sequence, object]]) -> HPolytope:
    """Canonicalize a raw inequality system into an HPolytope.

    Normals are primitivized (right hand sides rescaled along), duplicate
    normals keep the binding (minimum) right hand side, redundant rows are
    removed by one exact LP each, and rows are sorted by normal. Raises
    EmptyPolytopeError, UnboundedPolytopeError, or LowerDimensionalError
    when the described set is not a bounded full-dimensional polytope.
    """
    if not rows:
        raise UnboundedPolytopeError("no constraints describe all of space")
    merged: dict[IntVector, Fraction] = {}
    d = None
    for a, b in rows:
        vec = _as_int_vector(a)
        b = Fraction(b)
        if d is None:
            d = len(vec)
        elif len(vec) != d:
            raise DimensionMismatchError("mixed normal lengths")
        if all(x == 0 for x in vec):
            if b < 0:
                raise EmptyPolytopeError("row 0 <= b with negative b")
            continue
        prim, scale = primitivize(vec)
        b = b / scale
        if prim not in merged or b < merged[prim]:
            merged[prim] = b
    if not merged:
        raise UnboundedPolytopeError("only trivial constraints given")
    normals = list(merged)
    rhs = [merged[a] for a in normals]

    if not lp.is_feasible(normals, rhs):
        raise EmptyPolytopeError("inequality system has no solution")
    for j in range(d):
        for sign in (1, -1):
            obj = [Fraction(0)] * d
            obj[j] = Fraction(sign)
            if lp.solve(lp.make_problem(normals, rhs, obj, "max")).status == "unbounded":
                raise UnboundedPolytopeError(f"coordinate {j} unbounded")
    if _interior_radius(normals, rhs) <= 0:
        raise LowerDimensionalError("system has empty interior")

    # one pass of sequential redundancy removal leaves an irredundant system
    active = list(range(len(normals)))
    for i in list(active):
        others = [k for k in active if k != i]
        res = lp.solve(lp.make_problem([normals[k] for k in others],
                                       [rhs[k] for k in others],
                                       normals[i], "max"))
        if res.status == "optimal" and res.value <= rhs[i]:
            active.remove(i)
    pairs = sorted((normals[i], rhs[i]) for i in active)
    return HPolytope(d, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


def _interior_radius(normals, rhs) -> Fraction:
    # max t with <a_i, x> + t <= b_i and t <= 1; positive iff full-dimensional
    d = len(normals[0])
    ext = [tuple(a) + (1,) for a in normals] + [tuple([0] * d) + (1,)]
    res = lp.solve(lp.make_problem(ext, list(rhs) + [Fraction(1)],
                                   [Fraction(0)] * d + [Fraction(1)], "max"))
    if res.status != "optimal":
        raise InternalInconsistencyError("interior LP must be bounded and feasible")
    return res.value


def vertices(p: HPolytope) -> VPolytope:
    """All vertices, by exhaustive search over independent d-subsets of rows."""
    cached = _VERTEX_CACHE.get(p)
    if cached is not None:
        return cached
    d = p.dim
    n = p.n_facets
    found: set[tuple[Fraction, ...]] = set()

    # depth-first over constraint subsets, keeping a running echelon form
    def rec(start: int, rows: list[list[Fraction]], pivots: list[int]):
        if len(rows) == d:
            x = _back_solve(rows, pivots, d)
            if p.contains(x):
                found.add(x)
            return
        for i in range(start, n):
            if n - i < d - len(rows):
                break
            red = [Fraction(v) for v in p.normals[i]] + [p.rhs[i]]
            for row, c in zip(rows, pivots):
                f = red[c]
                if f != 0:
                    red = [a - f * b for a, b in zip(red, row)]
            piv = next((c for c in range(d) if red[c] != 0), None)
            if piv is None:
                continue
            inv = 1 / red[piv]
            red = [a * inv for a in red]
            rec(i + 1, rows + [red], pivots + [piv])

    rec(0, [], [])
    result = VPolytope(d, tuple(sorted(found)))
    _VERTEX_CACHE[p] = result
    return result


def _back_solve(rows, pivots, d) -> tuple[Fraction, ...]:
    x = [Fraction(0)] * d
    for row, c in reversed(list(zip(rows, pivots))):
        x[c] = row[d] - sum(row[j] * x[j] for j in range(d) if j != c and row[j] != 0)
    return tuple(x)


def from_vertices(points: Sequence[Sequence]) -> HPolytope:
    """Facet description of the convex hull of a full-dimensional point set.

    Every facet contains d affinely independent input points, so scanning
    all d-subsets and keeping the supporting hyperplanes finds exactly the
    facets. Raises LowerDimensionalError when the points do not affinely
    span R^d.
    """
    pts = sorted({tuple(Fraction(c) for c in pt) for pt in points})
    if not pts:
        raise EmptyPolytopeError("no points given")
    d = len(pts[0])
    if any(len(pt) != d for pt in pts):
        raise DimensionMismatchError("mixed point lengths")
    base = pts[0]
    diffs = [scale_to_integer(vec_sub(pt, base)) for pt in pts[1:]]
    if rank(diffs) < d:
        raise LowerDimensionalError("points do not span the ambient space")

    facets: dict[IntVector, Fraction] = {}
    for subset in itertools.combinations(pts, d):
        rows = [scale_to_integer(vec_sub(pt, subset[0])) for pt in subset[1:]]
        kernel = integer_kernel_basis(rows, ncols=d) if rows else integer_kernel_basis([], ncols=d)
        if len(kernel) != 1:
            continue
        normal = kernel[0]
        v0 = dot(normal, subset[0])
        values = [dot(normal, pt) for pt in pts]
        mx, mn = max(values), min(values)
        if v0 == mx and mn < mx:
            key, b = normal, mx
        elif v0 == mn and mn < mx:
            key, b = tuple(-c for c in normal), -mn
        else:
            continue
        prev = facets.get(key)
        if prev is not None and prev != b:
            raise InternalInconsistencyError("conflicting supports for one normal")
        facets[key] = b

    pairs = sorted(facets.items())
    poly = HPolytope(d, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))
    vert = tuple(sorted(pt for pt in pts if _tight_rank(poly, pt) == d))
    _VERTEX_CACHE[poly] = VPolytope(d, vert)
    return poly


def _tight_rank(p: HPolytope, point) -> int:
    tight = [p.normals[i] for i in range(p.n_facets) if dot(p.normals[i], point) == p.rhs[i]]
    if not tight:
        return 0
    return rank(tight)


def _canonical_equations(directions: Sequence[IntVector], base, d: int):
    if directions:
        kernel = integer_kernel_basis(list(directions), ncols=d)
    else:
        kernel = integer_kernel_basis([], ncols=d)
    eqs = []
    for a in kernel:
        lead = next((x for x in a if x != 0), 0)
        if lead < 0:
            a = tuple(-x for x in a)
        eqs.append((a, dot(a, base)))
    return tuple(sorted(eqs))


def hull_any_dim(points: Sequence[Sequence]) -> EmbeddedPolytope:
    """Convex hull of points of any affine rank, as an embedded polytope."""
    pts = sorted({tuple(Fraction(c) for c in pt) for pt in points})
    if not pts:
        raise EmptyPolytopeError("no points given")
    d = len(pts[0])
    base = pts[0]
    directions = saturate([vec_sub(pt, base) for pt in pts[1:]])
    k = len(directions)
    subspace = AffineSubspace(k, d, _canonical_equations(directions, base, d), base, directions)
    if k == 0:
        return EmbeddedPolytope(subspace, None, (base,))
    local_pts = [subspace.to_local(pt) for pt in pts]
    if any(t is None for t in local_pts):
        raise InternalInconsistencyError("input point escaped its own affine hull")
    local = from_vertices(local_pts)
    ambient = tuple(sorted(subspace.to_ambient(t) for t in vertices(local).vertices))
    return EmbeddedPolytope(subspace, local, ambient)


def implicit_equalities(system: InequalitySystem) -> tuple[int, ...]:
    """Indices of rows satisfied with equality by every solution.

    Iterative scheme: maximize the sum of capped slacks over the current
    candidate set; rows that achieve positive slack are discarded, and a
    zero optimum certifies that all remaining candidates are implicit
    equalities. Raises EmptyPolytopeError on an infeasible system.
    """
    n = len(system.normals)
    d = system.dim
    radius = lp.solve(lp.make_problem(
        [tuple(a) + (1,) for a in system.normals] + [tuple([0] * d) + (1,)],
        list(system.rhs) + [Fraction(1)],
        [Fraction(0)] * d + [Fraction(1)], "max"))
    if radius.status == "infeasible":
        raise EmptyPolytopeError("system has no solution")
    if radius.status != "optimal":
        raise InternalInconsistencyError("capped interior LP must be bounded")
    if radius.value > 0:
        return ()
    x0 = radius.point[:d]
    candidates = [i for i in range(n) if dot(system.normals[i], x0) == system.rhs[i]]
    while candidates:
        m = len(candidates)
        cols = d + m
        prob_rows = []
        prob_rhs = []
        cand_pos = {i: pos for pos, i in enumerate(candidates)}
        for i in range(n):
            row = [Fraction(x) for x in system.normals[i]] + [Fraction(0)] * m
            if i in cand_pos:
                row[d + cand_pos[i]] = Fraction(1)
            prob_rows.append(tuple(row))
            prob_rhs.append(system.rhs[i])
        for pos in range(m):
            up = [Fraction(0)] * cols
            up[d + pos] = Fraction(1)
            prob_rows.append(tuple(up))
            prob_rhs.append(Fraction(1))
            lo = [Fraction(0)] * cols
            lo[d + pos] = Fraction(-1)
            prob_rows.append(tuple(lo))
            prob_rhs.append(Fraction(0))
        objective = [Fraction(0)] * d + [Fraction(1)] * m
        res = lp.solve(lp.make_problem(prob_rows, prob_rhs, objective, "max"))
        if res.status != "optimal":
            raise InternalInconsistencyError("capped slack LP must be bounded")
        if res.value == 0:
            return tuple(candidates)
        keep = [i for i in candidates if res.point[d + cand_pos[i]] == 0]
        if len(keep) == len(candidates):
            raise InternalInconsistencyError("slack LP made no progress")
        candidates = keep
    return ()


def embed_system(system: InequalitySystem) -> tuple[EmbeddedPolytope, tuple[int, ...]]:
    """Embed a nonempty bounded system as (EmbeddedPolytope, implicit row indices)."""
    d = system.dim
    implicit = implicit_equalities(system)
    if not implicit:
        poly = from_inequalities(list(zip(system.normals, system.rhs)))
        subspace = AffineSubspace(d, d, (), tuple(Fraction(0) for _ in range(d)),
                                  tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)))
        return EmbeddedPolytope(subspace, poly, vertices(poly).vertices), ()
    sol = solve_linear([system.normals[i] for i in implicit],
                       [system.rhs[i] for i in implicit])
    if sol is None:
        raise InternalInconsistencyError("implicit equalities are inconsistent")
    x0, null_basis = sol
    directions = saturate(null_basis)
    k = len(directions)
    subspace = AffineSubspace(k, d, _canonical_equations(directions, x0, d), x0, directions)
    rest = [i for i in range(len(system.normals)) if i not in set(implicit)]
    if k == 0:
        return EmbeddedPolytope(subspace, None, (x0,)), implicit
    local_rows = []
    for i in rest:
        f = tuple(dot(system.normals[i], direction) for direction in directions)
        b = system.rhs[i] - dot(system.normals[i], x0)
        if all(x == 0 for x in f):
            if b < 0:
                raise InternalInconsistencyError("constant row violates a feasible system")
            continue
        local_rows.append((f, b))
    local = from_inequalities(local_rows)
    ambient = tuple(sorted(subspace.to_ambient(t) for t in vertices(local).vertices))
    return EmbeddedPolytope(subspace, local, ambient), implicit


def relative_interior_point(s) -> tuple[Fraction, ...]:
    """Vertex barycenter, a relative interior point of any of our set types."""
    if isinstance(s, HPolytope):
        verts = vertices(s).vertices
    elif isinstance(s, EmbeddedPolytope):
        verts = s.vertices
    elif isinstance(s, VPolytope):
        verts = s.vertices
    else:
        raise TypeError(f"unsupported type {type(s).__name__}")
    if not verts:
        raise EmptyPolytopeError("no vertices")
    n = len(verts)
    return tuple(sum(col, Fraction(0)) / n for col in zip(*verts))


def is_lattice_polytope(s) -> bool:
    if isinstance(s, HPolytope):
        verts = vertices(s).vertices
    elif isinstance(s, (EmbeddedPolytope, VPolytope)):
        verts = s.vertices
    else:
        raise TypeError(f"unsupported type {type(s).__name__}")
    return all(c.denominator == 1 for pt in verts for c in pt)


# ---------------------------------------------------------------------------
# lattice point enumeration


def _fm_normalize(coeffs, rhs):
    row = scale_to_integer(tuple(coeffs) + (rhs,))
    g = 0
    for x in row[:-1]:
        g = gcd(g, x)
    if g == 0:
        return None, Fraction(row[-1])
    return tuple(x // g for x in row[:-1]), Fraction(row[-1], g)


def _fm_levels(rows, d: int):
    """Fourier-Motzkin elimination ladder. rows: (coeff tuple, rhs) closed <=.

    Returns levels[1..d] where level j constrains x_1..x_j; each row is
    (integer coeffs, rhs numerator, rhs denominator). Returns None when a
    derived constant row is infeasible. Every row is enforced as a bound
    at the level of its last nonzero coefficient, so points surviving the
    ladder satisfy the whole closed system exactly.
    """
    def clean(pairs):
        best: dict[tuple, Fraction] = {}
        for coeffs, rhs in pairs:
            coeffs, rhs = _fm_normalize(coeffs, rhs)
            if coeffs is None:
                if rhs < 0:
                    return None
                continue
            if coeffs not in best or rhs < best[coeffs]:
                best[coeffs] = rhs
        return [(c, b) for c, b in best.items()]

    exact: list = [None] * (d + 1)
    current = clean([(tuple(Fraction(x) for x in a[:d]), Fraction(b)) for a, b in rows])
    if current is None:
        return None
    exact[d] = current
    for j in range(d, 1, -1):
        zero, pos, neg = [], [], []
        for coeffs, rhs in exact[j]:
            c = coeffs[j - 1]
            if c == 0:
                zero.append((coeffs[:j - 1], rhs))
            elif c > 0:
                pos.append((coeffs, rhs))
            else:
                neg.append((coeffs, rhs))
        combined = list(zero)
        for pc, pb in pos:
            a = pc[j - 1]
            for nc, nb in neg:
                g = -nc[j - 1]
                coeffs = tuple(g * pc[i] + a * nc[i] for i in range(j - 1))
                combined.append((coeffs, g * pb + a * nb))
        nxt = clean(combined)
        if nxt is None:
            return None
        exact[j - 1] = nxt
    levels: list = [None] * (d + 1)
    for j in range(1, d + 1):
        levels[j] = [(c, b.numerator, b.denominator) for c, b in exact[j]]
    return levels


def _enumerate_lattice(levels, d: int, step: int):
    out = []
    prefix = [0] * d

    def rec(j: int):
        lo = None
        hi = None
        for coeffs, num, den in levels[j]:
            c = coeffs[j - 1]
            if c == 0:
                continue
            s = 0
            for i in range(j - 1):
                ci = coeffs[i]
                if ci:
                    s += ci * prefix[i]
            m = c * den
            v = num - s * den
            if m > 0:
                b = v // m
                if hi is None or b < hi:
                    hi = b
            else:
                b = -(v // -m)
                if lo is None or b > lo:
                    lo = b
        if lo is None or hi is None:
            raise UnboundedPolytopeError("enumeration region is unbounded")
        if lo > hi:
            return
        start = -(-lo // step) * step
        stop = hi // step * step
        for v in range(start, stop + 1, step):
            prefix[j - 1] = v
            if j == d:
                out.append(tuple(prefix))
            else:
                rec(j + 1)

    rec(1)
    return out


def _ambient_rows(s) -> tuple[list, list]:
    """(equalities, inequalities) over ambient coordinates describing s."""
    if isinstance(s, HPolytope):
        return [], list(zip(s.normals, s.rhs))
    if not isinstance(s, EmbeddedPolytope):
        raise TypeError(f"unsupported type {type(s).__name__}")
    eqs = [(a, beta) for a, beta in s.subspace.equations]
    ineqs = []
    if s.local is not None:
        sub = s.subspace
        d = sub.ambient_dim
        # left inverse of the direction matrix maps x to local coordinates
        dir_cols = [[sub.directions[i][j] for i in range(len(sub.directions))] for j in range(d)]
        left_inv = []
        for i in range(len(sub.directions)):
            target = [Fraction(1) if i == r else Fraction(0) for r in range(len(sub.directions))]
            sol = solve_linear([list(row) for row in zip(*dir_cols)], target)
            if sol is None:
                raise InternalInconsistencyError("direction basis is not independent")
            left_inv.append(sol[0])
        for f, b in zip(s.local.normals, s.local.rhs):
            w = tuple(sum(f[i] * left_inv[i][j] for i in range(len(f))) for j in range(d))
            ineqs.append((w, b + dot(w, sub.base)))
    return eqs, ineqs


def lattice_points(s, region: str = "all", sublattice_scale: int = 1):
    """Points of (sublattice_scale * Z^d) in s, or in its relative interior.

    s may be an HPolytope or an EmbeddedPolytope, and the returned points
    are integer tuples. The Fourier-Motzkin ladder enforces the full closed
    system, so only the relative_interior region needs a strictness filter
    on the inequality rows.
    """
    if region not in ("all", "relative_interior"):
        raise ValueError(f"unknown region {region!r}")
    k = int(sublattice_scale)
    if k < 1:
        raise ValueError("sublattice_scale must be a positive integer")
    eqs, ineqs = _ambient_rows(s)
    closed = [(a, beta) for a, beta in eqs] + [(tuple(-x for x in a), -beta) for a, beta in eqs]
    closed += ineqs
    d = s.dim if isinstance(s, HPolytope) else s.ambient_dim
    levels = _fm_levels(closed, d)
    if levels is None:
        return ()
    result = _enumerate_lattice(levels, d, k)
    if region == "relative_interior":
        result = [x for x in result if all(dot(a, x) < b for a, b in ineqs)]
    return tuple(sorted(result))


# ---------------------------------------------------------------------------
# unimodular transforms and dilation


def transform(p: HPolytope, u: Sequence[Sequence[int]], shift: Sequence[int]) -> HPolytope:
    """Image of p under x -> U x + shift for unimodular integer U."""
    d = p.dim
    urows = [_as_int_vector(row) for row in u]
    tvec = _as_int_vector(shift)
    if len(urows) != d or any(len(r) != d for r in urows) or len(tvec) != d:
        raise DimensionMismatchError("transform dimensions do not match")
    if abs(det(urows)) != 1:
        raise NonUnimodularError("matrix determinant is not +-1")
    ut = [list(row) for row in zip(*urows)]  # U^T
    new_rows = []
    for a, b in zip(p.normals, p.rhs):
        sol = solve_linear(ut, list(a))
        if sol is None:
            raise InternalInconsistencyError("unimodular system must be solvable")
        w = _as_int_vector(sol[0])
        w, _ = primitivize(w)
        new_rows.append((w, b + dot(w, tvec)))
    pairs = sorted(new_rows)
    result = HPolytope(d, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))
    cached = _VERTEX_CACHE.get(p)
    if cached is not None:
        imgs = tuple(sorted(tuple(vec_add(_mat_vec(urows, v), tvec)) for v in cached.vertices))
        _VERTEX_CACHE[result] = VPolytope(d, imgs)
    return result


def _mat_vec(rows, v):
    return tuple(dot(row, v) for row in rows)


def dilate(p: HPolytope, factor: int) -> HPolytope:
    """The dilation factor * p for a positive integer factor."""
    k = int(factor)
    if k < 1 or k != factor:
        raise ValueError("dilation factor must be a positive integer")
    result = HPolytope(p.dim, p.normals, tuple(b * k for b in p.rhs))
    cached = _VERTEX_CACHE.get(p)
    if cached is not None:
        _VERTEX_CACHE[result] = VPolytope(p.dim, tuple(sorted(tuple(k * c for c in v) for v in cached.vertices)))
    return result
