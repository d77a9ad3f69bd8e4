"""Normal fans of lattice polytopes and their singularity invariants.

A cone is stored by its primitive extreme ray generators. The invariants
computed here are the Gorenstein index of a cone (the least k such that
some integer functional evaluates to k on every primitive generator), the
canonicity threshold (how low a nonzero lattice point can sit relative to
the generator heights), and smoothness. Fan level values aggregate over
the maximal cones: a functional witnessing a maximal cone restricts to
every face, so face indices divide the maximal ones and face thresholds
are no smaller, which makes the maximal cones sufficient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional, Sequence

from . import lp
from .errors import (
    InternalInconsistencyError,
    InvalidConeError,
    NotInConeError,
    NotLatticePolytopeError,
)
from .polytope import HPolytope, from_vertices, is_lattice_polytope, lattice_points, vertices
from .ratmath import (
    IntVector,
    det,
    dot,
    ext_gcd_list,
    integer_kernel_basis,
    primitivize,
    rank,
    saturate,
    solve_linear,
)


@dataclass(frozen=True)
class Cone:
    """Pointed rational cone spanned by primitive extreme rays."""

    ambient_dim: int
    rays: tuple[IntVector, ...]

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    @property
    def dim(self) -> int:
        return rank(list(self.rays)) if self.rays else 0

    def is_simplicial(self) -> bool:
        return self.dim == self.n_rays


@dataclass(frozen=True)
class NormalFan:
    """Normal fan of a full-dimensional lattice polytope.

    maximal_cones[i] is the cone of facet normals tight at vertex
    vertex_points[i]; rays collects all facet normals.
    """

    dim: int
    rays: tuple[IntVector, ...]
    vertex_points: tuple[tuple[Fraction, ...], ...]
    maximal_cones: tuple[Cone, ...]


@dataclass(frozen=True)
class GorensteinCertificate:
    """index >= 1 with a primitive integer functional constant on the rays.

    <ray, functional> = index for every ray, and no positive integer below
    index is attained that way; u = functional / index evaluates to 1.
    """

    index: int
    functional: IntVector

    @property
    def u(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.index) for x in self.functional)


@dataclass(frozen=True)
class CanonicityWitness:
    """A lattice point of a cone lying below the stated height."""

    cone: Cone
    point: IntVector
    height: Fraction


def cone(generators: Sequence[Sequence[int]]) -> Cone:
    """Validating constructor: primitivize, drop non-extreme generators,
    and reject cones that contain a line."""
    if not generators:
        raise InvalidConeError("a cone needs at least one generator")
    d = len(generators[0])
    prims = []
    for g in generators:
        if len(g) != d:
            raise InvalidConeError("mixed generator lengths")
        vec = tuple(int(x) for x in g)
        if vec != tuple(g):
            raise InvalidConeError("generators must be integer vectors")
        if all(x == 0 for x in vec):
            raise InvalidConeError("zero vector cannot generate a ray")
        prims.append(primitivize(vec)[0])
    prims = sorted(set(prims))
    if not _is_pointed(prims, d):
        raise InvalidConeError("generators span a cone containing a line")
    extreme = list(prims)
    changed = True
    while changed:
        changed = False
        for g in list(extreme):
            others = [h for h in extreme if h != g]
            if others and _in_cone_hull(others, g):
                extreme.remove(g)
                changed = True
    return Cone(d, tuple(sorted(extreme)))


def _is_pointed(gens, d) -> bool:
    # pointed iff some functional is >= 1 on every generator
    rows = [tuple(-x for x in g) + (1,) for g in gens] + [tuple([0] * d) + (1,)]
    rhs = [Fraction(0)] * len(gens) + [Fraction(1)]
    obj = [Fraction(0)] * d + [Fraction(1)]
    res = lp.solve(lp.make_problem(rows, rhs, obj, "max"))
    if res.status != "optimal":
        raise InternalInconsistencyError("pointedness LP must be bounded")
    return res.value > 0


def _in_cone_hull(gens, target) -> bool:
    """Whether target is a nonnegative combination of gens."""
    m = len(gens)
    d = len(target)
    rows = []
    rhs = []
    for j in range(d):
        coeffs = tuple(g[j] for g in gens)
        rows.append(coeffs)
        rhs.append(Fraction(target[j]))
        rows.append(tuple(-c for c in coeffs))
        rhs.append(Fraction(-target[j]))
    for i in range(m):
        rows.append(tuple(-1 if i == k else 0 for k in range(m)))
        rhs.append(Fraction(0))
    return lp.is_feasible(rows, rhs)


def normal_fan(p: HPolytope) -> NormalFan:
    """Normal fan of a lattice polytope; vertex tight sets give the maximal cones."""
    if not is_lattice_polytope(p):
        raise NotLatticePolytopeError("normal fan invariants require lattice vertices")
    verts = vertices(p).vertices
    cones = []
    for v in verts:
        tight = tuple(sorted(a for a, b in zip(p.normals, p.rhs) if dot(a, v) == b))
        if rank(list(tight)) != p.dim:
            raise InternalInconsistencyError("vertex cone is not full-dimensional")
        cones.append(Cone(p.dim, tight))
    return NormalFan(p.dim, p.normals, verts, tuple(cones))


def all_cones(fan: NormalFan) -> tuple[Cone, ...]:
    """Every nonzero face of every maximal cone, without duplicates.

    A subset T of a maximal cone's rays spans a face iff some functional
    vanishes on T and is negative on the remaining rays; for simplicial
    cones every subset qualifies, so the LP is skipped there.
    """
    seen: set[tuple[IntVector, ...]] = set()
    out: list[Cone] = []
    for c in fan.maximal_cones:
        simplicial = c.is_simplicial()
        n = c.n_rays
        for size in range(1, n + 1):
            for subset in itertools.combinations(range(n), size):
                key = tuple(c.rays[i] for i in subset)
                if key in seen:
                    continue
                if size == n or simplicial or _is_face(c.rays, subset):
                    seen.add(key)
                    out.append(Cone(c.ambient_dim, key))
    return tuple(sorted(out, key=lambda c: (c.n_rays, c.rays)))


def _is_face(rays, subset) -> bool:
    d = len(rays[0])
    inside = set(subset)
    rows = []
    rhs = []
    for i, g in enumerate(rays):
        if i in inside:
            rows.append(tuple(g))
            rhs.append(Fraction(0))
            rows.append(tuple(-x for x in g))
            rhs.append(Fraction(0))
        else:
            rows.append(tuple(g))
            rhs.append(Fraction(-1))
    return lp.is_feasible(rows, rhs)


def height(c: Cone, point: Sequence) -> Fraction:
    """Largest total generator weight expressing point inside the cone.

    For a point w in c this is max sum(lambda) over lambda >= 0 with
    sum(lambda_i ray_i) = w; it is finite because the cone is pointed, and
    unique when the cone is simplicial. Raises NotInConeError outside c.
    """
    target = [Fraction(x) for x in point]
    if all(x == 0 for x in target):
        return Fraction(0)
    if c.is_simplicial():
        matrix = [[c.rays[i][j] for i in range(c.n_rays)] for j in range(c.ambient_dim)]
        sol = solve_linear(matrix, target)
        if sol is None:
            raise NotInConeError("point is outside the cone's linear span")
        lams = sol[0]
        if any(l < 0 for l in lams):
            raise NotInConeError("point has a negative generator weight")
        return sum(lams, Fraction(0))
    m = c.n_rays
    rows = []
    rhs = []
    for j in range(c.ambient_dim):
        coeffs = tuple(g[j] for g in c.rays)
        rows.append(coeffs)
        rhs.append(target[j])
        rows.append(tuple(-x for x in coeffs))
        rhs.append(-target[j])
    for i in range(m):
        rows.append(tuple(-1 if i == k else 0 for k in range(m)))
        rhs.append(Fraction(0))
    obj = [Fraction(1)] * m
    res = lp.solve(lp.make_problem(rows, rhs, obj, "max"))
    if res.status == "infeasible":
        raise NotInConeError("point is not in the cone")
    if res.status != "optimal":
        raise InternalInconsistencyError("height LP is unbounded on a pointed cone")
    return res.value


def _dual_height_vertices(rays: Sequence[IntVector], d: int) -> list[tuple[Fraction, ...]]:
    """Vertices of {u : <ray, u> >= 1 for all rays}, for full-rank ray sets.

    By LP duality the height of any point w of the cone is the minimum of
    <u, w> over this region, and the region is pointed, so the minimum is
    attained at one of these vertices.
    """
    n = len(rays)
    out: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(range(n), d):
        sol = solve_linear([list(rays[i]) for i in subset], [Fraction(1)] * d)
        if sol is None or sol[1]:
            continue
        u = tuple(sol[0])
        if all(dot(r, u) >= 1 for r in rays):
            out.add(u)
    if not out:
        raise InternalInconsistencyError("dual height region of a full-rank cone has a vertex")
    return sorted(out)


def canonicity_threshold(c: Cone) -> tuple[Fraction, Optional[CanonicityWitness]]:
    """min(1, least height of a nonzero lattice point of the cone).

    Any lattice point of the cone with height below 1 lies in
    conv(0, rays) (take a maximizing representation), so scanning that
    bounded region finds the exact threshold; heights come from the dual
    vertex description. Lower-dimensional cones are handled in the
    coordinates of the saturated span of their rays, where their lattice
    points keep integer coordinates. Returns the threshold and a witness
    point achieving it when it is below 1.
    """
    d = c.ambient_dim
    rays = [tuple(r) for r in c.rays]
    span_rank = rank(rays)
    if span_rank < d:
        directions = saturate(rays)
        matrix = [[directions[i][j] for i in range(len(directions))] for j in range(d)]
        local_rays = []
        for r in rays:
            sol = solve_linear(matrix, list(r))
            if sol is None:
                raise InternalInconsistencyError("ray escaped the span of the rays")
            local_rays.append(tuple(int(x) for x in sol[0]))
        rays = local_rays
        d = span_rank
    else:
        directions = None
    duals = _dual_height_vertices(rays, d)
    scale = 1
    for u in duals:
        for x in u:
            scale = lcm(scale, Fraction(x).denominator)
    int_duals = [tuple(int(x * scale) for x in u) for u in duals]
    zero = tuple(0 for _ in range(d))
    hull = from_vertices([zero] + rays)
    best_scaled: Optional[int] = None
    best_point: Optional[IntVector] = None
    for pt in lattice_points(hull):
        if all(x == 0 for x in pt):
            continue
        h = min(dot(w, pt) for w in int_duals)
        if best_scaled is None or h < best_scaled:
            best_scaled = h
            best_point = tuple(int(x) for x in pt)
    if best_scaled is None or best_scaled >= scale:
        return Fraction(1), None
    best = Fraction(best_scaled, scale)
    if directions is not None:
        ambient = [0] * c.ambient_dim
        for coeff, direction in zip(best_point, directions):
            for j in range(c.ambient_dim):
                ambient[j] += coeff * direction[j]
        best_point = tuple(ambient)
    return best, CanonicityWitness(c, best_point, best)


def fan_canonicity_threshold(fan: NormalFan) -> tuple[Fraction, Optional[CanonicityWitness]]:
    """Least canonicity threshold over the maximal cones, with a witness if < 1."""
    best = Fraction(1)
    witness: Optional[CanonicityWitness] = None
    for c in fan.maximal_cones:
        t, w = canonicity_threshold(c)
        if t < best:
            best = t
            witness = w
    return best, witness


def is_alpha_canonical(fan: NormalFan, alpha) -> tuple[bool, Optional[CanonicityWitness]]:
    """Whether every nonzero lattice point of every cone has height >= alpha.

    alpha must lie in (0, 1]. On failure the witness names a cone and a
    lattice point of height below alpha.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError("alpha must lie in (0, 1]")
    threshold, witness = fan_canonicity_threshold(fan)
    if threshold >= alpha:
        return True, None
    return False, witness


def gorenstein_index(c: Cone) -> Optional[GorensteinCertificate]:
    """Least k >= 1 with an integer w satisfying <ray, w> = k for all rays.

    Integer solutions (w, k) of [R | -1] (w, k)^T = 0 form a lattice; the
    gcd of the k coordinates of a basis is the least positive k, and the
    matching w comes from the same gcd combination. Returns None when the
    rays admit no such functional at all.
    """
    d = c.ambient_dim
    rows = [tuple(g) + (-1,) for g in c.rays]
    basis = integer_kernel_basis(rows, ncols=d + 1)
    lasts = [v[d] for v in basis]
    g, coeffs = ext_gcd_list(lasts)
    if g == 0:
        return None
    w = [0] * d
    for coef, vec in zip(coeffs, basis):
        for j in range(d):
            w[j] += coef * vec[j]
    functional = tuple(w)
    if primitivize(functional)[0] != functional:
        raise InternalInconsistencyError("minimal functional must be primitive")
    for ray in c.rays:
        if dot(ray, functional) != g:
            raise InternalInconsistencyError("certificate functional failed on a ray")
    return GorensteinCertificate(g, functional)


def fan_gorenstein_index(fan: NormalFan) -> Optional[int]:
    """lcm of the maximal cone indices, or None when some cone has none.

    A functional for a maximal cone restricts to each face, so the faces
    never obstruct and their indices divide the maximal ones.
    """
    indices = []
    for c in fan.maximal_cones:
        cert = gorenstein_index(c)
        if cert is None:
            return None
        indices.append(cert.index)
    return lcm(*indices) if indices else None


def is_smooth_cone(c: Cone) -> bool:
    """Whether the rays form part of a lattice basis (here: d rays, det +-1)."""
    if c.n_rays != c.ambient_dim:
        return False
    return abs(det([list(r) for r in c.rays])) == 1


def is_smooth(fan: NormalFan) -> bool:
    return all(is_smooth_cone(c) for c in fan.maximal_cones)
