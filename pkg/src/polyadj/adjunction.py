"""Adjoint polytopes, Q-codegree, core data, and the machine checks that
tie them together.

For a full-dimensional lattice polytope P = {x : A x <= b} with primitive
rows, the adjoint at level c >= 0 is {x : A x <= b - c 1}. The critical
shift c* is the largest c keeping the adjoint nonempty, the Q-codegree is
1/c*, the core is the adjoint at c* (always of lower dimension), and the
core normals are the rows that are tight on the entire core. The hull of
the core normals and the normal fan's singularity data feed the finite
spectrum superset for the Q-codegree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from . import spectrum as spectrum_mod
from .errors import (
    EmptyPolytopeError,
    InternalInconsistencyError,
    NotLatticePolytopeError,
    UnboundedPolytopeError,
)
from .fan import (
    CanonicityWitness,
    NormalFan,
    fan_canonicity_threshold,
    fan_gorenstein_index,
    is_smooth,
    normal_fan,
)
from .polytope import (
    EmbeddedPolytope,
    HPolytope,
    InequalitySystem,
    embed_system,
    hull_any_dim,
    is_lattice_polytope,
    lattice_points,
    make_system,
    relative_interior_point,
)
from .ratmath import IntVector, dot, vec_add


def adjoint(p: HPolytope, c) -> InequalitySystem:
    """The system A x <= b - c 1; rows keep their positions in p."""
    c = Fraction(c)
    if c < 0:
        raise ValueError("adjoint level must be nonnegative")
    return InequalitySystem(p.dim, p.normals, tuple(b - c for b in p.rhs))


def slack_lift(p: HPolytope) -> HPolytope:
    """The polytope {(x, t) : A x + t 1 <= b, t >= 0} one dimension up.

    Its slice at height t is adjoint(p, t), so maximizing the last
    coordinate computes the critical shift. Each row of p stays a facet,
    so the rows below are already irredundant.
    """
    rows = [(tuple(a) + (1,), b) for a, b in zip(p.normals, p.rhs)]
    rows.append((tuple([0] * p.dim) + (-1,), Fraction(0)))
    pairs = sorted((a, Fraction(b)) for a, b in rows)
    return HPolytope(p.dim + 1, tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


def critical_shift(p: HPolytope) -> Fraction:
    """c* = max {c >= 0 : adjoint(p, c) is nonempty}; positive for full-dimensional p."""
    return raw_critical_shift(list(zip(p.normals, p.rhs)))


def raw_critical_shift(rows: Sequence[tuple[Sequence[int], object]]) -> Fraction:
    """Critical shift of a raw inequality description, exactly as given.

    Unlike critical_shift this performs no canonicalization, so redundant
    rows and non-primitive normals influence the answer: every row recedes
    at unit speed regardless of its scaling.
    """
    if not rows:
        raise UnboundedPolytopeError("no constraints given")
    d = len(rows[0][0])
    lift_rows = []
    lift_rhs = []
    for a, b in rows:
        vec = tuple(int(x) for x in a)
        if len(vec) != d:
            raise ValueError("mixed normal lengths")
        lift_rows.append(vec + (1,))
        lift_rhs.append(Fraction(b))
    lift_rows.append(tuple([0] * d) + (-1,))
    lift_rhs.append(Fraction(0))
    objective = [Fraction(0)] * d + [Fraction(1)]
    res = lp.solve(lp.make_problem(lift_rows, lift_rhs, objective, "max"))
    if res.status == "infeasible":
        raise EmptyPolytopeError("the system has no solution at level 0")
    if res.status == "unbounded":
        raise UnboundedPolytopeError("rows do not bound the shift from above")
    return res.value


def qcodegree(p: HPolytope) -> Fraction:
    return 1 / critical_shift(p)


@dataclass(frozen=True)
class AdjunctionData:
    """Critical shift, core, and core normal data of one polytope."""

    polytope: HPolytope
    critical_shift: Fraction
    qcodegree: Fraction
    core: EmbeddedPolytope
    core_normal_indices: tuple[int, ...]
    core_normals: tuple[IntVector, ...]
    acore: EmbeddedPolytope


def adjunction_data(p: HPolytope) -> AdjunctionData:
    c_star = critical_shift(p)
    if c_star <= 0:
        raise InternalInconsistencyError("critical shift of a full-dimensional polytope must be positive")
    system = adjoint(p, c_star)
    if system.is_empty():
        raise InternalInconsistencyError("adjoint at the critical shift must be nonempty")
    if not adjoint(p, c_star + 1).is_empty():
        raise InternalInconsistencyError("adjoint above the critical shift must be empty")
    core, implicit = embed_system(system)
    if core.dim >= p.dim:
        raise InternalInconsistencyError("core must have lower dimension than the polytope")
    normals = tuple(p.normals[i] for i in implicit)
    strict_point = relative_interior_point(core)
    for i in range(p.n_facets):
        value = dot(p.normals[i], strict_point)
        if i in set(implicit):
            if value != system.rhs[i]:
                raise InternalInconsistencyError("core normal row is not tight on the core")
            for v in core.vertices:
                if dot(p.normals[i], v) != system.rhs[i]:
                    raise InternalInconsistencyError("core normal row misses a core vertex")
        elif value >= system.rhs[i]:
            raise InternalInconsistencyError("non-core row is tight at a relative interior point")
    acore = hull_any_dim([tuple(a) for a in normals])
    return AdjunctionData(p, c_star, 1 / c_star, core, implicit, normals, acore)


def core(p: HPolytope) -> EmbeddedPolytope:
    return adjunction_data(p).core


def core_normals(p: HPolytope) -> tuple[IntVector, ...]:
    return adjunction_data(p).core_normals


def acore(p: HPolytope) -> EmbeddedPolytope:
    return adjunction_data(p).acore


def core_config(data: AdjunctionData) -> spectrum_mod.CoreNormalConfig:
    """The core normal set as a spectrum configuration; raises
    InvalidConfigError when the positive spanning property fails."""
    return spectrum_mod.make_config([tuple(a) for a in data.core_normals])


@dataclass(frozen=True)
class FanSummary:
    smooth: bool
    gorenstein_index: Optional[int]
    canonicity_threshold: Fraction
    threshold_witness: Optional[CanonicityWitness]


def fan_summary(fan: NormalFan) -> FanSummary:
    threshold, witness = fan_canonicity_threshold(fan)
    return FanSummary(is_smooth(fan), fan_gorenstein_index(fan), threshold, witness)


@dataclass(frozen=True)
class LemmaReport:
    """Results of the machine checks on one polytope.

    alpha is the canonicity level used for the scaled hull check: the
    caller's when supplied, otherwise the fan's own threshold. When the
    caller's alpha exceeds the threshold the scaled check asserts nothing
    and is skipped (None fields).
    """

    origin_in_relative_interior: bool
    core_normals_are_acore_vertices: bool
    alpha: Fraction
    alpha_is_canonical: bool
    scaled_interior_lattice_points: Optional[tuple[IntVector, ...]]
    scaled_check_holds: Optional[bool]
    shift_vector: tuple[Fraction, ...]
    shift_is_integral: bool

    @property
    def all_hold(self) -> bool:
        checks = [self.origin_in_relative_interior,
                  self.core_normals_are_acore_vertices,
                  self.shift_is_integral]
        if self.scaled_check_holds is not None:
            checks.append(self.scaled_check_holds)
        return all(checks)


def verify_lemmas(p: HPolytope, alpha=None, *, data: Optional[AdjunctionData] = None,
                  fan: Optional[NormalFan] = None,
                  threshold: Optional[Fraction] = None) -> LemmaReport:
    """Check, on this one polytope, the structural facts the pipeline rests on.

    1. 0 lies in the relative interior of the hull of the core normals.
    2. Every core normal is a vertex of that hull.
    3. For a canonical level alpha, the relative interior of the alpha
       scaled hull contains no nonzero lattice point.
    4. At a core point, row value plus critical shift is integral on every
       core normal row.
    """
    if not is_lattice_polytope(p):
        raise NotLatticePolytopeError("lemma checks require a lattice polytope")
    if data is None:
        data = adjunction_data(p)
    if fan is None:
        fan = normal_fan(p)
    d = p.dim
    origin = tuple(Fraction(0) for _ in range(d))
    origin_ok = data.acore.contains(origin, strict=True)
    normal_points = {tuple(Fraction(x) for x in a) for a in data.core_normals}
    vertices_ok = set(data.acore.vertices) == normal_points

    if threshold is None:
        threshold, _ = fan_canonicity_threshold(fan)
    if alpha is None:
        alpha = threshold
        canonical = True
    else:
        alpha = Fraction(alpha)
        if not 0 < alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        canonical = threshold >= alpha
    if canonical:
        scaled = hull_any_dim([tuple(alpha * x for x in a) for a in data.core_normals])
        inner = lattice_points(scaled, region="relative_interior")
        scaled_points: Optional[tuple] = inner
        scaled_ok: Optional[bool] = set(inner) == {tuple(0 for _ in range(d))}
    else:
        scaled_points = None
        scaled_ok = None

    y = relative_interior_point(data.core)
    shift_vector = tuple(dot(a, y) + data.critical_shift for a in data.core_normals)
    shift_ok = all(v.denominator == 1 for v in shift_vector)
    return LemmaReport(origin_ok, vertices_ok, alpha, canonical,
                       scaled_points, scaled_ok, shift_vector, shift_ok)


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyzer computes for one lattice polytope."""

    data: AdjunctionData
    fan: NormalFan
    fan_info: FanSummary
    lemmas: LemmaReport
    spectrum: spectrum_mod.SpectrumSuperset
    qcodegree_in_superset: Optional[bool]


def analyze(p: HPolytope, alpha=None, epsilon=Fraction(1, 2)) -> AnalysisReport:
    """Full pipeline: critical shift, core data, fan invariants, lemma
    checks, and the spectrum superset of the core normal configuration.

    Raises InternalInconsistencyError when the computed critical shift is
    not a multiple of the configuration's step, since that would refute
    the necessary condition the superset is built on.
    """
    if not is_lattice_polytope(p):
        raise NotLatticePolytopeError("analysis requires a lattice polytope")
    epsilon = Fraction(epsilon)
    data = adjunction_data(p)
    fan = normal_fan(p)
    info = fan_summary(fan)
    lemmas = verify_lemmas(p, alpha, data=data, fan=fan,
                           threshold=info.canonicity_threshold)
    cfg = core_config(data)
    superset = spectrum_mod.spectrum_superset(cfg, epsilon)
    step = superset.step
    if step == 0 or (data.critical_shift / step).denominator != 1:
        raise InternalInconsistencyError("critical shift is not on the configuration's grid")
    in_superset: Optional[bool]
    if data.qcodegree >= epsilon:
        in_superset = data.qcodegree in superset.values
        if not in_superset:
            raise InternalInconsistencyError("Q-codegree above epsilon missing from its superset")
    else:
        in_superset = None
    return AnalysisReport(data, fan, info, lemmas, superset, in_superset)
