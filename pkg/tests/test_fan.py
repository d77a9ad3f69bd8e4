"""Normal fans, cone heights, canonicity thresholds, Gorenstein indices."""

from fractions import Fraction

import pytest

from oracles import confirms_minimal_level, gauss_solve, smallest_solvable_level
from polyadj import lp
from polyadj.errors import InvalidConeError, NotInConeError
from polyadj.fan import (
    all_cones,
    canonicity_threshold,
    cone,
    fan_canonicity_threshold,
    fan_gorenstein_index,
    gorenstein_index,
    height,
    is_alpha_canonical,
    is_smooth,
    is_smooth_cone,
    normal_fan,
)
from polyadj.generators import cube, fig1, scaled_simplex
from polyadj.polytope import vertices
from polyadj.ratmath import dot

# pointed, non-simplicial, not Q-Gorenstein; (0,0,4) has representations
# with total weight anywhere in [2, 4], so its height must come out as 4
SKEW_RAYS = [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 3)]


def test_cone_constructor_normalizes_generators():
    c = cone([(2, 0), (0, 3), (1, 1), (4, 0)])
    assert c.rays == ((0, 1), (1, 0))
    assert c.ambient_dim == 2


def test_cone_constructor_rejects_lines_and_zero():
    with pytest.raises(InvalidConeError):
        cone([(1, 0), (-1, 0)])
    with pytest.raises(InvalidConeError):
        cone([(0, 0)])
    with pytest.raises(InvalidConeError):
        cone([])


def test_normal_fan_of_the_running_example():
    p = fig1()
    fan = normal_fan(p)
    assert len(fan.maximal_cones) == len(vertices(p).vertices) == 5
    assert set(fan.rays) == set(p.normals)
    for c, v in zip(fan.maximal_cones, fan.vertex_points):
        tight = {a for a, b in zip(p.normals, p.rhs) if dot(a, v) == b}
        assert set(c.rays) == tight


def test_fan_of_cube_is_smooth_and_simplicial():
    fan = normal_fan(cube(3))
    assert len(fan.maximal_cones) == 8
    assert all(c.is_simplicial() for c in fan.maximal_cones)
    assert is_smooth(fan)
    assert all(is_smooth_cone(c) for c in fan.maximal_cones)


def test_scaled_simplex_is_gorenstein_but_singular():
    fan = normal_fan(scaled_simplex(2, 2))
    assert not is_smooth(fan)
    assert fan_gorenstein_index(fan) == 1


def test_all_cones_of_the_square():
    fan = normal_fan(cube(2))
    cones = all_cones(fan)
    assert sum(1 for c in cones if c.n_rays == 1) == 4
    assert sum(1 for c in cones if c.n_rays == 2) == 4
    assert len(cones) == 8


def test_face_index_divides_the_parent_index():
    for p in (scaled_simplex(2, 3), scaled_simplex(3, 4), fig1()):
        fan = normal_fan(p)
        faces = all_cones(fan)
        for parent in fan.maximal_cones:
            cert = gorenstein_index(parent)
            if cert is None:
                continue
            for face in faces:
                if set(face.rays) <= set(parent.rays):
                    sub = gorenstein_index(face)
                    assert sub is not None
                    assert cert.index % sub.index == 0


def test_height_on_a_simplicial_cone():
    c = cone([(2, -1), (2, 1)])
    assert height(c, (1, 0)) == Fraction(1, 2)
    assert height(c, (4, 0)) == 2
    assert height(c, (2, 1)) == 1
    assert height(c, (0, 0)) == 0
    with pytest.raises(NotInConeError):
        height(c, (0, 1))
    with pytest.raises(NotInConeError):
        height(c, (-1, 0))


def test_height_takes_the_maximal_representation():
    c = cone(SKEW_RAYS)
    assert c.n_rays == 4
    assert height(c, (0, 0, 4)) == 4
    assert height(c, (0, 0, 1)) == 1
    with pytest.raises(NotInConeError):
        height(c, (5, 0, 1))


def _lp_height(c, point):
    # independent route: same program, but always through the LP solver
    m = c.n_rays
    rows = []
    rhs = []
    for j in range(c.ambient_dim):
        col = tuple(g[j] for g in c.rays)
        rows.append(col)
        rhs.append(Fraction(point[j]))
        rows.append(tuple(-x for x in col))
        rhs.append(-Fraction(point[j]))
    for i in range(m):
        rows.append(tuple(-1 if i == k else 0 for k in range(m)))
        rhs.append(Fraction(0))
    res = lp.solve(lp.make_problem(rows, rhs, [1] * m, "max"))
    assert res.status == "optimal"
    return res.value


def test_simplicial_heights_match_the_lp_route():
    fan = normal_fan(scaled_simplex(3, 5))
    for c in fan.maximal_cones:
        if not c.is_simplicial():
            continue
        for pt in list(c.rays) + [tuple(map(sum, zip(*c.rays)))]:
            assert height(c, pt) == _lp_height(c, pt)


def test_canonicity_threshold_pinned_cases():
    t, w = canonicity_threshold(cone([(2, -1), (2, 1)]))
    assert t == Fraction(1, 2)
    assert w.point == (1, 0) and w.height == Fraction(1, 2)
    t, w = canonicity_threshold(cone([(1, 0), (0, 1)]))
    assert t == 1 and w is None
    t, w = canonicity_threshold(cone([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]))
    assert t == 1 and w is None


def test_canonicity_threshold_of_lower_dimensional_cones():
    t, w = canonicity_threshold(cone([(2, -1, 0), (2, 1, 0)]))
    assert t == Fraction(1, 2)
    assert w.point == (1, 0, 0)
    t, w = canonicity_threshold(cone([(1, 1)]))
    assert t == 1 and w is None


def test_threshold_witness_is_consistent_with_height():
    c = cone([(3, -1), (3, 2)])
    t, w = canonicity_threshold(c)
    if w is not None:
        assert height(c, w.point) == w.height == t
        assert all(isinstance(x, int) for x in w.point)


def test_fan_threshold_of_the_scaled_triangle():
    fan = normal_fan(scaled_simplex(2, 3))
    t, w = fan_canonicity_threshold(fan)
    assert t == Fraction(2, 3)
    assert w.point == (0, 1)
    ok, _ = is_alpha_canonical(fan, Fraction(2, 3))
    assert ok
    bad, witness = is_alpha_canonical(fan, Fraction(3, 4))
    assert not bad
    assert witness.height < Fraction(3, 4)


def test_alpha_validation():
    fan = normal_fan(cube(2))
    with pytest.raises(ValueError):
        is_alpha_canonical(fan, 0)
    with pytest.raises(ValueError):
        is_alpha_canonical(fan, Fraction(3, 2))
    assert is_alpha_canonical(fan, 1)[0]


def test_index_r_cone_is_1_over_r_canonical():
    for rays in ([(2, -1), (2, 1)], [(3, -1), (3, 1)], [(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]):
        c = cone(rays)
        cert = gorenstein_index(c)
        t, _ = canonicity_threshold(c)
        assert t >= Fraction(1, cert.index)


def test_gorenstein_certificate_contents():
    cert = gorenstein_index(cone([(2, -1), (2, 1)]))
    assert cert.index == 2
    assert cert.functional == (1, 0)
    assert cert.u == (Fraction(1, 2), Fraction(0))
    for r in ((2, -1), (2, 1)):
        assert dot(r, cert.functional) == cert.index


def test_gorenstein_index_minimality_against_the_reference():
    for rays in ([(2, -1), (2, 1)], [(3, -1), (3, 2)], [(5, -2), (5, 3)],
                 [(1, 0, 1), (-1, 0, 1), (0, 1, 2)]):
        c = cone(rays)
        cert = gorenstein_index(c)
        assert cert is not None
        assert confirms_minimal_level([list(r) for r in c.rays], cert.index)
        assert smallest_solvable_level([list(r) for r in c.rays], cert.index) == cert.index


def test_non_gorenstein_cone_reports_none():
    c = cone(SKEW_RAYS)
    assert gorenstein_index(c) is None
    # no rational functional is constant on the rays
    assert gauss_solve([list(r) for r in c.rays], [1] * c.n_rays) is None


def test_fan_index_is_the_lcm_over_maximal_cones():
    from math import lcm
    fan = normal_fan(scaled_simplex(2, 4))
    per_cone = [gorenstein_index(c) for c in fan.maximal_cones]
    assert all(cert is not None for cert in per_cone)
    assert fan_gorenstein_index(fan) == lcm(*(cert.index for cert in per_cone)) == 2
