"""H/V conversions, canonicalization, embeddings, lattice enumeration."""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import box_lattice_points, brute_vertices
from polyadj.errors import (
    EmptyPolytopeError,
    LowerDimensionalError,
    NonUnimodularError,
    UnboundedPolytopeError,
)
from polyadj.generators import cube, fig1, scaled_simplex
from polyadj.polytope import (
    dilate,
    embed_system,
    from_inequalities,
    from_vertices,
    hull_any_dim,
    implicit_equalities,
    is_lattice_polytope,
    lattice_points,
    make_system,
    relative_interior_point,
    transform,
    vertices,
)
from polyadj.ratmath import dot, rank

coord = st.integers(min_value=-4, max_value=4)


def point_sets(d, n):
    return st.lists(st.tuples(*([coord] * d)), min_size=n, max_size=n)


TRIANGLE_ROWS = [((-1, 0), 0), ((0, -1), 0), ((3, 1), 3)]


def test_canonicalization_drops_redundant_and_scaled_rows():
    base = from_inequalities(TRIANGLE_ROWS)
    with_redundant = from_inequalities(TRIANGLE_ROWS + [((1, 0), 1)])
    with_scaled = from_inequalities(TRIANGLE_ROWS[:2] + [((6, 2), 6)])
    assert with_redundant == base
    assert with_scaled == base
    assert base.n_facets == 3
    assert all(all(isinstance(x, int) for x in a) for a in base.normals)


def test_rows_are_sorted_and_order_independent():
    rows = [((0, 1), 3), ((1, 0), 2), ((-1, 0), 0), ((0, -1), 0)]
    assert from_inequalities(rows) == from_inequalities(rows[::-1])


def test_merged_parallel_rows_keep_the_tighter_one():
    p = from_inequalities([((1, 0), 5), ((1, 0), 2), ((-1, 0), 0),
                           ((0, 1), 1), ((0, -1), 0)])
    assert ((1, 0), Fraction(2)) in list(zip(p.normals, p.rhs))
    assert ((1, 0), Fraction(5)) not in list(zip(p.normals, p.rhs))


def test_empty_and_unbounded_and_flat_inputs_are_rejected():
    with pytest.raises(EmptyPolytopeError):
        from_inequalities([((1, 0), 0), ((-1, 0), -1), ((0, 1), 1), ((0, -1), 0)])
    with pytest.raises(UnboundedPolytopeError):
        from_inequalities([((1, 0), 1), ((0, 1), 1)])
    with pytest.raises(LowerDimensionalError):
        from_inequalities([((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])


def test_zero_rows_are_constant_conditions():
    p = from_inequalities(TRIANGLE_ROWS + [((0, 0), 1)])
    assert p.n_facets == 3
    with pytest.raises(EmptyPolytopeError):
        from_inequalities(TRIANGLE_ROWS + [((0, 0), -1)])


def test_vertices_of_the_running_example():
    got = {v for v in vertices(fig1()).vertices}
    assert got == {(0, 0), (4, 0), (5, 1), (5, 3), (0, 3)}


def test_vertex_enumeration_matches_brute_force_on_named_cases():
    for p in (fig1(), cube(3), scaled_simplex(2, 3), scaled_simplex(3, 4)):
        got = set(vertices(p).vertices)
        assert got == brute_vertices(p.normals, p.rhs)


def test_vertices_are_cached():
    p = cube(2)
    assert vertices(p) is vertices(p)


@settings(deadline=None, max_examples=80)
@given(point_sets(2, 5))
def test_vertex_hull_roundtrip_2d(pts):
    if rank([tuple(b - a for a, b in zip(pts[0], q)) for q in pts[1:]]) < 2:
        return
    p = from_vertices(pts)
    hull_back = set(vertices(p).vertices)
    assert hull_back == brute_vertices(p.normals, p.rhs)
    assert hull_back <= {tuple(Fraction(x) for x in q) for q in pts}
    for q in pts:
        assert p.contains(q)


@settings(deadline=None, max_examples=40)
@given(point_sets(3, 6))
def test_vertex_hull_roundtrip_3d(pts):
    if rank([tuple(b - a for a, b in zip(pts[0], q)) for q in pts[1:]]) < 3:
        return
    p = from_vertices(pts)
    assert set(vertices(p).vertices) == brute_vertices(p.normals, p.rhs)


def test_from_vertices_needs_full_dimension():
    with pytest.raises(LowerDimensionalError):
        from_vertices([(0, 0), (1, 1), (2, 2)])


def test_implicit_equalities_found_by_slack_maximization():
    sys_ = make_system([((1, 0), 1), ((-1, 0), 0), ((0, 1), 0), ((0, -1), 0)])
    idx = implicit_equalities(sys_)
    assert set(idx) == {2, 3}
    emb, eq_idx = embed_system(sys_)
    assert emb.dim == 1
    assert set(eq_idx) == {2, 3}
    assert emb.vertices == ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)))


def test_embed_system_single_point():
    sys_ = make_system([((1, 1), 1), ((-1, -1), -1), ((1, -1), 0), ((-1, 1), 0)])
    emb, _ = embed_system(sys_)
    assert emb.dim == 0
    assert emb.local is None
    assert emb.vertices == ((Fraction(1, 2), Fraction(1, 2)),)
    assert emb.contains((Fraction(1, 2), Fraction(1, 2)))
    assert not emb.contains((0, 0))


def test_embed_system_full_dimensional_passthrough():
    sys_ = make_system(TRIANGLE_ROWS)
    emb, eq_idx = embed_system(sys_)
    assert emb.dim == 2 and eq_idx == ()
    assert emb.contains((Fraction(1, 4), Fraction(1, 4)), strict=True)


def test_hull_any_dim_of_a_segment_in_3d():
    emb = hull_any_dim([(0, 0, 0), (2, 2, 4)])
    assert emb.dim == 1 and emb.ambient_dim == 3
    for a, beta in emb.subspace.equations:
        assert dot(a, (0, 0, 0)) == beta
        assert dot(a, (2, 2, 4)) == beta
    assert emb.contains((1, 1, 2))
    assert emb.contains((1, 1, 2), strict=True)
    assert not emb.contains((2, 2, 4), strict=True)
    assert not emb.contains((1, 1, 1))


def test_relative_interior_point_is_strictly_inside():
    p = fig1()
    y = relative_interior_point(p)
    assert p.contains(y, strict=True)
    emb = hull_any_dim([(0, 0), (0, 2)])
    z = relative_interior_point(emb)
    assert emb.contains(z, strict=True)


def test_lattice_flag():
    assert is_lattice_polytope(fig1())
    half = from_inequalities([((2, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 0)])
    assert not is_lattice_polytope(half)


def _member_oracle(p):
    return lambda pt: all(dot(a, pt) <= b for a, b in zip(p.normals, p.rhs))


def test_lattice_points_match_box_scan_on_named_cases():
    for p in (fig1(), cube(3), scaled_simplex(2, 3), scaled_simplex(3, 2)):
        expected = box_lattice_points(vertices(p).vertices, _member_oracle(p))
        assert list(lattice_points(p)) == expected


def test_lattice_points_relative_interior_and_sublattice():
    p = dilate(cube(2), 2)
    assert lattice_points(p, region="relative_interior") == ((1, 1),)
    assert lattice_points(p, sublattice_scale=2) == ((0, 0), (0, 2), (2, 0), (2, 2))
    tri = scaled_simplex(2, 3)
    assert lattice_points(tri) == ((0, 0), (0, 1), (1, 0), (2, 0), (3, 0))
    assert lattice_points(tri, region="relative_interior") == ()


def test_lattice_points_of_embedded_sets():
    seg = hull_any_dim([(0, 0), (3, 3)])
    assert lattice_points(seg) == ((0, 0), (1, 1), (2, 2), (3, 3))
    assert lattice_points(seg, region="relative_interior") == ((1, 1), (2, 2))
    pt = hull_any_dim([(Fraction(1, 2), Fraction(1, 2))])
    assert lattice_points(pt) == ()


def test_lattice_points_input_validation():
    with pytest.raises(ValueError):
        lattice_points(cube(2), region="boundary")
    with pytest.raises(ValueError):
        lattice_points(cube(2), sublattice_scale=0)


@settings(deadline=None, max_examples=50)
@given(point_sets(2, 4))
def test_lattice_points_match_box_scan_2d(pts):
    if rank([tuple(b - a for a, b in zip(pts[0], q)) for q in pts[1:]]) < 2:
        return
    p = from_vertices(pts)
    expected = box_lattice_points(vertices(p).vertices, _member_oracle(p))
    assert list(lattice_points(p)) == expected


SHEAR = [[1, 1], [0, 1]]


def test_transform_maps_vertices_exactly():
    p = fig1()
    q = transform(p, SHEAR, (2, -1))
    expect = {(x + y + 2, y - 1) for x, y in vertices(p).vertices}
    assert set(vertices(q).vertices) == expect
    assert len(lattice_points(q)) == len(lattice_points(p))


def test_transform_rejects_non_unimodular():
    with pytest.raises(NonUnimodularError):
        transform(cube(2), [[2, 0], [0, 1]], (0, 0))


def test_transform_round_trips_through_the_inverse():
    p = fig1()
    q = transform(transform(p, SHEAR, (1, 1)), [[1, -1], [0, 1]], (0, 0))
    # the composite is x -> x + (0, 1), so one translation undoes it
    r = transform(q, [[1, 0], [0, 1]], (0, -1))
    assert r == p


def test_dilate_scales_vertices_and_rejects_bad_factors():
    p = scaled_simplex(2, 2)
    q = dilate(p, 3)
    assert set(vertices(q).vertices) == {(0, 0), (6, 0), (0, 3)}
    assert q.normals == p.normals
    with pytest.raises(ValueError):
        dilate(p, 0)


def test_make_system_emptiness():
    empty = make_system([((1, 0), 0), ((-1, 0), -2), ((0, 1), 1), ((0, -1), 0)])
    assert empty.is_empty()
    nonempty = make_system(TRIANGLE_ROWS)
    assert not nonempty.is_empty()
    assert nonempty.contains((Fraction(1, 3), Fraction(1, 3)))
