from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dpcascade.errors import DegenerateInput, OriginNotInterior
from dpcascade.polygon import (
    QuotientSingularity,
    boundary_points,
    classify_singularity,
    cone_singularity,
    convex_hull,
    degree,
    dual_of_rational,
    dual_polygon,
    edge_decomposition,
    gl_equivalent,
    is_fano,
    lattice_points,
    normal_form,
    singularity_content,
)
from oracles import dual_lattice_count, shoelace_dual_degree

P2 = convex_hull([(1, 0), (0, 1), (-1, -1)])
P115 = convex_hull([(1, 0), (0, 1), (-1, -5)])


def test_hull_drops_interior_points():
    assert P2.as_lists() == convex_hull([(1, 0), (0, 1), (-1, -1), (0, 0)]).as_lists()
    assert {tuple(v) for v in P2.vertices} == {(1, 0), (0, 1), (-1, -1)}


def test_hull_of_catalog_points():
    P = convex_hull([(1, 0), (0, -1), (-1, 2), (-1, 5)])
    assert {tuple(v) for v in P.vertices} == {(1, 0), (0, -1), (-1, 2), (-1, 5)}


def test_collinear_is_degenerate():
    with pytest.raises(DegenerateInput):
        convex_hull([(0, 0), (1, 0), (2, 0)])


def test_is_fano():
    assert is_fano(P2)
    assert not is_fano(convex_hull([(2, 0), (0, 1), (-1, -1)]))
    assert not is_fano(convex_hull([(1, 0), (0, 1), (1, 1)]))


@pytest.mark.parametrize("u,v,R,c", [((1, 0), (0, 1), 1, 0), ((1, 0), (-1, -5), 5, 1), ((1, 0), (1, 4), 4, 3)])
def test_cone_singularity(u, v, R, c):
    s = cone_singularity(u, v)
    assert s.R == R
    if R > 1:
        assert s.c == c


@pytest.mark.parametrize("R,c,tag", [(5, 1, "Rsing"), (4, 1, "T"), (2, 1, "T"), (3, 1, "Rsing"), (1, 0, "Smooth")])
def test_classify(R, c, tag):
    assert classify_singularity(QuotientSingularity(R, c)).tag == tag


def test_singularity_content_examples():
    assert singularity_content(P2).n == 3 and singularity_content(P2).basket == ()
    c = singularity_content(P115)
    assert c.n == 2 and [str(s) for s in c.basket] == ["1/5(1,1)"]
    # conv{(±1,0),(0,±1)} is P1xP1; the square conv{(±1,±1)} is its quotient by mu_2.
    assert singularity_content(convex_hull([(1, 0), (0, 1), (-1, 0), (0, -1)])).n == 4
    sq = singularity_content(convex_hull([(1, 1), (-1, 1), (-1, -1), (1, -1)]))
    assert sq.n == 8 and sq.basket == ()


def test_edge_decomposition_covers_edges():
    pieces = edge_decomposition(P115)
    assert [p.kind for p in pieces].count("R") == 1
    assert [p.kind for p in pieces].count("T") == 2


def test_dual():
    D = dual_polygon(P2)
    assert set(D.vertices) == {(-1, -1), (2, -1), (-1, 2)}
    sq = dual_polygon(convex_hull([(1, 1), (-1, 1), (-1, -1), (1, -1)]))
    assert set(sq.vertices) == {(1, 0), (0, 1), (-1, 0), (0, -1)}
    with pytest.raises(OriginNotInterior):
        dual_polygon(convex_hull([(1, 0), (0, 1), (1, 1)]))


def test_degree_examples():
    assert degree(P2) == 9
    assert degree(P115) == Fraction(49, 5)
    assert shoelace_dual_degree(P115.as_lists()) == Fraction(49, 5)


def test_normal_form():
    rot = convex_hull([(0, 1), (-1, 0), (1, -1)])
    assert normal_form(rot) == normal_form(P2)
    a = convex_hull([(-1, 1), (1, 1), (5, -1), (-5, -1)])
    b = convex_hull([(-6, -1), (0, 1), (6, -1)])
    assert normal_form(a) != normal_form(b)
    assert not gl_equivalent(a, b)


def test_lattice_point_counts():
    assert len(lattice_points(P2)) == 4
    assert boundary_points(P2) == 3


unimodular = st.sampled_from(
    [((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (3, 1)), ((2, 1), (1, 1)), ((0, -1), (1, 0)),
     ((-1, 0), (0, -1)), ((1, -2), (0, 1))]
)
points = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=8)


def _fano_from(pts):
    try:
        P = convex_hull(pts + [(1, 0), (0, 1), (-1, -1)])
    except DegenerateInput:
        return None
    return P if is_fano(P) else None


@given(points, unimodular, unimodular)
def test_invariants_under_gl2z(pts, U, V):
    P = _fano_from(pts)
    if P is None:
        return
    Q = P.transform(V).transform(U)
    assert normal_form(P) == normal_form(Q)
    assert degree(P) == degree(Q)
    assert singularity_content(P) == singularity_content(Q)


@given(points)
def test_double_dual_and_degree_oracles(pts):
    P = _fano_from(pts)
    if P is None:
        return
    DD = dual_of_rational(dual_polygon(P))
    assert DD.is_integral() and DD.to_lattice() == P
    assert degree(P) == shoelace_dual_degree(P.as_lists())
    # h^0(-K) is the number of dual lattice points; Riemann-Roch gives 1 + degree for Gorenstein.
    if not singularity_content(P).basket and all(e.height == 1 for e in P.edges()):
        assert dual_lattice_count(P.as_lists(), 1) == 1 + degree(P)


@given(points)
def test_noether_type_identity(pts):
    # 12 - n - degree depends only on the basket; here on the empty basket it vanishes.
    P = _fano_from(pts)
    if P is None:
        return
    c = singularity_content(P)
    if not c.basket:
        assert 12 - c.n == degree(P)
