import random
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dpcascade import catalog
from dpcascade.errors import NoSuchDivisor
from dpcascade.polygon import convex_hull, is_fano
from dpcascade.scaffolding import (
    NefDivisor,
    Scaffolding,
    Shape,
    anti_canonical_scaffolding,
    git_equivalent,
    git_from_matrix,
    laurent_invert,
    polyhedron_of_sections,
    random_valid_scaffolding,
    validate_scaffolding,
)


def test_sections_on_p2():
    P = polyhedron_of_sections(Shape((2,)), NefDivisor((1, 1, 1)))
    assert set(P.vertices) == {(-1, -1), (2, -1), (-1, 2)}
    zero = polyhedron_of_sections(Shape((2,)), NefDivisor((0, 0, 0)))
    assert set(zero.vertices) == {(0, 0)}


def test_sections_on_p1xp1_rectangle():
    m = 3
    P = polyhedron_of_sections(Shape((1, 1)), NefDivisor((0, 2, 0, m + 1)))
    xs = {v[0] for v in P.vertices}
    ys = {v[1] for v in P.vertices}
    assert max(xs) - min(xs) == 2 and max(ys) - min(ys) == m + 1


def _first_model(k, l):
    return Scaffolding.build([1], 1, [((0, 0), (1,), True), ((1, 0), (0,)), ((l - k, k), (-1,))], ((0, 1), (1, 0)))


def test_first_model_scaffolding_validates():
    P = catalog.polygon_X(4, 2)
    assert {tuple(v) for v in P.vertices} == {(1, 0), (0, -1), (-1, 2), (-1, 4)}
    assert validate_scaffolding(P, _first_model(4, 2))
    bad = Scaffolding.build([1], 1, [((0, 0), (1,), True), ((1, 0), (0,)), ((-1, 3), (-1,))], ((0, 1), (1, 0)))
    assert not validate_scaffolding(P, bad)


@pytest.mark.parametrize("k,l", [(3, 1), (4, 2), (5, 3), (8, 9)])
def test_first_model_matrix_verbatim(k, l):
    g = laurent_invert(catalog.polygon_X(k, l), _first_model(k, l))
    assert g.weight_matrix == ((1, 0, 0, 1, 0), (0, 1, 1, l - k, k))
    assert g.stability == (1, 2)
    assert not g.invariant_problems()


def test_two_strut_triangle_gives_p1166():
    g = laurent_invert(catalog.polygon_pair(6, 6), catalog._line_scaffolding(6, 6))
    assert sorted(g.weights()) == [1, 1, 6, 6]
    assert g.equation_degrees == ((12,),)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_odd_k_plus_2_matrix(m):
    k = 2 * m - 1
    rec = catalog.family_record(f"X:{k}:{k + 2}")
    assert validate_scaffolding(rec.polygon, rec.scaffolding)
    printed = git_from_matrix([[1, 1, 0, 0, m - 1, m], [0, 0, 1, 1, m, m - 1]], [1, 1])
    g = laurent_invert(rec.polygon, rec.scaffolding)
    assert git_equivalent(g, printed)


def test_anti_canonical_examples():
    m = 2
    P = convex_hull([(-1, -1), (-1, m + 1), (m + 1, -1)])
    S = anti_canonical_scaffolding(P, (2,))
    g = laurent_invert(P, S)
    assert sorted(g.weights()) == [1, 1, 1, m]
    assert g.equation_degrees == ((m + 2,),)
    k = 5
    g = laurent_invert(catalog.polygon_X(k, k + 4), anti_canonical_scaffolding(catalog.polygon_X(k, k + 4), (1, 1)))
    assert git_equivalent(g, git_from_matrix([[1, 1, 3, 3, 5]], [1], [(6,), (6,)]))
    with pytest.raises(NoSuchDivisor):
        anti_canonical_scaffolding(convex_hull([(1, 0), (0, 1), (-1, -1)]), (1, 1))


def test_git_equivalent_examples():
    a = git_from_matrix([[1, 6, 6, 1]], [2])
    assert git_equivalent(a, git_from_matrix([[1, 1, 6, 6]], [2]))
    assert not git_equivalent(a, git_from_matrix([[1, 1, 1, 3, 3]], [1]))
    A = git_from_matrix([[1, 0, 0, 1, 0], [0, 1, 1, -2, 5]], [1, 2])
    B = git_from_matrix([[0, 1, 0, 1, 0], [1, 0, 1, -2, 5]], [1, 2])
    assert git_equivalent(A, B)


def _minor_profile(g):
    cols = g.columns
    r = g.rows
    if r == 1:
        return Counter(abs(c[0]) for c in cols)
    return Counter(abs(a[0] * b[1] - a[1] * b[0]) for a, b in combinations(cols, 2))


@given(st.integers(0, 10_000))
def test_gitdata_invariants_on_random_scaffoldings(seed):
    P, S = random_valid_scaffolding(random.Random(seed))
    assert is_fano(P)
    g = laurent_invert(P, S)
    assert g.invariant_problems() == []


@given(st.integers(0, 10_000), st.sampled_from([((0, 1), (-1, 0)), ((1, 1), (0, 1)), ((2, 1), (1, 1)), ((1, 0), (-2, 1))]))
def test_frame_covariance(seed, U):
    P, S = random_valid_scaffolding(random.Random(seed))

    def act(v):
        return (U[0][0] * v[0] + U[0][1] * v[1], U[1][0] * v[0] + U[1][1] * v[1])

    P2 = P.transform(U)
    S2 = Scaffolding(S.shape, S.u, S.struts, (act(S.frame[0]), act(S.frame[1])))
    assert validate_scaffolding(P2, S2)
    assert laurent_invert(P2, S2) == laurent_invert(P, S)


@given(st.integers(0, 10_000), st.randoms(use_true_random=False))
def test_git_equivalent_under_column_shuffle(seed, rnd):
    P, S = random_valid_scaffolding(random.Random(seed))
    g = laurent_invert(P, S)
    cols = g.columns
    rnd.shuffle(cols)
    h = git_from_matrix([list(r) for r in zip(*cols)], g.stability, g.equation_degrees)
    assert git_equivalent(g, h)
    # Independent necessary condition: |maximal minors| agree as multisets.
    assert _minor_profile(g) == _minor_profile(h)
