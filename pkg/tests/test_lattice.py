from hypothesis import given, strategies as st

from dpcascade.lattice import (
    det,
    det2,
    hermite_rows,
    inverse,
    primitive,
    rank,
    smith_invariants,
    solve_rational,
    vector_gcd,
    xgcd,
)
from oracles import sympy_det, sympy_smith

small = st.integers(-30, 30)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(small, small)
def test_xgcd_bezout(a, b):
    g, x, y = xgcd(a, b)
    assert a * x + b * y == g
    assert g >= 0
    if a or b:
        assert a % g == 0 and b % g == 0


def test_primitive_and_gcd():
    assert vector_gcd((4, -6)) == 2
    assert primitive((4, -6)) == (2, -3)
    assert det2((1, 0), (0, 1)) == 1


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_det_matches_sympy(M):
    assert det(M) == sympy_det(M)


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c))))
def test_smith_matches_sympy(M):
    assert [d for d in smith_invariants(M) if d] == sympy_smith(M)


@given(st.integers(1, 5).flatmap(lambda r: matrices(r, 3)))
def test_hermite_spans_same_lattice(M):
    H = hermite_rows(M)
    assert len(H) == rank(M)
    # Same lattice: stacking either onto the other does not change the Smith invariants.
    assert smith_invariants(H + M)[: len(H)] == smith_invariants(H)[: len(H)]
    assert smith_invariants(M + H) == smith_invariants(M)


def test_hermite_example():
    assert hermite_rows([[2, 0], [0, 3], [2, 3]]) == [[2, 0], [0, 3]]
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]


def test_solve_and_inverse():
    assert solve_rational([[2, 1], [1, 3]], [3, 5]) is not None
    x = solve_rational([[2, 1], [1, 3]], [3, 5])
    assert 2 * x[0] + x[1] == 3 and x[0] + 3 * x[1] == 5
    assert inverse([[1, 2], [2, 4]]) is None
    inv = inverse([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
