import pytest
from hypothesis import given, strategies as st

from dpcascade import rootsys
from dpcascade.errors import DegenerateLattice
from dpcascade.rootsys import PolarizedLattice, cartan_matrix, enumerate_roots, reflect, simple_roots
from oracles import brute_roots, sympy_det, sympy_smith

GRID = [(k, l) for k in range(3, 11) for l in range(2, k + 5)] + [(3, 8)]


@pytest.mark.parametrize("k,l", [(3, 2), (3, 4), (3, 5), (3, 6), (3, 7), (4, 6), (4, 7), (5, 7), (5, 5)])
def test_roots_against_brute_force(k, l):
    assert enumerate_roots(PolarizedLattice(k, l)) == brute_roots(k, l)


@pytest.mark.parametrize("k,l", GRID)
def test_counts(k, l):
    assert len(enumerate_roots(PolarizedLattice(k, l))) == rootsys.expected_count(k, l)


def test_e8():
    s = rootsys.summarize(3, 8)
    assert (s.count, str(s.cartan_type), s.index.index) == (240, "E8", 1)


@pytest.mark.parametrize("k,l,t", [(6, 8, "A7xA1"), (6, 10, "D10"), (7, 5, "A4"), (5, 8, "A8")])
def test_types(k, l, t):
    assert str(rootsys.summarize(k, l).cartan_type) == t


@pytest.mark.parametrize("k,l,index", [(5, 8, 9), (5, 9, 4), (3, 8, 1), (5, 7, 14)])
def test_index(k, l, index):
    assert rootsys.summarize(k, l).index.index == index


@pytest.mark.parametrize("k,l", [(3, 5), (4, 7), (5, 9), (6, 8), (3, 8)])
def test_index_oracles(k, l):
    L = PolarizedLattice(k, l)
    R = enumerate_roots(L)
    C = cartan_matrix(simple_roots(R, L), L)
    rep = rootsys.index_of_connectedness(R, L)
    assert abs(sympy_det(C)) == rep.via_cartan
    basis = rootsys.root_lattice_basis(R)
    gram = [[-L.pairing(x, y) for y in basis] for x in basis]
    prod = 1
    for d in sympy_smith(gram):
        prod *= d
    assert prod == rep.via_smith


@pytest.mark.parametrize("k,l", [(k, l) for k in (3, 4, 5, 6) for l in (k + 2, k + 3, k + 4)] + [(3, 8)])
def test_orbit_tables(k, l):
    assert rootsys.verify_orbit_table(k, l)


def test_degenerate_lattice():
    with pytest.raises(DegenerateLattice):
        enumerate_roots(PolarizedLattice(3, 9))


@given(st.sampled_from(GRID))
def test_root_system_axioms(kl):
    L = PolarizedLattice(*kl)
    R = enumerate_roots(L)
    for x in R:
        assert L.pairing(x, x) == -2
        assert tuple(-a for a in x) in R
    for m in simple_roots(R, L):
        assert all(reflect(L, x, m) in R for x in R)
    # The negated Gram matrix on the base is positive definite: its Cartan matrix has positive determinant.
    assert sympy_det(cartan_matrix(simple_roots(R, L), L)) > 0
