import pytest
from hypothesis import given, strategies as st

from dpcascade import catalog, hilbert
from dpcascade.errors import DegreeNonPositive
from dpcascade.hilbert import HilbertFraction, IntPolynomial, series_expand
from oracles import ci_series, cascade_value, dual_lattice_count, p11k_anticanonical


def test_series_examples():
    assert series_expand(HilbertFraction(IntPolynomial([1]), (1,)), 4) == [1, 1, 1, 1]
    assert series_expand(HilbertFraction(IntPolynomial([1]), (1, 1, 5)), 6) == [1, 2, 3, 4, 5, 7]
    assert series_expand(hilbert.blowup_contribution(), 4) == [0, -1, -3, -6]


@pytest.mark.parametrize("k,coeffs", [(1, [1, 7, 1]), (2, [1, 7, 7, 1]), (3, [1, 7, 9, 7, 1])])
def test_p11k_numerators(k, coeffs):
    assert hilbert.anticanonical_hilbert_P11k(k).numerator.dense() == coeffs


@pytest.mark.parametrize("k", range(1, 13))
def test_closed_form_and_monomial_oracle(k):
    H = hilbert.anticanonical_hilbert_P11k(k)
    assert H.numerator == hilbert.closed_form_numerator(k)
    assert series_expand(H, 8) == [p11k_anticanonical(k, n) for n in range(8)]


def test_cascade_examples():
    assert hilbert.cascade_numerator(3, 6).dense() == [1, 1, 3, 1, 1]
    assert hilbert.cascade_numerator(4, 0) == hilbert.anticanonical_hilbert_P11k(4).numerator
    with pytest.raises(DegreeNonPositive):
        hilbert.cascade_numerator(5, 10)


@pytest.mark.parametrize("k", range(1, 11))
def test_cascade_series_against_blowup_count(k):
    for l in range(catalog.max_l(k) + 1):
        assert series_expand(hilbert.cascade_hilbert(k, l), 7) == [cascade_value(k, l, n) for n in range(7)]


@pytest.mark.parametrize("fid", [f for f in catalog.catalog_ids() if f.startswith("X")])
def test_cascade_series_against_dual_lattice_points(fid):
    # The toric degeneration has the same Hilbert function: count points of m times the dual polygon.
    rec = catalog.family_record(fid)
    got = series_expand(hilbert.cascade_hilbert(rec.k, rec.l), 4)
    assert got == [dual_lattice_count(rec.polygon.as_lists(), m) for m in range(4)]


def test_ci_examples():
    H = hilbert.ci_hilbert((1, 1, 2, 3), (6,))
    assert series_expand(H, 10) == ci_series((1, 1, 2, 3), (6,), 10)
    assert hilbert.fractions_equal(hilbert.ci_hilbert((1,), ()), HilbertFraction(IntPolynomial([1]), (1,)))
    assert hilbert.fractions_equal(HilbertFraction(IntPolynomial([1]), (1,)), HilbertFraction(IntPolynomial([1, 1]), (2,)))


@pytest.mark.parametrize("m", range(1, 7))
def test_model_identities(m):
    for mi in hilbert.table_models(m):
        assert hilbert.check_model(mi), mi.label
        assert series_expand(hilbert.cascade_hilbert(mi.k, mi.l), 12) == ci_series(mi.weights, mi.degrees, 12)


@pytest.mark.parametrize("m", range(1, 7))
def test_printed_odd_k3_numerator(m):
    k = 2 * m - 1
    H = hilbert.cascade_hilbert(k, k + 3)
    assert H.numerator_over(hilbert.odd_denominator_k3(m)) == hilbert.printed_odd_k3_numerator(m)


@pytest.mark.parametrize("m", range(1, 7))
def test_printed_odd_k2_numerator_has_a_typo(m):
    k = 2 * m - 1
    got = hilbert.cascade_hilbert(k, k + 2).numerator_over(hilbert.odd_denominator_k2(m))
    # Replacing the repeated -4t^{m+2} with -4t^{3m+1} gives the computed numerator.
    fixed = hilbert.printed_odd_k2_numerator(m) + IntPolynomial({m + 2: 4}) - IntPolynomial({3 * m + 1: 4})
    assert got == fixed
    assert got != hilbert.printed_odd_k2_numerator(m)


def test_nonnegativity_exceptions():
    bad = [(k, l) for k in range(1, 13) for l in range(catalog.max_l(k) + 1)
           if any(v < 0 for v in hilbert.cascade_numerator(k, l).terms.values())]
    assert bad == [(1, 8), (3, 8)]


@given(st.integers(1, 12).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, catalog.max_l(k)))))
def test_cascade_numerators_palindromic(kl):
    assert hilbert.cascade_numerator(*kl).is_palindromic()


polys = st.lists(st.integers(-5, 5), max_size=6).map(IntPolynomial)


@given(polys, polys, polys)
def test_polynomial_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a).is_zero()


@given(polys, st.integers(1, 5))
def test_exact_division(a, e):
    assert (a * IntPolynomial.one_minus(e)).div_one_minus(e) == a
