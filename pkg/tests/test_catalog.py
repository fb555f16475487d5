from fractions import Fraction

import pytest

from dpcascade import catalog
from dpcascade.errors import OutOfRange, UnknownId
from dpcascade.polygon import QuotientSingularity, convex_hull, degree, normal_form, singularity_content


def test_vertex_lists():
    assert normal_form(catalog.polygon_X(4, 2)) == normal_form(convex_hull([(1, 0), (0, -1), (-1, 2), (-1, 4)]))
    assert normal_form(catalog.polygon_X(3, 5)) == normal_form(
        convex_hull([(0, -1), (2, -1), (2, 1), (1, 2), (-1, 2), (-1, 0)]))
    assert normal_form(catalog.polygon_X(5, 9)) == normal_form(convex_hull([(-1, -3), (5, -3), (5, 3), (-1, 3)]))
    assert normal_form(catalog.polygon_B(5)) == normal_form(convex_hull([(1, 0), (-1, -1), (-1, 5)]))
    assert normal_form(catalog.polygon_B(1)) == normal_form(convex_hull([(1, 0), (-1, -1), (-1, 1)]))


def test_x_5_9():
    P = catalog.polygon_X(5, 9)
    assert degree(P) == Fraction(4, 5)
    assert [str(s) for s in singularity_content(P).basket] == ["1/5(1,1)"]


def test_x_3_8():
    rec = catalog.family_record("X:3:8")
    assert rec.degree == Fraction(1, 3)
    assert rec.model.describe() == "X_10 in P(1,2,3,5)"


def test_out_of_range():
    with pytest.raises(OutOfRange):
        catalog.polygon_X(5, 10)
    with pytest.raises(OutOfRange):
        catalog.cascade_size(3)
    with pytest.raises(UnknownId):
        catalog.family_record("Y:1:2")


def test_parse_id_forms():
    assert catalog.parse_id("X(5,7)") == catalog.parse_id("X:5:7") == ("X", 5, 7)
    assert catalog.parse_id("B:5")[:2] == ("B", 5)


def test_family_records():
    r = catalog.family_record("X:5:3")
    # k - l + 4 + 4/k = 34/5; 24/5 is the l = 5 value.
    assert (r.fano_index, r.is_toric, r.degree) == (1, False, Fraction(34, 5))
    b = catalog.family_record("B:5")
    assert b.fano_index == 2 and b.degree == degree(catalog.polygon_B(5))
    p = catalog.family_record("pair:5:6")
    assert p.model.describe() == "X_11 in P(1,1,5,6)"


@pytest.mark.parametrize("fid", [f for f in catalog.catalog_ids() if not f.startswith(("X:4:", "B:4"))])
def test_every_record_validates(fid):
    assert catalog.validate_record(catalog.family_record(fid)).problems == ()


def test_k4_baskets_are_empty():
    # 1/4(1,1) is a T-singularity, so a k=4 polygon has no residual basket.
    for fid in catalog.cascade_ids(4):
        rec = catalog.family_record(fid)
        assert rec.basket.basket == ()
        assert rec.degree == catalog.expected_degree(rec)


@pytest.mark.parametrize("R,c,want", [(5, 1, ["1/5(1,1)"]), (4, 1, []), (6, 1, ["1/6(1,1)"]), (9, 2, [])])
def test_residual_basket(R, c, want):
    assert [str(s) for s in catalog.residual_basket(QuotientSingularity(R, c))] == want


@pytest.mark.parametrize("k", range(4, 13))
def test_cascade_size(k):
    assert catalog.cascade_size(k) == k + 6


def test_quasismooth_disagreement_is_only_the_m2_member():
    assert catalog.quasismooth_disagreements() == [("X:4:8", False, True)]


def test_golden_tables_match():
    rep = catalog.regenerate_tables()
    assert rep.ok, rep.summary()


def test_table_format():
    t = catalog.cascade_table(5)
    lines = t.text().splitlines()
    assert lines[0].split(" | ")[0] == "surface"
    assert len(lines) == 12


def test_rs_annotation_sits_on_degree_ten_thirds():
    rec = catalog.family_record("X:3:5")
    assert rec.degree == Fraction(10, 3)
    assert any("10/3" in n or "codimension" in n or "rigid" in n.lower() for n in rec.notes + tuple(
        m.note for m in rec.alternative_models))
