from fractions import Fraction

import pytest

import dsheaf


def test_places_and_counts():
    assert dsheaf.count_places_of_degree(2, 3) == 2
    assert dsheaf.count_places_of_degree(3, 2) == 3
    listed = dsheaf.places(2, 2)
    assert listed == [("inf", 1), ("T", 1), ("T+1", 1), ("T^2+T+1", 2)]
    assert dsheaf.places(2, 1, include_infinity=False) == [("T", 1), ("T+1", 1)]


def test_genus_and_chi():
    assert dsheaf.genus(2, degrees=[1, 3]) == 2
    assert dsheaf.genus(4, polys=["T", "T+1", "T+w", "T+w^2"]) == 0
    assert dsheaf.chi(2, degrees=[1, 3]) == -2
    assert dsheaf.chi(2, degrees=[1, 2], level="T+1") == -12


def test_classify():
    assert dsheaf.classify(3, degrees=[1, 2]) == {
        "genus_zero": False,
        "hyperelliptic": "yes",
    }
    assert dsheaf.classify(2, degrees=[1, 1])["genus_zero"] is True


def test_invariants_report():
    report = dsheaf.invariants(2, degrees=[1, 3], o="T")
    assert report["genus"] == 2
    assert report["supersingular"] == 5
    assert report["class_number"] == 5
    assert report["mass"] == Fraction(7, 3)
    assert report["ratio"] == Fraction(5, 2)
    assert report["r_polys"] == ["T+1", "T^3+T+1"]
    assert report["extra_autos_kind"] == "supersingular"

    bare = dsheaf.invariants(2, degrees=[1, 3])
    assert "mass" not in bare
    assert bare["genus"] == 2


def test_scan():
    reports = dsheaf.scan(2, o="T", max_disc_degree=5, cardinality=2)
    assert [r["r_degrees"] for r in reports] == [[1, 2], [1, 3], [1, 4], [2, 3]]
    assert reports[-1]["genus"] == 8
    assert reports[-1]["ratio"] == Fraction(7, 8)


def test_table():
    rows = dsheaf.table(2, o="T", max_genus=50)
    assert len(rows) == 12
    assert rows[0] == {"r_degrees": [1, 2], "genus": 2, "supersingular": 1}
    assert rows[5] == {"r_degrees": [1, 7], "genus": 42, "supersingular": 45}


def test_shimura():
    assert dsheaf.shimura_genus(6) == 0
    assert dsheaf.shimura_genus(26) == 2
    assert dsheaf.zeta_constants(2) == (Fraction(1, 6), Fraction(1, 3))


def test_errors():
    with pytest.raises(ValueError):
        dsheaf.genus(6, degrees=[1, 3])
    with pytest.raises(ValueError):
        dsheaf.invariants(2, polys=["T", "T^3+T+1"], o="T")
    with pytest.raises(RuntimeError):
        dsheaf.places(17, 1)


def test_cli_passthrough():
    code, out, err = dsheaf.run_cli(["genus", "--q", "2", "--r-degrees", "1,3"])
    assert code == 0
    assert out == "2\n"
    assert err == ""
