"""Smoke tests for the minklat extension module.

Exactness is the point: every rational value must arrive as a
fractions.Fraction, never a float.
"""

from fractions import Fraction

import pytest

import minklat


def test_named_bodies_and_volume():
    t2 = minklat.make_body("T:2")
    assert t2.dim == 2
    assert t2.volume() == Fraction(9, 2)
    assert t2.centroid() == [Fraction(0), Fraction(0)]

    c3 = minklat.make_body("cube:3")
    assert c3.volume() == 8
    assert c3.is_symmetric()
    assert minklat.make_body("S:3").volume() == Fraction(1, 6)


def test_hull_accepts_ints_strings_and_fractions():
    p = minklat.hull([[0, 0], ["2", 0], [0, Fraction(1, 2)]])
    assert p.volume() == Fraction(1, 2)
    with pytest.raises(TypeError):
        minklat.hull([[0.5, 0], [1, 0], [0, 1]])
    with pytest.raises(ValueError):
        minklat.hull([[0, 0], [1, 1], [2, 2]])  # degenerate


def test_successive_minima_and_gauge():
    k = minklat.hull([[3, 0], [0, 2], [-3, -2]])
    values, witnesses = minklat.successive_minima(k)
    assert values == [Fraction(1, 3), Fraction(1, 2)]
    for lam, z in zip(values, witnesses):
        assert k.gauge(z) == lam

    cross = minklat.make_body("cross:2")
    assert cross.gauge([1, 1]) == 2


def test_lattice_points_and_ehrhart():
    c2 = minklat.make_body("cube:2")
    assert minklat.count_points(c2) == 9
    assert len(minklat.enumerate_points(c2)) == 9
    assert minklat.ehrhart_polynomial(c2) == [1, 4, 4]
    assert minklat.lattice_surface_area(c2) == 4
    assert minklat.root_sum(c2) == 1

    half = minklat.standard_lattice(2)
    assert half.determinant() == 1
    skew = minklat.lattice([["1/2", 0], [0, "1/2"]])
    assert minklat.count_points(c2, skew) == 25


def test_checks_and_reports():
    assert "hsw-sym" in minklat.check_ids()
    rep = minklat.run_check("hsw-sym", minklat.make_body("cube:2"))
    assert rep["holds"] and rep["equality"]
    assert rep["lhs"] == Fraction(1)

    with pytest.raises(ValueError):
        minklat.run_check("hsw-sym", minklat.make_body("S:2"))

    g = minklat.gruenbaum_ratio(minklat.make_body("T:2"), [1, 1])
    assert g["ratio"] == Fraction(4, 9) and g["equality"]

    s = minklat.sign_sum_bound([[1, 0], [0, 1]], ["3/5", "4/5"])
    assert s["value"] == 4 and s["equality"]


def test_polar_and_symmetral():
    c2 = minklat.make_body("cube:2")
    assert c2.polar_body().vertices == minklat.make_body("cross:2").vertices
    assert minklat.is_reflexive(c2)

    t3 = minklat.make_body("T:3")
    pi = minklat.symmetral(t3)
    assert pi.is_symmetric()
    assert pi.volume() == minklat.make_body("cube:3").scaled(Fraction(3, 2)).volume()


def test_fuzz_is_deterministic_and_clean():
    a = minklat.fuzz("symmetric", 2, 10, 42, ["mink2-upper", "mink2-lower"])
    b = minklat.fuzz("symmetric", 2, 10, 42, ["mink2-upper", "mink2-lower"])
    assert a["violations"] == 0
    assert a["bodies"] == 10
    assert [r["lhs"] for r in a["details"]] == [r["lhs"] for r in b["details"]]
