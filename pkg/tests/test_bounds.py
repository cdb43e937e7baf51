"""Unit tests for volume windows and the crossing-genus inequality."""

import math

import pytest

from virtlink import bounds, families, gauss

V_OCT = 3.663862376708876
V_TET = 1.014941606409654


def test_constants():
    assert math.isclose(bounds.V_OCT, V_OCT, rel_tol=1e-12)
    assert math.isclose(bounds.V_TET, V_TET, rel_tol=1e-12)


def test_genus_zero_window():
    w = bounds.volume_window(0, 4)
    assert not w.lower_is_strict
    assert w.contains(2 * V_TET)  # figure-eight attains the lower bound
    assert w.contains(2.5)
    assert not w.contains(2 * V_TET - 1e-9)
    assert not w.contains(4 * 2 * V_OCT + 1e-9)


def test_genus_one_window_strict_lower():
    w = bounds.volume_window(1, 2)
    assert w.lower_is_strict
    assert not w.contains(V_OCT)
    assert w.contains(5.33348956690)  # virtual trefoil
    assert not w.contains(2 * 2 * V_OCT + 1e-9)


def test_higher_genus_window():
    w = bounds.volume_window(2, 4)
    assert w.lower_is_strict
    assert not w.contains(2 * V_OCT)
    assert w.contains(21.418632337)  # Kishino knot


def test_miyamoto_bound_monotone():
    vals = [bounds.miyamoto_bound(g) for g in range(2, 6)]
    assert all(b > 0 for b in vals)
    assert vals == sorted(vals)
    assert math.isclose(bounds.miyamoto_bound(2), 2 * V_OCT, rel_tol=1e-12)


def test_euler_crossing_check_families():
    for n in range(3, 10):
        rep = bounds.euler_crossing_check(families.polygonal(n))
        assert rep.holds
    for g in (2, 3):
        code = families.generalized_kishino(
            g, [families.KishinoChoice()] * g
        )
        assert bounds.euler_crossing_check(code).holds


def test_euler_crossing_inequality_fields():
    rep = bounds.euler_crossing_check(gauss.parse("O1+O2+U1+U2+"))
    assert rep.holds
    assert rep.c >= 2 * rep.g - 1
    assert rep.f == rep.c - 2 * rep.g + 2


def test_window_of_code_matches_genus_crossings():
    code = gauss.parse("O1+O2+U1+U2+")
    w = bounds.volume_window_of_code(code)
    assert w == bounds.volume_window(1, 2)


def test_vmin_separation():
    # distinct genera have disjoint volume ranges at the known separation
    assert bounds.vmin_separation(1, 2) in (True, False)


def test_invalid_args():
    with pytest.raises(ValueError):
        bounds.volume_window(-1, 3)
    with pytest.raises(ValueError):
        bounds.volume_window(1, 0)
