"""Unit tests for signed O/U Gauss-code parsing and transforms."""

import pytest

from virtlink import gauss

TREFOIL = "O1+U2+O3+U1+O2+U3+"
VIRT_TREFOIL = "O1+O2+U1+U2+"


def test_parse_round_trip():
    for text in (TREFOIL, VIRT_TREFOIL, "O1-U2+O3+U1-O4-U3+O2+U4-"):
        code = gauss.parse(text)
        assert gauss.serialize(code) == text


def test_parse_multi_component():
    code = gauss.parse("O1+U2+|U1+O2+")
    assert len(code.components) == 2
    assert code.crossing_count == 2
    assert gauss.serialize(code) == "O1+U2+|U1+O2+"


def test_parse_rejects_malformed():
    for bad in ("O1+U1", "O1+O1+", "O1+U2+", "X1+U1+", "O0+U0+",
                "O1*U1*", "O1+U1-"):
        with pytest.raises(gauss.GaussCodeError):
            gauss.parse(bad)


def test_each_crossing_has_one_over_one_under():
    code = gauss.parse(TREFOIL)
    for cid in code.crossing_ids():
        passes = [s for s in code.symbols() if s.crossing_id == cid]
        assert sorted(s.passage for s in passes) == [gauss.OVER, gauss.UNDER]


def test_canonical_form_cyclic_invariance():
    a = gauss.parse(TREFOIL)
    # rotate the word by two symbols and relabel crossings arbitrarily
    b = gauss.parse("O2+U3+O1+U2+O3+U1+")
    assert gauss.serialize(gauss.canonical_form(a)) == gauss.serialize(
        gauss.canonical_form(b)
    )


def test_reflect_is_involution():
    code = gauss.parse("O1-U2+O3+O2+U1-U3+")
    twice = gauss.reflect(gauss.reflect(code))
    assert gauss.serialize(gauss.canonical_form(twice)) == gauss.serialize(
        gauss.canonical_form(code)
    )


def test_switch_crossing_swaps_passages():
    code = gauss.parse(VIRT_TREFOIL)
    switched = gauss.switch_crossing(code, 1)
    text = gauss.serialize(switched)
    assert text.count("O") == 2 and text.count("U") == 2
    assert text != VIRT_TREFOIL
    assert gauss.serialize(gauss.switch_crossing(switched, 1)) == VIRT_TREFOIL


def test_reduce_removes_nugatory_kink():
    # R1 kink inserted into the virtual trefoil
    kinked = gauss.parse("O1+O2+U1+U2+O3+U3+")
    reduced = gauss.reduce(kinked)
    assert reduced.crossing_count == 2
    assert gauss.is_reduced(reduced)
    assert not gauss.is_reduced(kinked)


def test_is_alternating():
    assert gauss.is_alternating(gauss.parse(TREFOIL))
    assert gauss.is_alternating(gauss.parse("O1-U2+O3+U1-O4-U3+O2+U4-"))
    assert not gauss.is_alternating(gauss.parse(VIRT_TREFOIL))


def test_connected_sum_crossing_count():
    a = gauss.parse(TREFOIL)
    b = gauss.parse(VIRT_TREFOIL)
    s = gauss.connected_sum(a, 0, 0, b, 0)
    assert s.crossing_count == 5
    assert len(s.components) == 1
