"""Unit tests for the bundled knot table."""

import math

import pytest

from virtlink import gauss, surface, tables


@pytest.fixture(scope="module")
def entries():
    return tables.load_table()


def test_loads_116_entries(entries):
    assert len(entries) == 116
    names = [e.name for e in entries]
    assert names[0] == "2.1" and names[-1] == "4.108"
    assert len(set(names)) == 116


def test_known_entries(entries):
    e = tables.entry("2.1")
    assert e.min_genus == 1
    assert math.isclose(e.volume_value, 5.33348956690, rel_tol=1e-11)
    assert tables.entry("3.6").hyperbolic is False
    assert tables.entry("4.108").min_genus == 0
    assert tables.entry("4.55").min_genus == 2


def test_kishino_code_is_pinned(entries):
    assert tables.entry("4.55").code_text == "O1-O2+U1-O3-U4+U3-O4+U2+"


def test_codes_parse_and_match_crossings(entries):
    for e in entries:
        code = e.code
        assert code.crossing_count == e.crossings


def test_genus_lower_bound(entries):
    for e in entries:
        g = surface.ribbon_genus(e.code)
        assert g >= e.min_genus
        if gauss.is_alternating(e.code):
            assert g == e.min_genus


def test_groups_are_symmetric_closures(entries):
    by_name = {e.name: e for e in entries}
    for e in entries:
        for ref in e.volume_group:
            assert e.name in by_name[ref].volume_group


def test_printed_digits_agree():
    assert tables.printed_digits_agree("18.831683367", "18.8316833673")
    assert tables.printed_digits_agree("20.505494782", "20.5054947824")
    assert not tables.printed_digits_agree("18.831683367", "18.831833668")


def test_verify_combinatorial(entries):
    report = tables.verify_combinatorial(entries)
    assert report.all_passed
    # the documented printed-volume errata are flagged, not fatal
    assert any("4.77" in err for err in report.errata)
    assert any("4.90" in err for err in report.errata)


def test_expected_volume_applies_errata():
    e = tables.entry("4.77")
    assert e.volume != tables.expected_volume(e)
    assert tables.expected_volume(e) == "18.831683367"
    e = tables.entry("4.90")
    assert tables.expected_volume(e) == "23.103877032"


def test_env_override_missing_file(monkeypatch, tmp_path):
    monkeypatch.setenv("VIRTLINK_DATA", str(tmp_path / "nope.tsv"))
    with pytest.raises(tables.TableError):
        tables.load_table()
