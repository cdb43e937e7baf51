"""Unit tests for the named link families."""

import itertools

import pytest

from virtlink import families, gauss, surface


def test_polygonal_basic_properties():
    for n in range(3, 13):
        code = families.polygonal(n)
        assert code.crossing_count == n
        assert surface.ribbon_genus(code) == (n + 1) // 2 - 1
        assert surface.boundary_count(code) == (3 if n % 2 else 4)
        assert len(code.components) == (3 if n % 3 == 0 else 1 if n % 3 else 3)


def test_polygonal_component_rule():
    # 3 components iff 3 | n, else 1
    for n in range(3, 16):
        k = len(families.polygonal(n).components)
        assert k == (3 if n % 3 == 0 else 1)


def test_polygonal_rejects_small_n():
    with pytest.raises(families.FamilyError):
        families.polygonal(2)


def test_generalized_kishino_genus_and_crossings():
    for n in range(2, 7):
        code = families.generalized_kishino(
            n, [families.KishinoChoice()] * n
        )
        assert code.crossing_count == 2 * n
        assert surface.ribbon_genus(code) == n


def test_generalized_kishino_all_choice_vectors_n2():
    for sa1, sb1, sa2, sb2 in itertools.product((False, True), repeat=4):
        code = families.generalized_kishino(
            2,
            [families.KishinoChoice(switch_a=sa1, switch_b=sb1),
             families.KishinoChoice(switch_a=sa2, switch_b=sb2)],
        )
        assert surface.ribbon_genus(code) == 2
        assert code.crossing_count == 4


def test_kishino_455_frozen_choices():
    code = families.generalized_kishino(2, list(families.KISHINO_455_CHOICES))
    canon = gauss.serialize(gauss.canonical_form(code))
    assert canon == "O1-O2+U1-O3-U4+U3-O4+U2+"


def test_half_kishino_append_law():
    base = gauss.parse("O1+O2+U1+U2+")  # 2.1
    g0 = surface.ribbon_genus(base)
    appended = families.half_kishino_append(
        base, families.KISHINO_APPEND_GAP, families.KishinoChoice()
    )
    assert appended.crossing_count == base.crossing_count + 2
    assert surface.ribbon_genus(appended) == g0 + 1


def test_half_kishino_append_on_kishino_bases():
    for n in (2, 3):
        base = families.generalized_kishino(n, [families.KishinoChoice()] * n)
        appended = families.half_kishino_append(
            base, families.KISHINO_APPEND_GAP, families.KishinoChoice()
        )
        assert appended.crossing_count == base.crossing_count + 2
        assert surface.ribbon_genus(appended) == surface.ribbon_genus(base) + 1


def test_one_virtual_removes_one_crossing():
    base = gauss.parse("O1+U2+O3+U1+O2+U3+")
    out = families.one_virtual(base, 2)
    assert out.crossing_count == base.crossing_count - 1


def test_minimal_crossing_family():
    for g in range(2, 7):
        code = families.minimal_crossing_family(g)
        assert code.crossing_count == 2 * g - 1
        assert surface.ribbon_genus(code) == g
        assert surface.boundary_count(code) == 1
