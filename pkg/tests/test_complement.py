"""Unit tests for octahedral decompositions, doubling, exports, and DT codes."""

import pytest

from virtlink import complement, gauss, surface

VIRT_TREFOIL = "O1+O2+U1+U2+"
TREFOIL = "O1+U2+O3+U1+O2+U3+"
KISHINO = "O1-O2+U1-O3-U4+U3-O4+U2+"


def test_single_level_counts_genus_one():
    code = gauss.parse(VIRT_TREFOIL)
    tri = complement.to_triangulation(complement.octahedral_decomposition(code))
    c = code.crossing_count
    assert len(tri.tets) == 4 * c
    assert not tri.doubled
    # one link cusp per component plus the two surface boundary cusps
    assert len(tri.cusp_labels) == len(code.components) + 2


def test_doubled_counts_genus_two():
    code = gauss.parse(KISHINO)
    d = complement.double_decomposition(complement.octahedral_decomposition(code))
    tri = complement.to_triangulation(d)
    assert tri.doubled
    assert len(tri.cusp_labels) == 2 * len(code.components)
    assert all(lbl == "link" for lbl in tri.cusp_labels)


def test_genus_two_requires_doubling():
    code = gauss.parse(KISHINO)
    with pytest.raises(complement.ComplementError):
        complement.to_triangulation(complement.octahedral_decomposition(code))


def test_export_round_trip():
    code = gauss.parse(VIRT_TREFOIL)
    tri = complement.to_triangulation(complement.octahedral_decomposition(code))
    text = complement.export_triangulation(tri)
    back = complement.parse_triangulation(text)
    assert back.tets == tri.tets
    assert back.cusp_labels == tri.cusp_labels
    assert back.doubled == tri.doubled
    assert complement.export_triangulation(back) == text


def test_export_gluings_are_involutive():
    code = gauss.parse(VIRT_TREFOIL)
    tri = complement.to_triangulation(complement.octahedral_decomposition(code))
    for i, t in enumerate(tri.tets):
        for f in range(4):
            j = t.neighbors[f]
            p = t.perms[f]
            back_face = p[f]
            q = tri.tets[j].perms[back_face]
            assert tri.tets[j].neighbors[back_face] == i
            assert [q[p[k]] for k in range(4)] == [0, 1, 2, 3]


def test_deterministic_doubling():
    code = gauss.parse("O1-U2+O3+O2+U1-U3+")
    d = complement.double_decomposition(complement.octahedral_decomposition(code))
    a = complement.export_triangulation(complement.to_triangulation(d))
    b = complement.export_triangulation(complement.to_triangulation(d))
    assert a == b


def test_gauss_to_dt_classical_only():
    seq = complement.gauss_to_dt(gauss.parse(TREFOIL))
    assert len(seq) == 3
    assert sorted(abs(x) for x in seq) == [2, 4, 6]
    with pytest.raises(complement.ComplementError):
        complement.gauss_to_dt(gauss.parse(VIRT_TREFOIL))


def test_export_dt_line():
    line = complement.export_dt(gauss.parse(TREFOIL))
    vals = [int(x) for x in line.split()]
    assert len(vals) == 3 and all(v % 2 == 0 for v in vals)
