"""Unit tests for primeness detection via sub-Gauss-code witnesses."""

from virtlink import families, gauss, prime


def test_connected_sum_is_composite():
    trefoil = gauss.parse("O1+U2+O3+U1+O2+U3+")
    fig8 = gauss.parse("O1-U2+O3+U1-O4-U3+O2+U4-")
    s = gauss.connected_sum(trefoil, 0, 0, fig8, 0)
    r = prime.primeness(s)
    assert r.status is prime.Primeness.COMPOSITE
    assert r.witness is not None
    w = r.witness
    assert 0 < w.witness_code.crossing_count < s.crossing_count
    assert w.is_classical and w.is_alternating and w.is_reduced


def test_trefoil_is_prime():
    r = prime.primeness(gauss.parse("O1+U2+O3+U1+O2+U3+"))
    assert r.status is prime.Primeness.PRIME
    assert r.witness is None


def test_virtual_trefoil_reports_no_witness():
    # Non-alternating, so the witness criterion is silent: inconclusive,
    # never Composite.
    code = gauss.parse("O1+O2+U1+U2+")
    assert prime.enumerate_subcodes(code) == []
    assert prime.find_composite_witness(code) is None
    assert prime.primeness(code).status is prime.Primeness.NO_WITNESS_INCONCLUSIVE


def test_polygonal_links_are_prime():
    for n in (3, 4, 5, 6, 7):
        code = families.polygonal(n)
        assert prime.enumerate_subcodes(code) == []
        assert prime.primeness(code).status is prime.Primeness.PRIME


def test_witness_is_proper_subdiagram():
    t = gauss.parse("O1+U2+O3+U1+O2+U3+")
    s = gauss.connected_sum(t, 0, 0, t, 0)
    w = prime.find_composite_witness(s)
    assert w is not None
    assert 0 < w.witness_code.crossing_count < s.crossing_count
