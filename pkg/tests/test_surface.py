"""Unit tests for the Carter surface construction and ribbon genus."""

from virtlink import gauss, surface


def g(text: str) -> int:
    return surface.ribbon_genus(gauss.parse(text))


def test_classical_codes_have_genus_zero():
    assert g("O1+U2+O3+U1+O2+U3+") == 0  # trefoil
    assert g("O1-U2+O3+U1-O4-U3+O2+U4-") == 0  # figure eight


def test_known_virtual_genera():
    assert g("O1+O2+U1+U2+") == 1  # virtual trefoil (2.1)
    assert g("O1-U2+O3+O2+U1-U3+") == 2  # 3-crossing genus-2 code
    assert g("O1-O2+U1-O3-U4+U3-O4+U2+") == 2  # Kishino knot (4.55)


def test_euler_formula_consistency():
    # 2 - 2g = (#vertices - #edges + #faces) for the Carter complex:
    # n vertices, 2n edges, f faces.
    for text in ("O1+O2+U1+U2+", "O1+U2+O3+U1+O2+U3+", "O1-O2+U1-O3-U4+U3-O4+U2+"):
        code = gauss.parse(text)
        n = code.crossing_count
        f = surface.boundary_count(code)
        assert n - 2 * n + f == 2 - 2 * surface.ribbon_genus(code)


def test_boundary_count_positive():
    for text in ("O1+O2+U1+U2+", "O1-U2+O3+O2+U1-U3+"):
        assert surface.boundary_count(gauss.parse(text)) >= 1


def test_is_classical_matches_genus_zero():
    assert surface.is_classical(gauss.parse("O1+U2+O3+U1+O2+U3+"))
    assert not surface.is_classical(gauss.parse("O1+O2+U1+U2+"))


def test_genus_invariant_under_cyclic_rotation():
    a = gauss.parse("O1-O2+U1-O3-U4+U3-O4+U2+")
    b = gauss.parse("U2+O1-O2+U1-O3-U4+U3-O4+")
    assert surface.ribbon_genus(a) == surface.ribbon_genus(b)


def test_cell_complex_counts():
    code = gauss.parse("O1+O2+U1+U2+")
    cx = surface.build_cell_complex(code)
    assert cx.n == code.crossing_count
    assert cx.e == 2 * code.crossing_count
    assert cx.f == surface.boundary_count(code)
    assert cx.euler == cx.n - cx.e + cx.f
    assert cx.genus == surface.ribbon_genus(code)
