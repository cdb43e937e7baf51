"""Volume bounds and crossing-genus inequalities for thickened-surface links."""

from __future__ import annotations

from dataclasses import dataclass

from . import surface
from .gauss import GaussCode

# Volume of the regular ideal octahedron: 8 Λ(π/4) where Λ is the Lobachevsky
# function Λ(θ) = -∫₀^θ log|2 sin t| dt; equivalently 4 · Catalan's constant.
V_OCT = 3.663862376708876
# Volume of the regular ideal tetrahedron: 3 Λ(π/3) = 1.01494160640965362502...
V_TET = 1.014941606409654


@dataclass(frozen=True)
class VolumeWindow:
    lower: float
    lower_is_strict: bool
    upper: float

    def contains(self, volume: float) -> bool:
        if self.lower_is_strict:
            return self.lower < volume <= self.upper
        return self.lower <= volume <= self.upper


@dataclass(frozen=True)
class EulerCrossingReport:
    c: int
    g: int
    f: int
    holds: bool


def euler_crossing_check(code: GaussCode) -> EulerCrossingReport:
    """Check f >= 1, equivalently c >= 2g - 1, on the code's cell complex."""
    complex_ = surface.build_cell_complex(code)
    c = complex_.n
    g = complex_.genus
    f = complex_.f
    holds = (f >= 1) and (c >= 2 * g - 1) and (f == c - 2 * g + 2)
    return EulerCrossingReport(c=c, g=g, f=f, holds=holds)


def volume_window(g: int, c: int) -> VolumeWindow:
    """Volume window for a tg-hyperbolic virtual link of genus g with c crossings.

    Upper bound 2 v_oct c (octahedral decomposition of the double).  Lower
    bounds: 2 v_tet attained by the figure-eight complement for g = 0; v_oct
    (least 2-cusped volume) strictly for g = 1; the Miyamoto bound
    2 v_oct (g-1) strictly for g >= 2.
    """
    if g < 0 or c < 1:
        raise ValueError("need g >= 0 and c >= 1")
    upper = 2 * V_OCT * c
    if g == 0:
        return VolumeWindow(lower=2 * V_TET, lower_is_strict=False, upper=upper)
    if g == 1:
        return VolumeWindow(lower=V_OCT, lower_is_strict=True, upper=upper)
    return VolumeWindow(lower=2 * V_OCT * (g - 1), lower_is_strict=True, upper=upper)


def volume_window_of_code(code: GaussCode) -> VolumeWindow:
    return volume_window(surface.ribbon_genus(code), code.crossing_count)


def miyamoto_bound(g: int) -> float:
    """(v_oct/2)|chi(dM)| for M with two genus-g totally geodesic boundaries:
    |chi| = 2(2g-2), so the bound is 2 v_oct (g-1)."""
    if g < 2:
        raise ValueError("miyamoto_bound requires g >= 2")
    return 2 * V_OCT * (g - 1)


def vmin_separation(g: int, q: int) -> bool:
    """Check V_min(g) < V_min(q) via (4g-2) v_oct <= (2q-2) v_oct for q >= 2g.

    q = 2g is the documented boundary case: the endpoints coincide and the
    strictness comes from the lower bound's strict inequality.
    """
    if g < 1 or q < 2 * g:
        raise ValueError("requires g >= 1 and q >= 2g")
    return (4 * g - 2) * V_OCT <= (2 * q - 2) * V_OCT
