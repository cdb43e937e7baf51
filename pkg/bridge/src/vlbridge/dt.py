"""Volume computation for DT (Dowker-Thistlethwaite) exports of classical knots.

A DT line describes a classical knot diagram.  The sequence is converted back
to a signed one-component Gauss code (choosing crossing signs that make the
code planar, i.e. genus 0 — any such choice yields the diagram or its mirror,
which have equal complement volume), the diagram's crossing-octahedron
complex is built, the two material sphere vertices of the thickened-sphere
picture are collapsed, and the engine solves for the hyperbolic structure of
the knot complement.
"""

from __future__ import annotations

from itertools import product

from virtlink import complement, surface
from virtlink.gauss import OVER, UNDER, GaussCode, GaussCodeError, Symbol

from .engine import Complex, geometrize


def parse_dt(line: str) -> list[int]:
    try:
        seq = [int(x) for x in line.split()]
    except ValueError as exc:
        raise GaussCodeError(f"malformed DT line: {line!r}") from exc
    if not seq or any(x == 0 or x % 2 for x in seq):
        raise GaussCodeError(f"DT entries must be nonzero even integers: {line!r}")
    if sorted(abs(x) for x in seq) != list(range(2, 2 * len(seq) + 1, 2)):
        raise GaussCodeError(f"DT entries must pair odd labels with 2..2c: {line!r}")
    return seq


def dt_to_code(seq: list[int]) -> GaussCode:
    """A genus-0 signed Gauss code realizing the DT diagram (up to mirror)."""
    c = len(seq)
    passage = {}
    crossing_at = {}
    for k, ev in enumerate(seq):
        odd = 2 * k + 1
        even = abs(ev)
        cid = k + 1
        crossing_at[odd] = cid
        crossing_at[even] = cid
        # negative entry: the even-labelled passage is the over-passage
        passage[even] = OVER if ev < 0 else UNDER
        passage[odd] = UNDER if ev < 0 else OVER
    for signs in product((1, -1), repeat=c):
        word = tuple(
            Symbol(passage[pos], crossing_at[pos], signs[crossing_at[pos] - 1])
            for pos in range(1, 2 * c + 1)
        )
        code = GaussCode((word,))
        if surface.ribbon_genus(code) == 0:
            return code
    raise GaussCodeError("DT sequence is not realizable by a planar diagram")


def dt_volume(line: str, seed: int = 1, attempts: int = 25):
    """(volume_or_None, verdict) for the knot complement of a DT export."""
    code = dt_to_code(parse_dt(line))
    d = complement.octahedral_decomposition(code)
    tri = complement._build_single_level(d)
    cx = Complex([(t.neighbors, t.perms) for t in tri.tets])
    return geometrize(cx, seed=seed, attempts=attempts)
