"""Generators for named virtual link families.

Families: virtual n-polygonal links, half-Kishino appends, generalized
n-Kishino knots, 1-virtual alternating links, and the minimal-crossing
genus-g knots.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gauss as G
from . import prime as P
from . import surface
from .gauss import GaussCode, GaussCodeError, Symbol, OVER, UNDER


class FamilyError(ValueError):
    """Raised when a generator's enforced postcondition fails."""


# -- polygonal links ---------------------------------------------------------


def _polygonal_words(n: int) -> list[list[int]]:
    if n % 3 != 0:
        seq = [(i % n) + 1 for i in range(3 * n)]
        return [[v for pos, v in enumerate(seq, start=1) if pos % 3 != 0]]
    comps = []
    for offset in (1, 2, 3):
        comps.append([v for pos, v in enumerate(range(1, n + 1), start=1) if (pos - offset) % 3 != 0])
    return comps


def _assign_letters(words: list[list[int]]) -> list[list[str]]:
    """2-color positions so letters alternate along each cyclic component and
    each id gets one O and one U."""
    index: list[tuple[int, int]] = [(ci, pi) for ci, w in enumerate(words) for pi in range(len(w))]
    pos_of = {p: k for k, p in enumerate(index)}
    adj: list[set[int]] = [set() for _ in index]
    for ci, w in enumerate(words):
        m = len(w)
        for pi in range(m):
            a, b = pos_of[(ci, pi)], pos_of[(ci, (pi + 1) % m)]
            adj[a].add(b)
            adj[b].add(a)
    occ: dict[int, list[int]] = {}
    for k, (ci, pi) in enumerate(index):
        occ.setdefault(words[ci][pi], []).append(k)
    for pair in occ.values():
        a, b = pair
        adj[a].add(b)
        adj[b].add(a)
    color = [-1] * len(index)
    for start in range(len(index)):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    raise FamilyError("letter assignment inconsistent (construction bug)")
    out = []
    for ci, w in enumerate(words):
        out.append([OVER if color[pos_of[(ci, pi)]] == 0 else UNDER for pi in range(len(w))])
    return out


def polygonal(n: int) -> GaussCode:
    """The n-polygonal virtual link: write 1..n three times, cross off every
    third integer (three offset copies when 3 | n, giving three components).

    Letters alternate along each component; signs are uniform, with the sign
    picked so that ribbon_genus equals the theorem value ceil(n/2) - 1.
    """
    if n < 3:
        raise FamilyError("polygonal links need n >= 3")
    words = _polygonal_words(n)
    letters = _assign_letters(words)
    target = -(-n // 2) - 1
    for sign in (1, -1):
        comps = tuple(
            tuple(Symbol(letters[ci][pi], words[ci][pi], sign) for pi in range(len(words[ci])))
            for ci in range(len(words))
        )
        code = GaussCode(comps)
        if surface.ribbon_genus(code) == target:
            if not G.is_alternating(code) or not G.is_reduced(code):
                raise FamilyError("polygonal output not alternating/reduced (construction bug)")
            return code
    raise FamilyError(f"neither uniform sign gives genus {target} for polygonal({n})")


# -- half-Kishino appends and generalized Kishino knots ----------------------


@dataclass(frozen=True)
class KishinoChoice:
    """One appended half-Kishino unit: the two crossing choices, whether the
    unit is reflected, and the cut point (gap 0..3 of the unit's cyclic word)."""

    switch_a: bool = False
    switch_b: bool = False
    reflect: bool = False
    cut_point: int = 0


# Base linear word of the half-Kishino tangle (fresh ids a=1, b=2).
_HALF_KISHINO_BASE = "O1+O2+U1+U2+"

# Frozen parameters reproducing table 4.55 by a one-time finite search (kept
# as a test): the choice vector for the two units of the base generalized
# 2-Kishino and the insertion gap of the second unit.
KISHINO_455_CHOICES = (
    KishinoChoice(switch_a=False, switch_b=True, reflect=False, cut_point=2),
    KishinoChoice(switch_a=False, switch_b=True, reflect=True, cut_point=2),
)
KISHINO_455_SECOND_GAP = 0
# Gap used for the (n-2) further appends of generalized_kishino / the
# minimal-crossing family.
KISHINO_APPEND_GAP = 0


def _unit_code(choice: KishinoChoice) -> GaussCode:
    code = G.parse(_HALF_KISHINO_BASE)
    if choice.switch_a:
        code = G.switch_crossing(code, 1)
    if choice.switch_b:
        code = G.switch_crossing(code, 2)
    if choice.reflect:
        code = G.reflect(code)
    return code


def half_kishino_append(code: GaussCode, gap: int, choice: KishinoChoice, component: int = 0) -> GaussCode:
    """Insert one half-Kishino unit at the gap; enforces genus + 1, c + 2."""
    before_genus = surface.ribbon_genus(code) if not code.is_empty() else 0
    before_c = code.crossing_count
    unit = _unit_code(choice)
    result = G.connected_sum(code, component, gap, unit, choice.cut_point)
    after_genus = surface.ribbon_genus(result)
    if after_genus != before_genus + 1 or result.crossing_count != before_c + 2:
        raise FamilyError(
            f"half-Kishino append violated the genus increment: genus {before_genus}->{after_genus}, "
            f"gap={gap}, choice={choice}"
        )
    return result


def generalized_kishino(n: int, choices: list[KishinoChoice]) -> GaussCode:
    """The generalized n-Kishino knot: 2n crossings, ribbon genus n."""
    if n < 2:
        raise FamilyError("generalized Kishino knots need n >= 2")
    if len(choices) != n:
        raise FamilyError(f"need {n} choices, got {len(choices)}")
    empty = GaussCode(((),))
    code = half_kishino_append(empty, 0, choices[0])
    code = half_kishino_append(code, KISHINO_455_SECOND_GAP, choices[1])
    for choice in choices[2:]:
        code = half_kishino_append(code, KISHINO_APPEND_GAP, choice)
    if surface.ribbon_genus(code) != n or code.crossing_count != 2 * n:
        raise FamilyError("generalized Kishino postcondition failed")
    return code


# -- 1-virtual alternating links ---------------------------------------------


def one_virtual(code: GaussCode, crossing_id: int) -> GaussCode:
    """Convert one crossing of a classical, reduced, alternating, obviously
    prime projection to a virtual crossing (delete it from the code)."""
    if not G.is_reduced(code):
        raise GaussCodeError("one_virtual requires a reduced code")
    if not G.is_alternating(code):
        raise GaussCodeError("one_virtual requires an alternating code")
    if not surface.is_classical(code):
        raise GaussCodeError("one_virtual requires a classical code")
    if any(len(c) > 0 for c in code.components) and P.enumerate_subcodes(code):
        raise GaussCodeError("one_virtual requires an obviously prime code (no closed subcodes)")
    if crossing_id not in code.crossing_ids():
        raise GaussCodeError(f"unknown crossing id {crossing_id}")
    comps = tuple(
        tuple(s for s in comp if s.crossing_id != crossing_id) for comp in code.components
    )
    result = GaussCode(comps)
    if surface.ribbon_genus(result) != 1:
        raise FamilyError("one_virtual postcondition failed: supporting surface is not a torus")
    return result


# -- minimal-crossing genus-g knots -------------------------------------------


def minimal_crossing_family(g: int) -> GaussCode:
    """A genus-g knot with c = 2g - 1 crossings: the bundled 3.1 code plus
    g - 2 half-Kishino appends."""
    if g < 2:
        raise FamilyError("minimal_crossing_family needs g >= 2")
    from . import tables

    code = G.parse(tables.entry("3.1").code_text)
    for _ in range(g - 2):
        code = half_kishino_append(code, KISHINO_APPEND_GAP, KishinoChoice())
    if code.crossing_count != 2 * g - 1 or surface.ribbon_genus(code) != g:
        raise FamilyError("minimal-crossing family postcondition failed")
    return code
