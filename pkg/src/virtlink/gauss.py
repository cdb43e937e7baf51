"""Signed, O/U-decorated Gauss codes for virtual link diagrams.

A Gauss code is an ordered list of cyclic components; each component is a
sequence of symbols ``(letter, crossing id, sign)`` with letter ``O`` (over)
or ``U`` (under) and sign ``+1``/``-1``.  Every crossing id occurs exactly
twice across all components, once as ``O`` and once as ``U``, with equal
signs at both occurrences.

Grammar (whitespace ignored)::

    code      := component ("|" component)*
    component := symbol*
    symbol    := ("O"|"U") nonzero-decimal-integer ("+"|"-")

Serialization emits no whitespace; components are joined by ``"|"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

OVER = "O"
UNDER = "U"


class GaussCodeError(ValueError):
    """Raised for syntax errors and invariant violations in Gauss codes."""


@dataclass(frozen=True, order=True)
class Symbol:
    """One passage through a classical crossing."""

    passage: str  # OVER or UNDER
    crossing_id: int  # positive integer label
    sign: int  # +1 or -1

    def __post_init__(self) -> None:
        if self.passage not in (OVER, UNDER):
            raise GaussCodeError(f"bad passage letter {self.passage!r}")
        if not isinstance(self.crossing_id, int) or self.crossing_id <= 0:
            raise GaussCodeError(f"crossing id must be a positive integer, got {self.crossing_id!r}")
        if self.sign not in (1, -1):
            raise GaussCodeError(f"sign must be +1 or -1, got {self.sign!r}")

    def switched(self) -> "Symbol":
        other = UNDER if self.passage == OVER else OVER
        return Symbol(other, self.crossing_id, -self.sign)

    def __str__(self) -> str:
        return f"{self.passage}{self.crossing_id}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    """An ordered list of cyclic symbol sequences (one per link component)."""

    components: tuple[tuple[Symbol, ...], ...]

    def __post_init__(self) -> None:
        _validate(self.components)

    # -- basic accessors ---------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossing_ids())

    def crossing_ids(self) -> set[int]:
        return {s.crossing_id for comp in self.components for s in comp}

    def symbols(self) -> Iterator[Symbol]:
        for comp in self.components:
            yield from comp

    def sign_of(self, crossing_id: int) -> int:
        for s in self.symbols():
            if s.crossing_id == crossing_id:
                return s.sign
        raise GaussCodeError(f"unknown crossing id {crossing_id}")

    def is_empty(self) -> bool:
        return all(len(c) == 0 for c in self.components)

    def __str__(self) -> str:
        return serialize(self)


def _validate(components: Iterable[tuple[Symbol, ...]]) -> None:
    seen: dict[int, list[Symbol]] = {}
    for comp in components:
        for sym in comp:
            seen.setdefault(sym.crossing_id, []).append(sym)
    for cid, occs in seen.items():
        if len(occs) != 2:
            raise GaussCodeError(f"id {cid} appears {len(occs)} times (expected 2)")
        a, b = occs
        if {a.passage, b.passage} != {OVER, UNDER}:
            raise GaussCodeError(f"id {cid} must appear once as O and once as U")
        if a.sign != b.sign:
            raise GaussCodeError(f"id {cid} carries mismatched signs")


# -- parsing / serialization -----------------------------------------------


def parse(text: str) -> GaussCode:
    """Parse a Gauss code string; raises GaussCodeError with the position on bad syntax."""
    components: list[tuple[Symbol, ...]] = []
    for chunk in text.split("|"):
        syms: list[Symbol] = []
        i = 0
        s = "".join(chunk.split())  # whitespace ignored
        while i < len(s):
            letter = s[i]
            if letter not in (OVER, UNDER):
                raise GaussCodeError(f"expected 'O' or 'U' at position {i} in component {s!r}")
            i += 1
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            if j == i:
                raise GaussCodeError(f"expected integer at position {i} in component {s!r}")
            num = int(s[i:j])
            if num == 0:
                raise GaussCodeError(f"crossing id 0 not allowed at position {i} in component {s!r}")
            i = j
            if i >= len(s) or s[i] not in "+-":
                raise GaussCodeError(f"expected sign at position {i} in component {s!r}")
            syms.append(Symbol(letter, num, 1 if s[i] == "+" else -1))
            i += 1
        components.append(tuple(syms))
    return GaussCode(tuple(components))


def serialize(code: GaussCode) -> str:
    return "|".join("".join(str(s) for s in comp) for comp in code.components)


# -- predicates --------------------------------------------------------------


def is_reduced(code: GaussCode) -> bool:
    """True iff no id's two occurrences are cyclically adjacent within one component."""
    for comp in code.components:
        n = len(comp)
        for i in range(n):
            if n >= 2 and comp[i].crossing_id == comp[(i + 1) % n].crossing_id:
                return False
    return True


def reduce(code: GaussCode) -> GaussCode:
    """Delete cyclically adjacent occurrence pairs until the code is reduced."""
    comps = [list(c) for c in code.components]
    changed = True
    while changed:
        changed = False
        for comp in comps:
            n = len(comp)
            for i in range(n):
                j = (i + 1) % n
                if n >= 2 and comp[i].crossing_id == comp[j].crossing_id:
                    for k in sorted({i, j}, reverse=True):
                        del comp[k]
                    changed = True
                    break
            if changed:
                break
    return GaussCode(tuple(tuple(c) for c in comps))


def is_alternating(code: GaussCode) -> bool:
    """True iff passage letters strictly alternate O,U,O,U,... cyclically in every component."""
    for comp in code.components:
        n = len(comp)
        if n == 0:
            continue
        if n % 2 != 0:
            return False
        for i in range(n):
            if comp[i].passage == comp[(i + 1) % n].passage:
                return False
    return True


# -- diagram operations ------------------------------------------------------


def switch_crossing(code: GaussCode, crossing_id: int) -> GaussCode:
    """Swap O/U and negate the sign at both occurrences of one crossing."""
    if crossing_id not in code.crossing_ids():
        raise GaussCodeError(f"unknown crossing id {crossing_id}")
    return GaussCode(
        tuple(
            tuple(s.switched() if s.crossing_id == crossing_id else s for s in comp)
            for comp in code.components
        )
    )


def reflect(code: GaussCode) -> GaussCode:
    """Mirror through the supporting surface: switch every crossing."""
    return GaussCode(
        tuple(tuple(s.switched() for s in comp) for comp in code.components)
    )


def connected_sum(a: GaussCode, component_a: int, point_a: int, b: GaussCode, point_b: int) -> GaussCode:
    """Insert one-component code ``b`` (cut open at gap ``point_b``) into ``a``.

    ``point_a`` is a gap index 0..len within component ``component_a`` of ``a``;
    likewise ``point_b`` within ``b``'s single component.  ``b``'s ids are
    relabeled above the maximum id of ``a``.  No new crossings are created.
    """
    if len(b.components) != 1:
        raise GaussCodeError("connected_sum requires a one-component second argument")
    if not 0 <= component_a < len(a.components):
        raise GaussCodeError(f"invalid component index {component_a}")
    host = a.components[component_a]
    if not 0 <= point_a <= len(host):
        raise GaussCodeError(f"invalid insertion gap {point_a}")
    bcomp = b.components[0]
    if not 0 <= point_b <= len(bcomp):
        raise GaussCodeError(f"invalid cut gap {point_b}")
    offset = max(a.crossing_ids(), default=0)
    relabel = {}
    for s in bcomp:
        if s.crossing_id not in relabel:
            relabel[s.crossing_id] = len(relabel) + 1 + offset
    cut = [
        Symbol(s.passage, relabel[s.crossing_id], s.sign)
        for s in (bcomp[point_b % len(bcomp):] + bcomp[: point_b % len(bcomp)])
    ] if bcomp else []
    new_host = host[:point_a] + tuple(cut) + host[point_a:]
    comps = list(a.components)
    comps[component_a] = new_host
    return GaussCode(tuple(comps))


# -- canonical form ----------------------------------------------------------


def _component_key(comp: tuple[Symbol, ...]) -> tuple:
    return tuple((s.passage, s.crossing_id, s.sign) for s in comp)


def canonical_form(code: GaussCode) -> GaussCode:
    """Deterministic representative up to rotation of components and id relabeling.

    Components are rotated to their lexicographically least position under a
    letter/sign-then-first-encounter-id order, sorted, and ids are relabeled
    1..c in first-encounter order.  Idempotent.
    """

    def rotations(comp: tuple[Symbol, ...]) -> list[tuple[Symbol, ...]]:
        n = len(comp)
        if n == 0:
            return [comp]
        return [comp[i:] + comp[:i] for i in range(n)]

    def relabeled(comps: list[tuple[Symbol, ...]]) -> list[tuple[Symbol, ...]]:
        mapping: dict[int, int] = {}
        out = []
        for comp in comps:
            new = []
            for s in comp:
                if s.crossing_id not in mapping:
                    mapping[s.crossing_id] = len(mapping) + 1
                new.append(Symbol(s.passage, mapping[s.crossing_id], s.sign))
            out.append(tuple(new))
        return out

    # Shape key that is independent of original labels: letter, sign, and the
    # first-encounter index of the id within the rotated sequence.
    def shape_key(comps: list[tuple[Symbol, ...]]) -> tuple:
        return tuple(_component_key(c) for c in relabeled(comps))

    best = None
    n_comps = len(code.components)
    # choose rotation for each component, then ordering of components, that
    # minimizes the relabeled key.  Components are few; search is fine.
    import itertools

    for perm in itertools.permutations(range(n_comps)):
        comps_in_order = [code.components[i] for i in perm]
        rot_choices = [rotations(c) for c in comps_in_order]
        for combo in itertools.product(*rot_choices):
            key = shape_key(list(combo))
            if best is None or key < best[0]:
                best = (key, list(combo))
    assert best is not None
    return GaussCode(tuple(relabeled(best[1])))
