"""Primeness detection for virtual link codes via classical alternating subcodes.

A *subcode* is a sequential proper subword of one component (cyclically) that
includes both appearances of each of its integers, together possibly with the
complete Gauss codes of additional components.  A reduced virtual alternating
link is prime if and only if its Gauss code contains no classical alternating
subcode; finding such a subcode certifies compositeness for any input, since
a reduced classical alternating tangle with crossings is knotted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import gauss as G
from . import surface
from .gauss import GaussCode, GaussCodeError


@dataclass(frozen=True)
class SubcodeWitness:
    host_component: int
    interval: tuple[int, int]  # (start, length), cyclic within the host component
    extra_components: frozenset[int]
    witness_code: GaussCode
    is_classical: bool
    is_alternating: bool
    is_reduced: bool


class Primeness(Enum):
    PRIME = "Prime"
    COMPOSITE = "Composite"
    NO_WITNESS_INCONCLUSIVE = "NoWitnessInconclusive"


@dataclass(frozen=True)
class PrimenessResult:
    status: Primeness
    witness: Optional[SubcodeWitness] = None
    basis: str = ""


def _interval_symbols(comp, start: int, length: int):
    n = len(comp)
    return tuple(comp[(start + k) % n] for k in range(length))


def _closed(symbols_groups) -> bool:
    counts: dict[int, int] = {}
    for group in symbols_groups:
        for s in group:
            counts[s.crossing_id] = counts.get(s.crossing_id, 0) + 1
    return all(v == 2 for v in counts.values())


def _witness_flags(code: GaussCode) -> tuple[bool, bool, bool]:
    try:
        classical = surface.is_classical(code)
    except GaussCodeError:
        classical = False  # disconnected witness: not a tangle in a disk
    return classical, G.is_alternating(code), G.is_reduced(code)


def enumerate_subcodes(code: GaussCode) -> list[SubcodeWitness]:
    """All closed, proper, nonempty cyclic interval subcodes, each optionally
    unioned with whole extra components keeping the union closed.

    Deterministic order: (host component, start, length, extra-component mask).
    """
    out: list[SubcodeWitness] = []
    seen: set = set()
    ncomp = len(code.components)
    for host in range(ncomp):
        comp = code.components[host]
        n = len(comp)
        others = [i for i in range(ncomp) if i != host]
        for start in range(n):
            for length in range(1, n):
                interval = _interval_symbols(comp, start, length)
                for mask in range(1 << len(others)):
                    extras = [others[k] for k in range(len(others)) if mask >> k & 1]
                    groups = [interval] + [code.components[i] for i in extras]
                    if not _closed(groups):
                        continue
                    key = (frozenset((s.passage, s.crossing_id, s.sign) for g in groups for s in g),)
                    if key in seen:
                        continue
                    seen.add(key)
                    witness = GaussCode((interval,) + tuple(code.components[i] for i in extras))
                    cls, alt, red = _witness_flags(witness)
                    out.append(
                        SubcodeWitness(
                            host_component=host,
                            interval=(start, length),
                            extra_components=frozenset(extras),
                            witness_code=witness,
                            is_classical=cls,
                            is_alternating=alt,
                            is_reduced=red,
                        )
                    )
    return out


def _qualifies(w: SubcodeWitness) -> bool:
    """A witness certifies compositeness if it is (after reduction, which
    preserves the tangle) a nonempty reduced classical alternating code."""
    if w.is_reduced:
        return w.is_classical and w.is_alternating
    reduced = G.reduce(w.witness_code)
    if reduced.is_empty():
        return False
    cls, alt, red = _witness_flags(reduced)
    return cls and alt and red


def find_composite_witness(code: GaussCode) -> Optional[SubcodeWitness]:
    """First enumerated classical alternating reduced witness, else None."""
    if not G.is_reduced(code):
        raise GaussCodeError("find_composite_witness requires a reduced code")
    for w in enumerate_subcodes(code):
        if _qualifies(w):
            return w
    return None


def primeness(code: GaussCode) -> PrimenessResult:
    """Decide primeness: Composite with a witness (sound for any input),
    Prime when the reduced code is alternating and witness-free (the
    if-and-only-if theorem), else NoWitnessInconclusive."""
    reduced = G.reduce(code)
    if reduced.is_empty():
        return PrimenessResult(Primeness.NO_WITNESS_INCONCLUSIVE, basis="trivial after reduction")
    w = find_composite_witness(reduced)
    if w is not None:
        return PrimenessResult(Primeness.COMPOSITE, witness=w, basis="classical alternating reduced subcode found")
    if G.is_alternating(reduced):
        return PrimenessResult(Primeness.PRIME, basis="alternating and witness-free")
    return PrimenessResult(Primeness.NO_WITNESS_INCONCLUSIVE, basis="not alternating; witness-free")
