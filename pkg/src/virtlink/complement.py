"""Octahedral decompositions and triangulation export of thickened-surface
link complements.

For a connected diagram with c classical crossings on its Carter surface S of
genus g, the complement (S x I) minus the link decomposes into c ideal
octahedra, one per crossing: the octahedron's two poles lie on the link (one
on the over-strand, one on the under-strand at the crossing) and its four
equatorial vertices are the merge points of the vertical walls in the four
quadrants -- on the bottom boundary S x {0} beside an over-strand end, on the
top boundary S x {1} beside an under-strand end.  Each octahedron splits into
four tetrahedra about its vertical axis; the eight outer faces are "walls"
transverse to the four strand-ends, glued in pairs along the diagram's strand
segments (left side to left side, right to right).

For g >= 2 the manifold is doubled across its two totally geodesic boundary
surfaces, yielding (S x S^1) minus a 2t-component link built from the diagram
and its mirror; the doubled complex has 2c octahedra whose walls interleave
the two levels.  For g = 1 the two boundary tori become cusps directly; g = 0
codes are exported as classical DT codes instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import gauss as G
from . import surface
from .gauss import GaussCode, GaussCodeError, OVER, UNDER
from .surface import OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT, CellComplex


class ComplementError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Triangulation container + file format
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tetrahedron:
    neighbors: tuple[int, int, int, int]
    perms: tuple[tuple[int, ...], ...]  # perms[f] maps my vertex labels -> neighbor's


@dataclass(frozen=True)
class Triangulation:
    name: str
    doubled: bool
    genus: int
    components: int  # link components t of the (undoubled) diagram
    tets: tuple[Tetrahedron, ...]
    cusp_labels: tuple[str, ...]  # per cusp class: "link" or "boundary"

    # -- derived combinatorics ---------------------------------------------

    def vertex_classes(self) -> list[list[tuple[int, int]]]:
        return _orbits(
            ((t, v) for t in range(len(self.tets)) for v in range(4)),
            lambda tv: [
                (self.tets[tv[0]].neighbors[f], self.tets[tv[0]].perms[f][tv[1]])
                for f in range(4)
                if f != tv[1]
            ],
        )

    def edge_classes(self) -> list[list[tuple[int, frozenset]]]:
        def neighbors_of(te):
            t, e = te
            a, b = sorted(e)
            out = []
            for f in range(4):
                if f in e:
                    continue
                p = self.tets[t].perms[f]
                out.append((self.tets[t].neighbors[f], frozenset((p[a], p[b]))))
            return out

        items = (
            (t, frozenset((a, b)))
            for t in range(len(self.tets))
            for a in range(4)
            for b in range(a + 1, 4)
        )
        return _orbits(items, neighbors_of)

    def validate(self) -> None:
        n = len(self.tets)
        for t, tet in enumerate(self.tets):
            for f in range(4):
                nbr = tet.neighbors[f]
                p = tet.perms[f]
                if sorted(p) != [0, 1, 2, 3]:
                    raise ComplementError(f"tet {t} face {f}: not a permutation")
                q = self.tets[nbr].perms[p[f]]
                back = tuple(q[p[v]] for v in range(4))
                if self.tets[nbr].neighbors[p[f]] != t or back != (0, 1, 2, 3):
                    raise ComplementError(f"gluing not involutive at tet {t} face {f}")
                if _parity(p) != 1:
                    raise ComplementError(f"tet {t} face {f}: orientation-preserving gluing")
        if len(self.edge_classes()) != n:
            raise ComplementError(
                f"Euler characteristic nonzero: {len(self.edge_classes())} edges vs {n} tets"
            )
        for cls in self.vertex_classes():
            chi = self._link_euler(cls)
            if chi != 0:
                raise ComplementError(f"vertex class link has Euler characteristic {chi}, not a torus")

    def _link_euler(self, cls: list[tuple[int, int]]) -> int:
        faces = len(cls)
        member = set(cls)
        # link-triangle sides (t, v, f) glue via the face-f pairing
        sides = {(t, v, f) for (t, v) in member for f in range(4) if f != v}
        edge_count = 0
        seen = set()
        for s in sides:
            if s in seen:
                continue
            t, v, f = s
            p = self.tets[t].perms[f]
            other = (self.tets[t].neighbors[f], p[v], p[f])
            seen.add(s)
            seen.add(other)
            edge_count += 1
        # link-triangle vertices: ends of tetrahedron edges at this class
        def nb(tve):
            t, v, e = tve
            out = []
            for f in range(4):
                if f == v or f == e:
                    continue
                p = self.tets[t].perms[f]
                out.append((self.tets[t].neighbors[f], p[v], p[e]))
            return out

        verts = _orbits(((t, v, e) for (t, v) in member for e in range(4) if e != v), nb)
        return len(verts) - edge_count + faces


def normalize_orientation(tets: tuple[Tetrahedron, ...]) -> tuple[Tetrahedron, ...]:
    """Relabel vertices (swap 2,3) on a consistent subset of tetrahedra so that
    every gluing permutation is odd; raises if the complex is non-orientable."""
    n = len(tets)
    sign = [0] * n
    for root in range(n):
        if sign[root]:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            t = stack.pop()
            for f in range(4):
                u = tets[t].neighbors[f]
                s = sign[t] if _parity(tets[t].perms[f]) == 1 else -sign[t]
                if sign[u] == 0:
                    sign[u] = s
                    stack.append(u)
                elif sign[u] != s:
                    raise ComplementError("non-orientable gluing pattern")
    if all(s == 1 for s in sign):
        return tets
    tau = (0, 1, 3, 2)
    out = []
    for t in range(n):
        st = tau if sign[t] == -1 else (0, 1, 2, 3)
        nbrs = [0] * 4
        perms: list[tuple[int, ...]] = [()] * 4
        for f in range(4):
            u = tets[t].neighbors[f]
            su = tau if sign[u] == -1 else (0, 1, 2, 3)
            p = tets[t].perms[f]
            newf = st[f]
            nbrs[newf] = u
            perms[newf] = tuple(su[p[st[v]]] for v in range(4))
        out.append(Tetrahedron(tuple(nbrs), tuple(perms)))
    return tuple(out)


def _parity(p: Iterable[int]) -> int:
    p = list(p)
    inv = sum(1 for i in range(4) for j in range(i + 1, 4) if p[i] > p[j])
    return inv % 2  # 1 = odd


def _orbits(items, neighbors_fn) -> list[list]:
    seen: dict = {}
    order: list = []
    for it in items:
        if it in seen:
            continue
        cls = [it]
        seen[it] = True
        stack = [it]
        while stack:
            cur = stack.pop()
            for nxt in neighbors_fn(cur):
                if nxt not in seen:
                    seen[nxt] = True
                    cls.append(nxt)
                    stack.append(nxt)
        order.append(sorted(cls))
    return order


def export_triangulation(tri: Triangulation) -> str:
    lines = [f"tri {tri.name}"]
    lines.append(
        f"doubled {'true' if tri.doubled else 'false'} genus {tri.genus} components {tri.components}"
    )
    lines.append(f"ntet {len(tri.tets)}")
    for i, tet in enumerate(tri.tets):
        perms = " ".join("".join(str(x) for x in p) for p in tet.perms)
        nbrs = " ".join(str(x) for x in tet.neighbors)
        lines.append(f"tet {i} {nbrs} {perms}")
    lines.append(f"cusps {len(tri.cusp_labels)}")
    for j, lab in enumerate(tri.cusp_labels):
        lines.append(f"cusp {j} {lab}")
    return "\n".join(lines) + "\n"


def parse_triangulation(text: str) -> Triangulation:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("tri "):
        raise ComplementError("missing 'tri' header")
    name = lines[0][4:]
    meta = lines[1].split()
    if meta[0] != "doubled" or meta[2] != "genus" or meta[4] != "components":
        raise ComplementError("malformed metadata line")
    doubled = meta[1] == "true"
    genus = int(meta[3])
    components = int(meta[5])
    if not lines[2].startswith("ntet "):
        raise ComplementError("missing ntet line")
    ntet = int(lines[2].split()[1])
    tets = []
    for i in range(ntet):
        parts = lines[3 + i].split()
        if parts[0] != "tet" or int(parts[1]) != i:
            raise ComplementError(f"malformed tet line {i}")
        nbrs = tuple(int(x) for x in parts[2:6])
        perms = tuple(tuple(int(ch) for ch in word) for word in parts[6:10])
        tets.append(Tetrahedron(nbrs, perms))
    k = 3 + ntet
    if not lines[k].startswith("cusps "):
        raise ComplementError("missing cusps line")
    ncusp = int(lines[k].split()[1])
    labels = []
    for j in range(ncusp):
        parts = lines[k + 1 + j].split()
        if parts[0] != "cusp" or int(parts[1]) != j:
            raise ComplementError(f"malformed cusp line {j}")
        labels.append(parts[2])
    return Triangulation(
        name=name,
        doubled=doubled,
        genus=genus,
        components=components,
        tets=tuple(tets),
        cusp_labels=tuple(labels),
    )


# ---------------------------------------------------------------------------
# Octahedral decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OctahedralDecomposition:
    code: GaussCode
    complex: CellComplex
    genus: int
    doubled: bool
    name: str = "virtlink"

    @property
    def octahedron_count(self) -> int:
        return self.complex.n * (2 if self.doubled else 1)

    @property
    def link_components(self) -> int:
        return len([c for c in self.code.components if c])


def octahedral_decomposition(code: GaussCode, name: str = "virtlink") -> OctahedralDecomposition:
    if code.is_empty():
        raise ComplementError(
            "0-crossing unknot: complement is not hyperbolic and not octahedralizable"
        )
    cx = surface.build_cell_complex(code)
    return OctahedralDecomposition(code=code, complex=cx, genus=cx.genus, doubled=False, name=name)


def double_decomposition(d: OctahedralDecomposition) -> OctahedralDecomposition:
    if d.genus <= 1:
        raise ComplementError(
            "doubling is unnecessary for genus <= 1 (boundary tori are cusps)"
        )
    if d.doubled:
        raise ComplementError("already doubled")
    return OctahedralDecomposition(
        code=d.code, complex=d.complex, genus=d.genus, doubled=True, name=d.name
    )


# Merge-vertex convention (single level): the walls on either side of an
# over-strand end merge below it (bottom boundary), those at an under-strand
# end merge above it (top boundary).
def _merge_is_bottom(dart_role: str) -> bool:
    return dart_role in (OVER_IN, OVER_OUT)


def _build_single_level(d: OctahedralDecomposition) -> Triangulation:
    """4 tetrahedra per crossing; for genus >= 1 supporting surfaces.

    Tet (x, i) has vertices 0 = over pole, 1 = under pole, 2 = merge vertex at
    rotation position i, 3 = merge vertex at position i+1.
    """
    cx = d.complex
    crossings = sorted(cx.rotation.keys())
    index = {(cid, i): 4 * k + i for k, cid in enumerate(crossings) for i in range(4)}

    ntet = 4 * len(crossings)
    neighbors = [[-1] * 4 for _ in range(ntet)]
    perms: list[list[Optional[tuple[int, ...]]]] = [[None] * 4 for _ in range(ntet)]

    def set_gluing(t, f, nbr, perm):
        neighbors[t][f] = nbr
        perms[t][f] = tuple(perm)

    rotpos = {}  # dart -> (cid, rotation index)
    for cid, rot in cx.rotation.items():
        for i, dart in enumerate(rot):
            rotpos[dart] = (cid, i)

    # internal gluings around each octahedron's vertical axis
    for cid in crossings:
        for i in range(4):
            t = index[(cid, i)]
            u = index[(cid, (i + 1) % 4)]
            # my face 2 ({0,1,3}) onto u's face 3 ({0,1,2}); w_{i+1} is my 3, u's 2
            set_gluing(t, 2, u, (0, 1, 3, 2))
            set_gluing(u, 3, t, (0, 1, 3, 2))

    # wall gluings along strand segments
    for dart, (cid, i) in rotpos.items():
        other = cx.edge_pairing[dart]
        ocid, j = rotpos[other]
        # left wall at this end lives in quadrant i; it glues to the far
        # end's wall in quadrant j-1 (ccw side here = cw side there)
        for my_quad, far_quad in (((i) % 4, (j - 1) % 4), ((i - 1) % 4, (j) % 4)):
            t = index[(cid, my_quad)]
            u = index[(ocid, far_quad)]
            my_over = dart[1] in (OVER_IN, OVER_OUT)
            far_over = other[1] in (OVER_IN, OVER_OUT)
            my_face = 1 if my_over else 0  # wall {P(h), w, w'} misses the other pole
            far_face = 1 if far_over else 0
            perm = [None] * 4
            perm[1 - my_face] = 1 - far_face  # pole on the strand -> pole on the strand
            perm[my_face] = far_face  # off-face pole -> off-face pole
            # merge vertices match by top/bottom type
            my_w = 2 if my_quad == i else 3  # merge at this strand-end
            far_w = 2 if far_quad == j else 3
            same_type = _merge_is_bottom(dart[1]) == _merge_is_bottom(other[1])
            if same_type:
                perm[my_w] = far_w
                perm[5 - my_w] = 5 - far_w
            else:
                perm[my_w] = 5 - far_w
                perm[5 - my_w] = far_w
            set_gluing(t, my_face, u, perm)

    tets = tuple(
        Tetrahedron(tuple(neighbors[t]), tuple(perms[t])) for t in range(ntet)
    )

    # semantic labels for cusp classes
    strand_of = _strand_component(d.code)
    labels: dict[tuple[int, int], str] = {}
    for cid, rot in cx.rotation.items():
        for i in range(4):
            t = index[(cid, i)]
            labels[(t, 0)] = "link"
            labels[(t, 1)] = "link"
            for v, pos in ((2, i), (3, (i + 1) % 4)):
                labels[(t, v)] = "boundary"

    tri = Triangulation(
        name=d.name,
        doubled=False,
        genus=d.genus,
        components=d.link_components,
        tets=tets,
        cusp_labels=(),
    )
    classes = tri.vertex_classes()
    cusp_labels = []
    for cls in classes:
        labs = {labels[tv] for tv in cls}
        if len(labs) != 1:
            raise ComplementError("mixed link/boundary vertex class (construction bug)")
        cusp_labels.append(labs.pop())
    return Triangulation(
        name=tri.name,
        doubled=False,
        genus=tri.genus,
        components=tri.components,
        tets=tets,
        cusp_labels=tuple(cusp_labels),
    )


def _strand_component(code: GaussCode) -> dict[int, int]:
    out = {}
    for k, comp in enumerate(code.components):
        for s in comp:
            out.setdefault(s.crossing_id, k)
    return out


def to_triangulation(d: OctahedralDecomposition) -> Triangulation:
    if d.genus == 0:
        raise ComplementError("genus-0 codes are exported via gauss_to_dt, not triangulated")
    if d.genus >= 2 and not d.doubled:
        raise ComplementError("genus >= 2 decompositions must be doubled first")
    if d.genus == 1 and d.doubled:
        raise ComplementError("genus-1 decompositions are not doubled")
    if d.doubled:
        tri = _build_doubled(d)
    else:
        tri = _build_single_level(d)
    tri.validate()
    return tri


def _build_doubled(d: OctahedralDecomposition) -> Triangulation:
    from ._doubling import build_doubled

    return build_doubled(d)


# ---------------------------------------------------------------------------
# DT export for classical codes
# ---------------------------------------------------------------------------


def gauss_to_dt(code: GaussCode) -> list[int]:
    """Dowker-Thistlethwaite sequence of a classical, reduced, one-component code.

    Passages are numbered 1..2c along the knot; each crossing pairs an odd and
    an even label.  The entry for odd label o is the paired even label, negated
    when the even-labelled passage is an over-passage.
    """
    live = [c for c in code.components if c]
    if len(live) != 1:
        raise ComplementError("DT export requires a one-component code")
    if not G.is_reduced(code):
        raise ComplementError("DT export requires a reduced code")
    if not surface.is_classical(code):
        raise ComplementError("DT export requires a classical (genus-0) code")
    comp = live[0]
    labels: dict[int, list[tuple[int, str]]] = {}
    for pos, s in enumerate(comp, start=1):
        labels.setdefault(s.crossing_id, []).append((pos, s.passage))
    seq = []
    for odd in range(1, len(comp), 2):
        for pair in labels.values():
            (p1, l1), (p2, l2) = pair
            if p1 == odd or p2 == odd:
                even, letter = (p2, l2) if p1 == odd else (p1, l1)
                if even % 2 == 0:
                    seq.append(-even if letter == OVER else even)
                break
        else:
            raise ComplementError("odd/even pairing failed (non-realizable code?)")
    if len(seq) != len(comp) // 2:
        raise ComplementError("DT pairing failed: odd label paired with odd label")
    return seq


def export_dt(code: GaussCode) -> str:
    return " ".join(str(x) for x in gauss_to_dt(code)) + "\n"
