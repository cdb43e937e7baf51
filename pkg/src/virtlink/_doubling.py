"""Doubling of genus >= 2 octahedral decompositions.

The single-level triangulation of (S x I) minus the link has two vertex
classes on the boundary surfaces S x {0} and S x {1} (Euler characteristic
2 - 2g each).  Doubling glues a mirror copy along regular neighborhood
boundaries of those two classes, producing an ideal triangulation of
(S x S^1) minus the 2t-component doubled link.

Construction, per tetrahedron of the single-level complex:

1. *Bisect* every edge joining the two boundary-surface corners (labels 2 and
   3; each tetrahedron has exactly one such edge).  Every gluing permutation
   preserves the label set {2, 3}, so the two children of a tetrahedron glue
   to well-defined children of its neighbors.  After bisection no two
   boundary-surface vertices are adjacent, so their vertex stars are pairwise
   disjoint.
2. *Barycentric truncation*: subdivide each child into its 24 barycentric
   sub-tetrahedra and discard the sub-tetrahedra incident to a
   boundary-surface corner (its dual block, a regular neighborhood of the
   vertex).
3. *Double*: take two copies of the truncated complex and glue each exposed
   truncation face of one copy to the same face of the other copy by the
   identity.

The result is then simplified deterministically (seeded pseudo-random greedy
simplification with conservative topology guards) and re-normalized to the
all-odd gluing-parity orientation convention of `Triangulation`.
"""

from __future__ import annotations

import random
from itertools import permutations

from ._tri import Complex
from .complement import (
    ComplementError,
    OctahedralDecomposition,
    Tetrahedron,
    Triangulation,
    _build_single_level,
    normalize_orientation,
)

# Seeds tried, in order, for the deterministic simplification pass.
_SIMPLIFY_SEEDS = (1, 2, 3, 5, 8, 13, 21, 34)


def _bisect_sigma_edges(pairs):
    """Bisect every (2,3)-labelled edge.  Each tetrahedron splits into two
    children: child 0 keeps corner 2 (midpoint at slot 3), child 1 keeps
    corner 3 (midpoint at slot 2).  Returns (new_pairs, sigma_corners), the
    corners of the new complex lying on the boundary-surface classes."""
    n = len(pairs)
    nbrs = [[-1] * 4 for _ in range(2 * n)]
    prms = [[None] * 4 for _ in range(2 * n)]
    for t in range(n):
        nbr, perm = pairs[t]
        for child, keep in ((0, 2), (1, 3)):
            me = 2 * t + child
            for f in range(4):
                p = perm[f]
                if f in (0, 1):
                    # face contains the bisected edge; the partner face is
                    # split too, and the partner child keeps corner p[keep]
                    nbrs[me][f] = 2 * nbr[f] + (0 if p[keep] == 2 else 1)
                    prms[me][f] = tuple(p)
                elif f == keep:
                    # face opposite the kept corner lies wholly in the other
                    # child: internal face between the two children of t
                    nbrs[me][f] = 2 * t + (1 - child)
                    prms[me][f] = (0, 1, 3, 2)
                else:
                    # face opposite the removed corner contains the kept
                    # corner; external and unsplit on both sides
                    nbrs[me][f] = 2 * nbr[f] + (0 if p[keep] == 2 else 1)
                    prms[me][f] = tuple(p)
    sigma = set()
    for t in range(n):
        sigma.add((2 * t, 2))
        sigma.add((2 * t + 1, 3))
    return list(zip(nbrs, prms)), sigma


def _bary_truncate_double(pairs, trunc_corners):
    """Barycentrically subdivide, remove the dual blocks of `trunc_corners`
    (which must be pairwise non-adjacent), and glue two copies of the result
    along the exposed truncation faces."""
    perms4_all = list(permutations(range(4)))
    idx = {}
    for t in range(len(pairs)):
        for w in perms4_all:
            if (t, w[0]) not in trunc_corners:
                idx[(t, w)] = len(idx)
    n1 = len(idx)

    def sub_gluing(t, w, face):
        nbr, perm = pairs[t]
        if face == 0:
            w2 = (w[1], w[0], w[2], w[3])
            if (t, w2[0]) in trunc_corners:
                return None  # truncation face of a boundary-surface vertex
            return (t, w2)
        if face == 1:
            return (t, (w[0], w[2], w[1], w[3]))
        if face == 2:
            return (t, (w[0], w[1], w[3], w[2]))
        u = nbr[w[3]]
        p = perm[w[3]]
        return (u, tuple(p[v] for v in w))

    nbrs = [[-1] * 4 for _ in range(2 * n1)]
    prms = [[None] * 4 for _ in range(2 * n1)]
    ident = (0, 1, 2, 3)
    for (t, w), i in idx.items():
        for face in range(4):
            tgt = sub_gluing(t, w, face)
            for cp in (0, 1):
                me = i + cp * n1
                if tgt is None:
                    nbrs[me][face] = i + (1 - cp) * n1
                    prms[me][face] = ident
                else:
                    nbrs[me][face] = idx[tgt] + cp * n1
                    prms[me][face] = ident
    return Complex(list(zip(nbrs, prms)))


def doubled_raw(d: OctahedralDecomposition) -> Complex:
    """The doubled complex before simplification (288c tetrahedra)."""
    single = _build_single_level(d)
    pairs = [(t.neighbors, t.perms) for t in single.tets]
    pairs2, sigma = _bisect_sigma_edges(pairs)
    return _bary_truncate_double(pairs2, sigma)


def build_doubled(d: OctahedralDecomposition) -> Triangulation:
    if not d.doubled or d.genus < 2:
        raise ComplementError("build_doubled requires a doubled genus >= 2 decomposition")
    want_cusps = 2 * d.link_components
    base = doubled_raw(d)
    if not base.valid_closed():
        raise ComplementError("doubled complex is invalid (construction bug)")
    for seed in _SIMPLIFY_SEEDS:
        cx = base.copy()
        rng = random.Random(seed)
        if not cx.collapse_all_finite(rng):
            continue
        cx.simplify_two_zero()
        cx.greedy_simplify(rng)
        if (cx.valid_closed() and not cx.finite_vertices()
                and cx.cusp_count() == want_cusps):
            break
    else:
        raise ComplementError("deterministic simplification failed for every seed")
    tets = tuple(
        Tetrahedron(tuple(cx.nbr[t]), tuple(tuple(p) for p in cx.perm[t]))
        for t in range(cx.ntet)
    )
    tets = normalize_orientation(tets)
    return Triangulation(
        name=d.name,
        doubled=True,
        genus=d.genus,
        components=d.link_components,
        tets=tets,
        cusp_labels=("link",) * want_cusps,
    )
