"""Canonical forms of lattice polytopes under affine unimodular equivalence.

The canonical form of a polytope with vertices v_0, ..., v_{n-1} is the
lexicographically smallest column sequence of the row Hermite normal form
of the difference matrix [v_{s(1)}-v_{s(0)}, ..., v_{s(n-1)}-v_{s(0)}],
minimized over vertex orderings s.  HNF kills the linear unimodular part
and the base-vertex subtraction kills translations, so the minimum is a
complete invariant: equal forms reconstruct equivalent polytopes.

Orderings are restricted to a canonically sorted vertex coloring (facet
valence refined by pairwise gcd labels), which is itself invariant, and the
remaining search is a branch-and-bound over the column-incremental HNF.
"""

from __future__ import annotations

from typing import Sequence

from .intlinalg import RowHNFBuilder, vec_gcd, vec_sub
from .polytope import Polytope


def _vertex_colors(poly: Polytope, rounds: int = 3) -> list:
    verts = poly.vertices
    n = len(verts)
    inc = poly.facet_incidence()
    facets_of = [set() for _ in range(n)]
    for fi, (_, tight) in enumerate(inc):
        for vi in tight:
            facets_of[vi].add(fi)
    pair = {}
    for i in range(n):
        for j in range(n):
            if i != j:
                pair[i, j] = (vec_gcd(vec_sub(verts[i], verts[j])),
                              len(facets_of[i] & facets_of[j]))
    colors = [(len(facets_of[i]),) for i in range(n)]
    for _ in range(rounds):
        sigs = [(colors[i], tuple(sorted((pair[i, j], colors[j]) for j in range(n) if j != i)))
                for i in range(n)]
        palette = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    # rank colors canonically by their class signature (size, then the
    # sorted signature data), so equivalent polytopes sort identically
    sigs = [(colors[i], tuple(sorted((pair[i, j], colors[j]) for j in range(n) if j != i)))
            for i in range(n)]
    order = {c: k for k, c in enumerate(sorted(set(sigs), key=lambda s: (sigs.count(s), s)))}
    return [order[s] for s in sigs]


def canonical_form(poly: Polytope) -> tuple:
    """Canonical vertex-difference matrix, as a tuple of HNF columns.

    Greedy-exact search: at each depth keep every partial ordering that
    achieves the minimal column sequence so far (the tie frontier), then
    extend by the minimal next column.  Ties are bounded by the affine
    symmetries of the polytope, so the frontier stays small.
    """
    poly.require_lattice()
    poly.require_full_dimensional()
    verts = poly.vertices
    n = len(verts)
    d = poly.dim
    if n == 1:
        return ()
    colors = _vertex_colors(poly)
    class_seq = sorted(colors)
    frontier = [(RowHNFBuilder(d), i0, frozenset([i0]))
                for i0 in range(n) if colors[i0] == class_seq[0]]
    cols = []
    for depth in range(1, n):
        want = class_seq[depth]
        best_col = None
        new_frontier = []
        for builder, base, used in frontier:
            for i in range(n):
                if i in used or colors[i] != want:
                    continue
                b2 = builder.clone()
                col = b2.push_column(vec_sub(verts[i], verts[base]))
                if best_col is None or col < best_col:
                    best_col = col
                    new_frontier = [(b2, base, used | {i})]
                elif col == best_col:
                    new_frontier.append((b2, base, used | {i}))
        cols.append(best_col)
        seen = set()
        frontier = []
        for b2, base, used in new_frontier:
            key = (tuple(map(tuple, b2.U)), base, used)
            if key not in seen:
                seen.add(key)
                frontier.append((b2, base, used))
    return tuple(cols)


def are_equivalent(p: Polytope, q: Polytope) -> bool:
    """Unimodular equivalence test via canonical forms (with cheap filters)."""
    p.require_lattice()
    q.require_lattice()
    if p.dim != q.dim or len(p.vertices) != len(q.vertices):
        return False
    if len(p.halfspaces or ()) != len(q.halfspaces or ()):
        return False
    if p.volume() != q.volume():
        return False
    return canonical_form(p) == canonical_form(q)
