"""Core exact polyhedral types: half-spaces, polytopes, unimodular maps.

All coordinates are Python ints or ``fractions.Fraction``; there is no
floating point in any predicate.  Polytopes carry both a minimal vertex
list and an irredundant facet list.  Hulls are computed by a monotone
chain in the plane and by double description on the polar cone in higher
dimension; inequality systems are converted to vertices by brute-force
enumeration of d-subsets of facet hyperplanes, which is adequate at the
facet counts this library targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import simplexlp
from .dd import extreme_rays
from .intlinalg import (
    affine_rank,
    det_int,
    dot,
    inverse_exact,
    mat_vec,
    primitive,
    rank_exact,
    solve_exact,
    vec_gcd,
    vec_sub,
)


class GeometryError(ValueError):
    """Base class for geometric input errors."""


class DimensionMismatchError(GeometryError):
    pass


class LowerDimensionalError(GeometryError):
    pass


class EmptyPolytopeError(GeometryError):
    pass


class UnboundedError(GeometryError):
    pass


class NotLatticeError(GeometryError):
    pass


class NotHollowError(GeometryError):
    pass


def norm_coord(x):
    """Normalize a coordinate to int when integral, Fraction otherwise."""
    if isinstance(x, int):
        return x
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f


def norm_point(p: Sequence) -> tuple:
    return tuple(norm_coord(x) for x in p)


@dataclass(frozen=True, order=True)
class HalfSpace:
    """Inequality a.x <= b with primitive integer normal a."""

    a: tuple
    b: Fraction

    @staticmethod
    def make(a: Sequence, b) -> "HalfSpace":
        fa = [Fraction(x) for x in a]
        if all(x == 0 for x in fa):
            raise GeometryError("half-space normal must be nonzero")
        scale = 1
        for x in fa:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
        ia = [int(x * scale) for x in fa]
        g = vec_gcd(ia)
        return HalfSpace(tuple(x // g for x in ia), Fraction(b) * scale / g)

    def slack(self, p: Sequence) -> Fraction:
        return self.b - dot(self.a, p)

    def holds(self, p: Sequence, strict: bool = False) -> bool:
        s = self.slack(p)
        return s > 0 if strict else s >= 0


def _gcd(a, b):
    from math import gcd
    return gcd(a, b)


@dataclass(frozen=True)
class UnimodularMap:
    """Affine lattice automorphism x -> M x + t with |det M| = 1."""

    matrix: tuple
    translation: tuple

    def __post_init__(self):
        if abs(det_int(self.matrix)) != 1:
            raise GeometryError("matrix is not unimodular")

    @staticmethod
    def identity(d: int) -> "UnimodularMap":
        return UnimodularMap(tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d)),
                             tuple(0 for _ in range(d)))

    def apply(self, p: Sequence) -> tuple:
        return tuple(norm_coord(x + t) for x, t in zip(mat_vec(self.matrix, p), self.translation))

    def inverse(self) -> "UnimodularMap":
        inv = tuple(tuple(int(x) for x in row) for row in inverse_exact(self.matrix))
        t = tuple(-x for x in mat_vec(inv, self.translation))
        return UnimodularMap(inv, t)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """Map equal to: apply ``other`` first, then self."""
        from .intlinalg import mat_mul
        M = mat_mul(self.matrix, other.matrix)
        t = tuple(x + y for x, y in zip(mat_vec(self.matrix, other.translation), self.translation))
        return UnimodularMap(tuple(tuple(r) for r in M), t)


def random_unimodular(d: int, rng, shear_steps: int = 12, max_shift: int = 3) -> UnimodularMap:
    """Random unimodular map built from elementary operations (test helper)."""
    M = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(shear_steps):
        i, j = rng.randrange(d), rng.randrange(d)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        M[i] = [x + c * y for x, y in zip(M[i], M[j])]
    if rng.random() < 0.5:
        i, j = rng.randrange(d), rng.randrange(d)
        M[i], M[j] = M[j], M[i]
    if rng.random() < 0.5:
        i = rng.randrange(d)
        M[i] = [-x for x in M[i]]
    t = tuple(rng.randint(-max_shift, max_shift) for _ in range(d))
    return UnimodularMap(tuple(tuple(r) for r in M), t)


class Polytope:
    """Bounded convex polytope with exact dual description.

    Full-dimensional polytopes carry both representations; lower-dimensional
    ones (flagged) carry vertices only and are rejected by operations that
    need facets.
    """

    __slots__ = ("dim", "vertices", "halfspaces", "lower_dimensional", "_incidence")

    def __init__(self, dim: int, vertices: Sequence, halfspaces, lower_dimensional: bool = False):
        self.dim = dim
        self.vertices = tuple(sorted(norm_point(v) for v in vertices))
        self.halfspaces = tuple(sorted(halfspaces)) if halfspaces is not None else None
        self.lower_dimensional = lower_dimensional
        self._incidence = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_vertices(points: Sequence[Sequence]) -> "Polytope":
        return hull(points)

    @staticmethod
    def from_halfspaces(ineqs: Sequence, dim: Optional[int] = None) -> "Polytope":
        return vertices_of(ineqs, dim)

    @staticmethod
    def box(lo: Sequence[int], hi: Sequence[int]) -> "Polytope":
        corners = list(itertools.product(*[(a, b) for a, b in zip(lo, hi)]))
        return hull(corners)

    # -- basic queries -----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Polytope) and self.dim == other.dim
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash((self.dim, self.vertices))

    def __repr__(self):
        kind = "lower-dim " if self.lower_dimensional else ""
        return f"Polytope({kind}d={self.dim}, {len(self.vertices)} vertices)"

    @property
    def is_lattice(self) -> bool:
        return all(isinstance(x, int) for v in self.vertices for x in v)

    def require_full_dimensional(self):
        if self.lower_dimensional:
            raise LowerDimensionalError("operation requires a full-dimensional polytope")

    def require_lattice(self):
        if not self.is_lattice:
            raise NotLatticeError("operation requires a lattice polytope")

    def contains(self, p: Sequence, strict: bool = False) -> bool:
        self.require_full_dimensional()
        return all(h.holds(p, strict) for h in self.halfspaces)

    def facet_incidence(self) -> tuple:
        """Per facet: (halfspace, tuple of indices of vertices on it)."""
        self.require_full_dimensional()
        if self._incidence is None:
            inc = []
            for h in self.halfspaces:
                tight = tuple(i for i, v in enumerate(self.vertices) if h.slack(v) == 0)
                inc.append((h, tight))
            self._incidence = tuple(inc)
        return self._incidence

    def transform(self, u: UnimodularMap) -> "Polytope":
        verts = [u.apply(v) for v in self.vertices]
        if self.lower_dimensional:
            return Polytope(self.dim, verts, None, True)
        minv = inverse_exact(u.matrix)
        hs = []
        for h in self.halfspaces:
            a2 = tuple(int(x) for x in mat_vec(transpose_rows(minv), h.a))
            hs.append(HalfSpace.make(a2, h.b + Fraction(dot(a2, u.translation))))
        return Polytope(self.dim, verts, hs, False)

    def translate(self, t: Sequence) -> "Polytope":
        verts = [tuple(x + y for x, y in zip(v, t)) for v in self.vertices]
        if self.lower_dimensional:
            return Polytope(self.dim, verts, None, True)
        hs = [HalfSpace(h.a, h.b + Fraction(dot(h.a, t))) for h in self.halfspaces]
        return Polytope(self.dim, verts, hs, False)

    def volume(self) -> Fraction:
        return volume(self)


def transpose_rows(M):
    return tuple(zip(*M, strict=True))


# -- hull ------------------------------------------------------------------


def hull(points: Sequence[Sequence]) -> Polytope:
    """Convex hull with minimal vertex list and irredundant facet list.

    Lower-dimensional input yields a vertex-only polytope flagged as such.
    """
    pts = [norm_point(p) for p in points]
    if not pts:
        raise EmptyPolytopeError("hull of no points")
    d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise DimensionMismatchError("points of mixed dimension")
    pts = sorted(set(pts))
    r = affine_rank(pts)
    if r < d:
        return _hull_lower_dimensional(pts, d, r)
    if d == 1:
        lo, hi = pts[0], pts[-1]
        hs = [HalfSpace.make((-1,), -Fraction(lo[0])), HalfSpace.make((1,), Fraction(hi[0]))]
        return Polytope(1, [lo, hi], hs)
    if d == 2:
        return _hull_2d(pts)
    return _hull_polar(pts, d)


def _hull_lower_dimensional(pts, d, r) -> Polytope:
    if r <= 0:
        return Polytope(d, pts[:1], None, True)
    base = pts[0]
    basis = []
    for p in pts[1:]:
        cand = basis + [vec_sub(p, base)]
        if rank_exact(cand) == len(cand):
            basis.append(vec_sub(p, base))
            if len(basis) == r:
                break
    bt = transpose_rows(basis)
    mapped = []
    for p in pts:
        y = solve_exact(bt, vec_sub(p, base))
        mapped.append(tuple(y))
    inner = hull(mapped)
    keep = set(inner.vertices)
    verts = [p for p, y in zip(pts, mapped) if norm_point(y) in keep]
    return Polytope(d, verts, None, True)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(pts) -> Polytope:
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]  # counterclockwise
    hs = []
    for p, q in zip(ring, ring[1:] + ring[:1]):
        n = (q[1] - p[1], -(q[0] - p[0]))
        hs.append(HalfSpace.make(n, Fraction(dot(n, p))))
    return Polytope(2, ring, hs)


def _hull_polar(pts, d) -> Polytope:
    rows = []
    for p in pts:
        scale = 1
        for x in p:
            fx = Fraction(x)
            scale = scale * fx.denominator // _gcd(scale, fx.denominator)
        rows.append(tuple(int(x * scale) for x in p) + (-scale,))
    rays, lineality = extreme_rays(rows, d + 1)
    if lineality:
        raise GeometryError("internal: polar cone of full-dimensional hull has lineality")
    hs = []
    for ray in rays:
        a, beta = ray[:d], ray[d]
        if all(x == 0 for x in a):
            continue
        hs.append(HalfSpace.make(a, Fraction(beta)))
    verts = []
    for p in pts:
        tight = [h.a for h in hs if h.slack(p) == 0]
        if len(tight) >= d and rank_exact(tight) == d:
            verts.append(p)
    poly = Polytope(d, verts, hs)
    for p in pts:
        if not poly.contains(p):
            raise GeometryError("internal: hull misses an input point")
    return poly


# -- H -> V ----------------------------------------------------------------


def _as_halfspaces(ineqs) -> list[HalfSpace]:
    out = []
    for h in ineqs:
        if isinstance(h, HalfSpace):
            out.append(HalfSpace.make(h.a, h.b))
        else:
            a, b = h
            out.append(HalfSpace.make(a, b))
    seen = {}
    for h in out:  # keep the tightest offset per direction
        if h.a not in seen or h.b < seen[h.a].b:
            seen[h.a] = h
    return sorted(seen.values())


def interior_ball(ineqs: Sequence[HalfSpace], d: int):
    """LP for a point maximizing the inscribed sup-norm cube radius.

    Returns (t, center); t = 0 means no interior, infeasible means empty.
    Raises UnboundedError when cubes of arbitrary radius fit.
    """
    sys_rows = [(tuple(h.a) + (sum(abs(x) for x in h.a),), h.b) for h in ineqs]
    sys_rows.append((tuple([0] * d + [-1]), 0))
    obj = [0] * d + [1]
    res = simplexlp.lp_solve(sys_rows, obj, "max")
    if res.status == simplexlp.INFEASIBLE:
        raise EmptyPolytopeError("inequality system is infeasible")
    if res.status == simplexlp.UNBOUNDED:
        raise UnboundedError("inequality system is unbounded")
    return res.value, res.x[:d]


def vertices_of(ineqs: Sequence, dim: Optional[int] = None) -> Polytope:
    """Polytope from an inequality system (bounded, full-dimensional).

    Vertices are the feasible intersection points of d-subsets of the
    hyperplanes; redundant inequalities are pruned afterwards.
    """
    hs = _as_halfspaces(ineqs)
    if not hs:
        raise GeometryError("empty inequality system")
    d = dim if dim is not None else len(hs[0].a)
    if any(len(h.a) != d for h in hs):
        raise DimensionMismatchError("mixed dimensions in system")
    t, _ = interior_ball(hs, d)
    if t == 0:
        raise LowerDimensionalError("inequality system has empty interior")
    for i in range(d):
        for sense in ("max", "min"):
            r = simplexlp.lp_solve([(h.a, h.b) for h in hs], [1 if j == i else 0 for j in range(d)], sense)
            if r.status == simplexlp.UNBOUNDED:
                raise UnboundedError("inequality system is unbounded")
    verts = set()
    for subset in itertools.combinations(hs, d):
        A = [h.a for h in subset]
        if rank_exact(A) < d:
            continue
        x = solve_exact(A, [h.b for h in subset])
        if x is None:
            continue
        p = norm_point(x)
        if all(h.slack(p) >= 0 for h in hs):
            verts.add(p)
    if not verts:
        raise EmptyPolytopeError("no vertices found")
    facets = []
    for h in hs:
        tight = [v for v in verts if h.slack(v) == 0]
        if len(tight) >= d and affine_rank(tight) == d - 1:
            facets.append(h)
    return Polytope(d, sorted(verts), facets)


# -- LP over a polytope ----------------------------------------------------


def lp_optimize(objective: Sequence, poly: Polytope, sense: str = "max"):
    """Exact optimum of a linear functional over a polytope.

    Returns (value, argpoint) with the optimum attained at a vertex;
    ties are broken by lexicographically smallest vertex.
    """
    poly.require_full_dimensional()
    if len(objective) != poly.dim:
        raise DimensionMismatchError("objective dimension mismatch")
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    best = None
    for v in poly.vertices:
        val = dot(objective, v)
        key = (val if sense == "min" else -val, v)
        if best is None or key < best[0]:
            best = (key, val, v)
    return best[1], best[2]


# -- volume ----------------------------------------------------------------


def det_exact(rows) -> Fraction:
    n = len(rows)
    M = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def triangulate(poly: Polytope) -> list[tuple]:
    """Triangulation into simplices spanned by vertices (fan from a vertex)."""
    poly.require_full_dimensional()
    verts = poly.vertices
    d = poly.dim
    if len(verts) == d + 1:
        return [verts]
    v0 = verts[0]
    simplices = []
    for h, tight in poly.facet_incidence():
        if h.slack(v0) == 0:
            continue
        fv = [verts[i] for i in tight]
        for s in _triangulate_points(fv, d - 1):
            simplices.append((v0,) + s)
    return simplices


def _triangulate_points(points, target_dim) -> list[tuple]:
    if target_dim == 0:
        return [tuple(points[:1])]
    base = points[0]
    basis = []
    for p in points[1:]:
        cand = basis + [vec_sub(p, base)]
        if rank_exact(cand) == len(cand):
            basis.append(vec_sub(p, base))
            if len(basis) == target_dim:
                break
    bt = transpose_rows(basis)
    mapped = [tuple(solve_exact(bt, vec_sub(p, base))) for p in points]
    back = {norm_point(m): p for m, p in zip(mapped, points)}
    sub = hull(mapped)
    return [tuple(back[norm_point(v)] for v in s) for s in triangulate(sub)]


def volume(poly: Polytope) -> Fraction:
    """Exact volume, normalized so the unit cube has volume 1."""
    poly.require_full_dimensional()
    d = poly.dim
    total = Fraction(0)
    for s in triangulate(poly):
        rows = [vec_sub(v, s[0]) for v in s[1:]]
        total += abs(det_exact(rows))
    import math
    return total / math.factorial(d)
