"""Lattice point enumeration, hollowness certificates, integer hulls.

Enumeration slices coordinate by coordinate: exact Fourier-Motzkin
projections are computed once per system, after which the feasible integer
range of each coordinate given a prefix is read off with pure integer
arithmetic (no floats, no full bounding-box scan).  Strict inequalities are
tracked through the projections, so open (interior) regions are sliced
exactly like closed ones.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from .intlinalg import affine_rank, dot, kernel_basis, rank_exact
from .polytope import (
    GeometryError,
    LowerDimensionalError,
    Polytope,
    hull,
)

# a row is (a: tuple[int], num: int, den: int, strict: bool)
# meaning a.x <= num/den, with den > 0 (strict: a.x < num/den)


class InfeasibleSystem(Exception):
    """Raised internally when Fourier-Motzkin proves the region empty."""


def _normalize_row(a, num, den, strict):
    g = 0
    for x in a:
        g = gcd(g, x)
    if g == 0:
        if num < 0 or (strict and num == 0):
            raise InfeasibleSystem
        return None
    q = Fraction(num, den * g)
    return (tuple(x // g for x in a), q.numerator, q.denominator, strict)


def _dedup(rows):
    best = {}
    for a, num, den, strict in rows:
        cur = best.get(a)
        if cur is None or (num * cur[1] < cur[0] * den) or (num * cur[1] == cur[0] * den and strict):
            best[a] = (num, den, strict)
    return [(a, n, d, s) for a, (n, d, s) in sorted(best.items())]


def _eliminate_last(rows, k):
    """Project rows in k variables onto the first k-1 (Fourier-Motzkin)."""
    pos, neg, keep = [], [], []
    for a, num, den, strict in rows:
        c = a[k - 1]
        if c > 0:
            pos.append((a, num, den, strict))
        elif c < 0:
            neg.append((a, num, den, strict))
        else:
            keep.append((a[: k - 1], num, den, strict))
    out = keep
    for ap, np_, dp, sp in pos:
        cp = ap[k - 1]
        for an, nn, dn, sn in neg:
            cn = an[k - 1]
            a2 = tuple(cp * an[i] - cn * ap[i] for i in range(k - 1))
            num2 = cp * nn * dp - cn * np_ * dn
            den2 = dn * dp
            row = _normalize_row(a2, num2, den2, sp or sn)
            if row is not None:
                out.append(row)
    return _dedup(out)


class SlicedRegion:
    """A rational region prepared for integer slicing.

    ``systems[k]`` holds the exact projection onto the first k coordinates;
    integer points are produced in lexicographic order.
    """

    def __init__(self, rows: Sequence, nvars: int):
        self.nvars = nvars
        norm = []
        self.infeasible = False
        self.rows = None
        try:
            for a, num, den, strict in rows:
                r = _normalize_row(tuple(a), num, den, strict)
                if r is not None:
                    norm.append(r)
            systems = [None] * (nvars + 1)
            systems[nvars] = _dedup(norm)
            for k in range(nvars, 1, -1):
                systems[k - 1] = _eliminate_last(systems[k], k)
            self.systems = systems
            self.rows = systems[nvars]
        except InfeasibleSystem:
            self.infeasible = True
            self.systems = None

    @staticmethod
    def from_polytope(poly: Polytope, region: str = "closure", scale: int = 1) -> "SlicedRegion":
        poly.require_full_dimensional()
        if region not in ("closure", "interior"):
            raise ValueError("region must be 'closure' or 'interior'")
        if scale < 1:
            raise ValueError("scale must be a positive integer")
        strict = region == "interior"
        rows = []
        for h in poly.halfspaces:
            b = Fraction(h.b)
            rows.append((tuple(scale * x for x in h.a), b.numerator, b.denominator, strict))
        return SlicedRegion(rows, poly.dim)

    def _bounds(self, sysk, prefix, k):
        lo = None
        hi = None
        for a, num, den, strict in sysk:
            c = a[k - 1]
            if c == 0:
                continue
            partial = sum(a[i] * prefix[i] for i in range(k - 1))
            n = num - partial * den
            d = den * c
            if c > 0:
                v = -((-n) // d) - 1 if strict else n // d
                if hi is None or v < hi:
                    hi = v
            else:
                d = -d
                n = -n
                v = n // d + 1 if strict else -((-n) // d)
                if lo is None or v > lo:
                    lo = v
        if lo is None or hi is None:
            raise GeometryError("region is unbounded along a coordinate")
        return lo, hi

    def points(self, limit: Optional[int] = None) -> Iterator[tuple]:
        """All integer points, lexicographically."""
        if self.infeasible:
            return
        yield from self._recurse((), 1, limit, [0])

    def _recurse(self, prefix, k, limit, count):
        lo, hi = self._bounds(self.systems[k], prefix, k)
        if k == self.nvars:
            for x in range(lo, hi + 1):
                if limit is not None and count[0] >= limit:
                    return
                count[0] += 1
                yield prefix + (x,)
            return
        for x in range(lo, hi + 1):
            if limit is not None and count[0] >= limit:
                return
            yield from self._recurse(prefix + (x,), k + 1, limit, count)

    def fibre_endpoints(self) -> Iterator[tuple]:
        """Per last-coordinate fibre, only the two extreme integer points.

        Every vertex of the integer hull of the region is among these.
        """
        if self.infeasible:
            return
        yield from self._endpoints((), 1)

    def _endpoints(self, prefix, k):
        lo, hi = self._bounds(self.systems[k], prefix, k)
        if k == self.nvars:
            if lo <= hi:
                yield prefix + (lo,)
                if hi != lo:
                    yield prefix + (hi,)
            return
        for x in range(lo, hi + 1):
            yield from self._endpoints(prefix + (x,), k + 1)

    def first_point(self) -> Optional[tuple]:
        for p in self.points(limit=1):
            return p
        return None


# -- public operations -------------------------------------------------------


@dataclass(frozen=True)
class LatticePointSet:
    """Points of scale*Z^d inside a region, sorted lexicographically."""

    scale: int
    region: str
    points: tuple

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)


@dataclass(frozen=True)
class HollownessCertificate:
    verdict: str  # "hollow" | "not-hollow"
    witness: Optional[tuple]
    exhaustion: str

    @property
    def hollow(self) -> bool:
        return self.verdict == "hollow"


@dataclass(frozen=True)
class NoLatticePoints:
    """Typed result of integer_hull on a region free of lattice points."""

    dim: int
    description: str = "polytope contains no lattice points"


def enumerate_points(poly: Polytope, scale: int = 1, region: str = "closure") -> LatticePointSet:
    """Points of scale*Z^d in the closed polytope or strictly inside it."""
    sliced = SlicedRegion.from_polytope(poly, region, scale)
    pts = tuple(tuple(scale * x for x in p) for p in sliced.points())
    return LatticePointSet(scale, region, pts)


def is_hollow(poly: Polytope, scale: int = 1) -> HollownessCertificate:
    """Hollowness check: no point of scale*Z^d interior to the polytope."""
    sliced = SlicedRegion.from_polytope(poly, "interior", scale)
    w = sliced.first_point()
    exhaustion = (f"lexicographic slice enumeration of int(P) over {scale}Z^{poly.dim} "
                  f"with exact Fourier-Motzkin bounds")
    if w is None:
        return HollownessCertificate("hollow", None, exhaustion)
    return HollownessCertificate("not-hollow", tuple(scale * x for x in w), exhaustion)


def ilp_maximize(rows: Sequence, d: int, objective: Sequence[int], hi: int,
                 start: Optional[tuple] = None):
    """Exact maximum of an integer objective over the integer points of a region.

    ``hi`` must be a valid upper bound (e.g. the floor of the rational
    maximum).  Binary search on the threshold; each probe either produces a
    better point or an exact Fourier-Motzkin proof that none exists above
    the threshold.  Returns (value, point) or None if the region has no
    integer points at all.
    """
    if start is None:
        start = SlicedRegion(rows, d).first_point()
        if start is None:
            return None
    best_p = start
    lo = dot(objective, best_p)
    neg = tuple(-x for x in objective)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        probe = SlicedRegion(list(rows) + [(neg, -mid, 1, False)], d)
        p = probe.first_point()
        if p is None:
            hi = mid - 1
        else:
            v = dot(objective, p)
            if v > lo or p < best_p:
                best_p = p
            lo = max(lo, v)
    return lo, best_p


def _vertex_bound(poly: Polytope, objective) -> int:
    from math import floor
    return floor(max(Fraction(dot(objective, v)) for v in poly.vertices))


def integer_hull(poly: Polytope):
    """Convex hull of the lattice points of the polytope.

    Returns a Polytope (possibly lower-dimensional) or NoLatticePoints.
    The hull is grown by an exact oracle: starting from coordinate-extreme
    lattice points, every facet of the current hull is checked by integer
    maximization of its normal; violated facets contribute their witness.
    """
    d = poly.dim
    sliced = SlicedRegion.from_polytope(poly, "closure", 1)
    if sliced.infeasible:
        return NoLatticePoints(d)
    rows = sliced.rows
    p0 = sliced.first_point()
    if p0 is None:
        return NoLatticePoints(d)
    work = {p0}
    for axis in range(d):
        for sign in (1, -1):
            obj = tuple(sign if i == axis else 0 for i in range(d))
            start = max(work, key=lambda p: (dot(obj, p), p))
            _, pt = ilp_maximize(rows, d, obj, _vertex_bound(poly, obj), start)
            work.add(pt)
    while affine_rank(sorted(work)) < d:
        base = sorted(work)[0]
        diffs = [tuple(x - y for x, y in zip(p, base)) for p in sorted(work)[1:]]
        normal = kernel_basis(diffs)[0] if diffs else tuple(1 if i == 0 else 0 for i in range(d))
        c0 = dot(normal, base)
        grew = False
        for obj in (normal, tuple(-x for x in normal)):
            val, pt = ilp_maximize(rows, d, obj, _vertex_bound(poly, obj),
                                   max(work, key=lambda p: (dot(obj, p), p)))
            if val > dot(obj, base):
                work.add(pt)
                grew = True
                break
        if not grew:
            # every lattice point satisfies normal.x = c0: drop a dimension
            flat = list(rows) + [(normal, c0, 1, False),
                                 (tuple(-x for x in normal), -c0, 1, False)]
            pts = list(SlicedRegion(flat, d).points())
            return hull(pts)
    memo = {}
    current = hull(sorted(work))
    while True:
        adds = set()
        for h in current.halfspaces:
            res = memo.get(h.a)
            if res is None:
                start = max(work, key=lambda p: (dot(h.a, p), p))
                res = ilp_maximize(rows, d, h.a, _vertex_bound(poly, h.a), start)
                memo[h.a] = res
            val, pt = res
            if Fraction(val) > h.b:
                adds.add(pt)
        if not adds:
            return current
        work |= adds
        current = hull(sorted(work))
