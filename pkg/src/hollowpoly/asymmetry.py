"""Coefficient of asymmetry, centrality, and explicit volume-bound formulas.

The coefficient of asymmetry of an interior point w measures the worst
ratio of forward to backward reach along any direction.  The ratio of the
two boundary distances along y equals gauge(w-P at y) / gauge(P-w at y), a
ratio of piecewise-linear convex gauges, so its maximum over directions is
attained at a vertex direction; this reduces the supremum to an exact
rational maximum over vertices, with no irrational unit vectors involved.

The bound evaluators return exact big integers and rationals; decimal
constants appearing in them are fixed as the exact printed rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .intlinalg import dot, vec_sub
from .latticepoints import enumerate_points
from .polytope import GeometryError, NotHollowError, Polytope, hull


class BoundaryPointError(GeometryError):
    """The reference point must be strictly interior."""


class NoInteriorPointsError(GeometryError):
    """Raised when I_s(P) is empty but an interior lattice point is needed."""


def coefficient_of_asymmetry(w: Sequence, poly: Polytope) -> Fraction:
    """Exact ca(w, P) for an interior point w.

    Computed as max over vertices v of the gauge of v-w in the reflected
    body w-P, i.e. max over vertices and facets of
    (a.w - a.v) / (b - a.w).
    """
    poly.require_full_dimensional()
    if not poly.contains(w, strict=True):
        raise BoundaryPointError("point is not strictly interior")
    best = None
    for v in poly.vertices:
        for h in poly.halfspaces:
            denom = h.b - Fraction(dot(h.a, w))
            val = Fraction(dot(h.a, w) - dot(h.a, v), 1) / denom
            if best is None or val > best:
                best = val
    return best


def asymmetry_along(w: Sequence, poly: Polytope, y: Sequence) -> Fraction:
    """Exact forward/backward boundary distance ratio along direction y.

    Independent ray-casting evaluation of the definition; used as an oracle
    against the vertex-gauge maximum.
    """
    poly.require_full_dimensional()
    if not poly.contains(w, strict=True):
        raise BoundaryPointError("point is not strictly interior")
    if all(x == 0 for x in y):
        raise GeometryError("direction must be nonzero")
    fwd = None
    bwd = None
    for h in poly.halfspaces:
        ay = Fraction(dot(h.a, y))
        slack = h.b - Fraction(dot(h.a, w))
        if ay > 0:
            lam = slack / ay
            fwd = lam if fwd is None or lam < fwd else fwd
        elif ay < 0:
            lam = slack / (-ay)
            bwd = lam if bwd is None or lam < bwd else bwd
    if fwd is None or bwd is None:
        raise GeometryError("polytope is unbounded along the direction")
    return fwd / bwd


@dataclass(frozen=True)
class AsymmetryReport:
    point: tuple
    ca: Fraction
    delta: Fraction

    def __post_init__(self):
        assert self.delta == 1 / (self.ca + 1)


def is_delta_central(w: Sequence, poly: Polytope, delta: Fraction) -> bool:
    """True iff delta <= 1/(ca(w,P)+1)."""
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise GeometryError("delta must lie in (0, 1)")
    return delta <= Fraction(1) / (coefficient_of_asymmetry(w, poly) + 1)


def min_asymmetry_point(poly: Polytope, scale: int = 1) -> AsymmetryReport:
    """The point of I_s(P) minimizing ca, ties broken lexicographically."""
    pts = enumerate_points(poly, scale, "interior").points
    if not pts:
        raise NoInteriorPointsError(f"polytope is {scale}-hollow")
    best = None
    for p in pts:
        ca = coefficient_of_asymmetry(p, poly)
        if best is None or (ca, p) < (best.ca, best.point):
            best = AsymmetryReport(p, ca, Fraction(1) / (ca + 1))
    return best


@dataclass(frozen=True)
class MaxTriangle:
    triangle: Polytope
    vertices: tuple
    frame: Polytope  # (-2)S + (v0+v1+v2); contains the polygon


def max_area_triangle(poly: Polytope) -> MaxTriangle:
    """Maximum-area triangle on vertices of a polygon, with its frame."""
    poly.require_full_dimensional()
    if poly.dim != 2:
        raise GeometryError("max-area triangle is defined for polygons")
    verts = poly.vertices
    if len(verts) < 3:
        raise GeometryError("need at least three vertices")
    best = None
    for tri in itertools.combinations(verts, 3):
        (x0, y0), (x1, y1), (x2, y2) = tri
        area2 = abs((x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0))
        if area2 == 0:
            continue
        key = (-Fraction(area2), tri)
        if best is None or key < best[0]:
            best = (key, tri)
    tri = best[1]
    s = tuple(sum(c) for c in zip(*tri))
    frame = hull([tuple(si - 2 * vi for si, vi in zip(s, v)) for v in tri])
    return MaxTriangle(hull(tri), tri, frame)


# -- closed-form bounds ------------------------------------------------------


def pikhurko_bound(k: int, s: int) -> tuple[int, Fraction]:
    """Asymmetry bound 8k(8s+7)^(2^(2k+1)) - 1 and the matching centrality."""
    if k < 1 or s < 1:
        raise ValueError("k and s must be positive")
    ca_bound = 8 * k * (8 * s + 7) ** (2 ** (2 * k + 1)) - 1
    return ca_bound, Fraction(1, ca_bound + 1)


def kl_delta_sequence(d: int, s: int) -> list[Fraction]:
    """The strictly increasing centrality thresholds ending at 1."""
    if d < 1 or s < 1:
        raise ValueError("d and s must be positive")
    return [Fraction(1, 8 * (d - j) * (8 * s + 7) ** (2 ** (2 * (d - j) + 1)) + 1)
            for j in range(1, d + 1)]


def exception_volume_bound(d: int, s: int) -> int:
    """Volume bound s^d (8(d-1)(8s+7)^(2^(2d-1)) + 1)^d for the exceptions."""
    if d < 1 or s < 1:
        raise ValueError("d and s must be positive")
    return s ** d * (8 * (d - 1) * (8 * s + 7) ** (2 ** (2 * d - 1)) + 1) ** d


def digit_count(n: int) -> int:
    return len(str(abs(n)))


def proposition_bound_3d() -> tuple[Fraction, int]:
    """Exact cube of 2/0.124903 and its integer ceiling 4106."""
    value = (Fraction(2) / Fraction(124903, 1000000)) ** 3
    if not Fraction(4105) < value < Fraction(4106):
        raise AssertionError("3d volume bound left its expected unit interval")
    return value, 4106


def polygon_asymmetry_bound() -> Fraction:
    """Exact polygon bound 2/0.124904 - 1 (about 15.012)."""
    return Fraction(2) / Fraction(124904, 1000000) - 1


@dataclass(frozen=True)
class BoundReport:
    """Deterministic evaluation record of one closed-form bound."""

    formula_id: str
    d: Optional[int]
    s: Optional[int]
    k: Optional[int]
    value: object

    @staticmethod
    def evaluate(formula_id: str, d: Optional[int] = None, s: Optional[int] = None,
                 k: Optional[int] = None) -> "BoundReport":
        if formula_id == "thm21":
            value = exception_volume_bound(d, s)
        elif formula_id == "thm25":
            value = pikhurko_bound(k, s)
        elif formula_id == "kl-deltas":
            value = kl_delta_sequence(d, s)
        elif formula_id == "prop16":
            value = proposition_bound_3d()
        elif formula_id == "lemma27":
            value = polygon_asymmetry_bound()
        else:
            raise ValueError(f"unknown formula id: {formula_id}")
        return BoundReport(formula_id, d, s, k, value)
