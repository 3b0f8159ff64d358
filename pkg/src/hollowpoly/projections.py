"""Lattice projections, lattice width, Cayley structure.

A lattice projection is a surjective affine-integer map whose kernel meets
the lattice in full rank; here kernels are given by integer vectors, the
complementary matrix is built from a Hermite basis completion, and width
certification enumerates primitive directions by max-norm shells with an
exact inscribed-cube pruning bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .intlinalg import (
    dot,
    hnf_row,
    mat_vec,
    primitive_direction,
    projection_complement,
    rank_exact,
    saturate_rows,
    vec_gcd,
)
from .latticepoints import HollownessCertificate, is_hollow
from .polytope import (
    GeometryError,
    DimensionMismatchError,
    NotHollowError,
    Polytope,
    hull,
    interior_ball,
)


@dataclass(frozen=True)
class ProjectionMap:
    """Projection of Z^d onto Z^(d-i) along a saturated integer kernel."""

    kernel_basis: tuple
    matrix: tuple
    saturation_applied: bool = False

    @property
    def source_dim(self) -> int:
        return len(self.kernel_basis[0])

    @property
    def target_dim(self) -> int:
        return len(self.matrix)

    def apply(self, p: Sequence) -> tuple:
        return mat_vec(self.matrix, p)


def projection_along(kernel: Sequence[Sequence[int]], dim: int) -> ProjectionMap:
    """Lattice projection with the given kernel directions.

    Non-primitive or non-saturated kernels are replaced by the saturation
    of their span, recorded by ``saturation_applied``.
    """
    kern = [tuple(v) for v in kernel]
    if not kern or not (1 <= len(kern) < dim):
        raise GeometryError("kernel rank must be between 1 and dim-1")
    if any(len(v) != dim for v in kern):
        raise DimensionMismatchError("kernel vector dimension mismatch")
    if any(not all(isinstance(x, int) for x in v) for v in kern):
        raise GeometryError("kernel vectors must be integral")
    if rank_exact(kern) != len(kern):
        raise GeometryError("kernel vectors are dependent")
    sat = saturate_rows(kern)
    orig = tuple(r for r in hnf_row(kern)[0] if any(r))
    satd = tuple(r for r in hnf_row(sat)[0] if any(r))
    matrix = projection_complement(sat)
    matrix = tuple(r for r in hnf_row(matrix)[0] if any(r))  # canonical representative
    return ProjectionMap(tuple(sat), matrix, saturation_applied=orig != satd)


def project_polytope(poly: Polytope, pmap: ProjectionMap) -> Polytope:
    """Image polytope in the quotient lattice coordinates Z^(d-i)."""
    if pmap.source_dim != poly.dim:
        raise DimensionMismatchError("projection dimension mismatch")
    return hull([pmap.apply(v) for v in poly.vertices])


@dataclass(frozen=True)
class WidthResult:
    width: object  # int for lattice polytopes, Fraction otherwise
    direction: tuple
    certified: bool
    shells_scanned: int
    prune_radius: Fraction


def _shell_directions(d: int, shell: int) -> Iterator[tuple]:
    """Primitive sign-canonical directions with max-norm exactly ``shell``.

    Ordered by the lexicographic order of the reversed tuple, so e_1
    precedes e_2 among coordinate directions.
    """
    cands = []
    for u in itertools.product(range(-shell, shell + 1), repeat=d):
        if max(abs(x) for x in u) != shell:
            continue
        nz = next((x for x in u if x != 0), 0)
        if nz < 0:
            continue
        if vec_gcd(u) != 1:
            continue
        cands.append(u)
    cands.sort(key=lambda u: tuple(reversed(u)))
    return iter(cands)


def directions_up_to(d: int, radius: int) -> Iterator[tuple]:
    for shell in range(1, radius + 1):
        yield from _shell_directions(d, shell)


def _width_along(poly: Polytope, u) -> Fraction:
    vals = [dot(u, v) for v in poly.vertices]
    return Fraction(max(vals) - min(vals))


def lattice_width(poly: Polytope) -> WidthResult:
    """Exact lattice width with a certified minimizing primitive direction.

    Directions are scanned by increasing max-norm B; once the inscribed
    cube radius t satisfies 2*t*(B+1) > incumbent, no further shell can
    contain a better direction (any u with max-norm B' > B has width at
    least 2*t*B').
    """
    poly.require_full_dimensional()
    d = poly.dim
    t, _ = interior_ball(poly.halfspaces, d)
    best: Optional[tuple] = None
    shell = 0
    while True:
        shell += 1
        for u in _shell_directions(d, shell):
            w = _width_along(poly, u)
            if best is None or w < best[0]:
                best = (w, u)
        if best is not None and 2 * t * (shell + 1) > best[0]:
            break
    w = best[0]
    width = int(w) if w.denominator == 1 else w
    return WidthResult(width, best[1], True, shell, t)


def is_cayley(poly: Polytope) -> tuple[bool, Optional[tuple]]:
    """Lattice width one test; returns (verdict, witness direction)."""
    poly.require_lattice()
    res = lattice_width(poly)
    return (res.width == 1, res.direction if res.width == 1 else None)


@dataclass(frozen=True)
class HollowProjectionSearch:
    """Outcome of scanning rank-1 kernels for a hollow image.

    ``found`` False means no kernel within the scanned radius worked; that
    is not a proof that none exists.
    """

    found: bool
    scale: int
    radius: int
    kernel: Optional[tuple] = None
    map: Optional[ProjectionMap] = None
    image: Optional[Polytope] = None
    image_certificate: Optional[HollownessCertificate] = None


def find_hollow_projection(poly: Polytope, scale: int = 1, radius: int = 2) -> HollowProjectionSearch:
    """Scan primitive kernel directions for an s-hollow (d-1)-image.

    The polytope itself must be s-hollow.  Kernels v with max-norm up to
    ``radius`` are tried in deterministic shell order; the first hollow
    image wins.
    """
    if radius < 1:
        raise ValueError("radius must be >= 1")
    cert = is_hollow(poly, scale)
    if not cert.hollow:
        raise NotHollowError(
            f"polytope is not {scale}-hollow (witness {cert.witness})")
    for v in directions_up_to(poly.dim, radius):
        pmap = projection_along([v], poly.dim)
        image = project_polytope(poly, pmap)
        icert = is_hollow(image, scale)
        if icert.hollow:
            return HollowProjectionSearch(True, scale, radius, v, pmap, image, icert)
    return HollowProjectionSearch(False, scale, radius)
