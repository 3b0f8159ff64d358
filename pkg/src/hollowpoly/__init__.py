"""Exact rational geometry of hollow lattice polytopes."""

from .polytope import (
    GeometryError,
    DimensionMismatchError,
    LowerDimensionalError,
    EmptyPolytopeError,
    UnboundedError,
    NotLatticeError,
    HalfSpace,
    Polytope,
    UnimodularMap,
    hull,
    vertices_of,
    lp_optimize,
    volume,
)

__all__ = [
    "GeometryError",
    "DimensionMismatchError",
    "LowerDimensionalError",
    "EmptyPolytopeError",
    "UnboundedError",
    "NotLatticeError",
    "HalfSpace",
    "Polytope",
    "UnimodularMap",
    "hull",
    "vertices_of",
    "lp_optimize",
    "volume",
]
