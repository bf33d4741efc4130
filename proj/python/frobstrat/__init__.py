"""Exact Frobenius stratification bookkeeping (C++ core)."""

from ._core import (
    FrobstratError,
    LatticePolygon,
    b1_splits,
    canonical_polygon,
    canonical_stratum_dim,
    classify,
    colength,
    dominates,
    dual_polygon,
    enumerate_frobenius_polygons,
    fiber_census,
    filtration_degrees,
    is_canonical,
    pushforward_type,
    stratum_table,
    sun_slope_bound,
    verify_claims,
)

__all__ = [
    "FrobstratError",
    "LatticePolygon",
    "b1_splits",
    "canonical_polygon",
    "canonical_stratum_dim",
    "classify",
    "colength",
    "dominates",
    "dual_polygon",
    "enumerate_frobenius_polygons",
    "fiber_census",
    "filtration_degrees",
    "is_canonical",
    "pushforward_type",
    "stratum_table",
    "sun_slope_bound",
    "verify_claims",
]
