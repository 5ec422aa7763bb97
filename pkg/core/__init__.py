"""Exact algebra substrate: scalars, rings, polynomials and truncated series."""

from .errors import AlgebraError  # noqa: F401
from .ring import Integers, PLocalIntegers, Rationals, RingDescriptor, make_ring  # noqa: F401
from .polynomial import GradedPolynomial, assert_p_local, poly_ops  # noqa: F401
from .series import (  # noqa: F401
    TruncatedSeries,
    series_calculus,
    series_compose,
    series_ops,
    series_revert,
)

__all__ = [
    "AlgebraError",
    "GradedPolynomial",
    "Integers",
    "PLocalIntegers",
    "Rationals",
    "RingDescriptor",
    "TruncatedSeries",
    "assert_p_local",
    "make_ring",
    "poly_ops",
    "series_calculus",
    "series_compose",
    "series_ops",
    "series_revert",
]
