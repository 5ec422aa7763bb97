"""Named formal group laws available without an input document."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from core.plugins import register_fgl_type
from core.polynomial import GradedPolynomial
from core.ring import Integers, Rationals, RingDescriptor, make_ring
from core.scalars import Scalar, to_rational
from core.series import TruncatedSeries

from .law import FormalGroupLaw


def _default_ring(ring: Optional[RingDescriptor]) -> RingDescriptor:
    return ring if ring is not None else make_ring(Integers)


def additive_fgl(degree: int, ring: Optional[RingDescriptor] = None) -> FormalGroupLaw:
    """``F(x, y) = x + y``."""
    ring = _default_ring(ring)
    return FormalGroupLaw(TruncatedSeries(ring, 2, degree, {(1, 0): 1, (0, 1): 1}))


def scaled_fgl(
    degree: int, ring: Optional[RingDescriptor] = None, a: Union[Scalar, str, GradedPolynomial] = 1
) -> FormalGroupLaw:
    """``F(x, y) = x + y + a*x*y``; *a* may be a scalar or an element of *ring*."""
    if isinstance(a, GradedPolynomial):
        ring = ring or a.ring
    else:
        a = to_rational(a)
        if ring is None:
            ring = make_ring(Integers if a.denominator == 1 else Rationals)
    return FormalGroupLaw(TruncatedSeries(ring, 2, degree, {(1, 0): 1, (0, 1): 1, (1, 1): a}))


def multiplicative_fgl(degree: int, ring: Optional[RingDescriptor] = None) -> FormalGroupLaw:
    """``F(x, y) = x + y + x*y``."""
    return scaled_fgl(degree, _default_ring(ring), Fraction(1))


register_fgl_type("additive", additive_fgl)
register_fgl_type("multiplicative", multiplicative_fgl)
register_fgl_type("scaled", scaled_fgl)
