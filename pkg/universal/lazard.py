"""The universal formal group law over Q[m1, m2, ...], truncated."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple, Union

import config
from core.errors import DegreeTooSmall, RingMismatch
from core.plugins import register_fgl_type
from core.polynomial import GradedPolynomial
from core.ring import Rationals, RingDescriptor, make_ring
from core.scalars import Scalar
from core.series import TruncatedSeries
from fgl.law import FormalGroupLaw, StrictIso, fgl_from_logarithm
from fgl.typification import p_typify

logger = logging.getLogger(__name__)

Assignment = Mapping[str, Union[GradedPolynomial, Scalar]]


def m_name(i: int) -> str:
    return f"m{i}"


def universal_ring(degree: int) -> RingDescriptor:
    """``Q[m1, ..., m_{N-1}]`` with ``m_i`` of weight ``i``."""
    return make_ring(Rationals, [(m_name(i), i) for i in range(1, degree)])


@dataclass(frozen=True)
class UniversalContext:
    """The universal law to degree N together with its logarithm."""

    degree: int
    ring: RingDescriptor
    law: FormalGroupLaw
    log: TruncatedSeries

    def m(self, i: int) -> GradedPolynomial:
        return GradedPolynomial.generator(self.ring, m_name(i))


def universal_fgl(degree: int) -> UniversalContext:
    """Build ``exp(log x + log y)`` for ``log = t + m1 t^2 + ... + m_{N-1} t^N``.

    Raises :class:`DegreeTooSmall` when ``degree < 2``.
    """
    if degree < config.MIN_TRUNCATION:
        raise DegreeTooSmall(f"truncation degree must be ≥ {config.MIN_TRUNCATION}")
    ring = universal_ring(degree)
    coeffs = [GradedPolynomial.zero(ring), GradedPolynomial.one(ring)]
    coeffs += [GradedPolynomial.generator(ring, m_name(i)) for i in range(1, degree)]
    log = TruncatedSeries.univariate(ring, coeffs, degree)
    law = fgl_from_logarithm(log)
    logger.debug("universal law to degree %d built over %s", degree, ring)
    return UniversalContext(degree, ring, law, log)


def universal_p_typical(degree: int, p: int) -> Tuple[FormalGroupLaw, StrictIso]:
    """p-typification of the universal law; its log is ``t + sum m_{p^k-1} t^(p^k)``."""
    return p_typify(universal_fgl(degree).law, p)


def multiplicative_specialization(ctx: UniversalContext) -> Dict[str, Fraction]:
    """``m_i -> (-1)^i / (i+1)``: the coefficients of ``log(1 + t)``."""
    return {m_name(i): Fraction((-1) ** i, i + 1) for i in range(1, ctx.degree)}


def specialize_law(law: FormalGroupLaw, assignments: Assignment, ring: Optional[RingDescriptor] = None) -> FormalGroupLaw:
    """Push *law* along the ring map sending generators to *assignments*.

    The target defaults to the base ring without generators.
    """
    target = ring if ring is not None else make_ring(law.ring.base)
    return FormalGroupLaw(law.series.specialize(assignments, target))


def _universal_factory(degree: int, ring: Optional[RingDescriptor] = None) -> FormalGroupLaw:
    if ring is not None and ring != universal_ring(degree):
        raise RingMismatch("the universal law lives over its own ring")
    return universal_fgl(degree).law


register_fgl_type("universal", _universal_factory)
