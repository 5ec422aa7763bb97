"""Hazewinkel generators and the Brown-Peterson formal group law."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from core.errors import CartierIntegralityFailure, DegreeTooSmall, UsageError
from core.polynomial import GradedPolynomial
from core.ring import PLocalIntegers, Rationals, RingDescriptor, make_ring
from core.scalars import require_prime
from core.series import TruncatedSeries
from fgl.law import FormalGroupLaw, fgl_from_logarithm, rationalize_or_fail

from .lazard import m_name, universal_ring

logger = logging.getLogger(__name__)


def v_name(n: int) -> str:
    return f"v{n}"


def _recursion_terms(p: int, logs: List[GradedPolynomial], vs: List[GradedPolynomial], n: int) -> GradedPolynomial:
    """``sum_{1 <= i < n} l_i * v_{n-i}^(p^i)``; the ``i = 0`` term is ``v_n`` itself."""
    total = GradedPolynomial.zero(logs[0].ring)
    for i in range(1, n):
        total = total + logs[i] * vs[n - i - 1] ** (p ** i)
    return total


@dataclass(frozen=True)
class HazewinkelData:
    """Generators ``v_1..v_k`` written in the ``m_i`` of the universal ring.

    ``log_coefficients[k]`` is ``l_k = m_{p^k - 1}`` with ``l_0 = 1``.
    """

    prime: int
    ring: RingDescriptor
    generators: Tuple[GradedPolynomial, ...]
    log_coefficients: Tuple[GradedPolynomial, ...]

    def residuals(self) -> List[GradedPolynomial]:
        """``p*l_n - sum_{0 <= i < n} l_i * v_{n-i}^(p^i)`` for ``n = 1..k``."""
        p = self.prime
        logs = list(self.log_coefficients)
        vs = list(self.generators)
        out = []
        for n in range(1, len(vs) + 1):
            out.append(logs[n].scale(p) - vs[n - 1] - _recursion_terms(p, logs, vs, n))
        return out

    def weights_ok(self) -> bool:
        return all(v.is_homogeneous(self.prime ** n - 1) for n, v in enumerate(self.generators, start=1))


def hazewinkel_generators(p: int, count: int, degree: int) -> HazewinkelData:
    """Solve ``p*l_n = sum_{0 <= i < n} l_i * v_{n-i}^(p^i)`` for ``v_1..v_count``.

    Raises :class:`DegreeTooSmall` unless ``p^count - 1 <= degree - 1``.
    """
    require_prime(p)
    if count < 0:
        raise UsageError("generator count must be non-negative")
    if p ** count > degree:
        raise DegreeTooSmall(f"v_{count} at p={p} needs m_{p ** count - 1}, which degree {degree} does not provide")
    ring = universal_ring(max(degree, 2))
    logs = [GradedPolynomial.one(ring)]
    logs += [GradedPolynomial.generator(ring, m_name(p ** k - 1)) for k in range(1, count + 1)]
    vs: List[GradedPolynomial] = []
    for n in range(1, count + 1):
        vs.append(logs[n].scale(p) - _recursion_terms(p, logs, vs, n))
    logger.debug("hazewinkel generators at p=%d: %d computed", p, count)
    return HazewinkelData(p, ring, tuple(vs), tuple(logs))


def brown_peterson_ring(p: int, degree: int) -> RingDescriptor:
    """``Z_(p)[v_1, ..., v_k]`` with ``p^k <= degree`` and ``v_n`` of weight ``p^n - 1``."""
    require_prime(p)
    gens = []
    n = 1
    while p ** n <= degree:
        gens.append((v_name(n), p ** n - 1))
        n += 1
    return make_ring(PLocalIntegers(p), gens)


def brown_peterson_fgl(p: int, degree: int) -> FormalGroupLaw:
    """The universal p-typical law written over ``Z_(p)[v_1, v_2, ...]``.

    Its logarithm ``sum l_n t^(p^n)`` follows ``l_n = (1/p) sum_{i<n} l_i v_{n-i}^(p^i)``;
    the law itself must land in the p-local ring.
    """
    ring = brown_peterson_ring(p, degree)
    qring = ring.with_base(Rationals)
    vs = [GradedPolynomial.generator(qring, name) for name in qring.names]
    logs = [GradedPolynomial.one(qring)]
    for n in range(1, len(vs) + 1):
        total = GradedPolynomial.zero(qring)
        for i in range(n):
            total = total + logs[i] * vs[n - i - 1] ** (p ** i)
        logs.append(total.scale(Fraction(1, p)))
    coeffs = {(p ** n,): logs[n] for n in range(len(logs))}
    log = TruncatedSeries(qring, 1, degree, coeffs)
    law = fgl_from_logarithm(log)
    series = rationalize_or_fail(law.series, ring, CartierIntegralityFailure, "Brown-Peterson law")
    logger.debug("Brown-Peterson law at p=%d to degree %d over %s", p, degree, ring)
    return FormalGroupLaw(series)
