"""Cartier p-typification and the idempotent it defines."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Tuple

from core.errors import CartierIntegralityFailure, IdempotencyFailure, NotPLocalRing
from core.ring import RATIONALS
from core.scalars import is_p_power, require_prime

from .law import (
    FormalGroupLaw,
    LawLike,
    OrientationSeries,
    StrictIso,
    as_law,
    fgl_from_logarithm,
    fgl_log,
    rationalize_or_fail,
)

logger = logging.getLogger(__name__)


def _require_p_local(law: FormalGroupLaw, p: int) -> None:
    base = law.ring.base
    if base.kind == RATIONALS:
        return
    if base.is_p_local and base.prime == p:
        return
    raise NotPLocalRing(f"p-typification at p={p} needs a Q or Z_({p}) base, got {base}")


def is_p_typical(F: LawLike, p: int) -> bool:
    """True iff the logarithm of *F* only has terms at ``t^(p^k)``."""
    require_prime(p)
    return all(is_p_power(exps[0], p) for exps, _ in fgl_log(F).items())


def p_typify(F: LawLike, p: int) -> Tuple[FormalGroupLaw, StrictIso]:
    """Return the p-typical law of *F* and the canonical strict iso onto *F*.

    The logarithm keeps its coefficients at ``t^(p^k)``; the p-typical law is
    ``exp_typ(log_typ(x) + log_typ(y))`` and the isomorphism is
    ``exp_F(log_typ(t))`` with source the p-typical law and target *F*.

    Raises
    ------
    NotPLocalRing
        If the base ring is neither ``Q`` nor ``Z_(p)``.
    CartierIntegralityFailure
        If a coefficient of the result leaves ``Z_(p)``.
    """
    require_prime(p)
    law = as_law(F)
    _require_p_local(law, p)
    logger.debug("p-typifying at p=%d, degree %d, over %s", p, law.truncation, law.ring)

    log = fgl_log(law)
    log_typ = log.select(lambda exps: is_p_power(exps[0], p))
    typical = fgl_from_logarithm(log_typ)
    epsilon = log.revert().compose(log_typ)

    typical_series = rationalize_or_fail(typical.series, law.ring, CartierIntegralityFailure, "p-typical law")
    epsilon_series = rationalize_or_fail(epsilon, law.ring, CartierIntegralityFailure, "canonical isomorphism")
    typical = FormalGroupLaw(typical_series)
    return typical, StrictIso(epsilon_series, typical, law)


@dataclass(frozen=True)
class IdempotencyCertificate:
    """Record of applying p-typification twice.

    ``verdict`` holds iff the second pass returned the first pass's law
    together with the identity isomorphism.
    """

    prime: int
    first_pass: Tuple[FormalGroupLaw, StrictIso]
    second_pass: Tuple[FormalGroupLaw, StrictIso]

    @property
    def verdict(self) -> bool:
        law, _ = self.first_pass
        again, iso = self.second_pass
        return again == law and iso.is_identity


def idempotency_certificate(F: LawLike, p: int) -> IdempotencyCertificate:
    first = p_typify(F, p)
    second = p_typify(first[0], p)
    certificate = IdempotencyCertificate(p, first, second)
    logger.debug("idempotency at p=%d: %s", p, certificate.verdict)
    return certificate


def quillen_idempotent(F: LawLike, p: int) -> Tuple[OrientationSeries, IdempotencyCertificate]:
    """The orientation ``epsilon`` of :func:`p_typify` with its idempotency certificate.

    Raises :class:`IdempotencyFailure` when the second pass changed anything.
    """
    certificate = idempotency_certificate(F, p)
    if not certificate.verdict:
        raise IdempotencyFailure(f"p-typification at p={p} is not idempotent on this law")
    _, epsilon = certificate.first_pass
    return OrientationSeries(epsilon.series), certificate
