"""Exception hierarchy shared by every package of the engine.

All errors derive from :class:`ValueError` so callers that only guard against
bad values keep working.
"""
from __future__ import annotations


class AlgebraError(ValueError):
    """Base class for every error raised by the engine."""


# Rings -----------------------------------------------------------------
class DuplicateGenerator(AlgebraError):
    """Two generators of a ring share the same name."""


class NotPrime(AlgebraError):
    """A prime was expected."""


class EmptyName(AlgebraError):
    """A generator was given an empty name."""


class NotInRing(AlgebraError):
    """A coefficient does not belong to the base ring."""


class RingMismatch(AlgebraError, TypeError):
    """Operands live over different rings."""


# Series ----------------------------------------------------------------
class ArityMismatch(AlgebraError, TypeError):
    """Operands have a different number of formal variables."""


class NonInvertibleLeadingTerm(AlgebraError):
    """The constant term of a divisor is not a unit."""


class NonzeroConstantTerm(AlgebraError):
    """A series substituted into another one must have zero constant term."""


class NonInvertibleLinearCoefficient(AlgebraError):
    """Reversion needs a nonzero scalar coefficient of ``t``."""


class DegreeTooSmall(AlgebraError):
    """A truncation or degree bound is below what the operation needs."""


# Formal group laws -----------------------------------------------------
class NotAFormalGroupLaw(AlgebraError):
    """A bivariate series fails the formal group law axioms."""


class NotStrict(AlgebraError):
    """A series expected to be t + O(t**2) is not."""


class NotPLocalRing(AlgebraError):
    """p-typification was requested over a ring that is not p-local."""


class CartierIntegralityFailure(AlgebraError):
    """A p-typical law or its isomorphism left the p-local ring."""


class IdempotencyFailure(AlgebraError):
    """A second p-typification pass changed the law."""


# Chern calculus ----------------------------------------------------------
class NonUnitConstantTerm(AlgebraError):
    """A multiplicative sequence needs ``h(0) = 1``."""


class NotSymmetric(AlgebraError):
    """A polynomial in Chern roots is not symmetric."""


class RankTooLarge(AlgebraError):
    """A Thom polynomial needs more Chern classes than the ring carries."""


class StabilityFailure(AlgebraError):
    """A Chern expansion changed when one more root was added."""


# Arguments -------------------------------------------------------------
class UsageError(AlgebraError):
    """An argument lies outside the domain of the operation."""


# Documents -------------------------------------------------------------
class DocumentError(AlgebraError):
    """A serialized document cannot be decoded."""


__all__ = [
    "AlgebraError",
    "ArityMismatch",
    "CartierIntegralityFailure",
    "DegreeTooSmall",
    "DocumentError",
    "DuplicateGenerator",
    "EmptyName",
    "IdempotencyFailure",
    "NonInvertibleLeadingTerm",
    "NonInvertibleLinearCoefficient",
    "NonUnitConstantTerm",
    "NonzeroConstantTerm",
    "NotAFormalGroupLaw",
    "NotInRing",
    "NotPLocalRing",
    "NotPrime",
    "NotStrict",
    "NotSymmetric",
    "RankTooLarge",
    "RingMismatch",
    "StabilityFailure",
    "UsageError",
]
