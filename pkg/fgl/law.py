"""Formal group laws, strict isomorphisms and orientation series."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Union

import config
from core.errors import DegreeTooSmall, NotAFormalGroupLaw, NotInRing, NotStrict, RingMismatch
from core.polynomial import Exponents, GradedPolynomial, graded_key
from core.ring import RingDescriptor
from core.series import TruncatedSeries, identity_series

logger = logging.getLogger(__name__)

UNITALITY = "unitality"
COMMUTATIVITY = "commutativity"
ASSOCIATIVITY = "associativity"
HOMOGENEITY = "homogeneity"
STRICTNESS = "strict_iso"


@dataclass(frozen=True)
class AxiomViolation:
    """First failing coefficient of an identity.

    Parameters
    ----------
    axiom:
        Name of the identity that failed.
    exponents:
        Variable exponents of the first nonzero coefficient of the defect.
    defect:
        The value of that coefficient.
    """

    axiom: str
    exponents: Exponents
    defect: GradedPolynomial


def _first_defect(axiom: str, defect: TruncatedSeries) -> Optional[AxiomViolation]:
    items = defect.items()
    if not items:
        return None
    exps, value = items[0]
    return AxiomViolation(axiom, exps, value)


def _require_truncation(truncation: int) -> None:
    if truncation < config.MIN_TRUNCATION:
        raise DegreeTooSmall(f"truncation degree must be ≥ {config.MIN_TRUNCATION}")


def check_fgl_axioms(F: TruncatedSeries) -> List[AxiomViolation]:
    """Report the first failing coefficient of every violated axiom.

    The axioms are unitality (``F(x,0) = x`` and ``F(0,y) = y``),
    commutativity and associativity, all up to the truncation degree. An
    empty list means *F* is a formal group law to that degree.
    """
    if F.arity != 2:
        raise NotAFormalGroupLaw("a formal group law is a series in two variables")
    _require_truncation(F.truncation)
    n = F.truncation
    ring = F.ring
    report: List[AxiomViolation] = []

    t = identity_series(ring, n)
    left = (F.set_zero(1) - t).lift(2, (0,))
    right = (F.set_zero(0) - t).lift(2, (1,))
    unit_defects = sorted(left.items() + right.items(), key=lambda item: graded_key(item[0]))
    if unit_defects:
        exps, value = unit_defects[0]
        report.append(AxiomViolation(UNITALITY, exps, value))

    violation = _first_defect(COMMUTATIVITY, F - F.permute((1, 0)))
    if violation:
        report.append(violation)

    x, y, z = (TruncatedSeries.variable(ring, 3, n, i) for i in range(3))
    outer_left = F.substitute([F.lift(3, (0, 1)), z])
    outer_right = F.substitute([x, F.lift(3, (1, 2))])
    violation = _first_defect(ASSOCIATIVITY, outer_left - outer_right)
    if violation:
        report.append(violation)

    logger.debug("axiom check at degree %d over %s: %d violation(s)", n, ring, len(report))
    return report


def check_homogeneity(F: TruncatedSeries) -> List[AxiomViolation]:
    """Coefficients of ``x^i y^j`` that are not homogeneous of weight ``i+j-1``.

    Rings without generators are not graded and always pass.
    """
    if not F.ring.generators:
        return []
    report = []
    for exps, value in F.items():
        if not value.is_homogeneous(sum(exps) - 1):
            report.append(AxiomViolation(HOMOGENEITY, exps, value))
    return report


@dataclass(frozen=True)
class FormalGroupLaw:
    """A bivariate series ``F(x, y)`` satisfying the formal group law axioms.

    The constructor only checks the shape; use :meth:`verified` to run the
    full axiom check on untrusted input.
    """

    series: TruncatedSeries

    def __post_init__(self) -> None:
        if self.series.arity != 2:
            raise NotAFormalGroupLaw("a formal group law is a series in two variables")
        _require_truncation(self.series.truncation)

    @classmethod
    def verified(cls, series: TruncatedSeries) -> "FormalGroupLaw":
        report = check_fgl_axioms(series)
        if report:
            first = report[0]
            raise NotAFormalGroupLaw(
                f"{first.axiom} fails at {first.exponents}: defect {first.defect}"
            )
        return cls(series)

    @property
    def ring(self) -> RingDescriptor:
        return self.series.ring

    @property
    def truncation(self) -> int:
        return self.series.truncation

    def __call__(self, a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
        """Formal sum ``F(a, b)``."""
        return self.series.substitute([a, b])

    def truncate(self, truncation: int) -> "FormalGroupLaw":
        return FormalGroupLaw(self.series.truncate(truncation))

    def change_ring(self, ring: RingDescriptor) -> "FormalGroupLaw":
        return FormalGroupLaw(self.series.change_ring(ring))

    def __str__(self) -> str:
        return str(self.series)


def _check_strict(series: TruncatedSeries) -> None:
    if series.arity != 1:
        raise NotStrict("a strict series has one variable")
    if series.constant_term or series.coefficient(1) != 1:
        raise NotStrict(f"{series} is not of the form t + O(t^2)")


@dataclass(frozen=True)
class OrientationSeries:
    """A change of orientation ``f(t) = t + a_2 t^2 + a_3 t^3 + ...``."""

    series: TruncatedSeries

    def __post_init__(self) -> None:
        _check_strict(self.series)

    @property
    def ring(self) -> RingDescriptor:
        return self.series.ring

    @property
    def truncation(self) -> int:
        return self.series.truncation

    def alphas(self) -> List[GradedPolynomial]:
        """Coefficients ``a_2, ..., a_N``."""
        return [self.series.coefficient(k) for k in range(2, self.truncation + 1)]

    def is_graded(self) -> bool:
        """True iff every ``a_i`` is homogeneous of weight ``i - 1``."""
        return all(a.is_homogeneous(i - 1) for i, a in enumerate(self.alphas(), start=2))

    def inverse(self) -> "OrientationSeries":
        return OrientationSeries(self.series.revert())

    def __str__(self) -> str:
        return str(self.series)


@dataclass(frozen=True)
class StrictIso:
    """A strict isomorphism ``f: source -> target``.

    ``f(source(x, y)) = target(f(x), f(y))`` holds up to the truncation when
    the isomorphism is valid; :meth:`violations` reports otherwise.
    """

    series: TruncatedSeries
    source: FormalGroupLaw
    target: FormalGroupLaw

    def __post_init__(self) -> None:
        _check_strict(self.series)
        if not (self.series.ring == self.source.ring == self.target.ring):
            raise RingMismatch("a strict isomorphism and its laws must share one ring")

    @property
    def truncation(self) -> int:
        return min(self.series.truncation, self.source.truncation, self.target.truncation)

    @property
    def is_identity(self) -> bool:
        return self.series == identity_series(self.series.ring, self.series.truncation)

    def violations(self) -> List[AxiomViolation]:
        n = self.truncation
        f = self.series.truncate(n)
        lhs = f.compose(self.source.series.truncate(n))
        rhs = self.target.series.truncate(n).substitute([f.lift(2, (0,)), f.lift(2, (1,))])
        violation = _first_defect(STRICTNESS, lhs - rhs)
        return [violation] if violation else []

    def is_valid(self) -> bool:
        return not self.violations()

    def inverse(self) -> "StrictIso":
        return StrictIso(self.series.revert(), self.target, self.source)


LawLike = Union[FormalGroupLaw, TruncatedSeries]


def as_law(F: LawLike) -> FormalGroupLaw:
    return F if isinstance(F, FormalGroupLaw) else FormalGroupLaw(F)


def as_series(f: Union[OrientationSeries, StrictIso, TruncatedSeries]) -> TruncatedSeries:
    return f if isinstance(f, TruncatedSeries) else f.series


# ----------------------------------------------------------------------
# Logarithm and exponential
# ----------------------------------------------------------------------
def fgl_log(F: LawLike) -> TruncatedSeries:
    """Logarithm over the rationalized ring.

    ``log'(t) = 1 / (dF/dy)(t, 0)`` integrated termwise.
    """
    law = as_law(F)
    n = law.truncation
    qring = law.ring.rationalized()
    slope = law.series.change_ring(qring).derivative(1).set_zero(1)
    # the t^n coefficient of 1/slope only reaches t^(n+1) of the logarithm
    padded = TruncatedSeries.univariate(qring, [slope.coefficient(k) for k in range(n)], n)
    log = padded.reciprocal().integral()
    logger.debug("logarithm at degree %d over %s", n, qring)
    return log


def fgl_exp(F: LawLike) -> TruncatedSeries:
    """Exponential: the compositional inverse of :func:`fgl_log`."""
    return fgl_log(F).revert()


def fgl_from_logarithm(log: TruncatedSeries, ring: Optional[RingDescriptor] = None) -> FormalGroupLaw:
    """The law ``exp(log(x) + log(y))`` of a strict logarithm.

    With *ring* given, the result is moved there; :class:`NotInRing` is raised
    when a coefficient does not belong to it.
    """
    _check_strict(log)
    exp = log.revert()
    total = log.lift(2, (0,)) + log.lift(2, (1,))
    law = FormalGroupLaw(exp.substitute([total]))
    return law.change_ring(ring) if ring is not None else law


# ----------------------------------------------------------------------
# Formal inverse and n-series
# ----------------------------------------------------------------------
def formal_inverse(F: LawLike) -> TruncatedSeries:
    """The series ``i(t)`` with ``F(t, i(t)) = 0``, solved degree by degree."""
    law = as_law(F)
    ring, n = law.ring, law.truncation
    coeffs: List[GradedPolynomial] = [GradedPolynomial.zero(ring), GradedPolynomial.constant(ring, -1)]
    for k in range(2, n + 1):
        partial = TruncatedSeries.univariate(ring, coeffs + [GradedPolynomial.zero(ring)], k)
        value = law(identity_series(ring, k), partial)
        coeffs.append(-value.coefficient(k))
    return TruncatedSeries.univariate(ring, coeffs, n)


def n_series(F: LawLike, n: int) -> TruncatedSeries:
    """``[n](t)``: the n-fold formal sum of ``t`` (negative ``n`` uses the inverse)."""
    law = as_law(F)
    ring, N = law.ring, law.truncation
    t = identity_series(ring, N)
    if n == 0:
        return TruncatedSeries.zero(ring, 1, N)
    if n < 0:
        return n_series(law, -n).compose(formal_inverse(law))
    acc = t
    for _ in range(n - 1):
        acc = law(acc, t)
    return acc


# ----------------------------------------------------------------------
# Transport along a change of orientation
# ----------------------------------------------------------------------
def transport_fgl(F: LawLike, f: Union[OrientationSeries, TruncatedSeries]) -> FormalGroupLaw:
    """``F'(x, y) = f(F(f^-1(x), f^-1(y)))``; *f* is then a strict iso ``F -> F'``."""
    law = as_law(F)
    series = as_series(f)
    _check_strict(series)
    if series.ring != law.ring:
        raise RingMismatch(f"orientation over {series.ring} cannot act on a law over {law.ring}")
    inverse = series.revert()
    inner = law.series.substitute([inverse.lift(2, (0,)), inverse.lift(2, (1,))])
    return FormalGroupLaw(series.compose(inner))


def rationalize_or_fail(series: TruncatedSeries, ring: RingDescriptor, error: type, what: str) -> TruncatedSeries:
    """Move *series* into *ring*, raising *error* if a coefficient does not fit."""
    try:
        return series.change_ring(ring)
    except NotInRing as exc:
        raise error(f"{what} has a coefficient outside {ring}: {exc}") from exc
