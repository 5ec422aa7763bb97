"""Chern classes, multiplicative sequences and Thom class polynomials."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from core.errors import (
    ArityMismatch,
    DegreeTooSmall,
    NonUnitConstantTerm,
    RankTooLarge,
    RingMismatch,
    StabilityFailure,
    UsageError,
)
from core.polynomial import GradedPolynomial
from core.ring import RingDescriptor
from core.series import TruncatedSeries
from fgl.law import LawLike, as_law

from .symmetric import (
    chern_classes_ring,
    chern_name,
    expand_in_elementary,
    root_name,
    root_polynomials,
    roots_ring,
)

logger = logging.getLogger(__name__)

LEFT_PREFIX = "cx"
RIGHT_PREFIX = "cy"


@dataclass(frozen=True)
class ChernRing:
    """Chern classes ``c1..cn`` over *base*, truncated at total weight *degree*."""

    n: int
    base: RingDescriptor
    degree: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise UsageError("the number of Chern classes must be non-negative")
        if self.degree < 0:
            raise UsageError("the degree bound must be non-negative")

    @property
    def ring(self) -> RingDescriptor:
        return chern_classes_ring(self.base, self.n)

    @property
    def roots_ring(self) -> RingDescriptor:
        return roots_ring(self.base, self.n)

    @property
    def class_names(self) -> Tuple[str, ...]:
        return tuple(chern_name(i) for i in range(1, self.n + 1))

    def c(self, i: int) -> GradedPolynomial:
        """``c_i``, with ``c_0 = 1`` and ``c_i = 0`` above ``n``."""
        if i == 0:
            return GradedPolynomial.one(self.ring)
        if i > self.n:
            return GradedPolynomial.zero(self.ring)
        return GradedPolynomial.generator(self.ring, chern_name(i))

    def truncate(self, p: GradedPolynomial) -> GradedPolynomial:
        """Drop monomials whose Chern weight exceeds the degree bound."""
        return p.truncate_weight(self.degree, self.class_names)


def _require_unit_constant(h: TruncatedSeries) -> None:
    if h.arity != 1:
        raise ArityMismatch("a multiplicative sequence is a series in one variable")
    if h.constant_term != 1:
        raise NonUnitConstantTerm(f"h(0) must be 1, got {h.constant_term}")


def _log_one_plus(u: TruncatedSeries) -> TruncatedSeries:
    """``log(1 + u)`` for *u* without constant term."""
    total = TruncatedSeries.zero(u.ring, 1, u.truncation)
    power = u
    for k in range(1, u.truncation + 1):
        total = total + power.scale(Fraction((-1) ** (k - 1), k))
        power = power * u
    return total


def _power_sums(chern: ChernRing) -> List[GradedPolynomial]:
    """Newton's identities: ``P_k = sum_{i<k} (-1)^(i-1) c_i P_{k-i} + (-1)^(k-1) k c_k``."""
    sums: List[GradedPolynomial] = [GradedPolynomial.zero(chern.ring)]
    for k in range(1, chern.degree + 1):
        p = chern.c(k).scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            if i > chern.n:
                break
            p = p + (chern.c(i) * sums[k - i]).scale((-1) ** (i - 1))
        sums.append(p)
    return sums


def _expand_through_power_sums(h: TruncatedSeries, n: int, degree: int) -> GradedPolynomial:
    qchern = ChernRing(n, h.ring.rationalized(), degree)
    hq = h.rationalized().truncate(degree)
    logs = _log_one_plus(hq - TruncatedSeries.one(hq.ring, 1, degree))
    sums = _power_sums(qchern)
    exponent = GradedPolynomial.zero(qchern.ring)
    for k in range(1, degree + 1):
        b = logs.coefficient(k)
        if b:
            exponent = exponent + b.embed(qchern.ring) * sums[k]
    result = GradedPolynomial.one(qchern.ring)
    term = GradedPolynomial.one(qchern.ring)
    for j in range(1, degree + 1):
        term = qchern.truncate(term * exponent).scale(Fraction(1, j))
        if term.is_zero:
            break
        result = result + term
    return result.change_ring(chern_classes_ring(h.ring, n))


def expand_product_h(h: TruncatedSeries, n: int, degree: int, check_stability: bool = True) -> GradedPolynomial:
    """Expand ``prod_{i<=n} h(x_i)`` in ``c1..cn`` up to Chern weight *degree*.

    ``log h`` is spread over power sums of the roots, which Newton's identities
    write in the ``c_i``; exponentiating gives the product. With
    *check_stability*, the parts of weight at most ``min(n, degree)`` are
    compared against the expansion in ``n + 1`` roots.

    Raises
    ------
    NonUnitConstantTerm
        If ``h(0) != 1``.
    DegreeTooSmall
        If *h* is known to a lower degree than *degree*.
    StabilityFailure
        If one more root changes the stable part.
    """
    _require_unit_constant(h)
    if h.truncation < degree:
        raise DegreeTooSmall(f"h is only known to degree {h.truncation}, expansion needs {degree}")
    result = _expand_through_power_sums(h, n, degree)
    logger.debug("expanded a product over %d roots to weight %d", n, degree)
    if check_stability:
        bigger = ChernRing(n + 1, h.ring, degree)
        stable = min(n, degree)
        wider = _expand_through_power_sums(h, n + 1, degree).truncate_weight(stable, bigger.class_names)
        narrow = result.truncate_weight(stable, ChernRing(n, h.ring, degree).class_names)
        if narrow.embed(bigger.ring) != wider:
            raise StabilityFailure(f"expansion in {n} roots is not stable up to weight {stable}")
    return result


def symmetrize_product(h: TruncatedSeries, n: int, degree: int) -> GradedPolynomial:
    """Multiply out ``prod h(x_i)`` in the roots, then reduce to elementary classes.

    A direct computation, much slower than :func:`expand_product_h`.
    """
    _require_unit_constant(h)
    if h.truncation < degree:
        raise DegreeTooSmall(f"h is only known to degree {h.truncation}, expansion needs {degree}")
    ring = roots_ring(h.ring, n)
    names = [root_name(i) for i in range(1, n + 1)]
    product = GradedPolynomial.one(ring)
    for x in root_polynomials(ring):
        factor = GradedPolynomial.zero(ring)
        for k in range(degree + 1):
            coeff = h.coefficient(k)
            if coeff:
                factor = factor + coeff.embed(ring) * x ** k
        product = (product * factor).truncate_weight(degree, names)
    return expand_in_elementary(product, degree)


# ----------------------------------------------------------------------
# Whitney sums
# ----------------------------------------------------------------------
def _prefixed(prefix: str, i: int) -> str:
    return f"{prefix}{i}"


def whitney_ring(left: ChernRing, right: ChernRing) -> RingDescriptor:
    if left.base != right.base:
        raise RingMismatch("both bundles need the same coefficient ring")
    gens = [(_prefixed(LEFT_PREFIX, i), i) for i in range(1, left.n + 1)]
    gens += [(_prefixed(RIGHT_PREFIX, j), j) for j in range(1, right.n + 1)]
    return left.base.extend(gens)


def whitney_sum(left: ChernRing, right: ChernRing) -> Tuple[RingDescriptor, Dict[str, GradedPolynomial]]:
    """The substitution ``c_k -> sum_{i+j=k} cx_i cy_j`` for a direct sum of bundles.

    Returns the ring carrying ``cx1..cxn, cy1..cym`` and the assignment for
    ``c1..c_{n+m}``.
    """
    ring = whitney_ring(left, right)

    def part(prefix: str, i: int, bound: int) -> GradedPolynomial:
        if i == 0:
            return GradedPolynomial.one(ring)
        if i > bound:
            return GradedPolynomial.zero(ring)
        return GradedPolynomial.generator(ring, _prefixed(prefix, i))

    assignments = {}
    for k in range(1, left.n + right.n + 1):
        total = GradedPolynomial.zero(ring)
        for i in range(k + 1):
            total = total + part(LEFT_PREFIX, i, left.n) * part(RIGHT_PREFIX, k - i, right.n)
        assignments[chern_name(k)] = total
    return ring, assignments


def _renamed(p: GradedPolynomial, prefix: str, n: int, ring: RingDescriptor) -> GradedPolynomial:
    """Send ``c_i`` to ``<prefix>i`` in *ring*."""
    assignments = {chern_name(i): GradedPolynomial.generator(ring, _prefixed(prefix, i)) for i in range(1, n + 1)}
    return p.specialize(assignments, ring)


def _whitney_names(n: int, m: int) -> List[str]:
    return [_prefixed(LEFT_PREFIX, i) for i in range(1, n + 1)] + [_prefixed(RIGHT_PREFIX, j) for j in range(1, m + 1)]


def multiplicativity_check(h: TruncatedSeries, n: int, m: int, degree: int) -> bool:
    """True iff ``prod h`` over ``n + m`` roots is the product over ``n`` and ``m`` roots.

    The ``n + m`` expansion is pulled back along :func:`whitney_sum` and
    compared with the product of the two smaller expansions, both cut at
    *degree*.
    """
    whole = expand_product_h(h, n + m, degree)
    left = expand_product_h(h, n, degree)
    right = expand_product_h(h, m, degree)
    ring, assignments = whitney_sum(ChernRing(n, h.ring, degree), ChernRing(m, h.ring, degree))
    names = _whitney_names(n, m)
    lhs = whole.specialize(assignments, ring).truncate_weight(degree, names)
    rhs = (_renamed(left, LEFT_PREFIX, n, ring) * _renamed(right, RIGHT_PREFIX, m, ring)).truncate_weight(degree, names)
    verdict = lhs == rhs
    logger.debug("multiplicativity for %d + %d roots to weight %d: %s", n, m, degree, verdict)
    return verdict


# ----------------------------------------------------------------------
# Line bundles
# ----------------------------------------------------------------------
def tensor_first_chern(F: LawLike, degree: int) -> GradedPolynomial:
    """``F(x1, x2)`` cut at degree *degree*: the first Chern class of a tensor product."""
    law = as_law(F)
    series = law.series.truncate(degree)
    ring = roots_ring(law.ring, 2)
    x1, x2 = root_polynomials(ring)
    total = GradedPolynomial.zero(ring)
    for (i, j), coeff in series.items():
        total = total + coeff.embed(ring) * x1 ** i * x2 ** j
    return total


# ----------------------------------------------------------------------
# Thom classes
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class ThomClassPolynomial:
    """``t^r + c1 t^(r-1) + ... + c_r`` over a :class:`ChernRing`."""

    rank: int
    chern: ChernRing
    series: TruncatedSeries

    def __post_init__(self) -> None:
        if self.series.truncation != self.rank:
            raise ValueError("a Thom polynomial is stored to exactly its rank")
        for i in range(self.rank + 1):
            if self.series.coefficient(self.rank - i) != self.chern.c(i):
                raise ValueError(f"coefficient of t^{self.rank - i} must be c{i}")

    def trivialized(self) -> TruncatedSeries:
        """The polynomial of a trivial bundle: every ``c_i`` sent to 0."""
        zeros = {name: 0 for name in self.chern.class_names}
        return self.series.specialize(zeros, self.chern.base)

    def reduces_to_trivial(self) -> bool:
        expected = TruncatedSeries(self.chern.base, 1, self.rank, {(self.rank,): 1})
        return self.trivialized() == expected

    def splits(self) -> bool:
        """True iff ``prod_{i<=r} (t + x_i)`` expands to this polynomial."""
        ring = roots_ring(self.chern.base, self.rank)
        product = TruncatedSeries.one(ring, 1, self.rank)
        for x in root_polynomials(ring):
            product = product * TruncatedSeries(ring, 1, self.rank, {(0,): x, (1,): 1})
        for k in range(self.rank + 1):
            expanded = expand_in_elementary(product.coefficient(self.rank - k))
            if expanded.embed(self.chern.ring) != self.series.coefficient(self.rank - k):
                return False
        return True

    def __str__(self) -> str:
        return str(self.series)


def thom_class_poly(rank: int, chern: ChernRing) -> ThomClassPolynomial:
    """The Thom polynomial of a rank-*rank* bundle.

    Raises :class:`RankTooLarge` when *chern* carries fewer than *rank* classes.
    """
    if rank < 0:
        raise UsageError("rank must be non-negative")
    if rank > chern.n:
        raise RankTooLarge(f"rank {rank} needs {rank} Chern classes, ring has {chern.n}")
    series = TruncatedSeries(chern.ring, 1, rank, {(rank - i,): chern.c(i) for i in range(rank + 1)})
    return ThomClassPolynomial(rank, chern, series)


def _widened(series: TruncatedSeries, prefix: str, n: int, ring: RingDescriptor, truncation: int) -> TruncatedSeries:
    coeffs = {exps: _renamed(value, prefix, n, ring) for exps, value in series.items()}
    return TruncatedSeries(ring, 1, truncation, coeffs)


def thom_class_multiplicativity(n: int, m: int, base: RingDescriptor) -> bool:
    """True iff the rank ``n + m`` Thom polynomial of a direct sum factors.

    After the Whitney substitution it must equal the product of the rank
    ``n`` and rank ``m`` Thom polynomials in their own classes.
    """
    total = n + m
    whole = thom_class_poly(total, ChernRing(total, base, total))
    left_chern = ChernRing(n, base, total)
    right_chern = ChernRing(m, base, total)
    ring, assignments = whitney_sum(left_chern, right_chern)
    lhs = whole.series.specialize(assignments, ring)
    left = _widened(thom_class_poly(n, left_chern).series, LEFT_PREFIX, n, ring, total)
    right = _widened(thom_class_poly(m, right_chern).series, RIGHT_PREFIX, m, ring, total)
    return lhs == left * right
