"""Cohomology of projective space as the truncated polynomial ring ``R[x]/(x^(n+1))``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from core.errors import ArityMismatch, DegreeTooSmall, RingMismatch, UsageError
from core.polynomial import GradedPolynomial
from core.ring import RingDescriptor
from core.scalars import Scalar, format_rational
from core.series import TruncatedSeries

Coefficient = Union[GradedPolynomial, Scalar]


@dataclass(frozen=True)
class ProjectiveClass:
    """``a_0 + a_1 x + ... + a_n x^n`` in the ring of ``P^n``."""

    dimension: int
    ring: RingDescriptor
    coefficients: Tuple[GradedPolynomial, ...]

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.dimension + 1:
            raise ValueError("a class on P^n has exactly n + 1 coefficients")

    def _check(self, other: "ProjectiveClass") -> None:
        if other.ring != self.ring:
            raise RingMismatch(f"cannot combine classes over {self.ring} and {other.ring}")
        if other.dimension != self.dimension:
            raise ValueError(f"cannot combine classes on P^{self.dimension} and P^{other.dimension}")

    def __add__(self, other: "ProjectiveClass") -> "ProjectiveClass":
        self._check(other)
        return ProjectiveClass(self.dimension, self.ring, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "ProjectiveClass") -> "ProjectiveClass":
        self._check(other)
        n = self.dimension
        out = [GradedPolynomial.zero(self.ring) for _ in range(n + 1)]
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] = out[i + j] + a * other.coefficients[j]
        return ProjectiveClass(n, self.ring, tuple(out))

    def to_series(self) -> TruncatedSeries:
        return TruncatedSeries.univariate(self.ring, list(self.coefficients), self.dimension)

    def __str__(self) -> str:
        parts = []
        for k, a in enumerate(self.coefficients):
            if not a:
                continue
            monomial = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not monomial:
                parts.append(str(a))
            elif a == 1:
                parts.append(monomial)
            elif a.is_constant:
                parts.append(f"{format_rational(a.constant_term)}*{monomial}")
            else:
                parts.append(f"({a})*{monomial}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def projective_ring_reduce(
    a: Union[TruncatedSeries, Sequence[Coefficient]], n: int, ring: Optional[RingDescriptor] = None
) -> ProjectiveClass:
    """Reduce a polynomial in ``x`` modulo ``x^(n+1)``.

    *a* is either a univariate series or the list ``[a_0, a_1, ...]``; scalar
    entries need *ring*. A series must be known at least to degree *n*.
    """
    if n < 0:
        raise UsageError("projective dimension must be non-negative")
    if isinstance(a, TruncatedSeries):
        if a.arity != 1:
            raise ArityMismatch("a class on P^n is a polynomial in one variable")
        if a.truncation < n:
            raise DegreeTooSmall(f"series known to degree {a.truncation} cannot be reduced on P^{n}")
        return ProjectiveClass(n, a.ring, tuple(a.coefficient(k) for k in range(n + 1)))
    entries = list(a)
    if ring is None:
        polys = [c for c in entries if isinstance(c, GradedPolynomial)]
        if not polys:
            raise UsageError("a ring is needed for a class given by scalars")
        ring = polys[0].ring
    coeffs = []
    for k in range(n + 1):
        value = entries[k] if k < len(entries) else 0
        coeffs.append(value if isinstance(value, GradedPolynomial) else GradedPolynomial.constant(ring, value))
    return ProjectiveClass(n, ring, tuple(coeffs))
