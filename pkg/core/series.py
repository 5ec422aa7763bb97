"""Truncated power series in one to three formal variables.

A :class:`TruncatedSeries` over a :class:`~core.ring.RingDescriptor` stores the
coefficients of every monomial of total degree at most ``truncation``.
Degree counts the formal variables only; generator weights of the coefficient
ring play no part in truncation.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from operator import add
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    ArityMismatch,
    DegreeTooSmall,
    NonInvertibleLeadingTerm,
    NonInvertibleLinearCoefficient,
    NonzeroConstantTerm,
    NotInRing,
    RingMismatch,
)
from .polynomial import Exponents, GradedPolynomial, graded_key
from .ring import RingDescriptor
from .scalars import Scalar, format_rational, to_rational

logger = logging.getLogger(__name__)

VARIABLE_NAMES: Dict[int, Tuple[str, ...]] = {
    1: ("t",),
    2: ("x", "y"),
    3: ("x", "y", "z"),
}

Coefficient = Union[GradedPolynomial, Scalar]
_Terms = Dict[Exponents, Fraction]


def _accumulate(target: _Terms, a: GradedPolynomial, b: GradedPolynomial) -> None:
    """Add the product ``a * b`` into the raw term map *target*."""
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            key = tuple(map(add, ea, eb))
            target[key] = target.get(key, 0) + ca * cb


class TruncatedSeries:
    """Power series truncated at a total degree.

    Instances are immutable.

    Parameters
    ----------
    ring:
        Coefficient ring.
    arity:
        Number of formal variables (``t``; ``x, y``; or ``x, y, z``).
    truncation:
        Largest total degree that is stored.
    coefficients:
        Mapping from variable exponent tuples to polynomials or scalars.
        Entries above the truncation degree are discarded.
    """

    __slots__ = ("ring", "arity", "truncation", "_coeffs")

    def __init__(
        self,
        ring: RingDescriptor,
        arity: int,
        truncation: int,
        coefficients: Optional[Mapping[Exponents, Coefficient]] = None,
    ) -> None:
        if arity not in VARIABLE_NAMES:
            raise ValueError(f"unsupported arity {arity}")
        if isinstance(truncation, bool) or not isinstance(truncation, int) or truncation < 0:
            raise ValueError(f"truncation must be a non-negative integer, got {truncation!r}")
        coeffs: Dict[Exponents, GradedPolynomial] = {}
        for exps, value in (coefficients or {}).items():
            exps = tuple(exps)
            if len(exps) != arity or any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"invalid exponent tuple {exps} for arity {arity}")
            if sum(exps) > truncation:
                continue
            poly = value if isinstance(value, GradedPolynomial) else GradedPolynomial.constant(ring, value)
            if poly.ring != ring:
                raise RingMismatch(f"coefficient over {poly.ring} in a series over {ring}")
            if exps in coeffs:
                poly = coeffs[exps] + poly
            coeffs[exps] = poly
        self.ring = ring
        self.arity = arity
        self.truncation = truncation
        self._coeffs = {k: v for k, v in coeffs.items() if v}

    @classmethod
    def _raw(
        cls, ring: RingDescriptor, arity: int, truncation: int, coeffs: Dict[Exponents, GradedPolynomial]
    ) -> "TruncatedSeries":
        series = cls.__new__(cls)
        series.ring = ring
        series.arity = arity
        series.truncation = truncation
        series._coeffs = {k: v for k, v in coeffs.items() if v and sum(k) <= truncation}
        return series

    @classmethod
    def _from_terms(
        cls, ring: RingDescriptor, arity: int, truncation: int, raw: Dict[Exponents, _Terms]
    ) -> "TruncatedSeries":
        coeffs = {k: GradedPolynomial._raw(ring, terms) for k, terms in raw.items()}
        return cls._raw(ring, arity, truncation, coeffs)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, ring: RingDescriptor, arity: int, truncation: int) -> "TruncatedSeries":
        return cls(ring, arity, truncation)

    @classmethod
    def one(cls, ring: RingDescriptor, arity: int, truncation: int) -> "TruncatedSeries":
        return cls(ring, arity, truncation, {(0,) * arity: 1})

    @classmethod
    def variable(cls, ring: RingDescriptor, arity: int, truncation: int, index: int = 0) -> "TruncatedSeries":
        """The series consisting of the *index*-th formal variable."""
        exps = [0] * arity
        exps[index] = 1
        return cls(ring, arity, truncation, {tuple(exps): 1})

    @classmethod
    def univariate(
        cls, ring: RingDescriptor, coefficients: Sequence[Coefficient], truncation: Optional[int] = None
    ) -> "TruncatedSeries":
        """Build ``sum(c_k * t**k)`` from a coefficient list.

        The truncation defaults to the length of the list minus one.
        """
        if truncation is None:
            truncation = max(len(coefficients) - 1, 0)
        return cls(ring, 1, truncation, {(k,): c for k, c in enumerate(coefficients)})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    @property
    def coefficients(self) -> Mapping[Exponents, GradedPolynomial]:
        return MappingProxyType(self._coeffs)

    @property
    def variables(self) -> Tuple[str, ...]:
        return VARIABLE_NAMES[self.arity]

    def items(self) -> List[Tuple[Exponents, GradedPolynomial]]:
        """Coefficients in canonical graded-lexicographic order."""
        return sorted(self._coeffs.items(), key=lambda item: graded_key(item[0]))

    def coefficient(self, *exponents: int) -> GradedPolynomial:
        """Coefficient of the monomial with the given variable exponents."""
        if len(exponents) == 1 and isinstance(exponents[0], tuple):
            exponents = exponents[0]
        exps = tuple(exponents)
        if len(exps) != self.arity:
            raise ArityMismatch(f"expected {self.arity} exponents, got {len(exps)}")
        return self._coeffs.get(exps, GradedPolynomial.zero(self.ring))

    def scalar(self, *exponents: int) -> Fraction:
        """Coefficient of a monomial when it is a constant of the base ring."""
        poly = self.coefficient(*exponents)
        if not poly.is_constant:
            raise ValueError(f"coefficient {poly} is not a scalar")
        return poly.constant_term

    @property
    def constant_term(self) -> GradedPolynomial:
        return self.coefficient(*(0,) * self.arity)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Largest total degree with a nonzero coefficient (``-1`` for zero)."""
        return max((sum(k) for k in self._coeffs), default=-1)

    def is_p_local(self, p: int) -> bool:
        return all(c.is_p_local(p) for c in self._coeffs.values())

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check(self, other: "TruncatedSeries") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch(f"cannot combine series over {self.ring} and {other.ring}")
        if other.arity != self.arity:
            raise ArityMismatch(f"cannot combine arity {self.arity} with arity {other.arity}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.truncation, other.truncation)
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out[k] + v if k in out else v
        return TruncatedSeries._raw(self.ring, self.arity, n, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries._raw(self.ring, self.arity, self.truncation, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, value: Coefficient) -> "TruncatedSeries":
        """Multiply every coefficient by a scalar or a polynomial."""
        if isinstance(value, GradedPolynomial):
            if value.ring != self.ring:
                raise RingMismatch(f"cannot scale a series over {self.ring} by {value.ring}")
            return TruncatedSeries._raw(
                self.ring, self.arity, self.truncation, {k: v * value for k, v in self._coeffs.items()}
            )
        return TruncatedSeries._raw(
            self.ring, self.arity, self.truncation, {k: v.scale(value) for k, v in self._coeffs.items()}
        )

    def __mul__(self, other: object) -> "TruncatedSeries":
        if isinstance(other, (GradedPolynomial, int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        n = min(self.truncation, other.truncation)
        right = sorted(((sum(k), k, v) for k, v in other._coeffs.items()), key=lambda item: item[0])
        raw: Dict[Exponents, _Terms] = {}
        for ka, va in self._coeffs.items():
            da = sum(ka)
            if da > n:
                continue
            for db, kb, vb in right:
                if da + db > n:
                    break
                key = tuple(map(add, ka, kb))
                _accumulate(raw.setdefault(key, {}), va, vb)
        return TruncatedSeries._from_terms(self.ring, self.arity, n, raw)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncatedSeries":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = TruncatedSeries.one(self.ring, self.arity, self.truncation)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a unit of the base ring."""
        c0 = self.constant_term
        if not c0.is_constant or not self.ring.base.is_unit(c0.constant_term):
            raise NonInvertibleLeadingTerm(f"constant term {c0} is not a unit of {self.ring.base}")
        u = 1 / c0.constant_term
        n = self.truncation
        if self.arity == 1:
            coeffs = [self.coefficient(k) for k in range(n + 1)]
            inv: List[GradedPolynomial] = [GradedPolynomial.constant(self.ring, u)]
            for k in range(1, n + 1):
                acc: _Terms = {}
                for j in range(1, k + 1):
                    if coeffs[j] and inv[k - j]:
                        _accumulate(acc, coeffs[j], inv[k - j])
                inv.append(GradedPolynomial._raw(self.ring, acc).scale(-u))
            return TruncatedSeries.univariate(self.ring, inv, n)
        # 1/a = u * sum(g**k) with g = 1 - u*a
        one = TruncatedSeries.one(self.ring, self.arity, n)
        g = one - self.scale(u)
        acc_series = one
        for _ in range(n):
            acc_series = one + g * acc_series
        return acc_series.scale(u)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return self * other.reciprocal()

    # ------------------------------------------------------------------
    # Truncation and variables
    # ------------------------------------------------------------------
    def truncate(self, truncation: int) -> "TruncatedSeries":
        """Forget every coefficient above *truncation*."""
        if truncation > self.truncation:
            raise DegreeTooSmall(f"series is only known up to degree {self.truncation}, not {truncation}")
        return TruncatedSeries._raw(self.ring, self.arity, truncation, dict(self._coeffs))

    def select(self, predicate: Callable[[Exponents], bool]) -> "TruncatedSeries":
        """Keep the coefficients whose exponent tuple satisfies *predicate*."""
        return TruncatedSeries._raw(
            self.ring, self.arity, self.truncation, {k: v for k, v in self._coeffs.items() if predicate(k)}
        )

    def set_zero(self, index: int) -> "TruncatedSeries":
        """Substitute 0 for the *index*-th variable, dropping it."""
        if self.arity == 1:
            raise ArityMismatch("cannot drop the only variable")
        out = {
            k[:index] + k[index + 1:]: v
            for k, v in self._coeffs.items()
            if k[index] == 0
        }
        return TruncatedSeries._raw(self.ring, self.arity - 1, self.truncation, out)

    def lift(self, arity: int, positions: Sequence[int]) -> "TruncatedSeries":
        """View as a series in *arity* variables, variable ``i`` becoming ``positions[i]``."""
        if len(positions) != self.arity:
            raise ArityMismatch("one target position per variable is required")
        out: Dict[Exponents, GradedPolynomial] = {}
        for k, v in self._coeffs.items():
            exps = [0] * arity
            for pos, e in zip(positions, k):
                exps[pos] += e
            out[tuple(exps)] = v
        return TruncatedSeries._raw(self.ring, arity, self.truncation, out)

    def permute(self, order: Sequence[int]) -> "TruncatedSeries":
        """Reorder variables: new variable ``i`` is old variable ``order[i]``."""
        out = {tuple(k[j] for j in order): v for k, v in self._coeffs.items()}
        return TruncatedSeries._raw(self.ring, self.arity, self.truncation, out)

    def shift_down(self) -> "TruncatedSeries":
        """Divide a univariate series with zero constant term by ``t``."""
        self._require_arity(1)
        if self.constant_term:
            raise NonzeroConstantTerm("cannot divide by t: constant term is nonzero")
        if self.truncation == 0:
            raise DegreeTooSmall("a series truncated at degree 0 cannot be divided by t")
        out = {(k[0] - 1,): v for k, v in self._coeffs.items()}
        return TruncatedSeries._raw(self.ring, 1, self.truncation - 1, out)

    def _require_arity(self, arity: int) -> None:
        if self.arity != arity:
            raise ArityMismatch(f"expected a series in {arity} variable(s), got {self.arity}")

    # ------------------------------------------------------------------
    # Composition
    # ------------------------------------------------------------------
    def substitute(self, values: Sequence["TruncatedSeries"]) -> "TruncatedSeries":
        """Replace variable ``i`` by ``values[i]``.

        Every value must have zero constant term and share the ring and the
        arity of the others; the result is truncated at the smallest
        truncation involved.
        """
        if len(values) != self.arity:
            raise ArityMismatch(f"expected {self.arity} series to substitute, got {len(values)}")
        arity = values[0].arity
        for value in values:
            if value.ring != self.ring:
                raise RingMismatch(f"cannot substitute a series over {value.ring} into {self.ring}")
            if value.arity != arity:
                raise ArityMismatch("substituted series must share their arity")
            if value.constant_term:
                raise NonzeroConstantTerm("substituted series must have zero constant term")
        n = min([self.truncation] + [v.truncation for v in values])
        values = [v.truncate(n) for v in values]
        powers: Dict[Tuple[int, int], TruncatedSeries] = {}
        return _evaluate(self._coeffs, values, 0, n, powers, self.ring)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner)`` for a univariate series."""
        self._require_arity(1)
        return self.substitute([inner])

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse of a univariate ``u*t + O(t**2)``.

        *u* must be a nonzero scalar. Uses Lagrange inversion: the coefficient
        of ``t**n`` in the inverse is ``1/n`` times the coefficient of
        ``t**(n-1)`` in ``(t/f)**n``. The result stays over the input ring
        when its coefficients allow it and moves to the rationalized ring
        otherwise.
        """
        self._require_arity(1)
        if self.constant_term:
            raise NonzeroConstantTerm("only series with zero constant term can be reverted")
        u = self.coefficient(1)
        if not u.is_constant or not u.constant_term:
            raise NonInvertibleLinearCoefficient(f"linear coefficient {u} is not a nonzero scalar")
        n = self.truncation
        logger.debug("reverting a series of truncation %d over %s", n, self.ring)
        qring = self.ring.rationalized()
        if n <= 1:
            inverse = TruncatedSeries.univariate(qring, [0, 1 / u.constant_term], n)
        else:
            phi = self.change_ring(qring).shift_down().reciprocal()
            coeffs: List[GradedPolynomial] = [GradedPolynomial.zero(qring)]
            power = phi
            for k in range(1, n + 1):
                if k > 1:
                    power = power * phi
                coeffs.append(power.coefficient(k - 1).scale(Fraction(1, k)))
            inverse = TruncatedSeries.univariate(qring, coeffs, n)
        try:
            return inverse.change_ring(self.ring)
        except NotInRing:
            return inverse

    # ------------------------------------------------------------------
    # Calculus
    # ------------------------------------------------------------------
    def derivative(self, index: int = 0) -> "TruncatedSeries":
        """Partial derivative in the *index*-th variable (truncation drops by one)."""
        out: Dict[Exponents, GradedPolynomial] = {}
        for k, v in self._coeffs.items():
            e = k[index]
            if e:
                out[k[:index] + (e - 1,) + k[index + 1:]] = v.scale(e)
        return TruncatedSeries._raw(self.ring, self.arity, max(self.truncation - 1, 0), out)

    def integral(self) -> "TruncatedSeries":
        """Termwise antiderivative with zero constant, over the rationalized ring.

        The truncation is kept, so the top coefficient of the input is lost.
        """
        self._require_arity(1)
        qring = self.ring.rationalized()
        out: Dict[Exponents, GradedPolynomial] = {}
        for (e,), v in self._coeffs.items():
            out[(e + 1,)] = v.change_ring(qring).scale(Fraction(1, e + 1))
        return TruncatedSeries._raw(qring, 1, self.truncation, out)

    # ------------------------------------------------------------------
    # Ring changes
    # ------------------------------------------------------------------
    def change_ring(self, ring: RingDescriptor) -> "TruncatedSeries":
        """Reinterpret over a ring with the same generators (coefficients are checked)."""
        if ring == self.ring:
            return self
        return TruncatedSeries._raw(
            ring, self.arity, self.truncation, {k: v.change_ring(ring) for k, v in self._coeffs.items()}
        )

    def rationalized(self) -> "TruncatedSeries":
        return self.change_ring(self.ring.rationalized())

    def embed(self, ring: RingDescriptor) -> "TruncatedSeries":
        """Map coefficients into a ring with more generators."""
        return TruncatedSeries._raw(
            ring, self.arity, self.truncation, {k: v.embed(ring) for k, v in self._coeffs.items()}
        )

    def specialize(
        self, assignments: Mapping[str, Union[GradedPolynomial, Scalar]], ring: RingDescriptor
    ) -> "TruncatedSeries":
        """Apply a ring homomorphism coefficientwise (see :meth:`GradedPolynomial.specialize`)."""
        return TruncatedSeries._raw(
            ring,
            self.arity,
            self.truncation,
            {k: v.specialize(assignments, ring) for k, v in self._coeffs.items()},
        )

    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.arity == other.arity
            and self.truncation == other.truncation
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.arity, self.truncation, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        names = self.variables
        parts: List[str] = []
        for exps, poly in self.items():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
            )
            if poly.is_constant:
                c = poly.constant_term
                if not mono:
                    parts.append(format_rational(c))
                elif c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{format_rational(c)}*{mono}")
            else:
                parts.append(f"({poly})*{mono}" if mono else f"({poly})")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O({self.truncation + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self}, ring={self.ring})"


def _evaluate(
    coeffs: Mapping[Exponents, GradedPolynomial],
    values: Sequence[TruncatedSeries],
    offset: int,
    n: int,
    powers: Dict[Tuple[int, int], TruncatedSeries],
    ring: RingDescriptor,
) -> TruncatedSeries:
    """Evaluate a coefficient map at ``values[offset:]``, Horner-style in the first variable."""
    arity = values[0].arity
    if offset == len(values) - 1:
        value = values[offset]
        result = TruncatedSeries.zero(ring, arity, n)
        for (e,), c in coeffs.items():
            if e > n:
                continue
            result = result + _power(value, offset, e, n, powers, ring).scale(c)
        return result
    groups: Dict[int, Dict[Exponents, GradedPolynomial]] = {}
    for k, v in coeffs.items():
        groups.setdefault(k[0], {})[k[1:]] = v
    if not groups:
        return TruncatedSeries.zero(ring, arity, n)
    top = min(max(groups), n)
    acc: Optional[TruncatedSeries] = None
    for i in range(top, -1, -1):
        inner = (
            _evaluate(groups[i], values, offset + 1, n, powers, ring)
            if i in groups
            else TruncatedSeries.zero(ring, arity, n)
        )
        acc = inner if acc is None else acc * values[offset] + inner
    assert acc is not None
    return acc


def _power(
    value: TruncatedSeries,
    slot: int,
    e: int,
    n: int,
    powers: Dict[Tuple[int, int], TruncatedSeries],
    ring: RingDescriptor,
) -> TruncatedSeries:
    if e == 0:
        return TruncatedSeries.one(ring, value.arity, n)
    if (slot, e) not in powers:
        powers[(slot, e)] = value if e == 1 else _power(value, slot, e - 1, n, powers, ring) * value
    return powers[(slot, e)]


# ----------------------------------------------------------------------
# Operation-style entry points
# ----------------------------------------------------------------------
def series_ops(a: TruncatedSeries, b: TruncatedSeries, op: str) -> TruncatedSeries:
    """Dispatch ``add``, ``mul`` or ``div`` on two series."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series operation {op!r}")


def series_compose(f: TruncatedSeries, g: TruncatedSeries, slot: str = "t") -> TruncatedSeries:
    """Substitute *g* for the variable *slot* of the univariate series *f*."""
    if f.arity != 1 or slot not in f.variables:
        raise ArityMismatch(f"series_compose needs a univariate outer series in {slot!r}")
    return f.compose(g)


def series_revert(f: TruncatedSeries) -> TruncatedSeries:
    return f.revert()


def series_calculus(f: TruncatedSeries, op: str) -> TruncatedSeries:
    """``differentiate`` or ``integrate`` a univariate series."""
    f._require_arity(1)
    if op == "differentiate":
        return f.derivative()
    if op == "integrate":
        return f.integral()
    raise ValueError(f"unknown calculus operation {op!r}")


def identity_series(ring: RingDescriptor, truncation: int) -> TruncatedSeries:
    """The series ``t``."""
    return TruncatedSeries.variable(ring, 1, truncation)


def scalar_series(ring: RingDescriptor, coefficients: Iterable[Scalar], truncation: Optional[int] = None) -> TruncatedSeries:
    """Univariate series from scalar coefficients ``c_0, c_1, ...``."""
    return TruncatedSeries.univariate(ring, [to_rational(c) for c in coefficients], truncation)
