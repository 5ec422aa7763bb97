"""Sparse graded polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from operator import add
from types import MappingProxyType
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .errors import RingMismatch
from .ring import RingDescriptor
from .scalars import Scalar, format_rational, is_p_local_scalar, require_prime, to_rational

Exponents = Tuple[int, ...]


def graded_key(exponents: Exponents) -> Tuple[int, Exponents]:
    """Sort key for the canonical graded-lexicographic order."""
    return (sum(exponents), exponents)


class GradedPolynomial:
    """An element of ``base[g_1, ..., g_k]`` stored as a sparse term map.

    Instances are immutable; every operation returns a new polynomial and
    zero coefficients are never stored.

    Parameters
    ----------
    ring:
        The coefficient ring.
    terms:
        Mapping from exponent vectors (one entry per generator) to scalars.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Optional[Mapping[Exponents, Scalar]] = None) -> None:
        clean: Dict[Exponents, Fraction] = {}
        for exps, value in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.rank:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, ring has {ring.rank} generators"
                )
            if any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"exponents must be non-negative integers, got {exps}")
            coeff = ring.check_scalar(to_rational(value))
            if coeff:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
        self.ring = ring
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, ring: RingDescriptor, terms: Dict[Exponents, Fraction]) -> "GradedPolynomial":
        # Trusted constructor: keys are valid, values already lie in the ring.
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = {k: v for k, v in terms.items() if v}
        poly._hash = None
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, ring: RingDescriptor) -> "GradedPolynomial":
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring: RingDescriptor, value: Scalar) -> "GradedPolynomial":
        return cls(ring, {(0,) * ring.rank: value})

    @classmethod
    def one(cls, ring: RingDescriptor) -> "GradedPolynomial":
        return cls._raw(ring, {(0,) * ring.rank: Fraction(1)})

    @classmethod
    def generator(cls, ring: RingDescriptor, name: str) -> "GradedPolynomial":
        exps = [0] * ring.rank
        exps[ring.index(name)] = 1
        return cls._raw(ring, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, ring: RingDescriptor, powers: Mapping[str, int], value: Scalar = 1) -> "GradedPolynomial":
        """Build ``value * prod(g ** e for g, e in powers.items())``."""
        exps = [0] * ring.rank
        for name, e in powers.items():
            exps[ring.index(name)] += e
        return cls(ring, {tuple(exps): value})

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------
    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in canonical graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: graded_key(item[0]))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.rank, Fraction(0))

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def weights(self) -> Tuple[int, ...]:
        """Sorted distinct weights of the monomials present."""
        return tuple(sorted({self.ring.weight_of(e) for e in self._terms}))

    def is_homogeneous(self, weight: Optional[int] = None) -> bool:
        """True iff every monomial has the same weight (``weight`` if given)."""
        found = self.weights()
        if not found:
            return True
        if len(found) > 1:
            return False
        return weight is None or found[0] == weight

    def is_p_local(self, p: int) -> bool:
        return all(is_p_local_scalar(c, p) for c in self._terms.values())

    def __iter__(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check_ring(self, other: "GradedPolynomial") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatch(f"cannot combine polynomials over {self.ring} and {other.ring}")

    def _coerce(self, other: object) -> Optional["GradedPolynomial"]:
        if isinstance(other, GradedPolynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GradedPolynomial.constant(self.ring, other)
        return None

    def __add__(self, other: object) -> "GradedPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in rhs._terms.items():
            out[k] = out.get(k, 0) + v
        return GradedPolynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPolynomial":
        return GradedPolynomial._raw(self.ring, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: object) -> "GradedPolynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "GradedPolynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def scale(self, value: Scalar) -> "GradedPolynomial":
        """Multiply every coefficient by *value*; the result must stay in the ring."""
        c = to_rational(value)
        if not c:
            return GradedPolynomial.zero(self.ring)
        return GradedPolynomial(self.ring, {k: v * c for k, v in self._terms.items()})

    def __mul__(self, other: object) -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        self._check_ring(other)
        out: Dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(map(add, ea, eb))
                out[key] = out.get(key, 0) + ca * cb
        return GradedPolynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "GradedPolynomial":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = GradedPolynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # ------------------------------------------------------------------
    # Comparison
    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, GradedPolynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant and self.constant_term == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------------
    # Ring changes
    # ------------------------------------------------------------------
    def change_ring(self, ring: RingDescriptor) -> "GradedPolynomial":
        """Reinterpret over *ring*, which must have the same generators.

        Coefficients are checked against the new base ring.
        """
        if ring == self.ring:
            return self
        if ring.generators != self.ring.generators:
            raise RingMismatch(f"cannot move a polynomial from {self.ring} to {ring}")
        return GradedPolynomial(ring, self._terms)

    def embed(self, ring: RingDescriptor) -> "GradedPolynomial":
        """Map into a ring whose generators include all of ours (matched by name)."""
        if ring == self.ring:
            return self
        positions = [ring.index(name) for name in self.ring.names]
        out: Dict[Exponents, Fraction] = {}
        for exps, value in self._terms.items():
            target = [0] * ring.rank
            for pos, e in zip(positions, exps):
                target[pos] = e
            out[tuple(target)] = value
        return GradedPolynomial(ring, out)

    def specialize(
        self,
        assignments: Mapping[str, Union["GradedPolynomial", Scalar]],
        ring: RingDescriptor,
    ) -> "GradedPolynomial":
        """Apply the ring homomorphism sending generators to *assignments*.

        Generators without an assignment are sent to the generator of the same
        name in *ring*.
        """
        images: List[GradedPolynomial] = []
        for name in self.ring.names:
            if name in assignments:
                value = assignments[name]
                if isinstance(value, GradedPolynomial):
                    images.append(value.embed(ring) if value.ring != ring else value)
                else:
                    images.append(GradedPolynomial.constant(ring, value))
            else:
                images.append(GradedPolynomial.generator(ring, name))
        cache: Dict[Tuple[int, int], GradedPolynomial] = {}

        def power(i: int, e: int) -> GradedPolynomial:
            if (i, e) not in cache:
                cache[(i, e)] = images[i] ** e
            return cache[(i, e)]

        result = GradedPolynomial.zero(ring)
        for exps, value in self._terms.items():
            term = GradedPolynomial.constant(ring, value)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def select(self, predicate: Callable[[Exponents], bool]) -> "GradedPolynomial":
        """Keep only the terms whose exponent vector satisfies *predicate*."""
        return GradedPolynomial._raw(self.ring, {k: v for k, v in self._terms.items() if predicate(k)})

    def truncate_weight(self, bound: int, names: Optional[Iterable[str]] = None) -> "GradedPolynomial":
        """Drop monomials whose weight exceeds *bound*.

        When *names* is given, only those generators contribute to the weight.
        """
        if names is None:
            return self.select(lambda e: self.ring.weight_of(e) <= bound)
        picked = [(self.ring.index(n), self.ring.generators[self.ring.index(n)].weight) for n in names]
        return self.select(lambda e: sum(e[i] * w for i, w in picked) <= bound)

    # ------------------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: List[str] = []
        for exps, value in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, exps)
                if e
            ]
            if not factors:
                parts.append(format_rational(value))
            elif value == 1:
                parts.append("*".join(factors))
            elif value == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(format_rational(value) + "*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GradedPolynomial({self}, ring={self.ring})"


def poly_ops(a: GradedPolynomial, b: Union[GradedPolynomial, Scalar, None], op: str) -> GradedPolynomial:
    """Dispatch ``add``, ``mul``, ``negate`` or ``scalar_mul``.

    ``b`` is ignored for ``negate`` and is a scalar for ``scalar_mul``.
    """
    if op == "add":
        return a + b  # type: ignore[operator]
    if op == "mul":
        if not isinstance(b, GradedPolynomial):
            raise TypeError("mul expects two polynomials")
        return a * b
    if op == "negate":
        return -a
    if op == "scalar_mul":
        if isinstance(b, GradedPolynomial):
            raise TypeError("scalar_mul expects a scalar")
        return a.scale(b)  # type: ignore[arg-type]
    raise ValueError(f"unknown polynomial operation {op!r}")


def assert_p_local(a: GradedPolynomial, p: int) -> bool:
    """True iff every coefficient of *a* has a denominator prime to *p*."""
    require_prime(p)
    return a.is_p_local(p)
