"""Coefficient rings: a base number system plus weighted polynomial generators."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .errors import DuplicateGenerator, EmptyName, NotInRing
from .scalars import is_p_local_scalar, require_prime

INTEGERS = "Z"
RATIONALS = "Q"
P_LOCAL = "Zp"


@dataclass(frozen=True)
class BaseRing:
    """One of ``Z``, ``Q`` or ``Z_(p)``.

    Parameters
    ----------
    kind:
        ``"Z"``, ``"Q"`` or ``"Zp"``.
    prime:
        The prime ``p`` when *kind* is ``"Zp"``.
    """

    kind: str
    prime: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in (INTEGERS, RATIONALS, P_LOCAL):
            raise ValueError(f"unknown base ring {self.kind!r}")
        if self.kind == P_LOCAL:
            require_prime(self.prime)  # type: ignore[arg-type]
        elif self.prime is not None:
            raise ValueError(f"base ring {self.kind} takes no prime")

    # ------------------------------------------------------------------
    def contains(self, value: Fraction) -> bool:
        """True iff the rational *value* lies in this ring."""
        if self.kind == RATIONALS:
            return True
        if self.kind == INTEGERS:
            return value.denominator == 1
        return is_p_local_scalar(value, self.prime)  # type: ignore[arg-type]

    def is_unit(self, value: Fraction) -> bool:
        """True iff *value* is invertible in this ring."""
        if value == 0:
            return False
        return self.contains(value) and self.contains(1 / value)

    @property
    def is_p_local(self) -> bool:
        return self.kind == P_LOCAL

    def __str__(self) -> str:
        if self.kind == P_LOCAL:
            return f"Z_({self.prime})"
        return self.kind


Integers = BaseRing(INTEGERS)
Rationals = BaseRing(RATIONALS)


def PLocalIntegers(p: int) -> BaseRing:
    """Return the ring of rationals whose denominators are prime to *p*."""
    return BaseRing(P_LOCAL, p)


@dataclass(frozen=True)
class Generator:
    name: str
    weight: int


@dataclass(frozen=True)
class RingDescriptor:
    """A base ring with an ordered list of weighted polynomial generators.

    Parameters
    ----------
    base:
        The scalar ring every coefficient must belong to.
    generators:
        Ordered generators; exponent vectors of polynomials follow this order.
    """

    base: BaseRing
    generators: Tuple[Generator, ...] = ()
    _index: Dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        seen: Dict[str, int] = {}
        for i, gen in enumerate(self.generators):
            if not isinstance(gen.name, str) or not gen.name:
                raise EmptyName("generator names must be non-empty strings")
            if gen.weight < 0:
                raise ValueError(f"generator {gen.name!r} has negative weight")
            if gen.name in seen:
                raise DuplicateGenerator(f"duplicate generator {gen.name!r}")
            seen[gen.name] = i
        object.__setattr__(self, "_index", seen)

    # ------------------------------------------------------------------
    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    @property
    def weights(self) -> Tuple[int, ...]:
        return tuple(g.weight for g in self.generators)

    @property
    def rank(self) -> int:
        """Number of generators."""
        return len(self.generators)

    def index(self, name: str) -> int:
        """Position of the generator called *name*."""
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"ring has no generator {name!r}") from None

    def weight_of(self, exponents: Sequence[int]) -> int:
        """Weight of the monomial with the given exponent vector."""
        return sum(e * g.weight for e, g in zip(exponents, self.generators))

    def check_scalar(self, value: Fraction) -> Fraction:
        """Return *value* if it belongs to the base ring, raise otherwise."""
        if not self.base.contains(value):
            raise NotInRing(f"{value} is not an element of {self.base}")
        return value

    # ------------------------------------------------------------------
    def with_base(self, base: BaseRing) -> "RingDescriptor":
        """Same generators over another base ring."""
        if base == self.base:
            return self
        return RingDescriptor(base, self.generators)

    def rationalized(self) -> "RingDescriptor":
        """Same generators over ``Q``."""
        return self.with_base(Rationals)

    def extend(self, generators: Iterable[Tuple[str, int]]) -> "RingDescriptor":
        """Append generators to the list, keeping existing ones first."""
        extra = tuple(Generator(name, weight) for name, weight in generators)
        return RingDescriptor(self.base, self.generators + extra)

    def __str__(self) -> str:
        if not self.generators:
            return str(self.base)
        return f"{self.base}[{', '.join(self.names)}]"


def make_ring(base: BaseRing, generators: Iterable[Tuple[str, int]] = ()) -> RingDescriptor:
    """Validate and build a :class:`RingDescriptor`.

    Raises :class:`DuplicateGenerator`, :class:`EmptyName` or
    :class:`~core.errors.NotPrime` (the latter when *base* is built from a
    composite number through :func:`PLocalIntegers`).
    """
    return RingDescriptor(base, tuple(Generator(name, weight) for name, weight in generators))
