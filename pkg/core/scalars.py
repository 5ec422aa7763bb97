"""Exact scalar helpers.

Every coefficient in the engine is a :class:`fractions.Fraction`, which keeps
numerator and denominator reduced with a positive denominator.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from sympy import isprime

from .errors import DocumentError, NotPrime

Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def to_rational(value: Scalar | str) -> Fraction:
    """Return *value* as a reduced :class:`Fraction`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"`` into a :class:`Fraction`."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise DocumentError(f"malformed rational value {text!r}")
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise DocumentError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    """Return the canonical ``"num/den"`` form, omitting a unit denominator."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def require_prime(p: int) -> int:
    """Return *p* if it is a prime number, raise :class:`NotPrime` otherwise."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 2 or not isprime(p):
        raise NotPrime(f"{p!r} is not a prime")
    return p


def is_p_local_scalar(value: Fraction, p: int) -> bool:
    """True iff the denominator of *value* is coprime to *p*."""
    return value.denominator % p != 0


def is_p_power(n: int, p: int) -> bool:
    """True iff ``n == p**k`` for some ``k >= 0``."""
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1
