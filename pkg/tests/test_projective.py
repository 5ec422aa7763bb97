import random
from fractions import Fraction

import pytest

from core.errors import DegreeTooSmall
from core.ring import Rationals, make_ring
from core.series import scalar_series
from chern import ProjectiveClass, projective_ring_reduce

Q = make_ring(Rationals)


def _scalars(cls):
    return [a.constant_term for a in cls.coefficients]


def test_top_power_vanishes():
    assert _scalars(projective_ring_reduce([0, 0, 0, 1], 2, Q)) == [0, 0, 0]


def test_powers_of_one_plus_x():
    h = projective_ring_reduce([1, 1], 1, Q)
    assert _scalars(h * h * h) == [1, 3]
    assert str(h * h * h) == "1 + 3*x"
    assert _scalars(projective_ring_reduce(scalar_series(Q, [1, 3, 3, 1], 3), 1)) == [1, 3]


def test_reduction_is_a_ring_homomorphism():
    rng = random.Random(2)
    n = 3
    for _ in range(100):
        a = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(6)]
        b = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(6)]
        product = [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(6)]
        ra = projective_ring_reduce(a, n, Q)
        rb = projective_ring_reduce(b, n, Q)
        assert ra * rb == projective_ring_reduce(product, n, Q)
        assert ra + rb == projective_ring_reduce([x + y for x, y in zip(a, b)], n, Q)


def test_reduction_is_idempotent():
    cls = projective_ring_reduce([1, 2, 3, 4, 5], 2, Q)
    assert projective_ring_reduce(list(cls.coefficients), 2) == cls
    assert projective_ring_reduce(cls.to_series(), 2) == cls


def test_short_series_cannot_be_reduced():
    with pytest.raises(DegreeTooSmall):
        projective_ring_reduce(scalar_series(Q, [1, 1], 1), 2)


def test_classes_on_different_spaces_do_not_mix():
    with pytest.raises(ValueError):
        projective_ring_reduce([1], 1, Q) + projective_ring_reduce([1], 2, Q)
    with pytest.raises(ValueError):
        ProjectiveClass(2, Q, ())
