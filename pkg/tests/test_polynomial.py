import random
from fractions import Fraction

import pytest

from core.errors import NotInRing, NotPrime, RingMismatch
from core.polynomial import GradedPolynomial, assert_p_local, poly_ops
from core.ring import Integers, Rationals, make_ring


def _ring():
    return make_ring(Rationals, [("m1", 1), ("m2", 2)])


def _random_poly(rng, ring, terms=4, top=3):
    out = {}
    for _ in range(terms):
        exps = tuple(rng.randint(0, top) for _ in range(ring.rank))
        out[exps] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return GradedPolynomial(ring, out)


def test_difference_of_squares():
    ring = _ring()
    m1 = GradedPolynomial.generator(ring, "m1")
    m2 = GradedPolynomial.generator(ring, "m2")
    assert (m1 + m2) * (m1 - m2) == m1 ** 2 - m2 ** 2


def test_zero_coefficients_are_not_stored():
    ring = _ring()
    p = GradedPolynomial.monomial(ring, {"m1": 2}, 3)
    assert (p - p).is_zero
    assert len(p - p) == 0
    assert GradedPolynomial(ring, {(1, 0): 0}).terms == {}


def test_scalar_operations():
    ring = _ring()
    m1 = GradedPolynomial.generator(ring, "m1")
    assert (m1 * 3).scale(Fraction(1, 2)) == GradedPolynomial.monomial(ring, {"m1": 1}, Fraction(3, 2))
    assert m1 + 1 - m1 == 1
    assert poly_ops(m1, None, "negate") == -m1
    assert poly_ops(m1, 2, "scalar_mul") == m1 + m1


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(7)
    ring = _ring()
    for _ in range(50):
        a, b, c = (_random_poly(rng, ring) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_weights_add_under_multiplication():
    ring = _ring()
    a = GradedPolynomial.monomial(ring, {"m1": 2}) + GradedPolynomial.generator(ring, "m2")
    b = GradedPolynomial.monomial(ring, {"m1": 1, "m2": 1})
    assert a.is_homogeneous(2)
    assert b.is_homogeneous(3)
    assert (a * b).is_homogeneous(5)
    assert not (a + b).is_homogeneous()


def test_mixing_rings_raises():
    m1 = GradedPolynomial.generator(_ring(), "m1")
    other = GradedPolynomial.generator(make_ring(Rationals, [("m1", 1)]), "m1")
    with pytest.raises(RingMismatch):
        m1 + other


def test_integer_ring_rejects_fractions():
    ring = make_ring(Integers, [("a", 1)])
    with pytest.raises(NotInRing):
        GradedPolynomial(ring, {(1,): Fraction(1, 2)})
    with pytest.raises(NotInRing):
        GradedPolynomial.generator(ring, "a").scale(Fraction(1, 3))


def test_p_locality_is_preserved_by_products():
    ring = _ring()
    a = GradedPolynomial(ring, {(1, 0): Fraction(1, 3), (0, 1): Fraction(5, 7)})
    b = GradedPolynomial(ring, {(2, 0): Fraction(2, 9)})
    assert assert_p_local(a, 2) and assert_p_local(b, 2)
    assert assert_p_local(a * b, 2)
    assert not assert_p_local(a, 3)
    with pytest.raises(NotPrime):
        assert_p_local(a, 4)


def test_specialize_and_embed():
    ring = _ring()
    p = GradedPolynomial.monomial(ring, {"m1": 2}) + GradedPolynomial.generator(ring, "m2")
    target = make_ring(Rationals)
    assert p.specialize({"m1": 2, "m2": Fraction(-1, 2)}, target) == Fraction(7, 2)
    bigger = make_ring(Rationals, [("a", 1), ("m1", 1), ("m2", 2)])
    embedded = p.embed(bigger)
    assert embedded.coefficient((0, 2, 0)) == 1
    assert embedded.coefficient((0, 0, 1)) == 1


def test_truncate_weight_by_named_generators():
    ring = make_ring(Rationals, [("a", 5), ("c1", 1), ("c2", 2)])
    p = (
        GradedPolynomial.monomial(ring, {"a": 1, "c1": 1})
        + GradedPolynomial.monomial(ring, {"c2": 2})
        + GradedPolynomial.monomial(ring, {"c1": 2})
    )
    cut = p.truncate_weight(2, ["c1", "c2"])
    assert cut == GradedPolynomial.monomial(ring, {"a": 1, "c1": 1}) + GradedPolynomial.monomial(ring, {"c1": 2})


def test_str_is_canonical():
    ring = _ring()
    p = GradedPolynomial(ring, {(0, 1): -1, (1, 0): Fraction(1, 2), (0, 0): 3})
    assert str(p) == "3 - m2 + 1/2*m1"
