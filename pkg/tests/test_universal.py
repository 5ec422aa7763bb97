from fractions import Fraction

import pytest

from core.errors import DegreeTooSmall
from core.polynomial import GradedPolynomial
from core.ring import PLocalIntegers, Rationals, make_ring
from core.series import TruncatedSeries, identity_series
from fgl import check_fgl_axioms, check_homogeneity, fgl_exp, fgl_log
from universal import (
    brown_peterson_fgl,
    brown_peterson_ring,
    hazewinkel_generators,
    multiplicative_specialization,
    specialize_law,
    universal_fgl,
    universal_p_typical,
    universal_ring,
)


def test_universal_law_in_degree_two():
    ctx = universal_fgl(2)
    expected = TruncatedSeries(ctx.ring, 2, 2, {(1, 0): 1, (0, 1): 1, (1, 1): ctx.m(1).scale(-2)})
    assert ctx.law.series == expected


@pytest.mark.parametrize("degree", [3, 4, 5])
def test_universal_law_is_a_graded_formal_group_law(degree):
    ctx = universal_fgl(degree)
    assert check_fgl_axioms(ctx.law.series) == []
    assert check_homogeneity(ctx.law.series) == []
    assert fgl_log(ctx.law) == ctx.log


def test_universal_law_at_degree_eight_satisfies_the_axioms():
    ctx = universal_fgl(8)
    assert check_fgl_axioms(ctx.law.series) == []
    assert check_homogeneity(ctx.law.series) == []


def test_universal_logarithm_linearizes_at_degree_ten():
    ctx = universal_fgl(10)
    log = fgl_log(ctx.law)
    assert log == ctx.log
    assert log.substitute([ctx.law.series]) == log.lift(2, (0,)) + log.lift(2, (1,))
    assert fgl_exp(ctx.law).compose(log) == identity_series(ctx.ring, 10)


def test_universal_law_needs_degree_two():
    with pytest.raises(DegreeTooSmall):
        universal_fgl(1)


def test_multiplicative_specialization_values():
    ctx = universal_fgl(4)
    values = multiplicative_specialization(ctx)
    assert values == {"m1": Fraction(-1, 2), "m2": Fraction(1, 3), "m3": Fraction(-1, 4)}
    law = specialize_law(ctx.law, values)
    assert law.series == TruncatedSeries(make_ring(Rationals), 2, 4, {(1, 0): 1, (0, 1): 1, (1, 1): 1})


def test_typification_above_the_degree_is_additive():
    typical, epsilon = universal_p_typical(3, 5)
    ring = universal_ring(3)
    assert typical.series == TruncatedSeries(ring, 2, 3, {(1, 0): 1, (0, 1): 1})
    assert epsilon.series == fgl_log(universal_fgl(3).law).revert()


def test_hazewinkel_generators_at_two():
    data = hazewinkel_generators(2, 2, 4)
    m1 = GradedPolynomial.generator(data.ring, "m1")
    m3 = GradedPolynomial.generator(data.ring, "m3")
    v1, v2 = data.generators
    assert v1 == m1.scale(2)
    assert v2 == m3.scale(2) - (m1 ** 3).scale(4)


def test_hazewinkel_generator_at_three():
    data = hazewinkel_generators(3, 1, 3)
    assert data.generators[0] == GradedPolynomial.generator(data.ring, "m2").scale(3)


@pytest.mark.parametrize("p, count, degree", [(2, 3, 8), (3, 3, 27), (5, 1, 5)])
def test_hazewinkel_recursion_holds(p, count, degree):
    data = hazewinkel_generators(p, count, degree)
    assert all(r.is_zero for r in data.residuals())
    assert data.weights_ok()
    assert len(data.generators) == count


def test_hazewinkel_needs_enough_degree():
    with pytest.raises(DegreeTooSmall):
        hazewinkel_generators(2, 2, 3)
    assert hazewinkel_generators(2, 0, 2).generators == ()


@pytest.mark.parametrize("p", [2, 3])
def test_first_hazewinkel_generator_of_multiplicative_law(p):
    data = hazewinkel_generators(p, 1, p)
    values = multiplicative_specialization(universal_fgl(p))
    v1 = data.generators[0].specialize(values, make_ring(Rationals))
    assert v1 == (-1) ** (p - 1)


def test_brown_peterson_ring():
    ring = brown_peterson_ring(2, 9)
    assert ring.names == ("v1", "v2", "v3")
    assert ring.weights == (1, 3, 7)
    assert ring.base == PLocalIntegers(2)


def test_brown_peterson_law():
    law = brown_peterson_fgl(2, 4)
    assert check_fgl_axioms(law.series) == []
    assert check_homogeneity(law.series) == []
    assert law.series.is_p_local(2)
    log = fgl_log(law)
    v1 = GradedPolynomial.generator(log.ring, "v1")
    v2 = GradedPolynomial.generator(log.ring, "v2")
    assert log.coefficient(2) == v1.scale(Fraction(1, 2))
    assert log.coefficient(4) == v2.scale(Fraction(1, 2)) + (v1 ** 3).scale(Fraction(1, 4))
    assert log.coefficient(3).is_zero
