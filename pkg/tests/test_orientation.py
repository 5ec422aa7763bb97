import random
from fractions import Fraction

import pytest

from core.polynomial import GradedPolynomial
from core.ring import Rationals, make_ring
from core.series import TruncatedSeries, identity_series, scalar_series
from fgl import additive_fgl, multiplicative_fgl, orientation_roundtrip
from fgl.orientation import orientation_to_pair, pair_to_orientation, roundtrip_report

Q = make_ring(Rationals)
SYMBOLIC = make_ring(Rationals, [("a2", 1), ("a3", 2)])


def test_identity_orientation_round_trips():
    assert orientation_roundtrip(identity_series(Q, 5), additive_fgl(5, Q))


def test_pair_carries_the_orientation():
    f = scalar_series(Q, [0, 1, 1], 5)
    iso = orientation_to_pair(additive_fgl(5, Q), f)
    assert iso.is_valid()
    assert pair_to_orientation(iso).series == f
    assert orientation_roundtrip(f, additive_fgl(5, Q))


def test_symbolic_orientation_round_trips():
    a2 = GradedPolynomial.generator(SYMBOLIC, "a2")
    a3 = GradedPolynomial.generator(SYMBOLIC, "a3")
    f = TruncatedSeries(SYMBOLIC, 1, 5, {(1,): 1, (2,): a2, (3,): a3})
    assert orientation_roundtrip(f, additive_fgl(5, SYMBOLIC))


def _random_rational_orientation(rng, degree):
    coeffs = [0, 1] + [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(degree - 1)]
    return scalar_series(Q, coeffs, degree)


def _random_symbolic_orientation(rng, degree):
    a2 = GradedPolynomial.generator(SYMBOLIC, "a2")
    a3 = GradedPolynomial.generator(SYMBOLIC, "a3")
    monomials = [GradedPolynomial.one(SYMBOLIC), a2, a3, a2 * a3, a2 * a2]
    coeffs = {(1,): 1, (2,): a2, (3,): a3}
    for k in range(4, degree + 1):
        coeffs[(k,)] = rng.choice(monomials).scale(Fraction(rng.randint(-2, 2), rng.randint(1, 2)))
    return TruncatedSeries(SYMBOLIC, 1, degree, coeffs)


@pytest.mark.parametrize("law", [additive_fgl, multiplicative_fgl])
@pytest.mark.parametrize(
    "ring, orientation",
    [(Q, _random_rational_orientation), (SYMBOLIC, _random_symbolic_orientation)],
    ids=["rational", "symbolic"],
)
def test_random_orientations_round_trip_at_degree_eight(law, ring, orientation):
    rng = random.Random(8)
    F = law(8, ring)
    for _ in range(50):
        report = roundtrip_report(orientation(rng, 8), F)
        assert report.verdict, report
