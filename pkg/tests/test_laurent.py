# tests/test_laurent.py
import random
from fractions import Fraction

import pytest
from sympy import QQ, ZZ

from core.hecke_core.errors import ConfigurationError, HeckeError, RingMismatchError
from core.hecke_core.laurent import linalg
from core.hecke_core.laurent.poly import LaurentPoly, bar_involution, multiply
from core.hecke_core.laurent.rings import CoefficientRing, RingKind
from core.hecke_core.laurent.schemas import RingDescriptor


def test_zero_terms_are_dropped(integers):
    poly = LaurentPoly(integers, {0: 1, 2: 0, -1: 3})

    assert poly.terms == {-1: 3, 0: 1}
    assert LaurentPoly(integers, {5: 0}).is_zero()


def test_product_of_quantum_two_with_itself(integers):
    # (v^-1 + v)^2 = v^-2 + 2 + v^2
    q2 = LaurentPoly(integers, {-1: 1, 1: 1})

    assert multiply(q2, q2) == LaurentPoly(integers, {-2: 1, 0: 2, 2: 1})
    assert (q2 * q2).min_degree() == -2
    assert (q2 * q2).max_degree() == 2


def test_bar_involution_reverses_degrees(integers):
    poly = LaurentPoly(integers, {-1: 2, 3: -5})

    assert bar_involution(poly) == LaurentPoly(integers, {1: 2, -3: -5})
    assert poly.bar().bar() == poly


def test_signed_power(integers):
    assert LaurentPoly.signed_power(integers, 3) == LaurentPoly(integers, {3: -1})
    assert LaurentPoly.signed_power(integers, 2) == LaurentPoly(integers, {2: 1})


def test_evaluate_at_one_counts_basis_elements(integers):
    assert LaurentPoly(integers, {-1: 1, 1: 1, 4: 2}).evaluate_at_one() == 4


def test_prime_field_reduces_coefficients():
    gf3 = CoefficientRing.prime_field(3)
    poly = LaurentPoly(gf3, {0: 4, 1: 3, 2: -1})

    assert poly.terms == {0: 1, 2: 2}


def test_mixing_rings_raises(integers):
    with pytest.raises(RingMismatchError):
        LaurentPoly.constant(integers) + LaurentPoly.constant(CoefficientRing.rationals())


def test_degree_of_zero_polynomial_raises(integers):
    with pytest.raises(HeckeError):
        LaurentPoly.zero(integers).min_degree()


def test_sparse_text_round_trip(integers):
    poly = LaurentPoly(integers, {-2: 3, 0: -1, 5: 7})

    assert poly.to_sparse_text() == "3*v^-2 + -1*v^0 + 7*v^5"
    assert LaurentPoly.from_sparse_text(integers, poly.to_sparse_text()) == poly
    assert LaurentPoly.zero(integers).to_sparse_text() == "0"


def test_json_round_trip_over_rationals():
    qq = CoefficientRing.rationals()
    poly = LaurentPoly(qq, {1: Fraction(1, 2), -3: Fraction(-4, 3)})

    assert LaurentPoly.from_json(qq, poly.to_json()) == poly


RINGS = [
    CoefficientRing.integers(),
    CoefficientRing.rationals(),
    CoefficientRing.prime_field(2),
    CoefficientRing.prime_field(7),
]


def random_poly(rng: random.Random, ring: CoefficientRing) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, 3)):
        coeff = rng.randint(-4, 4)
        if ring.kind == RingKind.RATIONALS:
            coeff = Fraction(coeff, rng.randint(1, 5))
        terms[rng.randint(-3, 3)] = coeff
    return LaurentPoly(ring, terms)


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_random_ring_axioms(ring):
    rng = random.Random(7)
    zero, one = LaurentPoly.zero(ring), LaurentPoly.constant(ring)

    for _ in range(2500):
        a, b, c = random_poly(rng, ring), random_poly(rng, ring), random_poly(rng, ring)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        assert a + zero == a and a * one == a
        assert (a - a).is_zero()


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_random_bar_involution(ring):
    rng = random.Random(13)

    for _ in range(2500):
        a, b = random_poly(rng, ring), random_poly(rng, ring)
        assert bar_involution(a * b) == bar_involution(a) * bar_involution(b)
        assert bar_involution(a + b) == bar_involution(a) + bar_involution(b)
        assert bar_involution(bar_involution(a)) == a


@pytest.mark.parametrize("ring", RINGS, ids=str)
def test_random_scalar_arithmetic(ring):
    rng = random.Random(17)

    for _ in range(2500):
        a, b = ring.normalize(rng.randint(-50, 50)), ring.normalize(rng.randint(-50, 50))
        assert ring.sub(ring.add(a, b), b) == a
        assert ring.add(a, ring.neg(a)) == ring.zero
        if ring.is_unit(a):
            assert ring.mul(a, ring.inverse(a)) == ring.one


def test_rings_delegate_to_sympy_domains():
    assert CoefficientRing.integers().domain == ZZ
    assert CoefficientRing.rationals().domain == QQ
    gf5 = CoefficientRing.prime_field(5)
    assert gf5.domain.mod == 5
    assert gf5.from_rational(Fraction(1, 2)) == 3
    assert gf5.neg(1) == 4
    with pytest.raises(HeckeError):
        gf5.from_rational(Fraction(1, 5))


def test_ring_inverse_and_units():
    gf5 = CoefficientRing.prime_field(5)

    assert gf5.mul(3, gf5.inverse(3)) == 1
    assert CoefficientRing.integers().is_unit(-1)
    assert not CoefficientRing.integers().is_unit(2)
    with pytest.raises(HeckeError):
        CoefficientRing.integers().inverse(2)


def test_prime_field_needs_a_prime():
    with pytest.raises(ConfigurationError):
        CoefficientRing.prime_field(4)


def test_ring_descriptor_validation():
    assert RingDescriptor(type="prime_field", p=7).p == 7
    with pytest.raises(ValueError):
        RingDescriptor(type="prime_field")
    with pytest.raises(ValueError):
        RingDescriptor(type="prime_field", p=9)


def test_rank_and_determinant(integers):
    matrix = [[-2, 1, 0], [1, -2, 1], [0, 1, -2]]

    assert linalg.determinant(matrix, integers) == -4
    assert linalg.rank(matrix, integers) == 3
    gf2 = CoefficientRing.prime_field(2)
    assert linalg.rank(linalg.reduce_rows(matrix, gf2), gf2) == 2


def test_least_gf2_solution_prefers_late_variables():
    # x0 + x1 = 1 has solutions (1, 0) and (0, 1); the least one is (0, 1)
    assert linalg.least_gf2_solution([[1, 1]], [1], 2) == [0, 1]
    assert linalg.least_gf2_solution([[1, 1], [1, 1]], [1, 0], 2) is None
    assert linalg.least_gf2_solution([], [], 3) == [0, 0, 0]


def test_squaring_over_gf2():
    gf2 = CoefficientRing.prime_field(2)
    one_plus_v = LaurentPoly(gf2, {0: 1, 1: 1})

    assert one_plus_v * one_plus_v == LaurentPoly(gf2, {0: 1, 2: 1})
    assert (LaurentPoly.zero(gf2) * one_plus_v).is_zero()
