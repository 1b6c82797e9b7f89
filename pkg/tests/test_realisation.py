# tests/test_realisation.py
import pytest

from core.hecke_core.coxeter.system import INF, CoxeterSystem
from core.hecke_core.errors import ConfigurationError
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.realisation.quantum import (
    BicolouredPair,
    CartanData,
    Side,
    jw_coefficient_sequence,
    quantum_number,
    quantum_numbers,
    start_side,
    validate_all,
    validate_realisation,
)
from core.hecke_core.realisation.schemas import RealisationReport


def test_quantum_numbers_at_two(integers):
    qx, qy = quantum_numbers(4, BicolouredPair(2, 2), integers)

    assert qx == [0, 1, 2, 3, 4]
    assert qy == [0, 1, 2, 3, 4]


def test_bicoloured_quantum_numbers(integers):
    pair = BicolouredPair(2, 1)

    assert quantum_number(2, Side.X, pair, integers) == 2
    assert quantum_number(2, Side.Y, pair, integers) == 1
    assert quantum_number(4, Side.X, pair, integers) == 0


def test_default_realisations(integers):
    for m, expected in ((2, True), (3, True), (4, False), (INF, True)):
        system = CoxeterSystem(["s", "t"], [[1, m], [m, 1]])
        cartan = CartanData.default_for(system, integers)
        assert validate_realisation(m, cartan.bicoloured_pair(0, 1), integers) is expected


def test_universal_default_cartan(integers):
    cartan = CartanData.default_for(CoxeterSystem.universal(["σ", "τ"]), integers)

    assert cartan.pairings == [[2, -2], [-2, 2]]


def test_type_b2_realisation(integers):
    cartan = CartanData(integers, [[2, -2], [-1, 2]])

    assert validate_realisation(4, cartan.bicoloured_pair(0, 1), integers)


def test_valid_realisations_are_palindromic(integers):
    cases = ((2, BicolouredPair(0, 0)), (3, BicolouredPair(1, 1)), (4, BicolouredPair(2, 1)))
    for m, pair in cases:
        assert validate_realisation(m, pair, integers)
        qx, qy = quantum_numbers(m, pair, integers)
        for k in range(1, m):
            assert qx[m - k] == qx[k]
            assert qy[m - k] == qy[k]


def test_jones_wenzl_coefficients(integers):
    (first,) = jw_coefficient_sequence(2, BicolouredPair(0, 0), Side.X, integers)
    assert (first.numerator, first.denominator, first.invertible) == (0, 1, True)

    sequence = jw_coefficient_sequence(3, BicolouredPair(1, 1), Side.X, integers)
    assert [(c.index, c.numerator, c.denominator) for c in sequence] == [(2, 0, 1), (3, 1, 1)]


def test_jones_wenzl_flags_non_invertible_denominators():
    gf2 = CoefficientRing.prime_field(2)
    sequence = jw_coefficient_sequence(4, BicolouredPair(2, 1), Side.X, gf2)

    assert not all(c.invertible for c in sequence)


def test_jones_wenzl_needs_finite_bond(integers):
    with pytest.raises(ConfigurationError):
        jw_coefficient_sequence(INF, BicolouredPair(2, 2), Side.X, integers)


def test_start_side():
    assert start_side("σ") == Side.X
    assert start_side("τ") == Side.Y


def test_cartan_diagonal_must_be_two(integers):
    with pytest.raises(ConfigurationError):
        CartanData(integers, [[1, 0], [0, 2]])


def test_realisation_report(finite_m3, integers):
    system = finite_m3.system
    cartan = CartanData.default_for(system, integers)

    assert validate_all(system, cartan) == [(0, 1, True)]
    report = RealisationReport.build(system, cartan)
    assert report.valid
    assert report.bonds[0].m == 3
    assert report.bonds[0].jones_wenzl_invertible


def test_small_quantum_numbers(integers):
    pair = BicolouredPair(1, 1)

    assert quantum_number(0, Side.X, pair, integers) == 0
    assert quantum_number(1, Side.X, pair, integers) == 1
    assert quantum_number(3, Side.X, pair, integers) == 0
    assert validate_realisation(4, BicolouredPair(1, 2), integers)


def test_odd_quantum_numbers_agree_on_both_sides(integers):
    pair = BicolouredPair(3, -5)
    qx, qy = quantum_numbers(9, pair, integers)

    assert all(qx[k] == qy[k] for k in range(1, 10, 2))
