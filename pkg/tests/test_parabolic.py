# tests/test_parabolic.py
import pytest

from core.hecke_core.coxeter.system import IDENTITY, Element
from core.hecke_core.errors import ConfigurationError, NotInQuotientError
from core.hecke_core.parabolic.quotient import ParabolicDatum


def test_affine_quotient_is_a_chain(affine_a1):
    elements = affine_a1.enumerate_quotient(4)

    assert [affine_a1.system.format_element(x) for x in elements] == ["1", "σ", "στ", "στσ", "στστ"]


def test_quotient_sizes(universal_rank2, universal_rank3, finite_m3):
    assert len(universal_rank2.enumerate_quotient(4)) == 9
    assert len(universal_rank3.enumerate_quotient(3)) == 15
    assert len(finite_m3.enumerate_quotient(5)) == 6


def test_finite_quotient_with_parabolic_generator(finite_m3):
    datum = ParabolicDatum(finite_m3.system, [1])

    assert [datum.system.format_element(x) for x in datum.enumerate_quotient(3)] == ["1", "s", "st"]


def test_min_rep_check(affine_a1):
    assert affine_a1.is_min_rep(Element((0, 1)))
    assert not affine_a1.is_min_rep(Element((1, 0)))


def test_expressions_include_non_reduced_words(affine_a1):
    words = [e.word for e in affine_a1.enumerate_expressions(2)]

    assert words == [(0, 0), (0, 1)]
    assert [e.is_reduced for e in affine_a1.enumerate_expressions(2)] == [False, True]
    assert [e.word for e in affine_a1.reduced_parabolic_expressions(2)] == [(0, 1)]


def test_expression_counts(affine_a1):
    counts = [len(affine_a1.enumerate_expressions(n)) for n in range(5)]

    assert counts == [1, 1, 2, 3, 6]
    assert len(affine_a1.expressions_up_to(4)) == 13


def test_every_prefix_of_an_expression_is_in_the_quotient(universal_rank3):
    for expr in universal_rank3.enumerate_expressions(4):
        assert universal_rank3.is_parabolic_expression(expr.word)
        assert all(universal_rank3.is_min_rep(x) for x in expr.prefix_elements)


def test_canonical_word(affine_a1):
    assert affine_a1.canonical_word(Element((0, 1))) == (0, 1)
    with pytest.raises(NotInQuotientError):
        affine_a1.canonical_word(Element((1,)))


def test_invalid_inputs(affine_a1):
    with pytest.raises(ConfigurationError):
        affine_a1.enumerate_quotient(-1)
    with pytest.raises(ConfigurationError):
        ParabolicDatum(affine_a1.system, [5])


def test_full_parabolic_subset_leaves_only_the_identity(universal_rank2):
    datum = ParabolicDatum(universal_rank2.system, [0, 1])

    assert datum.enumerate_quotient(3) == [IDENTITY]


def test_empty_parabolic_subset(universal_rank2):
    names = [universal_rank2.system.format_element(x) for x in universal_rank2.enumerate_quotient(2)]

    assert names == ["1", "σ", "τ", "στ", "τσ"]
    assert len(universal_rank2.enumerate_expressions(2)) == 4
