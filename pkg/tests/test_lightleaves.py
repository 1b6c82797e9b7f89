# tests/test_lightleaves.py
import resource
import time

import pytest

from core.hecke_core.coxeter.system import IDENTITY, Element
from core.hecke_core.errors import ConfigurationError
from core.hecke_core.laurent.poly import LaurentPoly
from core.hecke_core.lightleaves.tableaux import EMPTY_TABLEAU, Step, TableauEngine

SIGMA, TAU = 0, 1


def test_single_step_rules(universal_rank2):
    engine = TableauEngine(universal_rank2)

    dot = engine.extend(EMPTY_TABLEAU, SIGMA, 0)
    assert dot.shape == IDENTITY
    assert dot.degree == 1
    assert dot.steps == (Step.DOT,)

    fork = engine.extend(engine.extend(EMPTY_TABLEAU, SIGMA, 1), SIGMA, 1)
    assert fork.shape == Element((SIGMA,))
    assert fork.degree == -1


def test_parabolic_prefix_condition_rejects(affine_a1):
    engine = TableauEngine(affine_a1)

    assert engine.extend(EMPTY_TABLEAU, TAU, 1) is None
    with pytest.raises(ConfigurationError):
        engine.tableau_table((TAU, SIGMA))


def test_sigma_sigma_tableaux(universal_rank2, integers):
    engine = TableauEngine(universal_rank2)
    weight = (SIGMA, SIGMA)

    identity_leaves = engine.enumerate_tableaux(weight, IDENTITY)
    assert [(t.bit_string, t.degree) for t in identity_leaves] == [("00", 2), ("10", 0)]
    assert engine.graded_dim(weight, IDENTITY, integers) == LaurentPoly(integers, {0: 1, 2: 1})
    assert engine.graded_dim(weight, Element((SIGMA,)), integers) == LaurentPoly(integers, {-1: 1, 1: 1})


def test_affine_tableau_rows(affine_a1):
    engine = TableauEngine(affine_a1)

    rows = engine.tableau_rows((SIGMA, TAU, SIGMA, TAU))
    assert rows == [
        ("στστ", "1010", "σ", 1),
        ("στστ", "1100", "σ", 1),
        ("στστ", "1011", "στ", 0),
        ("στστ", "1101", "στ", 0),
        ("στστ", "1110", "στσ", 1),
        ("στστ", "1111", "στστ", 0),
    ]


def test_reduced_weight_has_one_top_tableau(universal_rank3):
    engine = TableauEngine(universal_rank3)
    for expr in universal_rank3.reduced_parabolic_expressions(3):
        top = engine.enumerate_tableaux(expr.word, expr.element)
        assert [(t.bit_string, t.degree) for t in top] == [("111", 0)]


def test_euler_sum_examples(universal_rank2, affine_a1, integers):
    assert TableauEngine(universal_rank2).euler_sum((), integers) == LaurentPoly.constant(integers)
    assert TableauEngine(universal_rank2).euler_sum((SIGMA, TAU), integers).is_zero()
    assert TableauEngine(affine_a1).euler_sum((SIGMA, TAU), integers).is_zero()


def test_euler_identity_on_all_systems(universal_rank2, affine_a1, universal_rank3, finite_m3, integers):
    for datum in (universal_rank2, affine_a1, universal_rank3, finite_m3):
        engine = TableauEngine(datum)
        for weight in datum.expressions_up_to(6):
            total, passed = engine.euler_holds(weight, integers)
            assert passed, f"{datum.system.format_word(weight)}: {total.to_sparse_text()}"


def test_fork_steps_give_negative_degrees(affine_a1, integers):
    engine = TableauEngine(affine_a1)
    weight = (SIGMA, SIGMA, SIGMA)

    assert engine.graded_dim(weight, IDENTITY, integers) == LaurentPoly(integers, {-1: 1, 1: 2, 3: 1})
    assert engine.graded_dim(weight, Element((SIGMA,)), integers) == LaurentPoly(integers, {-2: 1, 0: 2, 2: 1})


def test_branching_rules(universal_rank2, affine_a1, integers):
    for datum in (universal_rank2, affine_a1):
        engine = TableauEngine(datum)
        system = datum.system
        quotient = datum.enumerate_quotient(6)
        for weight in datum.expressions_up_to(5):
            for s in range(system.rank):
                if not datum.is_parabolic_expression(weight + (s,)):
                    continue
                for y in quotient:
                    x = system.multiply_right(y, s)
                    if x.length > y.length and datum.is_min_rep(x):
                        assert engine.branching_holds(weight, s, y, integers)
                    elif x.length < y.length and not datum.is_min_rep(x):
                        assert engine.vanishing_holds(weight, s, y, integers)


def test_non_parabolic_tableaux_contain_parabolic_ones(affine_a1):
    engine = TableauEngine(affine_a1)
    weight = (SIGMA, TAU, SIGMA)
    for shape, group in engine.tableau_table(weight).items():
        full = engine.enumerate_tableaux(weight, shape, parabolic=False)
        assert set(group) <= set(full)


def test_walk_agrees_with_single_weight_tables(affine_a1, universal_rank3):
    for datum, max_len, reduced in ((affine_a1, 4, False), (universal_rank3, 5, True)):
        engine = TableauEngine(datum)
        for weight, table in engine.iter_tables(max_len, reduced):
            expected = engine.tableau_table(weight)
            assert list(table) == sorted(expected, key=lambda x: x.sort_key)
            for shape, group in expected.items():
                assert table[shape] == [(int(t.bit_string or "0", 2), t.degree) for t in group]


def test_reduced_walk_visits_every_quotient_element_once(universal_rank3, finite_m3):
    for datum in (universal_rank3, finite_m3):
        words = [w for w, _ in datum.walk_expressions(4, reduced=True)]
        assert len(words) == len(set(words))
        assert [datum.system.reduce(w) for w in words] == sorted(
            datum.enumerate_quotient(4), key=lambda x: x.word)


def test_walk_order_is_preorder(affine_a1):
    words = [w for w, _ in affine_a1.walk_expressions(3)]

    assert words == sorted(words)
    assert sorted(words) == sorted(affine_a1.expressions_up_to(3))


def test_streamed_rows_match_per_weight_rows(affine_a1):
    engine = TableauEngine(affine_a1)
    expected = [row for word, _ in affine_a1.walk_expressions(4) for row in engine.tableau_rows(word)]

    assert list(engine.iter_rows(4)) == expected


@pytest.mark.slow
def test_rank3_tables_to_length_twelve_stay_within_budget(universal_rank3):
    engine = TableauEngine(universal_rank3)
    start = time.perf_counter()

    quotient = universal_rank3.enumerate_quotient(12)
    weights = 0
    leaves = 0
    for _, table in engine.iter_tables(12, reduced=True):
        weights += 1
        leaves += sum(len(group) for group in table.values())
    elapsed = time.perf_counter() - start

    assert weights == len(quotient) == 2 ** 13 - 1
    assert leaves >= weights
    assert elapsed < 300
    assert resource.getrusage(resource.RUSAGE_SELF).ru_maxrss < 2 * 1024 * 1024
