# tests/test_bgg.py
import pytest

from core.hecke_core.bgg import complex as bgg_complex
from core.hecke_core.bgg.complex import BGGEngine, QuadrupleKind
from core.hecke_core.coxeter.system import IDENTITY, Element
from core.hecke_core.errors import UnsupportedConfigurationError
from core.hecke_core.laurent.poly import LaurentPoly
from core.hecke_core.realisation.quantum import CartanData

SIGMA, TAU = 0, 1


@pytest.fixture
def universal_bgg(universal_rank2, integers):
    return BGGEngine(universal_rank2, CartanData.default_for(universal_rank2.system, integers))


@pytest.fixture
def affine_bgg(affine_a1, affine_cartan):
    return BGGEngine(affine_a1, affine_cartan)


def test_universal_cp_pairs_and_signs(universal_bgg, universal_rank2):
    fmt = universal_rank2.system.format_element
    signed = universal_bgg.assign_signs(2)

    assert [(fmt(p.w), fmt(p.y), p.deletion_position) for p, _ in signed.edges] == [
        ("σ", "1", 0),
        ("τ", "1", 0),
        ("στ", "σ", 1),
        ("στ", "τ", 0),
        ("τσ", "σ", 0),
        ("τσ", "τ", 1),
    ]
    assert [sign for _, sign in signed.edges] == [1, 1, 1, -1, 1, -1]
    assert len(universal_bgg.diamonds(2)) == 2
    assert universal_bgg.verify_signs(signed)


def test_affine_quotient_has_strands_but_no_diamonds(affine_bgg):
    signed = affine_bgg.assign_signs(4)

    assert affine_bgg.diamonds(4) == []
    assert all(sign == 1 for _, sign in signed.edges)
    strands = affine_bgg.strands(4)
    assert strands
    assert all(q.kind == QuadrupleKind.STRAND for q in strands)


def test_finite_signs_are_consistent(finite_m3):
    engine = BGGEngine(finite_m3)
    signed = engine.assign_signs(3)

    assert len(engine.diamonds(3)) == 4
    assert engine.verify_signs(signed)
    assert len(signed.digest(finite_m3.system.format_element)) == 64


def test_signs_digest_is_stable(universal_bgg, universal_rank2):
    fmt = universal_rank2.system.format_element

    assert universal_bgg.assign_signs(3).digest(fmt) == universal_bgg.assign_signs(3).digest(fmt)


def test_empty_weight_homology(affine_bgg):
    report = affine_bgg.homology_check(())

    assert report.layers == {0: 1}
    assert report.homology_dims == {0: 1}
    assert report.graded_homology[0] == LaurentPoly.constant(report.ring)
    assert report.exact


def test_short_affine_weight(affine_bgg):
    report = affine_bgg.homology_check((SIGMA, TAU))

    assert report.layers == {0: 0, 1: 1, 2: 1}
    assert report.ranks[2] == 1
    assert report.homology_dims == {0: 0, 1: 0, 2: 0}
    assert report.square_zero and report.exact


def test_sigma_sigma_differential(universal_bgg):
    report = universal_bgg.homology_check((SIGMA, SIGMA))

    assert report.layers[0] == 2
    assert report.layers[1] == 2
    assert report.ranks[1] == 2
    assert report.exact


def test_affine_complexes_are_exact(affine_bgg, affine_a1):
    for weight in affine_a1.expressions_up_to(5):
        report = affine_bgg.homology_check(weight, strict=False)
        assert report.square_zero, affine_a1.system.format_word(weight)
        assert report.exact, affine_a1.system.format_word(weight)


def test_universal_complexes_are_exact(universal_bgg, universal_rank2):
    for weight in universal_rank2.expressions_up_to(3):
        report = universal_bgg.homology_check(weight, strict=False)
        assert report.square_zero and report.exact, universal_rank2.system.format_word(weight)


def test_truncated_complex(affine_bgg):
    report = affine_bgg.homology_check((SIGMA, TAU, SIGMA, TAU), max_len=2)

    assert sorted(report.layers) == [0, 1, 2]
    assert report.exact


def test_strand_composites_vanish(affine_bgg):
    results = affine_bgg.strand_compositions((SIGMA, TAU, SIGMA, TAU))

    assert results
    assert all(vanishes for _, vanishes in results)


def test_euler_characteristic_matches_tableaux(affine_bgg, affine_a1):
    for weight in affine_a1.expressions_up_to(4):
        complex_side, tableau_side = affine_bgg.euler_consistency(weight)
        assert complex_side == tableau_side


def test_report_json(affine_bgg, affine_a1):
    data = affine_bgg.homology_check((SIGMA, TAU)).to_json(affine_a1.system.format_word)

    assert data["weight"] == "στ"
    assert data["layers"] == {"0": 0, "1": 1, "2": 1}
    assert data["exact"] is True


def test_differentials_need_a_universal_system(finite_m3, integers):
    engine = BGGEngine(finite_m3, CartanData.default_for(finite_m3.system, integers))

    with pytest.raises(UnsupportedConfigurationError) as exc_info:
        engine.homology_check((0,))
    assert exc_info.value.kind == "unsupported_finite_bond"


def test_quadruple_classification(affine_bgg):
    w = Element((SIGMA, TAU))

    assert affine_bgg.classify(w, Element((SIGMA,)), Element((TAU,)), IDENTITY) == QuadrupleKind.STRAND


def test_diamond_signs_up_to_length_six(universal_bgg):
    signed = universal_bgg.assign_signs(6)

    assert universal_bgg.verify_signs(signed)
    assert len(universal_bgg.diamonds(6)) > 2


def test_signs_are_solved_once_per_length(affine_bgg, monkeypatch):
    solves = []
    solve = bgg_complex.linalg.least_gf2_solution

    def counting_solve(*args):
        solves.append(args)
        return solve(*args)

    monkeypatch.setattr(bgg_complex.linalg, "least_gf2_solution", counting_solve)
    first = affine_bgg.homology_check((SIGMA, TAU))
    second = affine_bgg.homology_check((SIGMA, TAU))
    affine_bgg.strand_compositions((SIGMA, TAU))

    assert first == second
    assert len(solves) == 1
    assert affine_bgg.assign_signs(2) is affine_bgg.assign_signs(2)
    affine_bgg.assign_signs(3)
    assert len(solves) == 2
