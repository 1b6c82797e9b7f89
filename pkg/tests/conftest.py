# tests/conftest.py
import pytest
import os
import sys

# Add project root to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.hecke_core.cli.schemas import RunConfig
from core.hecke_core.coxeter.system import CoxeterSystem
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.parabolic.quotient import ParabolicDatum
from core.hecke_core.realisation.quantum import CartanData

SIGMA, TAU = 0, 1


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running enumeration checks (deselect with -m \"not slow\")")


@pytest.fixture(scope="function")
def integers():
    return CoefficientRing.integers()


@pytest.fixture(scope="function")
def universal_rank2():
    """Universal Coxeter system on σ, τ with P empty"""
    return ParabolicDatum(CoxeterSystem.universal(["σ", "τ"]), [])


@pytest.fixture(scope="function")
def affine_a1():
    """Affine A1: universal on σ, τ with S_P = {τ}"""
    return ParabolicDatum(CoxeterSystem.universal(["σ", "τ"]), [TAU])


@pytest.fixture(scope="function")
def universal_rank3():
    """Universal rank 3 with one parabolic generator"""
    return ParabolicDatum(CoxeterSystem.universal(["a", "b", "c"]), [2])


@pytest.fixture(scope="function")
def finite_m3():
    """The finite system with m = 3 and P empty"""
    return ParabolicDatum(CoxeterSystem(["s", "t"], [[1, 3], [3, 1]]), [])


@pytest.fixture(scope="function")
def affine_cartan(integers):
    return CartanData(integers, [[2, -2], [-2, 2]])


@pytest.fixture(scope="function")
def affine_config():
    return RunConfig(
        generators=["σ", "τ"],
        coxeter_matrix=[[1, "inf"], ["inf", 1]],
        cartan=[[2, -2], [-2, 2]],
        parabolic=["τ"],
        max_length=4,
    )


@pytest.fixture(scope="function")
def universal_config():
    return RunConfig(
        generators=["σ", "τ"],
        coxeter_matrix=[[1, "inf"], ["inf", 1]],
        max_length=3,
    )


@pytest.fixture(scope="function")
def finite_config():
    return RunConfig(
        generators=["s", "t"],
        coxeter_matrix=[[1, 3], [3, 1]],
        max_length=3,
    )
