# core/hecke_core/gram/pairing.py
import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from core.hecke_core.coxeter.system import CoxeterSystem, Element, Word
from core.hecke_core.errors import InternalConsistencyError, UnsupportedConfigurationError
from core.hecke_core.gram.diagrams import light_leaf
from core.hecke_core.gram.rewriting import PlanarPartition, RewritingEngine
from core.hecke_core.laurent import linalg
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.lightleaves.tableaux import LightLeafTableau, TableauEngine
from core.hecke_core.parabolic.quotient import ParabolicDatum
from core.hecke_core.realisation.quantum import CartanData

# Initialize logging
logger = logging.getLogger(__name__)


@dataclass
class GramReport:
    weight_word: Word
    shape: Element
    basis: List[LightLeafTableau]
    matrix: List[List[object]]
    determinant: object
    rank: int
    ring: CoefficientRing

    def to_json(self, system: CoxeterSystem) -> Dict[str, Any]:
        return {
            "weight": system.format_word(self.weight_word),
            "shape": system.format_element(self.shape),
            "basis": [t.bit_string for t in self.basis],
            "degrees": [t.degree for t in self.basis],
            "matrix": [[self.ring.serialize(x) for x in row] for row in self.matrix],
            "determinant": self.ring.serialize(self.determinant),
            "rank": self.rank,
            "coefficients": self.ring.to_json(),
        }


@dataclass
class GramFamilyReport:
    n: int
    p: int
    report: GramReport
    rank_mod_p: int
    system: CoxeterSystem

    @property
    def expected_determinant(self) -> int:
        return self.n * self.p

    def to_json(self) -> Dict[str, Any]:
        data = self.report.to_json(self.system)
        data.update({"n": self.n, "p": self.p, "rank_mod_p": self.rank_mod_p,
                     "expected_abs_determinant": self.expected_determinant})
        return data


class GramEngine:
    """Cellular form of the anti-spherical category of a universal Coxeter system"""

    def __init__(self, datum: ParabolicDatum, cartan: CartanData):
        self.datum = datum
        self.system = datum.system
        self.ring = cartan.ring
        self.rewriter = RewritingEngine(datum, cartan)
        self.tableaux = TableauEngine(datum)

    def cellular_pairing(self, shape: Element, s: LightLeafTableau, t: LightLeafTableau,
                         rng: Optional[random.Random] = None):
        """
        <c_s, c_t>: coefficient of the identity in the normal form of c_t ∘ c_s^*.

        Every other partition in the normal form has through-degree below
        l(shape) and is a lower term.
        """
        diagram = light_leaf(t).compose(light_leaf(s).dual())
        normal_form = self.rewriter.normalize(diagram, rng)
        identity = PlanarPartition.identity(shape.word)
        for partition in normal_form:
            if partition != identity and partition.through_degree >= shape.length:
                raise InternalConsistencyError("a non-identity term survives at full through-degree")
        value = normal_form.get(identity, self.ring.zero)
        if not self.ring.is_zero(value) and s.degree + t.degree != 0:
            raise InternalConsistencyError(
                f"pairing of degrees {s.degree} and {t.degree} is nonzero"
            )
        return value

    def gram_matrix(self, weight: Sequence[int], shape: Element) -> GramReport:
        weight = tuple(weight)
        basis = self.tableaux.enumerate_tableaux(weight, shape)
        size = len(basis)
        matrix = [[self.ring.zero] * size for _ in range(size)]
        for i, s in enumerate(basis):
            for j, t in enumerate(basis):
                matrix[i][j] = self.cellular_pairing(shape, s, t)
        for i in range(size):
            for j in range(i):
                if matrix[i][j] != matrix[j][i]:
                    raise InternalConsistencyError(f"cellular form is not symmetric at ({i}, {j})")
        report = GramReport(
            weight_word=weight,
            shape=shape,
            basis=basis,
            matrix=matrix,
            determinant=linalg.determinant(matrix, self.ring),
            rank=linalg.rank(matrix, self.ring),
            ring=self.ring,
        )
        logger.info(
            f"Gram matrix at {self.system.format_word(weight)} / {self.system.format_element(shape)}: "
            f"size {size}, rank {report.rank}"
        )
        return report

    def simple_dim(self, weight: Sequence[int], shape: Element) -> int:
        """dim 1_weight L(shape), the rank of the Gram matrix over a field"""
        if not self.ring.is_field:
            raise UnsupportedConfigurationError(
                f"simple dimensions need a field, got {self.ring}", kind="non_field_ring"
            )
        return self.gram_matrix(weight, shape).rank


def alternating_word(length: int, start: int = 0, other: int = 1) -> Word:
    return tuple(start if i % 2 == 0 else other for i in range(length))


def gram_family(n: int, p: int) -> GramFamilyReport:
    """
    The affine A1 family over the integers: shape of length np-1, weight of
    length np+1, parabolic generator τ, Cartan entries -2.
    """
    if n < 1 or p < 2:
        raise UnsupportedConfigurationError("gram family needs n >= 1 and a prime p")
    ring = CoefficientRing.integers()
    system = CoxeterSystem.universal(["σ", "τ"])
    datum = ParabolicDatum(system, [1])
    cartan = CartanData(ring, [[2, -2], [-2, 2]])
    engine = GramEngine(datum, cartan)
    shape = system.reduce(alternating_word(n * p - 1))
    report = engine.gram_matrix(alternating_word(n * p + 1), shape)
    modular = linalg.reduce_rows(report.matrix, CoefficientRing.prime_field(p))
    rank_mod_p = linalg.rank(modular, CoefficientRing.prime_field(p), len(report.basis))
    return GramFamilyReport(n=n, p=p, report=report, rank_mod_p=rank_mod_p, system=system)
