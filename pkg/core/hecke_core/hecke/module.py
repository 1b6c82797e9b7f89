# core/hecke_core/hecke/module.py
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

from core.hecke_core.coxeter.system import IDENTITY, Element
from core.hecke_core.errors import IdentityViolation, InternalConsistencyError, NotInQuotientError
from core.hecke_core.laurent.poly import LaurentPoly
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.lightleaves.tableaux import TableauEngine
from core.hecke_core.parabolic.quotient import ParabolicDatum

# Initialize logging
logger = logging.getLogger(__name__)

ZZ_RING = CoefficientRing.integers()


@dataclass
class AntisphericalVector:
    """Finite combination of standard basis vectors n_x, x in ^P W"""
    coefficients: Dict[Element, LaurentPoly] = field(default_factory=dict)

    def coefficient(self, x: Element) -> LaurentPoly:
        return self.coefficients.get(x, LaurentPoly.zero(ZZ_RING))

    def support(self) -> List[Element]:
        return sorted(self.coefficients, key=lambda e: e.sort_key)

    def __add__(self, other: "AntisphericalVector") -> "AntisphericalVector":
        merged = dict(self.coefficients)
        for x, poly in other.coefficients.items():
            merged[x] = merged.get(x, LaurentPoly.zero(ZZ_RING)) + poly
        return AntisphericalVector({x: p for x, p in merged.items() if not p.is_zero()})

    def __sub__(self, other: "AntisphericalVector") -> "AntisphericalVector":
        return self + other.scale(LaurentPoly.constant(ZZ_RING, -1))

    def scale(self, poly: LaurentPoly) -> "AntisphericalVector":
        return AntisphericalVector({x: p * poly for x, p in self.coefficients.items() if not (p * poly).is_zero()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntisphericalVector):
            return NotImplemented
        return self.coefficients == other.coefficients

    @classmethod
    def basis(cls, x: Element) -> "AntisphericalVector":
        return cls({x: LaurentPoly.constant(ZZ_RING)})


class AntisphericalModule:
    """
    The anti-spherical right module over the Hecke algebra at characteristic 0.

    Canonical basis elements are memoized per instance and always built in
    length order, since each one needs the lower ones.
    """

    def __init__(self, datum: ParabolicDatum):
        self.datum = datum
        self.system = datum.system
        self._canonical: Dict[Element, AntisphericalVector] = {IDENTITY: AntisphericalVector.basis(IDENTITY)}

    def apply_b(self, vector: AntisphericalVector, s: int) -> AntisphericalVector:
        v = LaurentPoly.monomial(ZZ_RING, 1)
        v_inv = LaurentPoly.monomial(ZZ_RING, -1)
        result: Dict[Element, LaurentPoly] = defaultdict(lambda: LaurentPoly.zero(ZZ_RING))
        for x, poly in vector.coefficients.items():
            xs = self.system.multiply_right(x, s)
            if not self.datum.is_min_rep(xs):
                continue
            result[xs] = result[xs] + poly
            result[x] = result[x] + poly * (v if xs.length > x.length else v_inv)
        return AntisphericalVector({x: p for x, p in result.items() if not p.is_zero()})

    def canonical_basis(self, y: Element) -> AntisphericalVector:
        """
        d_y = n_y + sum_{x<y} n_{x,y} n_x with n_{x,y} in vZ[v].

        Recursion d_{y'} b_s with s the smallest right descent of y, then
        degree-0 corrections by lower canonical elements in decreasing length.
        """
        cached = self._canonical.get(y)
        if cached is not None:
            return cached
        if not self.datum.is_min_rep(y):
            raise NotInQuotientError(f"{self.system.format_element(y)} is not in the parabolic quotient")

        s = min(self.system.right_descents(y))
        lower = self.system.multiply_right(y, s)
        candidate = self.apply_b(self.canonical_basis(lower), s)
        while True:
            pending = [z for z in candidate.coefficients if z != y and candidate.coefficient(z).coefficient(0)]
            if not pending:
                break
            z = max(pending, key=lambda e: e.sort_key)
            mu = candidate.coefficient(z).coefficient(0)
            candidate = candidate - self.canonical_basis(z).scale(LaurentPoly.constant(ZZ_RING, mu))

        if candidate.coefficient(y) != LaurentPoly.constant(ZZ_RING):
            raise InternalConsistencyError(f"d_{self.system.format_element(y)} is not monic")
        for x, poly in candidate.coefficients.items():
            if x != y and poly.min_degree() < 1:
                raise InternalConsistencyError(
                    f"n_({self.system.format_element(x)}, {self.system.format_element(y)}) not in vZ[v]"
                )
        self._canonical[y] = candidate
        return candidate

    def kl_matrix(self, max_len: int) -> Dict[Element, AntisphericalVector]:
        """All columns d_y for y in the truncated quotient, in length order"""
        return {y: self.canonical_basis(y) for y in self.datum.enumerate_quotient(max_len)}

    def invert_first_row(self, max_len: int) -> Dict[Element, LaurentPoly]:
        """Row r of D^-1 at the identity: r_e = 1, r_y = -sum_{x<y} r_x n_{x,y}"""
        elements = self.datum.enumerate_quotient(max_len)
        row: Dict[Element, LaurentPoly] = {}
        for y in elements:
            if y.is_identity():
                row[y] = LaurentPoly.constant(ZZ_RING)
                continue
            column = self.canonical_basis(y)
            total = LaurentPoly.zero(ZZ_RING)
            for x, poly in column.coefficients.items():
                if x != y:
                    total = total + row[x] * poly
            row[y] = -total
        logger.info(f"Inverted first row over {len(elements)} quotient elements")
        return row

    def verify_inverse(self, max_len: int) -> bool:
        """(first row of D^-1) · D = first unit row on the truncated interval"""
        row = self.invert_first_row(max_len)
        for y in row:
            total = LaurentPoly.zero(ZZ_RING)
            for x, poly in self.canonical_basis(y).coefficients.items():
                total = total + row[x] * poly
            expected = LaurentPoly.constant(ZZ_RING, 1 if y.is_identity() else 0)
            if total != expected:
                raise IdentityViolation(f"D^-1 D fails at column {self.system.format_element(y)}")
        return True

    def first_row_character(self, weight: Sequence[int], tableaux: TableauEngine = None) -> LaurentPoly:
        """
        sum_x (D^-1)_{e,x} · graded_dim(weight, x); equals 1 for the empty
        weight and 0 otherwise.
        """
        weight = tuple(weight)
        tableaux = tableaux or TableauEngine(self.datum)
        row = self.invert_first_row(len(weight))
        total = LaurentPoly.zero(ZZ_RING)
        for x, dim in tableaux.graded_character(weight, ZZ_RING).items():
            total = total + row[x] * dim
        return total
