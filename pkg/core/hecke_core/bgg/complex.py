# core/hecke_core/bgg/complex.py
import hashlib
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.hecke_core.coxeter.system import Element, Word
from core.hecke_core.errors import IdentityViolation, InternalConsistencyError, UnsupportedConfigurationError
from core.hecke_core.gram.diagrams import DiagramMorphism, GeneratorKind, Layer, light_leaf
from core.hecke_core.gram.localization import LocalizationEngine
from core.hecke_core.laurent import linalg
from core.hecke_core.laurent.poly import LaurentPoly
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.lightleaves.tableaux import LightLeafTableau, TableauEngine
from core.hecke_core.parabolic.quotient import ParabolicDatum
from core.hecke_core.realisation.quantum import CartanData

# Initialize logging
logger = logging.getLogger(__name__)


class QuadrupleKind(str, Enum):
    DIAMOND = "diamond"
    STRAND = "strand"
    EMPTY = "empty"


@dataclass(frozen=True)
class CarterPaynePair:
    w: Element
    y: Element
    deletion_position: int

    @property
    def key(self) -> Tuple:
        return (self.w.sort_key, self.y.sort_key)


@dataclass(frozen=True)
class Quadruple:
    """w > x, y > z with l(w) = l(z) + 2"""
    w: Element
    x: Element
    y: Element
    z: Element
    kind: QuadrupleKind


@dataclass
class SignedComplex:
    layers: Dict[int, List[Element]]
    edges: List[Tuple[CarterPaynePair, int]]

    def sign(self, w: Element, y: Element) -> int:
        for pair, sign in self.edges:
            if pair.w == w and pair.y == y:
                return sign
        raise KeyError((w, y))

    def digest(self, format_element) -> str:
        text = "\n".join(f"{format_element(p.w)}\t{format_element(p.y)}\t{s:+d}" for p, s in self.edges)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class BasisVector:
    shape: Element
    tableau: LightLeafTableau

    @property
    def graded_degree(self) -> int:
        return self.tableau.degree + self.shape.length


@dataclass
class HomologyReport:
    weight_word: Word
    layers: Dict[int, int]
    ranks: Dict[int, int]
    homology_dims: Dict[int, int]
    graded_homology: Dict[int, LaurentPoly]
    signs_digest: str
    square_zero: bool
    exact: bool
    ring: CoefficientRing = field(repr=False, default=None)

    def to_json(self, format_word) -> Dict[str, Any]:
        return {
            "weight": format_word(self.weight_word),
            "layers": {str(k): v for k, v in self.layers.items()},
            "ranks": {str(k): v for k, v in self.ranks.items()},
            "homology_dims": {str(k): v for k, v in self.homology_dims.items()},
            "graded_homology": {str(k): p.to_sparse_text() for k, p in self.graded_homology.items()},
            "signs_digest": self.signs_digest,
            "square_zero": self.square_zero,
            "exact": self.exact,
        }


class BGGEngine:
    """
    Carter-Payne combinatorics of ^P W and, for universal systems, the
    BGG complex restricted to a single weight word.
    """

    def __init__(self, datum: ParabolicDatum, cartan: Optional[CartanData] = None):
        self.datum = datum
        self.system = datum.system
        self.cartan = cartan
        self.tableaux = TableauEngine(datum)
        self._localization: Optional[LocalizationEngine] = None
        self._signed: Dict[int, SignedComplex] = {}

    # Pairs, diamonds and strands

    def enumerate_cp_pairs(self, max_len: int) -> List[CarterPaynePair]:
        pairs = []
        for w in self.datum.enumerate_quotient(max_len):
            for y in self.system.covered_by(w):
                if self.datum.is_min_rep(y):
                    pairs.append(CarterPaynePair(w, y, self.system.deletion_position(w, y)))
        pairs.sort(key=lambda p: p.key)
        logger.info(f"Found {len(pairs)} Carter-Payne pairs up to length {max_len}")
        return pairs

    def classify(self, w: Element, x: Element, y: Element, z: Element) -> QuadrupleKind:
        inside = [self.datum.is_min_rep(x), self.datum.is_min_rep(y)]
        if all(inside):
            return QuadrupleKind.DIAMOND
        if any(inside):
            return QuadrupleKind.STRAND
        return QuadrupleKind.EMPTY

    def quadruples(self, max_len: int) -> List[Quadruple]:
        """Length-two intervals [z, w] with both ends in ^P W, classified"""
        found = []
        for w in self.datum.enumerate_quotient(max_len):
            if w.length < 2:
                continue
            middles = self.system.covered_by(w)
            lower = defaultdict(list)
            for u in middles:
                for z in self.system.covered_by(u):
                    lower[z].append(u)
            for z in sorted(lower, key=lambda e: e.sort_key):
                if not self.datum.is_min_rep(z):
                    continue
                us = sorted(lower[z], key=lambda e: e.sort_key)
                if len(us) != 2:
                    raise InternalConsistencyError("a length-two Bruhat interval must have two middle elements")
                x, y = us
                kind = self.classify(w, x, y, z)
                if kind != QuadrupleKind.EMPTY:
                    found.append(Quadruple(w, x, y, z, kind))
        return found

    def diamonds(self, max_len: int) -> List[Quadruple]:
        return [q for q in self.quadruples(max_len) if q.kind == QuadrupleKind.DIAMOND]

    def strands(self, max_len: int) -> List[Quadruple]:
        return [q for q in self.quadruples(max_len) if q.kind == QuadrupleKind.STRAND]

    # Signs

    def assign_signs(self, max_len: int) -> SignedComplex:
        """Lexicographically least GF(2) solution of 'every diamond has sign product -1', solved once per length"""
        signed = self._signed.get(max_len)
        if signed is None:
            signed = self._signed[max_len] = self._solve_signs(max_len)
        return signed

    def _solve_signs(self, max_len: int) -> SignedComplex:
        pairs = self.enumerate_cp_pairs(max_len)
        index = {(p.w, p.y): i for i, p in enumerate(pairs)}
        equations = []
        for q in self.diamonds(max_len):
            row = [0] * len(pairs)
            for edge in ((q.w, q.x), (q.w, q.y), (q.x, q.z), (q.y, q.z)):
                row[index[edge]] = 1
            equations.append(row)
        bits = linalg.least_gf2_solution(equations, [1] * len(equations), len(pairs))
        if bits is None:
            raise InternalConsistencyError("diamond sign system has no solution")
        layers = defaultdict(list)
        for x in self.datum.enumerate_quotient(max_len):
            layers[x.length].append(x)
        signed = SignedComplex(dict(layers), [(p, -1 if b else 1) for p, b in zip(pairs, bits)])
        logger.info(f"Assigned signs to {len(pairs)} edges under {len(equations)} diamond constraints")
        return signed

    def verify_signs(self, signed: SignedComplex) -> bool:
        max_len = max(signed.layers) if signed.layers else 0
        for q in self.diamonds(max_len):
            product = (signed.sign(q.w, q.x) * signed.sign(q.w, q.y)
                       * signed.sign(q.x, q.z) * signed.sign(q.y, q.z))
            if product != -1:
                return False
        return True

    # Complex at a weight word

    def _require_matrices(self):
        if not self.system.is_universal:
            raise UnsupportedConfigurationError(
                "differential matrices need a universal Coxeter system", kind="unsupported_finite_bond"
            )
        if self.cartan is None:
            raise UnsupportedConfigurationError("differential matrices need Cartan data")
        if self._localization is None:
            self._localization = LocalizationEngine(self.datum, self.cartan)
        return self._localization

    def chain_basis(self, weight: Sequence[int], max_len: int) -> Dict[int, List[BasisVector]]:
        """Light-leaf basis of 1_weight C_l, grouped by layer"""
        table = self.tableaux.tableau_table(tuple(weight))
        basis = defaultdict(list)
        for shape in sorted(table, key=lambda e: e.sort_key):
            if shape.length <= max_len:
                basis[shape.length].extend(BasisVector(shape, t) for t in table[shape])
        return {layer: basis.get(layer, []) for layer in range(max_len + 1)}

    def differential_matrices(self, weight: Sequence[int], max_len: int,
                              signed: Optional[SignedComplex] = None) -> Dict[int, List[List[object]]]:
        """
        delta_l : C_l -> C_(l-1) at the weight, rows indexed by the basis of
        layer l-1 and columns by layer l.

        A basis vector c_t of Δ(w) goes to sum over CP pairs (w, y) of
        sign · (end dot at the deletion position) ∘ c_t, re-expressed in the
        light-leaf basis of Δ(y).

        Coordinates come from the localization evaluator (``standard_coordinates``),
        not from the diagram rewriter behind the Gram matrices. Both compute the
        same cellular form; the tests compare them tableau by tableau.
        """
        localization = self._require_matrices()
        weight = tuple(weight)
        max_len = min(max_len, len(weight))
        ring = self.cartan.ring
        signed = signed or self.assign_signs(max_len)
        basis = self.chain_basis(weight, max_len)
        position = {
            layer: {(b.shape, b.tableau): i for i, b in enumerate(vectors)}
            for layer, vectors in basis.items()
        }
        matrices = {}
        for layer in range(1, max_len + 1):
            rows, cols = len(basis[layer - 1]), len(basis[layer])
            matrix = [[ring.zero] * cols for _ in range(rows)]
            for j, vector in enumerate(basis[layer]):
                w, t = vector.shape, vector.tableau
                leaf = light_leaf(t)
                for pair, sign in signed.edges:
                    if pair.w != w:
                        continue
                    dot = DiagramMorphism(w.word, (Layer(GeneratorKind.ENDDOT, w.word[pair.deletion_position],
                                                         pair.deletion_position),))
                    image = dot.compose(leaf)
                    coordinates = localization.standard_coordinates(weight, pair.y, image, t.degree + 1)
                    for u, value in coordinates.items():
                        i = position[layer - 1][(pair.y, u)]
                        matrix[i][j] = ring.add(matrix[i][j], ring.mul(ring.normalize(sign), value))
            matrices[layer] = matrix
        return matrices

    def homology_check(self, weight: Sequence[int], max_len: Optional[int] = None,
                       strict: bool = True) -> HomologyReport:
        """
        delta^2 = 0 and homology dimensions per layer. Exactness is asserted
        in every layer below the truncation: H_l = 0 for l >= 1 and
        H_0 = 1 exactly for the empty weight.
        """
        weight = tuple(weight)
        self._require_matrices()
        ring = self.cartan.ring
        top = len(weight) if max_len is None else min(max_len, len(weight))
        signed = self.assign_signs(max(top, 1))
        matrices = self.differential_matrices(weight, top, signed)
        basis = self.chain_basis(weight, top)
        dims = {layer: len(vectors) for layer, vectors in basis.items()}

        square_zero = True
        for layer in range(2, top + 1):
            inner = len(basis[layer - 1])
            product = linalg.matmul(matrices[layer - 1], matrices[layer], ring, inner) if inner else []
            if any(not ring.is_zero(x) for row in product for x in row):
                square_zero = False

        ranks = {layer: linalg.rank(matrices[layer], ring, dims[layer]) for layer in matrices}
        homology = {}
        graded = {}
        for layer in range(top + 1):
            homology[layer] = dims[layer] - ranks.get(layer, 0) - ranks.get(layer + 1, 0)
            graded[layer] = self._graded_homology(basis, matrices, layer, ring)

        expected = {layer: 0 for layer in range(top + 1)}
        expected[0] = 1 if not weight else 0
        checked = range(top + 1) if top == len(weight) else range(top)
        exact = all(homology[layer] == expected[layer] for layer in checked)
        report = HomologyReport(
            weight_word=weight,
            layers=dims,
            ranks=ranks,
            homology_dims=homology,
            graded_homology=graded,
            signs_digest=signed.digest(self.system.format_element),
            square_zero=square_zero,
            exact=exact,
            ring=ring,
        )
        logger.info(f"Homology at {self.system.format_word(weight)}: {homology} (square zero: {square_zero})")
        if strict and not square_zero:
            raise IdentityViolation(f"delta^2 != 0 at weight {self.system.format_word(weight)}")
        if strict and not exact:
            raise IdentityViolation(f"complex is not exact at weight {self.system.format_word(weight)}: {homology}")
        return report

    def _graded_homology(self, basis, matrices, layer: int, ring: CoefficientRing) -> LaurentPoly:
        """Homology of layer l split by graded degree deg t + l"""
        degrees = sorted({b.graded_degree for b in basis[layer]})
        terms = {}
        for d in degrees:
            cols = [j for j, b in enumerate(basis[layer]) if b.graded_degree == d]
            dim = len(cols)
            rank_out = 0
            if layer in matrices and basis[layer - 1]:
                rows = [i for i, b in enumerate(basis[layer - 1]) if b.graded_degree == d]
                block = [[matrices[layer][i][j] for j in cols] for i in rows]
                rank_out = linalg.rank(block, ring, dim)
            rank_in = 0
            if layer + 1 in matrices:
                sources = [j for j, b in enumerate(basis[layer + 1]) if b.graded_degree == d]
                block = [[matrices[layer + 1][i][j] for j in sources] for i in cols]
                rank_in = linalg.rank(block, ring, len(sources))
            if dim - rank_out - rank_in:
                terms[d] = dim - rank_out - rank_in
        return LaurentPoly(CoefficientRing.integers(), terms)

    def strand_compositions(self, weight: Sequence[int], max_len: Optional[int] = None) -> List[Tuple[Quadruple, bool]]:
        """For every strand w -> x -> z, whether the two-step composite vanishes at the weight"""
        weight = tuple(weight)
        top = len(weight) if max_len is None else min(max_len, len(weight))
        self._require_matrices()
        ring = self.cartan.ring
        signed = self.assign_signs(max(top, 1))
        matrices = self.differential_matrices(weight, top, signed)
        basis = self.chain_basis(weight, top)
        results = []
        for q in self.strands(top):
            middle = q.x if self.datum.is_min_rep(q.x) else q.y
            cols = [j for j, b in enumerate(basis[q.w.length]) if b.shape == q.w]
            mids = [j for j, b in enumerate(basis[middle.length]) if b.shape == middle]
            rows = [i for i, b in enumerate(basis[q.z.length]) if b.shape == q.z]
            upper = [[matrices[q.w.length][m][c] for c in cols] for m in mids]
            lower = [[matrices[middle.length][r][m] for m in mids] for r in rows]
            product = linalg.matmul(lower, upper, ring, len(mids)) if mids else []
            results.append((q, all(ring.is_zero(x) for row in product for x in row)))
        return results

    def euler_consistency(self, weight: Sequence[int], max_len: Optional[int] = None,
                          ring: Optional[CoefficientRing] = None) -> Tuple[LaurentPoly, LaurentPoly]:
        """
        Graded Euler characteristic of the truncated complex at the weight
        together with the tableau Euler sum; the two agree.
        """
        weight = tuple(weight)
        ring = ring or CoefficientRing.integers()
        top = len(weight) if max_len is None else min(max_len, len(weight))
        total = LaurentPoly.zero(ring)
        for shape, dim in self.tableaux.graded_character(weight, ring).items():
            if shape.length <= top:
                total = total + LaurentPoly.signed_power(ring, shape.length) * dim
        return total, self.tableaux.euler_sum(weight, ring)
