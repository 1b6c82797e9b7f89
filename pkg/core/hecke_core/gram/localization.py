# core/hecke_core/gram/localization.py
import itertools
import logging
import random
from collections import defaultdict
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from sympy import Matrix, Rational

from core.hecke_core.coxeter.system import Element, Word
from core.hecke_core.errors import ConfigurationError, InternalConsistencyError
from core.hecke_core.gram.diagrams import DiagramMorphism, GeneratorKind, Layer, light_leaf
from core.hecke_core.lightleaves.tableaux import LightLeafTableau, TableauEngine
from core.hecke_core.parabolic.quotient import ParabolicDatum
from core.hecke_core.realisation.quantum import CartanData
from infrastructure.config.engine_config import (
    LOCALIZATION_ATTEMPTS,
    LOCALIZATION_POINT_RANGE,
    LOCALIZATION_SEED,
)

# Initialize logging
logger = logging.getLogger(__name__)

Bits = Tuple[int, ...]
Vector = Dict[Bits, Fraction]


class _DegeneratePoint(Exception):
    """A twisted root vanished at the chosen evaluation point"""


class LocalizationEngine:
    """
    Evaluates diagrams after localization at a generic point.

    A Bott-Samelson object of a word of length n splits into 2^n lines, one
    per bit sequence; every generator acts by a matrix whose entries are
    twisted simple roots (and their inverses) evaluated at a random point.
    Numbers are exact rationals, reduced into the coefficient ring at the end.
    """

    def __init__(self, datum: ParabolicDatum, cartan: CartanData,
                 seed: int = LOCALIZATION_SEED, attempts: int = LOCALIZATION_ATTEMPTS):
        self.datum = datum
        self.system = datum.system
        self.cartan = cartan
        self.ring = cartan.ring
        self.seed = seed
        self.attempts = attempts
        self.tableaux = TableauEngine(datum)

    # Points and roots

    def generic_point(self, attempt: int) -> Tuple[Fraction, ...]:
        rng = random.Random(self.seed + attempt)
        return tuple(Fraction(rng.randint(1, LOCALIZATION_POINT_RANGE)) for _ in range(self.cartan.rank))

    def twisted_root(self, prefix: Sequence[int], s: int, point: Sequence[Fraction]) -> Fraction:
        """Value of w(a_s) at ``point`` for w the product of ``prefix``"""
        pairings = self.cartan.rational_pairings
        vector = [Fraction(0)] * self.cartan.rank
        vector[s] = Fraction(1)
        for t in reversed(prefix):
            coroot = sum((vector[u] * pairings[t][u] for u in range(len(vector))), Fraction(0))
            vector[t] -= coroot
        value = sum((c * x for c, x in zip(vector, point)), Fraction(0))
        if value == 0:
            raise _DegeneratePoint()
        return value

    def _layer_image(self, layer: Layer, word: Word, bits: Bits, point, cache) -> List[Tuple[Bits, Fraction]]:
        k = layer.offset
        kind = layer.kind
        if kind == GeneratorKind.ENDDOT:
            return [] if bits[k] else [(bits[:k] + bits[k + 1:], Fraction(1))]
        if kind == GeneratorKind.SPLIT:
            x = bits[k]
            return [(bits[:k] + (a, a ^ x) + bits[k + 1:], Fraction(1)) for a in (0, 1)]

        prefix = tuple(word[i] for i in range(k) if bits[i])
        key = (prefix, layer.colour)
        root = cache.get(key)
        if root is None:
            root = cache[key] = self.twisted_root(prefix, layer.colour, point)
        if kind == GeneratorKind.STARTDOT:
            return [(bits[:k] + (0,) + bits[k:], root)]
        x, y = bits[k], bits[k + 1]
        coefficient = 1 / root if x == 0 else -1 / root
        return [(bits[:k] + (x ^ y,) + bits[k + 2:], coefficient)]

    def propagate(self, diagram: DiagramMorphism, vector: Vector, point) -> Vector:
        """Push a vector on the source lines up through the diagram"""
        cache = {}
        current = dict(vector)
        for layer, word in zip(diagram.layers, diagram.slices):
            image = defaultdict(Fraction)
            for bits, value in current.items():
                for out, coefficient in self._layer_image(layer, word, bits, point, cache):
                    image[out] += value * coefficient
            current = {b: v for b, v in image.items() if v != 0}
        scalar = Fraction(diagram.scalar)
        return {b: v * scalar for b, v in current.items()}

    def pullback(self, diagram: DiagramMorphism, covector: Vector, point) -> Vector:
        """Pull a covector on the target lines back to the source lines"""
        cache = {}
        current = dict(covector)
        for layer, word in reversed(list(zip(diagram.layers, diagram.slices))):
            pulled = {}
            for bits in itertools.product((0, 1), repeat=len(word)):
                total = Fraction(0)
                for out, coefficient in self._layer_image(layer, word, bits, point, cache):
                    value = current.get(out)
                    if value:
                        total += value * coefficient
                if total != 0:
                    pulled[bits] = total
            current = pulled
        scalar = Fraction(diagram.scalar)
        return {b: v * scalar for b, v in current.items()}

    def _with_points(self, compute, needed: int = 1) -> list:
        """Run ``compute(point)`` at ``needed`` non-degenerate points"""
        results = []
        for attempt in range(self.attempts):
            try:
                results.append(compute(self.generic_point(attempt)))
            except _DegeneratePoint:
                logger.debug(f"Evaluation point {attempt} is degenerate, retrying")
                continue
            if len(results) == needed:
                return results
        raise InternalConsistencyError(f"no generic evaluation point found in {self.attempts} attempts")

    # Cellular data

    def localized_pairing(self, shape: Element, s: LightLeafTableau, t: LightLeafTableau):
        """
        The cellular form read off the all-ones line of c_t ∘ c_s^*.

        Lower terms vanish on that line and a degree-0 endomorphism carries no
        polynomial part, so the value is exact.
        """
        if s.degree + t.degree != 0:
            return self.ring.zero
        diagram = light_leaf(t).compose(light_leaf(s).dual())
        ones = (1,) * shape.length

        def compute(point):
            return self.propagate(diagram, {ones: Fraction(1)}, point).get(ones, Fraction(0))

        value, = self._with_points(compute)
        return self.ring.from_rational(value)

    def standard_coordinates(self, weight: Sequence[int], shape: Element, diagram: DiagramMorphism,
                             degree: int) -> Dict[LightLeafTableau, object]:
        """
        Coordinates of a homogeneous morphism weight -> shape in the light-leaf
        basis of the standard module Δ(shape).

        All light leaves of the shape (parabolic or not) give rows of the
        functional "all-ones line of the target"; the morphism's row is solved
        against them at two points. Only parabolic leaves of the same degree
        survive in the anti-spherical standard module; their coefficients are
        constants and must agree at both points.
        """
        weight = tuple(weight)
        if diagram.source != weight or diagram.target != shape.word:
            raise ConfigurationError("morphism does not go from the weight to the shape word")
        basis = self.tableaux.enumerate_tableaux(weight, shape, parabolic=False)
        parabolic = set(self.tableaux.enumerate_tableaux(weight, shape))
        leaves = [light_leaf(u) for u in basis]
        ones = (1,) * shape.length

        def compute(point):
            target_row = self.pullback(diagram, {ones: Fraction(1)}, point)
            rows = [self.pullback(leaf, {ones: Fraction(1)}, point) for leaf in leaves]
            return _solve(rows, target_row)

        first, second = self._with_points(compute, needed=2)
        coordinates = {}
        for u, a, b in zip(basis, first, second):
            if u.degree > degree and (a != 0 or b != 0):
                raise InternalConsistencyError(f"negative-degree coefficient at tableau {u.bit_string}")
            if u.degree == degree and u in parabolic:
                if a != b:
                    raise InternalConsistencyError(f"coordinate of {u.bit_string} depends on the point")
                coordinates[u] = self.ring.from_rational(a)
        return coordinates


def _solve(rows: List[Vector], target: Vector) -> List[Fraction]:
    """Coefficients a_u with sum a_u rows[u] = target, exact and unique"""
    lines = sorted(set(target).union(*[set(r) for r in rows]))
    if not rows:
        if target:
            raise InternalConsistencyError("morphism is not in the span of the light leaves")
        return []
    if not lines:
        return [Fraction(0)] * len(rows)
    A = Matrix([[_rational(r.get(e, Fraction(0))) for r in rows] for e in lines])
    b = Matrix([_rational(target.get(e, Fraction(0))) for e in lines])
    try:
        solution, params = A.gauss_jordan_solve(b)
    except ValueError:
        raise InternalConsistencyError("morphism is not in the span of the light leaves")
    if params.shape[0]:
        raise InternalConsistencyError("light leaves are not independent after localization")
    return [Fraction(int(x.p), int(x.q)) for x in solution]


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)
