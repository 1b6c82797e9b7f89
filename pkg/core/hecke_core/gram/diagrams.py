# core/hecke_core/gram/diagrams.py
import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from core.hecke_core.coxeter.system import Word
from core.hecke_core.errors import ConfigurationError
from core.hecke_core.lightleaves.tableaux import LightLeafTableau, Step

# Initialize logging
logger = logging.getLogger(__name__)


class GeneratorKind(str, Enum):
    """One-colour generators, read bottom to top"""
    ENDDOT = "enddot"        # s -> empty
    STARTDOT = "startdot"    # empty -> s
    MERGE = "merge"          # ss -> s
    SPLIT = "split"          # s -> ss


ARITY = {
    GeneratorKind.ENDDOT: (1, 0),
    GeneratorKind.STARTDOT: (0, 1),
    GeneratorKind.MERGE: (2, 1),
    GeneratorKind.SPLIT: (1, 2),
}

DEGREE = {
    GeneratorKind.ENDDOT: 1,
    GeneratorKind.STARTDOT: 1,
    GeneratorKind.MERGE: -1,
    GeneratorKind.SPLIT: -1,
}

FLIPPED = {
    GeneratorKind.ENDDOT: GeneratorKind.STARTDOT,
    GeneratorKind.STARTDOT: GeneratorKind.ENDDOT,
    GeneratorKind.MERGE: GeneratorKind.SPLIT,
    GeneratorKind.SPLIT: GeneratorKind.MERGE,
}


@dataclass(frozen=True)
class Layer:
    """A single generator at ``offset`` with identity strands everywhere else"""
    kind: GeneratorKind
    colour: int
    offset: int

    def apply(self, word: Word) -> Word:
        """Reading word above the layer, or ConfigurationError if the legs do not match"""
        k = self.offset
        if self.kind == GeneratorKind.STARTDOT:
            if not 0 <= k <= len(word):
                raise ConfigurationError(f"startdot offset {k} outside word of length {len(word)}")
            return word[:k] + (self.colour,) + word[k:]
        inputs = ARITY[self.kind][0]
        if k < 0 or k + inputs > len(word) or any(c != self.colour for c in word[k:k + inputs]):
            raise ConfigurationError(f"{self.kind.value} of colour {self.colour} does not fit {word} at {k}")
        if self.kind == GeneratorKind.ENDDOT:
            return word[:k] + word[k + 1:]
        if self.kind == GeneratorKind.MERGE:
            return word[:k] + (self.colour,) + word[k + 2:]
        return word[:k] + (self.colour, self.colour) + word[k + 1:]

    def flipped(self) -> "Layer":
        return Layer(FLIPPED[self.kind], self.colour, self.offset)

    def shifted(self, delta: int) -> "Layer":
        return Layer(self.kind, self.colour, self.offset + delta)


@dataclass(frozen=True)
class DiagramMorphism:
    """
    A spot/fork diagram as a stack of layers from ``source`` (bottom) to the top.

    The reading word of every slice is determined by the source and the layers;
    construction validates that each generator fits the slice below it.
    """
    source: Word
    layers: Tuple[Layer, ...] = ()
    scalar: object = 1
    slices: Tuple[Word, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        words = [tuple(self.source)]
        for layer in self.layers:
            words.append(layer.apply(words[-1]))
        object.__setattr__(self, "source", tuple(self.source))
        object.__setattr__(self, "layers", tuple(self.layers))
        object.__setattr__(self, "slices", tuple(words))

    @property
    def target(self) -> Word:
        return self.slices[-1]

    @property
    def degree(self) -> int:
        return sum(DEGREE[layer.kind] for layer in self.layers)

    @classmethod
    def identity(cls, word: Sequence[int]) -> "DiagramMorphism":
        return cls(tuple(word))

    def compose(self, lower: "DiagramMorphism") -> "DiagramMorphism":
        """self ∘ lower: ``lower`` sits below ``self``"""
        if lower.target != self.source:
            raise ConfigurationError(f"cannot compose: {lower.target} != {self.source}")
        return DiagramMorphism(lower.source, lower.layers + self.layers, _times(self.scalar, lower.scalar))

    def tensor(self, right: "DiagramMorphism") -> "DiagramMorphism":
        """Horizontal juxtaposition with ``right`` on the right"""
        shift = len(self.target)
        layers = self.layers + tuple(layer.shifted(shift) for layer in right.layers)
        return DiagramMorphism(self.source + right.source, layers, _times(self.scalar, right.scalar))

    def dual(self) -> "DiagramMorphism":
        """Upside-down flip"""
        return DiagramMorphism(self.target, tuple(layer.flipped() for layer in reversed(self.layers)), self.scalar)

    def interchange(self, rng: random.Random, rounds: Optional[int] = None) -> "DiagramMorphism":
        """
        Random re-slicing by the interchange law.

        Adjacent layers acting on disjoint strands are swapped; the result is
        isotopic to ``self``.
        """
        layers: List[Layer] = list(self.layers)
        rounds = rounds if rounds is not None else 4 * len(layers)
        for _ in range(rounds):
            if len(layers) < 2:
                break
            i = rng.randrange(len(layers) - 1)
            swapped = _swap(layers[i], layers[i + 1])
            if swapped is not None:
                layers[i], layers[i + 1] = swapped
        return DiagramMorphism(self.source, tuple(layers), self.scalar)


def _times(a, b):
    return a * b


def _swap(lower: Layer, upper: Layer) -> Optional[Tuple[Layer, Layer]]:
    """New (lower, upper) pair after exchanging heights, or None when the layers touch"""
    a1, b1 = ARITY[lower.kind]
    a2, b2 = ARITY[upper.kind]
    k1, k2 = lower.offset, upper.offset
    if k2 >= k1 + b1:
        return upper.shifted(a1 - b1), lower
    if k2 + a2 <= k1:
        return upper, lower.shifted(b2 - a2)
    return None


def light_leaf(tableau: LightLeafTableau) -> DiagramMorphism:
    """
    Light-leaf morphism of a tableau: weight word at the bottom, shape word at the top.

    Only meaningful for universal systems, where every shape has a unique
    reduced word and no braid moves occur.
    """
    layers: List[Layer] = []
    top = 0
    for s, step in zip(tableau.weight_word, tableau.steps):
        if step == Step.STRAND:
            top += 1
        elif step == Step.DOT:
            layers.append(Layer(GeneratorKind.ENDDOT, s, top))
        elif step == Step.FORK:
            layers.append(Layer(GeneratorKind.MERGE, s, top - 1))
        else:
            layers.append(Layer(GeneratorKind.MERGE, s, top - 1))
            layers.append(Layer(GeneratorKind.ENDDOT, s, top - 1))
            top -= 1
    diagram = DiagramMorphism(tableau.weight_word, tuple(layers))
    if diagram.target != tableau.shape.word:
        raise ConfigurationError("light leaves need unique reduced words (universal systems)")
    return diagram
