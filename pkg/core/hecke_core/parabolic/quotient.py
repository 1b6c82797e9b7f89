# core/hecke_core/parabolic/quotient.py
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from core.hecke_core.coxeter.system import IDENTITY, CoxeterSystem, Element, Word
from core.hecke_core.errors import ConfigurationError, NotInQuotientError

# Initialize logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicExpression:
    """A word whose every prefix product is a minimal coset representative"""
    word: Word
    prefix_elements: Tuple[Element, ...]

    @property
    def element(self) -> Element:
        return self.prefix_elements[-1]

    @property
    def is_reduced(self) -> bool:
        return self.element.length == len(self.word)


class ParabolicDatum:
    """
    A Coxeter system together with the generator subset S_P.

    The quotient ^P W is the set of elements with no left descent in S_P.
    """

    def __init__(self, system: CoxeterSystem, parabolic: Iterable[int] = ()):
        self.system = system
        self.parabolic: FrozenSet[int] = frozenset(parabolic)
        if any(s < 0 or s >= system.rank for s in self.parabolic):
            raise ConfigurationError("parabolic generators must belong to the system")
        self._min_rep_cache: Dict[Word, bool] = {}

    @classmethod
    def from_labels(cls, system: CoxeterSystem, labels: Iterable[str]) -> "ParabolicDatum":
        return cls(system, [system.index(label) for label in labels])

    def is_min_rep(self, x: Element) -> bool:
        cached = self._min_rep_cache.get(x.word)
        if cached is None:
            cached = not (self.system.left_descents(x) & self.parabolic)
            self._min_rep_cache[x.word] = cached
        return cached

    def enumerate_quotient(self, max_len: int) -> List[Element]:
        """All x in ^P W with l(x) <= max_len, sorted by (length, canonical word)"""
        if max_len < 0:
            raise ConfigurationError("max_len must be non-negative")
        layer = [IDENTITY]
        found = [IDENTITY]
        for length in range(1, max_len + 1):
            next_layer = set()
            for x in layer:
                for s in range(self.system.rank):
                    xs = self.system.multiply_right(x, s)
                    if xs.length == length and self.is_min_rep(xs):
                        next_layer.add(xs)
            layer = sorted(next_layer, key=lambda e: e.sort_key)
            if not layer:
                break
            found.extend(layer)
        logger.info(f"Enumerated {len(found)} quotient elements up to length {max_len}")
        return found

    def prefix_elements(self, word: Sequence[int]) -> Tuple[Element, ...]:
        current = IDENTITY
        prefixes = [current]
        for letter in word:
            current = self.system.multiply_right(current, letter)
            prefixes.append(current)
        return tuple(prefixes)

    def is_parabolic_expression(self, word: Sequence[int]) -> bool:
        return all(self.is_min_rep(x) for x in self.prefix_elements(word))

    def enumerate_expressions(self, length: int) -> List[ParabolicExpression]:
        """
        All words of the given length (reduced or not) in exp_P.

        Args:
            length: word length

        Returns:
            Expressions in lexicographic order of their words
        """
        if length < 0:
            raise ConfigurationError("expression length must be non-negative")
        results: List[ParabolicExpression] = []

        def extend(word: Word, prefixes: Tuple[Element, ...]):
            if len(word) == length:
                results.append(ParabolicExpression(word, prefixes))
                return
            for s in range(self.system.rank):
                nxt = self.system.multiply_right(prefixes[-1], s)
                if self.is_min_rep(nxt):
                    extend(word + (s,), prefixes + (nxt,))

        extend((), (IDENTITY,))
        return results

    def walk_expressions(self, max_len: int, reduced: bool = False) -> Iterator[Tuple[Word, Element]]:
        """
        Depth-first walk of exp_P up to max_len, yielding (word, product).

        Words come in lexicographic preorder, so every word follows its
        longest proper prefix. With ``reduced`` only the canonical words of
        elements of ^P W are visited; these are prefix closed as well.
        """
        if max_len < 0:
            raise ConfigurationError("max_len must be non-negative")
        stack: List[Tuple[Word, Element]] = [((), IDENTITY)]
        while stack:
            word, x = stack.pop()
            yield word, x
            if len(word) == max_len:
                continue
            children = []
            for s in range(self.system.rank):
                xs = self.system.multiply_right(x, s)
                if not self.is_min_rep(xs):
                    continue
                if reduced and xs.word != word + (s,):
                    continue
                children.append((word + (s,), xs))
            stack.extend(reversed(children))

    def expressions_up_to(self, max_len: int) -> List[Word]:
        """Words of exp_P of every length up to max_len, shorter first"""
        words: List[Word] = []
        for length in range(max_len + 1):
            words.extend(expr.word for expr in self.enumerate_expressions(length))
        return words

    def reduced_parabolic_expressions(self, length: int) -> List[ParabolicExpression]:
        """rexp_P: the reduced members of exp_P"""
        return [expr for expr in self.enumerate_expressions(length) if expr.is_reduced]

    def canonical_word(self, x: Element) -> Word:
        if not self.is_min_rep(x):
            raise NotInQuotientError(f"{self.system.format_element(x)} is not in the parabolic quotient")
        return x.word
