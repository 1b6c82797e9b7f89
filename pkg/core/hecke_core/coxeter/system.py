# core/hecke_core/coxeter/system.py
import itertools
import logging
import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple, Union

from core.hecke_core.errors import ConfigurationError

# Initialize logging
logger = logging.getLogger(__name__)

INF = math.inf
IDENTITY_LABEL = "1"

Word = Tuple[int, ...]
Bond = Union[int, float]


@dataclass(frozen=True)
class Element:
    """A group element, stored as its canonical (lexicographically least) reduced word"""
    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sort_key(self) -> Tuple[int, Word]:
        return (len(self.word), self.word)

    def is_identity(self) -> bool:
        return not self.word


IDENTITY = Element(())


def _alternating(s: int, t: int, m: int) -> Word:
    return tuple(s if i % 2 == 0 else t for i in range(m))


class CoxeterSystem:
    """
    Coxeter system (W, S) given by generator labels and a Coxeter matrix.

    Off-diagonal bonds are integers >= 2 or ``INF``. All caches live on the
    instance, so two systems never share memoized state.
    """

    def __init__(self, generators: Sequence[str], coxeter_matrix: Sequence[Sequence[Bond]]):
        self.generators: List[str] = list(generators)
        n = len(self.generators)
        if n == 0:
            raise ConfigurationError("a Coxeter system needs at least one generator")
        if len(set(self.generators)) != n:
            raise ConfigurationError("generator labels must be distinct")
        if len(coxeter_matrix) != n or any(len(row) != n for row in coxeter_matrix):
            raise ConfigurationError(f"Coxeter matrix must be {n}x{n}")

        self.matrix: List[List[Bond]] = [[INF if m == INF else int(m) for m in row] for row in coxeter_matrix]
        for i in range(n):
            if self.matrix[i][i] != 1:
                raise ConfigurationError(f"m({self.generators[i]},{self.generators[i]}) must be 1")
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ConfigurationError("Coxeter matrix must be symmetric")
                if i != j and self.matrix[i][j] != INF and self.matrix[i][j] < 2:
                    raise ConfigurationError("off-diagonal bonds must be >= 2 or inf")

        self.is_universal = all(
            self.matrix[i][j] == INF for i in range(n) for j in range(n) if i != j
        )
        self._reduce_cache: Dict[Word, Element] = {}
        self._right_cache: Dict[Tuple[Word, int], Element] = {}
        self._left_cache: Dict[Tuple[int, Word], Element] = {}
        self._bruhat_cache: Dict[Tuple[Word, Word], bool] = {}
        logger.debug(f"Coxeter system on {self.generators} (universal={self.is_universal})")

    @classmethod
    def universal(cls, generators: Sequence[str]) -> "CoxeterSystem":
        n = len(generators)
        return cls(generators, [[1 if i == j else INF for j in range(n)] for i in range(n)])

    @property
    def rank(self) -> int:
        return len(self.generators)

    def bond(self, s: int, t: int) -> Bond:
        return self.matrix[s][t]

    # Words and labels

    def index(self, label: str) -> int:
        try:
            return self.generators.index(label)
        except ValueError:
            raise ConfigurationError(f"unknown generator {label!r}")

    def parse_word(self, text: Union[str, Iterable[str]]) -> Word:
        """
        Parse a word from labels.

        Accepts a list of labels, a whitespace/comma separated string, or a
        concatenation of single-character labels. ``""`` and ``"1"`` give the
        empty word.
        """
        if not isinstance(text, str):
            return tuple(self.index(label) for label in text)
        text = text.strip()
        if text in ("", IDENTITY_LABEL) and IDENTITY_LABEL not in self.generators:
            return ()
        tokens = [tok for tok in re.split(r"[\s,]+", text) if tok]
        if len(tokens) == 1 and tokens[0] not in self.generators:
            if all(ch in self.generators for ch in tokens[0]):
                tokens = list(tokens[0])
        return tuple(self.index(tok) for tok in tokens)

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return IDENTITY_LABEL
        labels = [self.generators[i] for i in word]
        if all(len(label) == 1 for label in self.generators):
            return "".join(labels)
        return " ".join(labels)

    def format_element(self, x: Element) -> str:
        return self.format_word(self.word_of(x))

    def word_of(self, x: Element) -> Word:
        return x.word

    def length(self, word: Sequence[int]) -> int:
        return self.reduce(word).length

    # Word problem

    def braid_closure(self, word: Sequence[int]) -> FrozenSet[Word]:
        """All words reachable from ``word`` by braid moves"""
        start = tuple(word)
        if self.is_universal:
            return frozenset([start])
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for i in range(len(current) - 1):
                s, t = current[i], current[i + 1]
                if s == t:
                    continue
                m = self.matrix[s][t]
                if m == INF or i + m > len(current):
                    continue
                if current[i:i + m] == _alternating(s, t, m):
                    moved = current[:i] + _alternating(t, s, m) + current[i + m:]
                    if moved not in seen:
                        seen.add(moved)
                        queue.append(moved)
        return frozenset(seen)

    def reduce(self, word: Sequence[int]) -> Element:
        """Canonical element of the product of ``word``"""
        word = tuple(word)
        cached = self._reduce_cache.get(word)
        if cached is not None:
            return cached
        if self.is_universal:
            result = Element(self._free_cancel(word))
        else:
            result = self._reduce_by_closure(word)
        self._reduce_cache[word] = result
        return result

    @staticmethod
    def _free_cancel(word: Word) -> Word:
        stack: List[int] = []
        for letter in word:
            if stack and stack[-1] == letter:
                stack.pop()
            else:
                stack.append(letter)
        return tuple(stack)

    def _reduce_by_closure(self, word: Word) -> Element:
        closure = self.braid_closure(word)
        for candidate in sorted(closure):
            for i in range(len(candidate) - 1):
                if candidate[i] == candidate[i + 1]:
                    return self.reduce(candidate[:i] + candidate[i + 2:])
        return Element(min(closure))

    def reduce_by_closure(self, word: Sequence[int]) -> Element:
        """Braid-closure reduction without the universal shortcut"""
        word = tuple(word)
        closure = self.braid_closure(word) if not self.is_universal else frozenset([word])
        for candidate in sorted(closure):
            for i in range(len(candidate) - 1):
                if candidate[i] == candidate[i + 1]:
                    return self.reduce_by_closure(candidate[:i] + candidate[i + 2:])
        return Element(min(closure))

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.reduce(word).length == len(word)

    def reduced_expressions(self, x: Element) -> List[Word]:
        return sorted(self.braid_closure(x.word))

    # Multiplication and descents

    def multiply_right(self, x: Element, s: int) -> Element:
        key = (x.word, s)
        cached = self._right_cache.get(key)
        if cached is None:
            cached = self.reduce(x.word + (s,))
            self._right_cache[key] = cached
        return cached

    def multiply_left(self, s: int, x: Element) -> Element:
        key = (s, x.word)
        cached = self._left_cache.get(key)
        if cached is None:
            cached = self.reduce((s,) + x.word)
            self._left_cache[key] = cached
        return cached

    def multiply(self, x: Element, y: Element) -> Element:
        return self.reduce(x.word + y.word)

    def left_descents(self, x: Element) -> Set[int]:
        if self.is_universal:
            return {x.word[0]} if x.word else set()
        return {s for s in range(self.rank) if self.multiply_left(s, x).length < x.length}

    def right_descents(self, x: Element) -> Set[int]:
        if self.is_universal:
            return {x.word[-1]} if x.word else set()
        return {s for s in range(self.rank) if self.multiply_right(x, s).length < x.length}

    # Bruhat order

    def bruhat_leq(self, y: Element, w: Element) -> bool:
        """
        Bruhat comparison y <= w.

        Uses the recursion along the last letter s of w: if ys < y then
        y <= w iff ys <= ws, otherwise y <= w iff y <= ws. Agrees with the
        subword criterion (see ``subword_elements``).
        """
        if y.length > w.length:
            return False
        if y == w or y.is_identity():
            return True
        key = (y.word, w.word)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        s = w.word[-1]
        ws = Element(w.word[:-1])
        ys = self.multiply_right(y, s)
        if ys.length < y.length:
            result = self.bruhat_leq(ys, ws)
        else:
            result = self.bruhat_leq(y, ws)
        self._bruhat_cache[key] = result
        return result

    def subword_elements(self, word: Sequence[int]) -> Set[Element]:
        """Brute force: every element reached by some subword of ``word``"""
        word = tuple(word)
        found = set()
        for mask in itertools.product((0, 1), repeat=len(word)):
            found.add(self.reduce(tuple(letter for letter, keep in zip(word, mask) if keep)))
        return found

    def covered_by(self, w: Element) -> List[Element]:
        """Elements y <= w with l(y) = l(w) - 1, from single-letter deletions"""
        covers = set()
        for i in range(w.length):
            y = self.reduce(w.word[:i] + w.word[i + 1:])
            if y.length == w.length - 1:
                covers.add(y)
        return sorted(covers, key=lambda e: e.sort_key)

    def deletion_position(self, w: Element, y: Element) -> int:
        """First index of canonical(w) whose deletion reduces to y"""
        for i in range(w.length):
            if self.reduce(w.word[:i] + w.word[i + 1:]) == y:
                return i
        raise ValueError(f"{self.format_element(y)} is not a deletion of {self.format_element(w)}")
