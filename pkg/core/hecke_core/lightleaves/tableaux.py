# core/hecke_core/lightleaves/tableaux.py
import logging
from collections import defaultdict
from functools import lru_cache
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.hecke_core.coxeter.system import IDENTITY, Element, Word
from core.hecke_core.errors import ConfigurationError
from core.hecke_core.laurent.poly import LaurentPoly
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.parabolic.quotient import ParabolicDatum
from infrastructure.config.engine_config import TABLEAU_CACHE_SIZE

# Initialize logging
logger = logging.getLogger(__name__)


class Step(str, Enum):
    """The four light-leaf steps and what they put on the new strand"""
    STRAND = "U1"      # shape grows, identity strand
    DOT = "U0"         # shape kept, end dot
    FORK = "D1"        # shape kept, merge into the last shape strand
    FORK_DOT = "D0"    # shape shrinks, merge then end dot


STEP_DEGREE = {Step.STRAND: 0, Step.DOT: 1, Step.FORK: -1, Step.FORK_DOT: 0}


@dataclass(frozen=True)
class LightLeafTableau:
    weight_word: Word
    bits: Tuple[int, ...]
    shapes: Tuple[Element, ...]
    steps: Tuple[Step, ...]
    degree: int

    @property
    def shape(self) -> Element:
        return self.shapes[-1]

    @property
    def bit_string(self) -> str:
        return "".join(str(b) for b in self.bits)


EMPTY_TABLEAU = LightLeafTableau((), (), (IDENTITY,), (), 0)

# (bits read as a binary number, degree); the bulk walk keeps tableaux in this form
LeafState = Tuple[int, int]


class TableauEngine:
    """
    Light-leaves tableaux over a parabolic datum.

    ``parabolic=False`` switches the prefix condition off, which gives the
    ordinary (non-parabolic) Std sets of the same weight.
    """

    def __init__(self, datum: ParabolicDatum):
        self.datum = datum
        self.system = datum.system
        self._table = lru_cache(maxsize=TABLEAU_CACHE_SIZE)(self._build_table)
        # shapes interned to ids; _moves[id][s] is None until resolved, () when y*s leaves ^P W
        self._shape_ids: Dict[Element, int] = {}
        self._shapes: List[Element] = []
        self._moves: List[List[Optional[tuple]]] = []

    def extend(self, t: LightLeafTableau, s: int, bit: int, parabolic: bool = True) -> Optional[LightLeafTableau]:
        """
        Append one letter with the given bit.

        Returns None when the parabolic prefix condition rejects y*s.
        """
        y = t.shape
        ys = self.system.multiply_right(y, s)
        if parabolic and not self.datum.is_min_rep(ys):
            return None
        if ys.length > y.length:
            step = Step.STRAND if bit else Step.DOT
        else:
            step = Step.FORK if bit else Step.FORK_DOT
        new_shape = ys if step in (Step.STRAND, Step.FORK_DOT) else y
        return LightLeafTableau(
            weight_word=t.weight_word + (s,),
            bits=t.bits + (bit,),
            shapes=t.shapes + (new_shape,),
            steps=t.steps + (step,),
            degree=t.degree + STEP_DEGREE[step],
        )

    def tableau_table(self, weight: Sequence[int], parabolic: bool = True) -> Dict[Element, List[LightLeafTableau]]:
        """Every tableau of the weight grouped by shape, each group in lexicographic bit order"""
        return self._table(tuple(weight), parabolic)

    def _build_table(self, weight: Word, parabolic: bool) -> Dict[Element, List[LightLeafTableau]]:
        if parabolic and not self.datum.is_parabolic_expression(weight):
            raise ConfigurationError(f"{self.system.format_word(weight)} is not in exp_P")

        table: Dict[Element, List[LightLeafTableau]] = defaultdict(list)
        frontier = [EMPTY_TABLEAU]
        for s in weight:
            grown = []
            for t in frontier:
                for bit in (0, 1):
                    nxt = self.extend(t, s, bit, parabolic)
                    if nxt is not None:
                        grown.append(nxt)
            frontier = grown
        for t in frontier:
            table[t.shape].append(t)
        result = {shape: sorted(group, key=lambda t: t.bits) for shape, group in table.items()}
        logger.debug(f"Weight {self.system.format_word(weight)}: {len(frontier)} tableaux over {len(result)} shapes")
        return result

    def tableau_rows(self, weight: Sequence[int]) -> List[Tuple[str, str, str, int]]:
        """(weight, bits, shape, degree) rows, shapes in length-lexicographic order"""
        weight = tuple(weight)
        label = self.system.format_word(weight)
        rows = []
        for shape, group in sorted(self.tableau_table(weight).items(), key=lambda item: item[0].sort_key):
            rows.extend((label, t.bit_string, self.system.format_element(shape), t.degree) for t in group)
        return rows

    # Bulk enumeration

    def _shape_id(self, shape: Element) -> int:
        sid = self._shape_ids.get(shape)
        if sid is None:
            sid = self._shape_ids[shape] = len(self._shapes)
            self._shapes.append(shape)
            self._moves.append([None] * self.system.rank)
        return sid

    def _resolve(self, sid: int, s: int) -> tuple:
        """((shape id, degree step) for bit 0, the same for bit 1), or () when y*s is rejected"""
        y = self._shapes[sid]
        ys = self.system.multiply_right(y, s)
        if not self.datum.is_min_rep(ys):
            move = ()
        elif ys.length > y.length:
            move = ((sid, 1), (self._shape_id(ys), 0))
        else:
            move = ((self._shape_id(ys), 0), (sid, -1))
        self._moves[sid][s] = move
        return move

    def _grow(self, frontier: List[Tuple[int, int, int]], s: int) -> List[Tuple[int, int, int]]:
        moves = self._moves
        grown = []
        for bits, sid, degree in frontier:
            move = moves[sid][s]
            if move is None:
                move = self._resolve(sid, s)
            if move:
                (zero_id, zero_step), (one_id, one_step) = move
                grown.append((bits << 1, zero_id, degree + zero_step))
                grown.append((bits << 1 | 1, one_id, degree + one_step))
        return grown

    def iter_tables(self, max_len: int, reduced: bool = False) -> Iterator[Tuple[Word, Dict[Element, List[LeafState]]]]:
        """
        Parabolic tableau tables for every word of exp_P up to max_len.

        Words arrive in the preorder of ``ParabolicDatum.walk_expressions``
        and each table grows from its parent's frontier, so only one frontier
        per depth is alive. Groups are keyed by shape in length-lexicographic
        order and hold (bits, degree) pairs in bit order.
        """
        frontiers = [[(0, self._shape_id(IDENTITY), 0)]]
        for word, _ in self.datum.walk_expressions(max_len, reduced):
            depth = len(word)
            if depth:
                del frontiers[depth:]
                frontiers.append(self._grow(frontiers[depth - 1], word[-1]))
            groups: Dict[int, List[LeafState]] = defaultdict(list)
            for bits, sid, degree in frontiers[depth]:
                groups[sid].append((bits, degree))
            yield word, {self._shapes[sid]: groups[sid]
                         for sid in sorted(groups, key=lambda i: self._shapes[i].sort_key)}

    def iter_rows(self, max_len: int, reduced: bool = False) -> Iterator[Tuple[str, str, str, int]]:
        """``tableau_rows`` for every word visited by ``iter_tables``, streamed"""
        labels: Dict[Element, str] = {}
        for word, table in self.iter_tables(max_len, reduced):
            label = self.system.format_word(word)
            pattern = f"0{len(word)}b"
            for shape, group in table.items():
                shape_label = labels.get(shape)
                if shape_label is None:
                    shape_label = labels[shape] = self.system.format_element(shape)
                for bits, degree in group:
                    yield label, format(bits, pattern) if word else "", shape_label, degree

    def enumerate_tableaux(self, weight: Sequence[int], shape: Element, parabolic: bool = True) -> List[LightLeafTableau]:
        return list(self.tableau_table(weight, parabolic).get(shape, []))

    def graded_dim(self, weight: Sequence[int], shape: Element, ring: CoefficientRing) -> LaurentPoly:
        """Sum of v^deg(t) over Std^P_{<=weight}(shape)"""
        terms = defaultdict(int)
        for t in self.enumerate_tableaux(weight, shape):
            terms[t.degree] += 1
        return LaurentPoly(ring, terms)

    def graded_character(self, weight: Sequence[int], ring: CoefficientRing) -> Dict[Element, LaurentPoly]:
        character = {}
        for shape, group in self.tableau_table(weight).items():
            terms = defaultdict(int)
            for t in group:
                terms[t.degree] += 1
            character[shape] = LaurentPoly(ring, terms)
        return dict(sorted(character.items(), key=lambda item: item[0].sort_key))

    def euler_sum(self, weight: Sequence[int], ring: CoefficientRing) -> LaurentPoly:
        """Sum over shapes x of (-v)^l(x) graded_dim(weight, x)"""
        total = LaurentPoly.zero(ring)
        for shape, dim in self.graded_character(weight, ring).items():
            total = total + LaurentPoly.signed_power(ring, shape.length) * dim
        return total

    def euler_holds(self, weight: Sequence[int], ring: CoefficientRing) -> Tuple[LaurentPoly, bool]:
        """The Euler sum and whether it equals 1 on the empty word and 0 otherwise"""
        total = self.euler_sum(weight, ring)
        expected = LaurentPoly.constant(ring) if not tuple(weight) else LaurentPoly.zero(ring)
        return total, total == expected

    # Branching

    def branching_holds(self, weight: Sequence[int], s: int, y: Element, ring: CoefficientRing) -> bool:
        """
        Check the two restriction identities for x = ys > y, both in ^P W.

            dim(w s, x) = dim(w, y) + v^-1 dim(w, x)
            dim(w s, y) = v dim(w, y) + dim(w, x)
        """
        weight = tuple(weight)
        x = self.system.multiply_right(y, s)
        if x.length < y.length or not (self.datum.is_min_rep(x) and self.datum.is_min_rep(y)):
            raise ConfigurationError("branching needs x = ys > y with both in the quotient")
        extended = weight + (s,)
        dim = lambda w, z: self.graded_dim(w, z, ring)
        first = dim(extended, x) == dim(weight, y) + dim(weight, x).shift(-1)
        second = dim(extended, y) == dim(weight, y).shift(1) + dim(weight, x)
        return first and second

    def vanishing_holds(self, weight: Sequence[int], s: int, y: Element, ring: CoefficientRing) -> bool:
        """If y > ys and ys is outside ^P W, nothing of shape y survives in weight w s"""
        ys = self.system.multiply_right(y, s)
        if ys.length > y.length or self.datum.is_min_rep(ys):
            raise ConfigurationError("vanishing needs ys < y with ys outside the quotient")
        return self.graded_dim(tuple(weight) + (s,), y, ring).is_zero()
