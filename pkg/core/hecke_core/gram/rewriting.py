# core/hecke_core/gram/rewriting.py
import logging
import random
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from core.hecke_core.coxeter.system import Word
from core.hecke_core.errors import InternalConsistencyError, UnsupportedConfigurationError
from core.hecke_core.gram.diagrams import DiagramMorphism, GeneratorKind, Layer
from core.hecke_core.parabolic.quotient import ParabolicDatum
from core.hecke_core.realisation.quantum import CartanData

# Initialize logging
logger = logging.getLogger(__name__)

Block = FrozenSet[int]


@dataclass(frozen=True)
class PlanarPartition:
    """
    Normal form of a polynomial-free one-colour-per-component diagram.

    Points ``0 .. n-1`` are the source (bottom) strands, ``n .. n+m-1`` the
    target (top) strands, both left to right. Each block is a connected
    monochrome tree; blocks never cross.
    """
    source: Word
    target: Word
    blocks: FrozenSet[Block]

    @classmethod
    def identity(cls, word: Sequence[int]) -> "PlanarPartition":
        word = tuple(word)
        n = len(word)
        return cls(word, word, frozenset(frozenset((i, n + i)) for i in range(n)))

    @property
    def size(self) -> int:
        return len(self.source) + len(self.target)

    def colour(self, point: int) -> int:
        n = len(self.source)
        return self.source[point] if point < n else self.target[point - n]

    def block_of(self, point: int) -> Block:
        for block in self.blocks:
            if point in block:
                return block
        raise KeyError(point)

    def circular_order(self) -> List[int]:
        """Bottom left to right, then top right to left"""
        n, m = len(self.source), len(self.target)
        return list(range(n)) + [n + j for j in reversed(range(m))]

    @property
    def through_degree(self) -> int:
        n = len(self.source)
        return sum(1 for b in self.blocks if min(b) < n <= max(b))

    def is_identity(self) -> bool:
        return self.source == self.target and self == PlanarPartition.identity(self.source)

    # Regions

    def regions(self) -> Tuple[List[int], Dict[Block, List[Tuple[int, int]]]]:
        """
        Region label per gap, plus the sectors of every block.

        Gap ``i`` sits between ``order[i]`` and ``order[i+1]`` (cyclically);
        gap ``size-1`` touches the left edge. A block's sector at point q is
        the region of the gap just before q; sectors are listed in circular
        order as (position, region).
        """
        order = self.circular_order()
        size = len(order)
        position = {p: i for i, p in enumerate(order)}
        previous_in_block = {}
        sorted_blocks = {}
        for block in self.blocks:
            points = sorted(block, key=position.__getitem__)
            sorted_blocks[block] = points
            for a, q in enumerate(points):
                previous_in_block[q] = points[a - 1]

        region = [-1] * size
        label = 0
        for start in range(size):
            if region[start] >= 0:
                continue
            gap = start
            while region[gap] < 0:
                region[gap] = label
                following = order[(gap + 1) % size]
                gap = position[previous_in_block[following]]
            label += 1

        sectors = {
            block: [(position[q], region[(position[q] - 1) % size]) for q in points]
            for block, points in sorted_blocks.items()
        }
        return region, sectors

    def left_blocks(self) -> List[Block]:
        """Blocks with a sector in the region touching the left edge"""
        if self.size == 0:
            return []
        region, sectors = self.regions()
        left = region[self.size - 1]
        return [block for block, sec in sectors.items() if any(r == left for _, r in sec)]

    # Realisation as a diagram

    def to_morphism(self) -> DiagramMorphism:
        """
        Canonical diagram of the partition.

        Innermost one-sided blocks are closed by a left comb of merges and an
        end dot; each through block is then combed onto a single strand. The
        top side is built the same way and flipped.
        """
        n = len(self.source)
        through = [b for b in self.blocks if min(b) < n <= max(b)]
        bottom_points = list(range(n))
        top_points = [n + j for j in range(len(self.target))]
        lower = _comb(self.source, bottom_points, self.blocks, through)
        upper = _comb(self.target, top_points, self.blocks, through)
        if lower.target != upper.target:
            raise InternalConsistencyError("through blocks disagree between the two sides")
        return upper.dual().compose(lower)


def _comb(word: Word, points: List[int], blocks: FrozenSet[Block], through: List[Block]) -> DiagramMorphism:
    members = set(points)
    owner = {p: b for b in blocks for p in b if p in members}
    current = list(points)
    layers: List[Layer] = []
    while True:
        closed = False
        for block in sorted(set(owner.values()), key=min):
            if block in through:
                continue
            indices = [i for i, p in enumerate(current) if owner[p] == block]
            if indices != list(range(indices[0], indices[0] + len(indices))):
                continue
            first, colour = indices[0], word[points.index(current[indices[0]])]
            for _ in range(len(indices) - 1):
                layers.append(Layer(GeneratorKind.MERGE, colour, first))
            layers.append(Layer(GeneratorKind.ENDDOT, colour, first))
            for p in [current[i] for i in indices]:
                del owner[p]
            current = [p for p in current if p in owner]
            closed = True
            break
        if not closed:
            break
    i = 0
    while i < len(current):
        block = owner[current[i]]
        colour = word[points.index(current[i])]
        j = i
        while j + 1 < len(current) and owner[current[j + 1]] == block:
            layers.append(Layer(GeneratorKind.MERGE, colour, i))
            j += 1
        current = current[:i + 1] + current[j + 1:]
        i += 1
    return DiagramMorphism(word, tuple(layers))


class RewritingEngine:
    """
    Normalizes spot/fork diagrams of a universal Coxeter system in the
    anti-spherical quotient.

    Every intermediate term is a ``PlanarPartition`` with a coefficient.
    Barbells produced by end dots are pushed to the left edge as soon as they
    appear, breaking the strands they cross, and die there.
    """

    def __init__(self, datum: ParabolicDatum, cartan: CartanData):
        if not datum.system.is_universal:
            raise UnsupportedConfigurationError(
                "diagram rewriting is only available for universal Coxeter systems",
                kind="unsupported_finite_bond",
            )
        self.datum = datum
        self.cartan = cartan
        self.ring = cartan.ring

    def normalize(self, diagram: DiagramMorphism, rng: Optional[random.Random] = None) -> Dict[PlanarPartition, object]:
        """
        Normal form of ``diagram`` as partition -> coefficient.

        With ``rng`` the diagram is first re-sliced at random and terms are
        processed in random order; the result must not change.

        Terminates after one pass over the layers: every layer maps a
        barbell-free partition to finitely many barbell-free partitions, since
        a barbell left by an end dot is pushed all the way to the left edge
        before the next layer is read (see ``push_to_left``).
        """
        ring = self.ring
        if rng is not None:
            diagram = diagram.interchange(rng)
        start = PlanarPartition.identity(diagram.source)
        scalar = ring.normalize(diagram.scalar)
        state: Dict[PlanarPartition, object] = {}
        if not ring.is_zero(scalar) and not self.is_killed(start):
            state[start] = scalar

        for layer in diagram.layers:
            items = list(state.items())
            if rng is not None:
                rng.shuffle(items)
            accumulated = defaultdict(lambda: ring.zero)
            for partition, coeff in items:
                for term_coeff, term in self.apply_layer(partition, layer):
                    accumulated[term] = ring.add(accumulated[term], ring.mul(coeff, term_coeff))
            state = {p: c for p, c in accumulated.items() if not ring.is_zero(c)}
        logger.debug(f"Normalized {len(diagram.layers)} layers into {len(state)} terms")
        return state

    def is_killed(self, partition: PlanarPartition) -> bool:
        """Anti-spherical kill: a block of a parabolic colour reaches the left edge"""
        if not self.datum.parabolic:
            return False
        return any(partition.colour(next(iter(b))) in self.datum.parabolic for b in partition.left_blocks())

    def apply_layer(self, partition: PlanarPartition, layer: Layer) -> List[Tuple[object, PlanarPartition]]:
        ring = self.ring
        if layer.kind == GeneratorKind.STARTDOT:
            result = [(ring.one, _startdot(partition, layer.offset, layer.colour))]
        elif layer.kind == GeneratorKind.SPLIT:
            result = [(ring.one, _split(partition, layer.offset))]
        elif layer.kind == GeneratorKind.MERGE:
            merged = _merge(partition, layer.offset)
            result = [] if merged is None else [(ring.one, merged)]
        else:
            reduced, gap = _enddot(partition, layer.offset)
            if gap is None:
                result = [(ring.one, reduced)]
            elif self.is_killed(reduced):
                result = []
            else:
                root = [ring.zero] * self.cartan.rank
                root[layer.colour] = ring.one
                result = self.push_to_left(reduced, root, gap)
        return [(c, p) for c, p in result if not self.is_killed(p)]

    def push_to_left(self, partition: PlanarPartition, root: List[object], gap: int) -> List[Tuple[object, PlanarPartition]]:
        """
        Move the linear polynomial ``root`` from ``gap`` to the left edge.

        Crossing a block of colour s leaves s(f) behind and adds the term
        <a_s^v, f> times the partition with that block broken along the
        crossing; whatever reaches the left edge is zero.

        Each crossing moves the polynomial one block closer to the left region
        in the region/block tree, so the loop ends after at most as many steps
        as that tree has blocks. Every emitted term carries no polynomial.
        """
        ring = self.ring
        size = partition.size
        if size == 0:
            return []
        region, sectors = partition.regions()
        left = region[size - 1]
        origin = region[gap]
        if origin == left:
            return []

        path = _block_path(sectors, origin, left)
        terms: List[Tuple[object, PlanarPartition]] = []
        f = list(root)
        depth = _region_depths(sectors, left)
        for block, from_region, to_region in path:
            if depth[to_region] >= depth[from_region]:
                raise InternalConsistencyError(
                    f"polynomial moved away from the left edge: region depth {depth[from_region]} -> {depth[to_region]}"
                )
            s = partition.colour(next(iter(block)))
            pairing = ring.zero
            for t, coeff in enumerate(f):
                pairing = ring.add(pairing, ring.mul(coeff, self.cartan.pairing(s, t)))
            if not ring.is_zero(pairing):
                terms.append((pairing, _break(partition, block, sectors[block], from_region, to_region)))
                f[s] = ring.sub(f[s], pairing)
        return terms


def _regions_by_block(sectors: Dict[Block, List[Tuple[int, int]]]) -> Dict[int, List[Block]]:
    by_region = defaultdict(list)
    for block, sec in sectors.items():
        for _, r in sec:
            by_region[r].append(block)
    return by_region


def _region_depths(sectors: Dict[Block, List[Tuple[int, int]]], target: int) -> Dict[int, int]:
    """Number of blocks between each region and ``target``"""
    by_region = _regions_by_block(sectors)
    depth = {target: 0}
    queue = deque([target])
    while queue:
        r = queue.popleft()
        for block in by_region[r]:
            for _, nxt in sectors[block]:
                if nxt not in depth:
                    depth[nxt] = depth[r] + 1
                    queue.append(nxt)
    return depth


def _block_path(sectors: Dict[Block, List[Tuple[int, int]]], origin: int, target: int) -> List[Tuple[Block, int, int]]:
    """Blocks crossed on the unique route from one region to another in the region/block tree"""
    by_region = _regions_by_block(sectors)
    parent: Dict[int, Tuple[Block, int]] = {origin: None}
    queue = deque([origin])
    while queue:
        r = queue.popleft()
        if r == target:
            break
        for block in by_region[r]:
            for _, nxt in sectors[block]:
                if nxt not in parent:
                    parent[nxt] = (block, r)
                    queue.append(nxt)
    if target not in parent:
        raise InternalConsistencyError("left region unreachable from a barbell")
    path = []
    r = target
    while parent[r] is not None:
        block, previous = parent[r]
        path.append((block, previous, r))
        r = previous
    return list(reversed(path))


def _relabel(source: Word, target: Word, blocks, order: List[int]) -> PlanarPartition:
    """Rebuild with top points renumbered by their new left-to-right ``order``"""
    n = len(source)
    mapping = {old: n + j for j, old in enumerate(order)}
    new_blocks = frozenset(
        frozenset(p if p < n else mapping[p] for p in block) for block in blocks if block
    )
    return PlanarPartition(source, target, new_blocks)


def _top_ids(partition: PlanarPartition) -> List[int]:
    n = len(partition.source)
    return [n + j for j in range(len(partition.target))]


def _startdot(partition: PlanarPartition, k: int, colour: int) -> PlanarPartition:
    top = _top_ids(partition)
    fresh = partition.size
    order = top[:k] + [fresh] + top[k:]
    target = partition.target[:k] + (colour,) + partition.target[k:]
    return _relabel(partition.source, target, set(partition.blocks) | {frozenset((fresh,))}, order)


def _split(partition: PlanarPartition, k: int) -> PlanarPartition:
    top = _top_ids(partition)
    point = top[k]
    left, right = partition.size, partition.size + 1
    block = partition.block_of(point)
    blocks = (set(partition.blocks) - {block}) | {(block - {point}) | {left, right}}
    order = top[:k] + [left, right] + top[k + 1:]
    target = partition.target[:k] + (partition.target[k],) * 2 + partition.target[k + 1:]
    return _relabel(partition.source, target, blocks, order)


def _merge(partition: PlanarPartition, k: int) -> Optional[PlanarPartition]:
    """Join top strands k, k+1; None if they already share a block (a needle)"""
    top = _top_ids(partition)
    a, b = top[k], top[k + 1]
    block_a, block_b = partition.block_of(a), partition.block_of(b)
    if block_a == block_b:
        return None
    joined = partition.size
    blocks = (set(partition.blocks) - {block_a, block_b}) | {(block_a | block_b) - {a, b} | {joined}}
    order = top[:k] + [joined] + top[k + 2:]
    target = partition.target[:k] + (partition.target[k],) + partition.target[k + 2:]
    return _relabel(partition.source, target, blocks, order)


def _enddot(partition: PlanarPartition, k: int) -> Tuple[PlanarPartition, Optional[int]]:
    """
    Cap top strand k with a dot.

    Returns the new partition and, when the strand was a lone component, the
    gap (in the new partition) where the resulting barbell sits.
    """
    top = _top_ids(partition)
    point = top[k]
    block = partition.block_of(point)
    blocks = (set(partition.blocks) - {block}) | {block - {point}}
    order = top[:k] + top[k + 1:]
    target = partition.target[:k] + partition.target[k + 1:]
    reduced = _relabel(partition.source, target, blocks, order)
    if len(block) > 1:
        return reduced, None
    n, m = len(reduced.source), len(reduced.target)
    return reduced, n + m - 1 - k


def _break(partition: PlanarPartition, block: Block, sectors: List[Tuple[int, int]],
           from_region: int, to_region: int) -> PlanarPartition:
    """Split ``block`` along the cut between two of its sectors"""
    order = partition.circular_order()
    points = sorted(block, key=order.index)
    regions = [r for _, r in sectors]
    a, c = regions.index(from_region), regions.index(to_region)
    r = len(points)
    first = set()
    i = a
    while i != c:
        first.add(points[i])
        i = (i + 1) % r
    second = set(points) - first
    blocks = (set(partition.blocks) - {block}) | {frozenset(first), frozenset(second)}
    return PlanarPartition(partition.source, partition.target, frozenset(blocks))
