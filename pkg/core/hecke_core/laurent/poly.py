# core/hecke_core/laurent/poly.py
import logging
import re
from collections import defaultdict
from typing import Dict, Iterator, Mapping, Tuple

from core.hecke_core.errors import HeckeError, RingMismatchError
from core.hecke_core.laurent.rings import CoefficientRing

# Initialize logging
logger = logging.getLogger(__name__)

_TERM_PATTERN = re.compile(r"^([+-]?[^*]+)(?:\*v\^(-?\d+))?$")


class LaurentPoly:
    """
    Sparse exact Laurent polynomial in v.

    Only nonzero coefficients are stored, so equal polynomials have identical
    term maps. Instances are never mutated after construction.
    """
    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: CoefficientRing, terms: Mapping[int, object] = None):
        self.ring = ring
        cleaned = {}
        for exp, coeff in (terms or {}).items():
            value = ring.normalize(coeff)
            if not ring.is_zero(value):
                cleaned[int(exp)] = value
        self._terms: Dict[int, object] = dict(sorted(cleaned.items()))
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, ring: CoefficientRing) -> "LaurentPoly":
        return cls(ring)

    @classmethod
    def constant(cls, ring: CoefficientRing, value=1) -> "LaurentPoly":
        return cls(ring, {0: value})

    @classmethod
    def monomial(cls, ring: CoefficientRing, exp: int, coeff=1) -> "LaurentPoly":
        return cls(ring, {exp: coeff})

    @classmethod
    def signed_power(cls, ring: CoefficientRing, k: int) -> "LaurentPoly":
        """(-v)^k"""
        return cls(ring, {k: -1 if k % 2 else 1})

    # Accessors

    @property
    def terms(self) -> Dict[int, object]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, object]]:
        return iter(self._terms.items())

    def coefficient(self, exp: int):
        return self._terms.get(exp, self.ring.zero)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise HeckeError("degree of the zero polynomial")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise HeckeError("degree of the zero polynomial")
        return max(self._terms)

    def evaluate_at_one(self):
        """Ungraded dimension: the sum of all coefficients"""
        total = self.ring.zero
        for coeff in self._terms.values():
            total = self.ring.add(total, coeff)
        return total

    # Arithmetic

    def _check(self, other: "LaurentPoly"):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"cannot combine polynomials over {self.ring} and {other.ring}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        merged = dict(self._terms)
        for exp, coeff in other._terms.items():
            merged[exp] = self.ring.add(merged.get(exp, self.ring.zero), coeff)
        return LaurentPoly(self.ring, merged)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: self.ring.neg(c) for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def scale(self, scalar) -> "LaurentPoly":
        value = self.ring.normalize(scalar)
        return LaurentPoly(self.ring, {e: self.ring.mul(c, value) for e, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k"""
        return LaurentPoly(self.ring, {e + k: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        return bar_involution(self)

    # Comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, tuple(self._terms.items())))
        return self._hash

    # Serialization

    def to_json(self) -> Dict[str, object]:
        return {str(exp): self.ring.serialize(coeff) for exp, coeff in self._terms.items()}

    @classmethod
    def from_json(cls, ring: CoefficientRing, data: Mapping[str, object]) -> "LaurentPoly":
        return cls(ring, {int(exp): ring.parse(coeff) for exp, coeff in data.items()})

    def to_sparse_text(self) -> str:
        """Sparse ``c*v^k`` notation joined by ``+``; ``0`` for the zero polynomial"""
        if not self._terms:
            return "0"
        return " + ".join(f"{coeff}*v^{exp}" for exp, coeff in self._terms.items())

    @classmethod
    def from_sparse_text(cls, ring: CoefficientRing, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls(ring)
        terms = defaultdict(lambda: ring.zero)
        for chunk in text.split(" + "):
            match = _TERM_PATTERN.match(chunk.strip())
            if not match:
                raise HeckeError(f"cannot parse Laurent term {chunk!r}")
            exp = int(match.group(2) or 0)
            terms[exp] = ring.add(terms[exp], ring.parse(match.group(1)))
        return cls(ring, terms)

    def __repr__(self):
        return f"LaurentPoly({self.to_sparse_text()} over {self.ring})"


def multiply(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    Exact convolution product.

    Args:
        a: left factor
        b: right factor over the same ring

    Returns:
        The product in canonical form
    """
    a._check(b)
    ring = a.ring
    product = defaultdict(lambda: ring.zero)
    for ea, ca in a.items():
        for eb, cb in b.items():
            product[ea + eb] = ring.add(product[ea + eb], ring.mul(ca, cb))
    return LaurentPoly(ring, product)


def bar_involution(a: LaurentPoly) -> LaurentPoly:
    """Replace v by v^-1"""
    return LaurentPoly(a.ring, {-exp: coeff for exp, coeff in a.items()})
