# core/hecke_core/laurent/rings.py
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Optional, Union

from sympy import GF, QQ, ZZ, isprime

from core.hecke_core.errors import ConfigurationError, HeckeError

# Initialize logging
logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class RingKind(str, Enum):
    INTEGERS = "integers"
    RATIONALS = "rationals"
    PRIME_FIELD = "prime_field"


@dataclass(frozen=True)
class CoefficientRing:
    """
    Ground ring for every exact computation.

    Arithmetic runs in the matching sympy domain (ZZ, QQ or GF(p)); elements
    are handed out as plain Python values: ``int`` over the integers,
    ``Fraction`` over the rationals and least non-negative residues over GF(p).
    """
    kind: RingKind
    p: Optional[int] = None

    def __post_init__(self):
        if self.kind == RingKind.PRIME_FIELD:
            if self.p is None or not isprime(self.p):
                raise ConfigurationError(f"prime_field needs a prime modulus, got {self.p}")
        elif self.p is not None:
            raise ConfigurationError(f"modulus given for ring kind {self.kind.value}")

    # Constructors

    @classmethod
    def integers(cls) -> "CoefficientRing":
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> "CoefficientRing":
        return cls(RingKind.RATIONALS)

    @classmethod
    def prime_field(cls, p: int) -> "CoefficientRing":
        return cls(RingKind.PRIME_FIELD, p)

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "CoefficientRing":
        """Build a ring from a descriptor such as {"type": "prime_field", "p": 3}"""
        try:
            kind = RingKind(data.get("type", "integers"))
        except ValueError:
            raise ConfigurationError(f"unknown coefficient ring {data.get('type')!r}")
        return cls(kind, data.get("p") if kind == RingKind.PRIME_FIELD else None)

    def to_json(self) -> Dict[str, Any]:
        if self.kind == RingKind.PRIME_FIELD:
            return {"type": self.kind.value, "p": self.p}
        return {"type": self.kind.value}

    def __str__(self):
        if self.kind == RingKind.PRIME_FIELD:
            return f"GF({self.p})"
        return "ZZ" if self.kind == RingKind.INTEGERS else "QQ"

    # Element handling

    @property
    def domain(self):
        """The sympy domain doing the arithmetic"""
        return _domain_for(self.kind, self.p)

    @property
    def is_field(self) -> bool:
        return self.domain.is_Field

    @property
    def zero(self):
        return self._out(self.domain.zero)

    @property
    def one(self):
        return self._out(self.domain.one)

    def _in(self, a):
        if self.kind == RingKind.RATIONALS:
            return self.domain(a.numerator, a.denominator)
        return self.domain(a)

    def _out(self, x):
        if self.kind == RingKind.RATIONALS:
            return Fraction(int(x.numerator), int(x.denominator))
        return int(x)

    def normalize(self, value: Scalar):
        """Coerce an integer or rational into the canonical element representation"""
        if self.kind == RingKind.INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise HeckeError(f"{value} is not an integer")
                value = value.numerator
            return self._out(self.domain(int(value)))
        return self.from_rational(Fraction(value))

    def from_rational(self, value: Fraction):
        """Reduce a rational number into the ring"""
        value = Fraction(value)
        if self.kind == RingKind.PRIME_FIELD:
            denominator = self.domain(value.denominator)
            if self.domain.is_zero(denominator):
                raise HeckeError(f"{value} has no image in GF({self.p})")
            return self._out(self.domain.quo(self.domain(value.numerator), denominator))
        if self.kind == RingKind.RATIONALS:
            return self._out(self.domain(value.numerator, value.denominator))
        return self.normalize(value)

    def add(self, a, b):
        return self._out(self.domain.add(self._in(a), self._in(b)))

    def sub(self, a, b):
        return self._out(self.domain.sub(self._in(a), self._in(b)))

    def neg(self, a):
        return self._out(self.domain.neg(self._in(a)))

    def mul(self, a, b):
        return self._out(self.domain.mul(self._in(a), self._in(b)))

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        x = self._in(a)
        if self.domain.is_zero(x):
            return False
        return self.domain.is_Field or self.domain.is_one(x) or self.domain.is_one(-x)

    def inverse(self, a):
        if not self.is_unit(a):
            raise HeckeError(f"{a} is not invertible in {self}")
        return self._out(self.domain.revert(self._in(a)))

    def serialize(self, a) -> Union[str, int]:
        """Integers and rationals as strings, residues as plain ints"""
        if self.kind == RingKind.PRIME_FIELD:
            return int(a)
        return str(a)

    def parse(self, raw: Union[str, int]):
        if self.kind == RingKind.PRIME_FIELD:
            return self._out(self.domain(int(raw)))
        return self.normalize(Fraction(raw))


@lru_cache(maxsize=None)
def _domain_for(kind: RingKind, p: Optional[int]):
    if kind == RingKind.INTEGERS:
        return ZZ
    if kind == RingKind.RATIONALS:
        return QQ
    return GF(p, symmetric=False)
