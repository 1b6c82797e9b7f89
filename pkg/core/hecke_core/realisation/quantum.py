# core/hecke_core/realisation/quantum.py
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.hecke_core.coxeter.system import INF, CoxeterSystem
from core.hecke_core.errors import ConfigurationError
from core.hecke_core.laurent.rings import CoefficientRing
from infrastructure.config.engine_config import DEFAULT_UNIVERSAL_CARTAN

# Initialize logging
logger = logging.getLogger(__name__)


class Side(str, Enum):
    X = "x"
    Y = "y"


@dataclass(frozen=True)
class BicolouredPair:
    """x = -<a_s^v, a_t>, y = -<a_t^v, a_s>"""
    x: object
    y: object


@dataclass(frozen=True)
class JWCoefficient:
    index: int
    numerator: object
    denominator: object
    invertible: bool


class CartanData:
    """Cartan pairings <a_s^v, a_t>, stored as ring elements aligned with the generators"""

    def __init__(self, ring: CoefficientRing, pairings: Sequence[Sequence[object]]):
        self.ring = ring
        n = len(pairings)
        if any(len(row) != n for row in pairings):
            raise ConfigurationError("Cartan matrix must be square")
        # integral lift, used where the computation runs over QQ before reduction
        self.rational_pairings: List[List[Fraction]] = [[Fraction(a) for a in row] for row in pairings]
        self.pairings: List[List[object]] = [[ring.normalize(a) for a in row] for row in pairings]
        for s in range(n):
            if self.pairings[s][s] != ring.normalize(2):
                raise ConfigurationError(f"diagonal Cartan entry {s} must be 2")

    @classmethod
    def default_for(cls, system: CoxeterSystem, ring: CoefficientRing) -> "CartanData":
        """2 on the diagonal, the universal default for inf bonds, 0 for m = 2, -1 otherwise"""
        rows = []
        for s in range(system.rank):
            row = []
            for t in range(system.rank):
                m = system.bond(s, t)
                if s == t:
                    row.append(2)
                elif m == INF:
                    row.append(DEFAULT_UNIVERSAL_CARTAN)
                elif m == 2:
                    row.append(0)
                else:
                    row.append(-1)
            rows.append(row)
        return cls(ring, rows)

    @property
    def rank(self) -> int:
        return len(self.pairings)

    def pairing(self, s: int, t: int):
        return self.pairings[s][t]

    def bicoloured_pair(self, s: int, t: int) -> BicolouredPair:
        return BicolouredPair(x=self.ring.neg(self.pairings[s][t]), y=self.ring.neg(self.pairings[t][s]))


def quantum_numbers(k: int, pair: BicolouredPair, ring: CoefficientRing) -> Tuple[List[object], List[object]]:
    """
    Both bicoloured sequences [0..k]_x and [0..k]_y.

    Uses [2]_x [j]_y = [j+1]_x + [j-1]_x and the mirrored rule for y.
    """
    if k < 0:
        raise ConfigurationError("quantum numbers need k >= 0")
    qx = [ring.zero, ring.one]
    qy = [ring.zero, ring.one]
    for j in range(1, k):
        qx.append(ring.sub(ring.mul(pair.x, qy[j]), qx[j - 1]))
        qy.append(ring.sub(ring.mul(pair.y, qx[j]), qy[j - 1]))
    return qx[:k + 1], qy[:k + 1]


def quantum_number(k: int, side: Side, pair: BicolouredPair, ring: CoefficientRing):
    qx, qy = quantum_numbers(k, pair, ring)
    return qx[k] if Side(side) == Side.X else qy[k]


def validate_realisation(m, pair: BicolouredPair, ring: CoefficientRing) -> bool:
    """Balanced realisation check for one bond: [m] = 0 and [m-1] = 1 on both sides"""
    if m == INF:
        return True
    if m < 2:
        raise ConfigurationError(f"bond strength must be >= 2, got {m}")
    qx, qy = quantum_numbers(int(m), pair, ring)
    valid = (
        ring.is_zero(qx[m]) and ring.is_zero(qy[m])
        and qx[m - 1] == ring.one and qy[m - 1] == ring.one
    )
    logger.debug(f"Realisation check m={m}, x={pair.x}, y={pair.y}: {valid}")
    return valid


def validate_all(system: CoxeterSystem, cartan: CartanData) -> List[Tuple[int, int, bool]]:
    """Per-bond validation report (s < t)"""
    report = []
    for s in range(system.rank):
        for t in range(s + 1, system.rank):
            pair = cartan.bicoloured_pair(s, t)
            report.append((s, t, validate_realisation(system.bond(s, t), pair, cartan.ring)))
    return report


def jw_coefficient_sequence(m: int, pair: BicolouredPair, start: Side, ring: CoefficientRing) -> List[JWCoefficient]:
    """
    Correction coefficients for the Jones-Wenzl recursion JW^2 .. JW^m.

    Args:
        m: top index, at least 2
        pair: bicoloured pair of the bond
        start: colour side the alternating word starts with
        ring: coefficient ring used for the invertibility flag

    Returns:
        One entry per index n: [2k-1]/[2k] for n = 2k+1 and [2k-2]/[2k-1] for n = 2k
    """
    if m == INF or m < 2:
        raise ConfigurationError("Jones-Wenzl coefficients need a finite m >= 2")
    qx, qy = quantum_numbers(int(m), pair, ring)
    q = qx if Side(start) == Side.X else qy
    sequence = []
    for n in range(2, int(m) + 1):
        k = n // 2
        if n % 2:
            num, den = q[2 * k - 1], q[2 * k]
        else:
            num, den = q[2 * k - 2], q[2 * k - 1]
        sequence.append(JWCoefficient(n, num, den, ring.is_unit(den)))
    return sequence


def start_side(start: Optional[str]) -> Side:
    """Map a colour name to the side of its quantum numbers"""
    if start in (None, "sigma", "σ", "x", "s"):
        return Side.X
    if start in ("tau", "τ", "y", "t"):
        return Side.Y
    raise ConfigurationError(f"unknown start colour {start!r}")
