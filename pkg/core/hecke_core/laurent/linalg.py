# core/hecke_core/laurent/linalg.py
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

from sympy import GF
from sympy.polys.matrices import DomainMatrix

from core.hecke_core.laurent.rings import CoefficientRing, RingKind

# Initialize logging
logger = logging.getLogger(__name__)

Rows = Sequence[Sequence[object]]


def _domain(ring: CoefficientRing):
    return ring.domain


def _element(domain, ring: CoefficientRing, value):
    if ring.kind == RingKind.RATIONALS:
        value = Fraction(value)
        return domain(value.numerator, value.denominator)
    return domain(int(value))


def _back(ring: CoefficientRing, value):
    if ring.kind == RingKind.RATIONALS:
        return Fraction(int(value.numerator), int(value.denominator))
    return ring.normalize(int(value))


def domain_matrix(rows: Rows, ring: CoefficientRing, ncols: Optional[int] = None) -> DomainMatrix:
    """Wrap ring elements in a sympy DomainMatrix over ZZ, QQ or GF(p)"""
    domain = _domain(ring)
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[_element(domain, ring, x) for x in row] for row in rows]
    return DomainMatrix(data, (nrows, ncols), domain)


def rank(rows: Rows, ring: CoefficientRing, ncols: Optional[int] = None) -> int:
    if not rows or not rows[0]:
        return 0
    matrix = domain_matrix(rows, ring, ncols)
    if not matrix.domain.is_Field:
        matrix = matrix.convert_to(matrix.domain.get_field())
    _, pivots = matrix.rref()
    return len(pivots)


def determinant(rows: Rows, ring: CoefficientRing):
    if not rows:
        return ring.one
    if any(len(row) != len(rows) for row in rows):
        raise ValueError("determinant of a non-square matrix")
    return _back(ring, domain_matrix(rows, ring).det())


def matmul(left: Rows, right: Rows, ring: CoefficientRing, inner: int) -> List[List[object]]:
    """Product of an (a x inner) and an (inner x b) matrix given as row lists"""
    ncols = len(right[0]) if right else 0
    result = []
    for row in left:
        out = [ring.zero] * ncols
        for k in range(inner):
            if ring.is_zero(row[k]):
                continue
            for j in range(ncols):
                out[j] = ring.add(out[j], ring.mul(row[k], right[k][j]))
        result.append(out)
    return result


def reduce_rows(rows: Rows, target: CoefficientRing) -> List[List[object]]:
    """Map integer or rational entries into another ring"""
    return [[target.from_rational(Fraction(x)) for x in row] for row in rows]


def least_gf2_solution(equations: Sequence[Sequence[int]], rhs: Sequence[int], nvars: int) -> Optional[List[int]]:
    """
    Lexicographically least solution of a linear system over GF(2).

    The variable order is x_0 > x_1 > ... in significance. Columns are
    reversed before row reduction, so pivots land on the latest variables
    and the free ones (all set to 0) are the earliest possible.

    Returns:
        The solution bits, or None when the system is inconsistent
    """
    if nvars == 0:
        return [] if not any(rhs) else None
    if not equations:
        return [0] * nvars
    domain = GF(2)
    augmented = [[domain(row[nvars - 1 - j] % 2) for j in range(nvars)] + [domain(b % 2)]
                 for row, b in zip(equations, rhs)]
    matrix = DomainMatrix(augmented, (len(augmented), nvars + 1), domain)
    reduced, pivots = matrix.rref()
    if nvars in pivots:
        return None
    entries = reduced.to_Matrix().tolist()
    solution = [0] * nvars
    for r, pivot in enumerate(pivots):
        solution[nvars - 1 - pivot] = int(entries[r][nvars]) % 2
    logger.debug(f"GF(2) solve: {len(equations)} equations, {nvars} unknowns, {len(pivots)} pivots")
    return solution
