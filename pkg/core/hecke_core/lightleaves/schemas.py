# core/hecke_core/lightleaves/schemas.py
from typing import List, Optional

from pydantic import BaseModel

from core.hecke_core.cli.schemas import RunConfig


class TableauxRequest(BaseModel):
    """Schema for listing the tableaux of one weight word"""
    config: RunConfig
    weight: str


class TableauRow(BaseModel):
    weight: str
    bits: str
    shape: str
    degree: int


class TableauxResponse(BaseModel):
    rows: List[TableauRow]
    count: int


class EulerRequest(BaseModel):
    """Schema for an Euler sum check; without a weight every word up to max_length is checked"""
    config: RunConfig
    weight: Optional[str] = None
    max_length: Optional[int] = None


class EulerResult(BaseModel):
    weight: str
    euler_sum: str
    passed: bool


class EulerReport(BaseModel):
    checked: int
    violations: List[EulerResult]
    status: str

    @classmethod
    def from_results(cls, results: List[EulerResult]) -> "EulerReport":
        violations = [r for r in results if not r.passed]
        if violations:
            summary = f"{len(violations)} of {len(results)} words violate the Euler identity"
        else:
            summary = f"all {len(results)} words pass"
        return cls(checked=len(results), violations=violations, status=summary)
