# core/hecke_core/parabolic/schemas.py
from typing import List, Optional

from pydantic import BaseModel

from core.hecke_core.cli.schemas import RunConfig


class QuotientRequest(BaseModel):
    """Schema for enumerating the parabolic quotient"""
    config: RunConfig
    max_length: Optional[int] = None


class QuotientElement(BaseModel):
    element: str
    length: int


class QuotientResponse(BaseModel):
    """Schema for the truncated quotient, in length-lexicographic order"""
    elements: List[QuotientElement]
    count: int
