# core/hecke_core/coxeter/schemas.py
from typing import List

from pydantic import BaseModel

from core.hecke_core.cli.schemas import RunConfig


class ReduceRequest(BaseModel):
    """Schema for a word reduction request"""
    config: RunConfig
    word: str


class ReduceResponse(BaseModel):
    """Schema for a reduced element"""
    word: str
    reduced: str
    length: int
    is_reduced: bool
    left_descents: List[str]
    right_descents: List[str]
