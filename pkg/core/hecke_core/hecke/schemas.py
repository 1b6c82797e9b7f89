# core/hecke_core/hecke/schemas.py
from typing import List, Optional

from pydantic import BaseModel

from core.hecke_core.cli.schemas import RunConfig


class KLRequest(BaseModel):
    """Schema for the anti-spherical KL matrix, or the first row of its inverse"""
    config: RunConfig
    max_length: Optional[int] = None
    invert: bool = False


class KLEntry(BaseModel):
    x: str
    y: str
    n_xy: str


class InverseEntry(BaseModel):
    x: str
    value: str


class KLReport(BaseModel):
    entries: List[KLEntry] = []
    inverse_first_row: List[InverseEntry] = []
    verified: Optional[bool] = None
