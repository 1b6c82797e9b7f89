# core/hecke_core/bgg/schemas.py
from typing import Dict, List, Optional

from pydantic import BaseModel

from core.hecke_core.cli.schemas import RunConfig


class CPPairsRequest(BaseModel):
    """Schema for the signed Carter-Payne pairs of the truncated quotient"""
    config: RunConfig
    max_length: Optional[int] = None


class CPPairEntry(BaseModel):
    w: str
    y: str
    deletion_position: int
    sign: int


class CPPairsReport(BaseModel):
    pairs: List[CPPairEntry]
    diamonds: int
    signs_consistent: bool
    signs_digest: str


class HomologyRequest(BaseModel):
    """Schema for the BGG complex at one weight word"""
    config: RunConfig
    weight: str
    max_length: Optional[int] = None


class HomologyResponse(BaseModel):
    weight: str
    layers: Dict[str, int]
    ranks: Dict[str, int]
    homology_dims: Dict[str, int]
    graded_homology: Dict[str, str]
    signs_digest: str
    square_zero: bool
    exact: bool
