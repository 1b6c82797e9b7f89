# core/hecke_core/gram/schemas.py
from typing import Any, Dict, List, Union

from pydantic import BaseModel

from core.hecke_core.cli.schemas import RunConfig


class GramRequest(BaseModel):
    """Schema for a Gram matrix request at one weight word and shape"""
    config: RunConfig
    weight: str
    shape: str


class GramMatrixResponse(BaseModel):
    weight: str
    shape: str
    basis: List[str]
    degrees: List[int]
    matrix: List[List[Union[int, str]]]
    determinant: Union[int, str]
    rank: int
    coefficients: Dict[str, Any]
