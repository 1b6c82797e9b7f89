# core/hecke_core/cli/schemas.py
from enum import Enum
from typing import List, Optional, Union

from pydantic import BaseModel, validator

from core.hecke_core.laurent.schemas import RingDescriptor

INF_LABEL = "inf"


class OutputFormat(str, Enum):
    TSV = "tsv"
    JSON = "json"


class RunConfig(BaseModel):
    """Schema for a run configuration (JSON file or request body)"""
    generators: List[str]
    coxeter_matrix: List[List[Union[int, str]]]
    cartan: Optional[List[List[int]]] = None
    parabolic: List[str] = []
    coefficients: RingDescriptor = RingDescriptor()
    max_length: int = 4

    @validator("generators")
    def generators_distinct(cls, v):
        if not v:
            raise ValueError("at least one generator is required")
        if len(set(v)) != len(v):
            raise ValueError("generator labels must be distinct")
        return v

    @validator("coxeter_matrix")
    def coxeter_matrix_valid(cls, v, values):
        generators = values.get("generators") or []
        n = len(generators)
        if len(v) != n or any(len(row) != n for row in v):
            raise ValueError(f"coxeter_matrix must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                m = v[i][j]
                if isinstance(m, str) and m != INF_LABEL:
                    raise ValueError(f"bond {m!r} must be an integer or \"inf\"")
                if i == j and m != 1:
                    raise ValueError("diagonal Coxeter entries must be 1")
                if i != j and m != INF_LABEL and m < 2:
                    raise ValueError("off-diagonal bonds must be >= 2 or \"inf\"")
                if m != v[j][i]:
                    raise ValueError("coxeter_matrix must be symmetric")
        return v

    @validator("cartan")
    def cartan_valid(cls, v, values):
        if v is None:
            return v
        n = len(values.get("generators") or [])
        if len(v) != n or any(len(row) != n for row in v):
            raise ValueError(f"cartan must be {n}x{n}")
        if any(v[i][i] != 2 for i in range(n)):
            raise ValueError("diagonal Cartan entries must be 2")
        return v

    @validator("parabolic")
    def parabolic_subset(cls, v, values):
        generators = values.get("generators") or []
        unknown = [s for s in v if s not in generators]
        if unknown:
            raise ValueError(f"parabolic generators {unknown} are not generators")
        return v

    @validator("max_length")
    def max_length_non_negative(cls, v):
        if v < 0:
            raise ValueError("max_length must be non-negative")
        return v
