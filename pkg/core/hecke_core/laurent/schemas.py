# core/hecke_core/laurent/schemas.py
from pydantic import BaseModel, validator
from sympy import isprime
from typing import Optional

from core.hecke_core.laurent.rings import RingKind


class RingDescriptor(BaseModel):
    """Schema for a coefficient ring descriptor"""
    type: RingKind = RingKind.INTEGERS
    p: Optional[int] = None

    @validator("p", always=True)
    def modulus_matches_kind(cls, v, values):
        if values.get("type") == RingKind.PRIME_FIELD and v is None:
            raise ValueError("prime_field requires p")
        if v is not None and not isprime(v):
            raise ValueError(f"p = {v} is not prime")
        return v

    class Config:
        use_enum_values = True

