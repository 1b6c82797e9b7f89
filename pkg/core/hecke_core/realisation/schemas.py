# core/hecke_core/realisation/schemas.py
from typing import List, Optional, Union

from pydantic import BaseModel

from core.hecke_core.cli.schemas import INF_LABEL, RunConfig
from core.hecke_core.coxeter.system import INF, CoxeterSystem
from core.hecke_core.realisation.quantum import CartanData, Side, jw_coefficient_sequence, validate_all


class ValidateRequest(BaseModel):
    """Schema for a realisation check"""
    config: RunConfig


class BondReport(BaseModel):
    s: str
    t: str
    m: Union[int, str]
    x: Union[int, str]
    y: Union[int, str]
    valid: bool
    jones_wenzl_invertible: Optional[bool] = None


class RealisationReport(BaseModel):
    """Per-bond balanced realisation check"""
    bonds: List[BondReport]
    valid: bool

    @classmethod
    def build(cls, system: CoxeterSystem, cartan: CartanData) -> "RealisationReport":
        ring = cartan.ring
        bonds = []
        for s, t, valid in validate_all(system, cartan):
            m = system.bond(s, t)
            pair = cartan.bicoloured_pair(s, t)
            invertible = None
            if m != INF and valid:
                invertible = all(c.invertible for c in jw_coefficient_sequence(m, pair, Side.X, ring))
            bonds.append(BondReport(
                s=system.generators[s],
                t=system.generators[t],
                m=INF_LABEL if m == INF else m,
                x=ring.serialize(pair.x),
                y=ring.serialize(pair.y),
                valid=valid,
                jones_wenzl_invertible=invertible,
            ))
        return cls(bonds=bonds, valid=all(b.valid for b in bonds))
