# core/hecke_core/cli/context.py
import json
import logging
from functools import cached_property
from typing import Optional, Union

from core.hecke_core.bgg.complex import BGGEngine
from core.hecke_core.cli.schemas import INF_LABEL, RunConfig
from core.hecke_core.coxeter.system import INF, CoxeterSystem, Element, Word
from core.hecke_core.gram.pairing import GramEngine
from core.hecke_core.hecke.module import AntisphericalModule
from core.hecke_core.laurent.rings import CoefficientRing
from core.hecke_core.lightleaves.tableaux import TableauEngine
from core.hecke_core.parabolic.quotient import ParabolicDatum
from core.hecke_core.realisation.quantum import CartanData

# Initialize logging
logger = logging.getLogger(__name__)


class EngineContext:
    """
    Everything a command needs, built once from a validated RunConfig.

    Engines are created on first use; the gram engine refuses systems with
    finite bonds at that point, not when the context is built.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        matrix = [[INF if m == INF_LABEL else int(m) for m in row] for row in config.coxeter_matrix]
        self.system = CoxeterSystem(config.generators, matrix)
        self.datum = ParabolicDatum.from_labels(self.system, config.parabolic)
        self.ring = CoefficientRing.from_json(config.coefficients.dict())
        if config.cartan is not None:
            self.cartan = CartanData(self.ring, config.cartan)
        else:
            self.cartan = CartanData.default_for(self.system, self.ring)

    @cached_property
    def tableaux(self) -> TableauEngine:
        return TableauEngine(self.datum)

    @cached_property
    def gram(self) -> GramEngine:
        return GramEngine(self.datum, self.cartan)

    @cached_property
    def hecke(self) -> AntisphericalModule:
        return AntisphericalModule(self.datum)

    @cached_property
    def bgg(self) -> BGGEngine:
        return BGGEngine(self.datum, self.cartan)

    def word(self, text: Union[str, list, None]) -> Word:
        return self.system.parse_word(text or "")

    def element(self, text: Union[str, list, None]) -> Element:
        return self.system.reduce(self.word(text))

    def max_length(self, override: Optional[int] = None) -> int:
        return self.config.max_length if override is None else override


def build_context(config: RunConfig) -> EngineContext:
    context = EngineContext(config)
    logger.debug(
        f"Context: generators={config.generators}, parabolic={config.parabolic}, ring={context.ring}"
    )
    return context


_CONTEXTS = {}


def context_from_json(config_json: str) -> EngineContext:
    """Per-process context cache keyed by the serialized config (used by worker processes)"""
    context = _CONTEXTS.get(config_json)
    if context is None:
        context = _CONTEXTS[config_json] = build_context(RunConfig(**json.loads(config_json)))
    return context
