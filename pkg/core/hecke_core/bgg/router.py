# core/hecke_core/bgg/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.bgg import schemas
from core.hecke_core.cli.context import build_context
from core.hecke_core.errors import HeckeError

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/cp-pairs", response_model=schemas.CPPairsReport)
def cp_pairs(request: schemas.CPPairsRequest):
    """
    Carter-Payne pairs with their diamond-consistent signs
    """
    try:
        context = build_context(request.config)
        max_len = context.max_length(request.max_length)
        signed = context.bgg.assign_signs(max_len)
        fmt = context.system.format_element
        return schemas.CPPairsReport(
            pairs=[
                schemas.CPPairEntry(w=fmt(p.w), y=fmt(p.y), deletion_position=p.deletion_position, sign=sign)
                for p, sign in signed.edges
            ],
            diamonds=len(context.bgg.diamonds(max_len)),
            signs_consistent=context.bgg.verify_signs(signed),
            signs_digest=signed.digest(fmt),
        )
    except HeckeError as exc:
        logger.error(f"CP pairs failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())


@router.post("/homology", response_model=schemas.HomologyResponse)
def homology(request: schemas.HomologyRequest):
    """
    Differentials, square-zero check and homology of the BGG complex at a
    weight word (universal systems only); violations are reported, not raised
    """
    try:
        context = build_context(request.config)
        report = context.bgg.homology_check(
            context.word(request.weight), context.max_length(request.max_length), strict=False
        )
    except HeckeError as exc:
        logger.error(f"Homology check failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

    return schemas.HomologyResponse(**report.to_json(context.system.format_word))
