# core/hecke_core/lightleaves/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.cli.context import build_context
from core.hecke_core.errors import HeckeError
from core.hecke_core.lightleaves import schemas

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/tableaux", response_model=schemas.TableauxResponse)
def list_tableaux(request: schemas.TableauxRequest):
    """
    Parabolic light-leaves tableaux of a weight word, grouped by shape
    """
    try:
        context = build_context(request.config)
        rows = context.tableaux.tableau_rows(context.word(request.weight))
    except HeckeError as exc:
        logger.error(f"Tableaux failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

    return schemas.TableauxResponse(
        rows=[schemas.TableauRow(weight=w, bits=b, shape=s, degree=d) for w, b, s, d in rows],
        count=len(rows),
    )


@router.post("/euler", response_model=schemas.EulerReport)
def check_euler(request: schemas.EulerRequest):
    """
    Check that the signed graded character of every weight word is 1 on the
    empty word and 0 otherwise
    """
    try:
        context = build_context(request.config)
        if request.weight is not None:
            words = [context.word(request.weight)]
        else:
            words = context.datum.expressions_up_to(context.max_length(request.max_length))
        results = []
        for weight in words:
            total, passed = context.tableaux.euler_holds(weight, context.ring)
            results.append(schemas.EulerResult(
                weight=context.system.format_word(weight),
                euler_sum=total.to_sparse_text(),
                passed=passed,
            ))
    except HeckeError as exc:
        logger.error(f"Euler check failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())

    return schemas.EulerReport.from_results(results)
