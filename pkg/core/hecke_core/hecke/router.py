# core/hecke_core/hecke/router.py
import logging

from fastapi import APIRouter, HTTPException, status

from core.hecke_core.cli.context import build_context
from core.hecke_core.errors import HeckeError
from core.hecke_core.hecke import schemas

# Initialize logging
logger = logging.getLogger(__name__)

router = APIRouter()


@router.post("/kl", response_model=schemas.KLReport)
def kl_matrix(request: schemas.KLRequest):
    """
    Nonzero entries n_{x,y} of the truncated matrix, or with ``invert`` the
    verified first row of its inverse
    """
    try:
        context = build_context(request.config)
        max_len = context.max_length(request.max_length)
        fmt = context.system.format_element
        if request.invert:
            row = context.hecke.invert_first_row(max_len)
            verified = context.hecke.verify_inverse(max_len)
            return schemas.KLReport(
                inverse_first_row=[schemas.InverseEntry(x=fmt(x), value=p.to_sparse_text()) for x, p in row.items()],
                verified=verified,
            )
        entries = []
        for y, column in context.hecke.kl_matrix(max_len).items():
            for x in column.support():
                entries.append(schemas.KLEntry(x=fmt(x), y=fmt(y), n_xy=column.coefficient(x).to_sparse_text()))
        return schemas.KLReport(entries=entries)
    except HeckeError as exc:
        logger.error(f"KL computation failed: {exc}")
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=exc.to_dict())
