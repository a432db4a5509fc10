from fastapi import HTTPException, status

from leechkit.core.errors import BoundExceededError, LeechkitError, UnknownClaimError


def to_http(exc: LeechkitError, unknown: bool = False) -> HTTPException:
    """
    Converte erros do núcleo em HTTPException.

    Args:
        exc: erro levantado pelo núcleo
        unknown: o erro indica um nome desconhecido (404)
    """
    if isinstance(exc, BoundExceededError):
        return HTTPException(status_code=status.HTTP_413_REQUEST_ENTITY_TOO_LARGE, detail=str(exc))
    if unknown or isinstance(exc, UnknownClaimError):
        return HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(exc))
    return HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, detail=str(exc))
