"""
Rotas da API para operações sobre reticulados enviados no corpo da requisição.
"""

from fastapi import APIRouter, HTTPException, status
from loguru import logger

from leechkit.api.errors import to_http
from leechkit.core.errors import LeechkitError
from leechkit.schemas.schemas import (
    DiscriminantResponse,
    EnumerateRequest,
    EnumerationResponse,
    IsometryRequest,
    IsometryResponse,
    LatticeSchema,
)
from leechkit.services.lattice_service import LatticeService

router = APIRouter(prefix="/lattices", tags=["lattices"])


@router.post("/discriminant", response_model=DiscriminantResponse)
def forma_discriminante(lattice: LatticeSchema):
    """Grupo discriminante, forma quadrática finita e assinatura de Milgram."""
    logger.info(f"[LATTICE] Requisição de forma discriminante | label={lattice.label} | posto={len(lattice.gram)}")
    try:
        return LatticeService().discriminante(lattice.to_lattice())
    except LeechkitError as e:
        logger.warning(f"[LATTICE] Falha na forma discriminante | label={lattice.label} | erro={str(e)}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[LATTICE] Erro na forma discriminante | label={lattice.label} | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno ao calcular forma discriminante",
        )


@router.post("/enumerate", response_model=EnumerationResponse)
def enumerar(request: EnumerateRequest):
    """Contagem de vetores por norma até o limite."""
    logger.info(f"[ENUM] Requisição de enumeração | label={request.lattice.label} | limite={request.bound}")
    try:
        return LatticeService().enumerar(
            request.lattice.to_lattice(), request.bound, keep_vectors=request.keep_vectors, limit=request.limit
        )
    except LeechkitError as e:
        logger.warning(f"[ENUM] Falha na enumeração | label={request.lattice.label} | erro={str(e)}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[ENUM] Erro na enumeração | label={request.lattice.label} | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno na enumeração",
        )


@router.post("/isometry", response_model=IsometryResponse)
def isometria(request: IsometryRequest):
    """Teste de isometria entre reticulados definidos."""
    logger.info(f"[ISOM] Requisição de isometria | a={request.first.label} | b={request.second.label}")
    try:
        return LatticeService().isometria(
            request.first.to_lattice(), request.second.to_lattice(), node_cap=request.node_cap
        )
    except LeechkitError as e:
        logger.warning(f"[ISOM] Falha no teste de isometria | erro={str(e)}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[ISOM] Erro no teste de isometria | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno no teste de isometria",
        )
