"""
Rotas da API para a cúbica de Klein.
"""

from typing import Optional

from fastapi import APIRouter, HTTPException, Query, status
from loguru import logger

from leechkit.api.errors import to_http
from leechkit.core.errors import LeechkitError
from leechkit.schemas.schemas import FixedLinesResponse, KleinRanksResponse, SmoothnessResponse
from leechkit.services.klein_service import AUTOMORPHISMS, KleinService

router = APIRouter(prefix="/klein", tags=["klein"])


@router.get("/ranks", response_model=KleinRanksResponse)
def postos(compare_lattice: bool = False):
    """Postos co-invariantes de ψ e β pelo anel jacobiano."""
    logger.info(f"[KLEIN] Requisição de postos | comparar_reticulado={compare_lattice}")
    try:
        return KleinService().postos(compare_lattice)
    except LeechkitError as e:
        logger.warning(f"[KLEIN] Falha nos postos | erro={str(e)}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[KLEIN] Erro nos postos | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno no cálculo de postos",
        )


@router.get("/fixed-lines", response_model=FixedLinesResponse)
def retas_fixas(automorphism: str = "psi"):
    """Pontos e retas fixas de um automorfismo diagonal."""
    if automorphism not in AUTOMORPHISMS:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=f"automorfismo desconhecido: {automorphism}")
    try:
        return KleinService().retas_fixas(automorphism)
    except LeechkitError as e:
        logger.warning(f"[KLEIN] Falha nas retas fixas | g={automorphism} | erro={str(e)}")
        raise to_http(e)


@router.get("/smooth", response_model=SmoothnessResponse)
def lisura(prime: Optional[int] = Query(default=None, gt=3)):
    """Varredura de ℙ⁵(𝔽_p) procurando pontos singulares."""
    logger.info(f"[KLEIN] Requisição de lisura | p={prime}")
    try:
        return KleinService().lisura(prime)
    except LeechkitError as e:
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[KLEIN] Erro na varredura | p={prime} | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno na varredura",
        )
