"""
Rotas da API para o manifesto de claims.
"""

from typing import List

from fastapi import APIRouter, HTTPException, status
from loguru import logger

from leechkit.api.errors import to_http
from leechkit.core.errors import UnknownClaimError
from leechkit.schemas.schemas import ClaimDefinition, ClaimReport
from leechkit.services.claims_service import ClaimsService

router = APIRouter(prefix="/claims", tags=["claims"])


@router.get("", response_model=List[ClaimDefinition])
async def listar_claims(fast: bool = False):
    """Manifesto de claims."""
    return ClaimsService().listar_claims(fast)


@router.get("/{claim_id}", response_model=ClaimReport)
def executar_claim(claim_id: str):
    """Executa um claim e devolve o relatório."""
    logger.info(f"[CLAIM] Requisição | id={claim_id}")
    try:
        return ClaimsService().run_claim(claim_id)
    except UnknownClaimError as e:
        logger.warning(f"[CLAIM] Claim desconhecido | id={claim_id}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[CLAIM] Erro ao executar | id={claim_id} | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno ao executar claim",
        )
