"""
Rotas da API para a tabela de Niemeier.
"""

from typing import List

from fastapi import APIRouter, HTTPException, status
from loguru import logger

from leechkit.api.errors import to_http
from leechkit.core.errors import LeechkitError
from leechkit.core.niemeier import get_spec
from leechkit.schemas.schemas import NiemeierLatticeResponse, NiemeierRow
from leechkit.services.lattice_service import LatticeService

router = APIRouter(prefix="/niemeier", tags=["niemeier"])


@router.get("", response_model=List[NiemeierRow])
async def listar_niemeier():
    """Linhas da tabela de Niemeier."""
    return LatticeService().tabela_niemeier()


@router.get("/{name}", response_model=NiemeierLatticeResponse)
def buscar_niemeier(name: str, verify_roots: bool = False):
    """Constrói o reticulado de Niemeier (e conta as raízes se solicitado)."""
    logger.info(f"[NIEMEIER] Requisição | nome={name} | verificar_raizes={verify_roots}")
    try:
        get_spec(name)
    except LeechkitError as e:
        raise to_http(e, unknown=True)
    try:
        return LatticeService().niemeier(name, check_roots=verify_roots)
    except LeechkitError as e:
        logger.warning(f"[NIEMEIER] Falha | nome={name} | erro={str(e)}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[NIEMEIER] Erro ao construir | nome={name} | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno ao construir reticulado de Niemeier",
        )
