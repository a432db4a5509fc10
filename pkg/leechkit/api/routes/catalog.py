"""
Rotas da API para o catálogo de reticulados.
"""

from typing import List, Optional

from fastapi import APIRouter, HTTPException, status
from loguru import logger

from leechkit.api.errors import to_http
from leechkit.core.catalog import CATALOG_NAMES, is_catalog_name
from leechkit.core.errors import LeechkitError
from leechkit.schemas.schemas import LatticeSchema
from leechkit.services.lattice_service import LatticeService

router = APIRouter(prefix="/catalog", tags=["catalog"])


@router.get("", response_model=List[str])
async def listar_catalogo():
    """Lista os nomes do catálogo."""
    return list(CATALOG_NAMES)


@router.get("/{name}", response_model=LatticeSchema)
async def buscar_reticulado(name: str, n: Optional[int] = None, k: Optional[int] = None, scale: int = 1):
    """Constrói um reticulado do catálogo no formato JSON de reticulado."""
    logger.info(f"[CATALOG] Requisição | nome={name} | n={n} | k={k} | escala={scale}")
    if not is_catalog_name(name):
        logger.warning(f"[CATALOG] Nome desconhecido | nome={name}")
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=f"nome de catálogo desconhecido: {name}")
    try:
        return LatticeService().catalogo(name, n=n, k=k, scale=scale)
    except LeechkitError as e:
        logger.warning(f"[CATALOG] Falha | nome={name} | erro={str(e)}")
        raise to_http(e)
    except Exception as e:
        logger.exception(f"[CATALOG] Erro ao construir | nome={name} | erro={str(e)}")
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail="Erro interno ao construir reticulado",
        )
