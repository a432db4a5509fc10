"""
Serviço de execução dos claims do manifesto.
"""

import json
import time
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from pathlib import Path
from typing import List, Optional

from loguru import logger

from leechkit.config.config import settings
from leechkit.core.catalog import DATA_DIR
from leechkit.core.errors import LeechkitError, UnknownClaimError
from leechkit.schemas.schemas import ClaimDefinition, ClaimReport, ClaimStatus
from leechkit.services.claim_checks import CHECKS, run_check

MANIFEST = DATA_DIR / "claims.json"


@lru_cache(maxsize=None)
def load_manifest(path: Path = MANIFEST) -> tuple:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return tuple(ClaimDefinition(**entry) for entry in data["claims"])


class ClaimsService:
    """Serviço que liga ids do manifesto às verificações registradas"""

    def __init__(self, manifest: Path = MANIFEST):
        self.definitions = load_manifest(manifest)
        missing = [d.handler for d in self.definitions if d.handler not in CHECKS]
        if missing:
            raise LeechkitError(f"manifesto referencia verificações inexistentes | handlers={missing}")

    def listar_claims(self, fast: bool = False) -> List[ClaimDefinition]:
        return [d for d in self.definitions if not (fast and d.slow)]

    def buscar_claim(self, claim_id: str) -> ClaimDefinition:
        """
        Raises:
            UnknownClaimError: id fora do manifesto
        """
        for definition in self.definitions:
            if definition.id == claim_id:
                return definition
        raise UnknownClaimError(f"claim desconhecido | id={claim_id}")

    def run_claim(self, claim_id: str) -> ClaimReport:
        """
        Executa um claim e devolve o relatório.

        Args:
            claim_id: id do manifesto

        Returns:
            ClaimReport; exceções da verificação viram status fail com a mensagem na evidência

        Raises:
            UnknownClaimError: id fora do manifesto
        """
        definition = self.buscar_claim(claim_id)
        logger.info(f"[CLAIM] Iniciando | id={claim_id} | lento={definition.slow}")
        start = time.perf_counter()
        try:
            status, evidence = run_check(definition.handler)
        except Exception as e:
            logger.exception(f"[CLAIM] Erro ao executar | id={claim_id} | erro={str(e)}")
            status, evidence = ClaimStatus.FAIL, {"error": f"{type(e).__name__}: {e}"}
        elapsed = time.perf_counter() - start
        report = ClaimReport(
            id=definition.id, anchor=definition.anchor, status=status, evidence=evidence, elapsed=round(elapsed, 3)
        )
        if status == ClaimStatus.PASS:
            logger.success(f"[CLAIM] Confirmado | id={claim_id} | tempo={elapsed:.2f}s")
        elif status == ClaimStatus.INDETERMINATE:
            logger.warning(f"[CLAIM] Indeterminado | id={claim_id} | tempo={elapsed:.2f}s")
        else:
            logger.error(f"[CLAIM] Falhou | id={claim_id} | tempo={elapsed:.2f}s")
        return report

    def run_all(self, fast: bool = False, max_workers: Optional[int] = None) -> List[ClaimReport]:
        """Executa todos os claims em paralelo; relatórios ordenados por id."""
        ids = [d.id for d in self.listar_claims(fast)]
        logger.info(f"[CLAIM] Executando suíte | total={len(ids)} | rapido={fast}")
        with ThreadPoolExecutor(max_workers=max_workers or settings.max_workers) as pool:
            reports = list(pool.map(self.run_claim, ids))
        reports.sort(key=lambda r: r.id)
        failed = sum(r.status == ClaimStatus.FAIL for r in reports)
        logger.info(f"[CLAIM] Suíte concluída | total={len(reports)} | falhas={failed}")
        return reports
