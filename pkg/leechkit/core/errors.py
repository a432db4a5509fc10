"""
Exceções do leechkit.

Todas as falhas matemáticas herdam de LeechkitError; as que sinalizam
entrada inválida também herdam de ValueError para facilitar o uso externo.
"""

from typing import Any, List, Optional


class LeechkitError(Exception):
    """Erro base do pacote."""


class LatticeError(LeechkitError, ValueError):
    """Reticulado, parâmetro ou entrada degenerada inválida."""


class BoundExceededError(LeechkitError):
    """Um limite configurado (ordem, fecho, nós de busca) foi ultrapassado."""

    def __init__(self, message: str, bound: Optional[int] = None):
        super().__init__(message)
        self.bound = bound


class GlueCodeError(LatticeError):
    """Código de cola mal transcrito ou com ordem errada."""


class IsometryError(LatticeError):
    """Aplicação que não preserva o reticulado ou extensão linear inconsistente."""


class GlueAmbiguityError(LatticeError):
    """O subgrupo de colagem H_T não é determinado de forma única."""

    def __init__(self, message: str, candidates: Optional[List[Any]] = None):
        super().__init__(message)
        self.candidates = list(candidates or [])


class KleinCubicError(LeechkitError):
    """Pré-condição violada no módulo da cúbica de Klein."""


class UnknownClaimError(LeechkitError, KeyError):
    """Identificador de verificação inexistente no manifesto."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "verificação desconhecida"
