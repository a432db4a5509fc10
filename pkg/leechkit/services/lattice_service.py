"""
Serviço para consultas de reticulados: catálogo, formas discriminantes,
enumeração, isometria, tabela de Niemeier, gênero ternário e divisores.
"""

from typing import List, Optional, Sequence

from loguru import logger

from leechkit.core import catalog
from leechkit.core.lattice import FiniteQuadraticForm, Lattice, discriminant_group, is_even, signature
from leechkit.core.niemeier import NiemeierSpec, build_niemeier, get_spec, load_table, verify_roots
from leechkit.core.nikulin import enumerate_ternary_genus, glue_divisor, milgram_signature
from leechkit.core.short_vectors import enumerate_up_to, is_isometric_definite, minimum
from leechkit.schemas.schemas import (
    DiscriminantFormSchema,
    DiscriminantResponse,
    EnumerationResponse,
    IsometryResponse,
    LatticeSchema,
    NiemeierLatticeResponse,
    NiemeierRow,
)


def niemeier_row(spec: NiemeierSpec) -> NiemeierRow:
    return NiemeierRow(
        name=spec.name,
        components=[c.name for c in spec.components],
        rank=spec.rank,
        coxeter=spec.coxeter,
        expected_roots=spec.expected_roots,
        glue=list(spec.glue),
        leech_group=spec.leech_group,
        leech_group_order=spec.leech_group_order,
    )


class LatticeService:
    """Serviço sem estado sobre o núcleo exato"""

    def catalogo(self, name: str, n: Optional[int] = None, k: Optional[int] = None, scale: int = 1) -> LatticeSchema:
        logger.debug(f"[CATALOG] Construindo | nome={name} | n={n} | k={k} | escala={scale}")
        lattice = catalog.build(name, n=n, k=k, scale=scale)
        logger.info(f"[CATALOG] Reticulado construído | label={lattice.label} | posto={lattice.rank}")
        return LatticeSchema.from_lattice(lattice)

    def discriminante(self, lattice: Lattice) -> DiscriminantResponse:
        form = discriminant_group(lattice)
        sig = signature(lattice)
        milgram = consistent = None
        if is_even(lattice):
            milgram = milgram_signature(form)
            consistent = milgram == (sig.plus - sig.minus) % 8
        logger.info(
            f"[LATTICE] Forma discriminante | label={lattice.label} | invariantes={list(form.invariants)} | "
            f"milgram={milgram}"
        )
        return DiscriminantResponse(
            label=lattice.label,
            form=DiscriminantFormSchema.from_form(form),
            order=form.order,
            length=form.length,
            signature=str(sig),
            milgram_signature=milgram,
            consistent=consistent,
        )

    def enumerar(
        self, lattice: Lattice, bound: int, keep_vectors: bool = False, limit: Optional[int] = None
    ) -> EnumerationResponse:
        report = enumerate_up_to(lattice, bound, keep_vectors=keep_vectors, limit=limit)
        logger.info(
            f"[ENUM] Enumeração concluída | label={lattice.label} | limite={bound} | total={report.total} | "
            f"tempo={report.elapsed:.2f}s"
        )
        return EnumerationResponse(
            label=lattice.label,
            bound=bound,
            counts=dict(sorted(report.counts.items())),
            total=report.total,
            minimum=minimum(lattice) if lattice.rank else None,
            vectors=[list(v) for v in report.vectors] if report.vectors is not None else None,
            elapsed=round(report.elapsed, 3),
        )

    def isometria(self, first: Lattice, second: Lattice, node_cap: Optional[int] = None) -> IsometryResponse:
        result = is_isometric_definite(first, second, node_cap=node_cap)
        logger.info(
            f"[ISOM] Teste de isometria | a={first.label} | b={second.label} | status={result.status} | "
            f"nos={result.nodes}"
        )
        return IsometryResponse(status=result.status, witness=result.witness, nodes=result.nodes, reason=result.reason)

    def tabela_niemeier(self) -> List[NiemeierRow]:
        return [niemeier_row(spec) for spec in load_table()]

    def niemeier(self, name: str, check_roots: bool = False) -> NiemeierLatticeResponse:
        spec = get_spec(name)
        lattice = build_niemeier(spec)
        roots = roots_ok = None
        if check_roots:
            roots, roots_ok = verify_roots(spec, lattice)
            logger.info(f"[NIEMEIER] Raízes | nome={spec.name} | raizes={roots} | esperado={spec.expected_roots}")
        return NiemeierLatticeResponse(
            row=niemeier_row(spec), lattice=LatticeSchema.from_lattice(lattice), roots=roots, roots_ok=roots_ok
        )

    def genero_ternario(self, det: int, form: FiniteQuadraticForm) -> List[LatticeSchema]:
        classes = enumerate_ternary_genus(det, form)
        return [LatticeSchema.from_lattice(lat) for lat in classes]

    def divisor(self, t: Lattice, vector: Sequence[int], s: Optional[Lattice] = None, ambient_det: int = 2) -> int:
        value = glue_divisor(vector, t, s, ambient_det)
        logger.info(
            f"[NIKULIN] Divisor | T={t.label} | vetor={list(vector)} | grau={t.norm(vector)} | divisor={value}"
        )
        return value
