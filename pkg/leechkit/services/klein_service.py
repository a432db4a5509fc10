"""
Serviço da cúbica de Klein: lisura, retas fixas e postos co-invariantes.
"""

from typing import Optional

from loguru import logger

from leechkit.core import klein_cubic as kc
from leechkit.core.group_actions import FiniteIsometryGroup, from_permutation, load_permutation, rank_table_by_element_order
from leechkit.core.niemeier import build_niemeier, get_spec
from leechkit.schemas.schemas import FixedLinesResponse, KleinRanksResponse, SmoothnessResponse

AUTOMORPHISMS = {"psi": kc.psi, "beta": kc.beta, "alpha": kc.alpha}
ORDERS = {"psi": 11, "beta": 5}


class KleinService:
    """Serviço para a cúbica de Klein"""

    def __init__(self):
        self.h = kc.klein_cubic()

    def lisura(self, prime: Optional[int] = None) -> SmoothnessResponse:
        report = kc.smoothness_witness_mod_p(self.h, prime)
        return SmoothnessResponse(
            prime=report.prime,
            points=report.points,
            singular=report.singular,
            smooth=report.smooth,
            elapsed=round(report.elapsed, 3),
        )

    def retas_fixas(self, name: str = "psi") -> FixedLinesResponse:
        g = AUTOMORPHISMS[name]()
        points = kc.fixed_points(g, self.h)
        lines = kc.fixed_lines(g, self.h)
        logger.info(f"[KLEIN] Retas fixas | g={name} | pontos={points} | retas={len(lines)}")
        return FixedLinesResponse(automorphism=name, fixed_points=points, lines=[list(line) for line in lines])

    def postos(self, compare_lattice: bool = False) -> KleinRanksResponse:
        """
        Postos de S_⟨g⟩(F) pelo anel jacobiano, opcionalmente comparados com a
        tabela de postos de L2(11) agindo em N23.
        """
        residue = {name: kc.rank_coinvariant_on_F(AUTOMORPHISMS[name](), self.h) for name in ORDERS}
        lattice_ranks = {}
        if compare_lattice:
            n23 = build_niemeier(get_spec("N23"))
            gens = [from_permutation(load_permutation(p), n23, p) for p in ("alpha", "beta", "gamma")]
            table = rank_table_by_element_order(FiniteIsometryGroup(gens)).as_dict()
            lattice_ranks = {ORDERS[name]: table[ORDERS[name]][0] for name in ORDERS}
        consistent = all(lattice_ranks.get(ORDERS[name], rank) == rank for name, rank in residue.items())
        logger.info(f"[KLEIN] Postos co-invariantes | residuo={residue} | reticulado={lattice_ranks} | ok={consistent}")
        return KleinRanksResponse(residue_ranks=residue, lattice_ranks=lattice_ranks, consistent=consistent)
