"""
Verificações nomeadas usadas pelo manifesto de claims (data/claims.json).

Cada verificação é registrada por nome com @check e devolve o status e um
dicionário de evidências serializável em JSON.
"""

from functools import lru_cache
from typing import Any, Callable, Dict, List, Tuple

from loguru import logger

from leechkit.config.config import settings
from leechkit.core import catalog, klein_cubic as kc
from leechkit.core.catalog import M11_GRAM, T1_GRAM, T2_GRAM
from leechkit.core.cyclotomic import CycloElement
from leechkit.core.errors import IsometryError
from leechkit.core.group_actions import (
    FiniteIsometryGroup,
    LatticeIsometry,
    Permutation,
    coinvariant_lattice,
    from_glue_translation,
    from_permutation,
    invariant_lattice,
    is_leech_couple,
    load_permutation,
    rank_table_by_element_order,
    restrict,
)
from leechkit.core.lattice import (
    Lattice,
    direct_sum,
    disc_form_isomorphic,
    discriminant_group,
    genus_equal,
    is_even,
    is_unimodular,
    orthogonal_complement,
)
from leechkit.core.niemeier import (
    build_niemeier,
    frame_intersection_index,
    get_spec,
    glue_generators,
    holy_frame,
    holy_leech,
    leech_from_pi,
    load_table,
    verify_roots,
)
from leechkit.core.nikulin import (
    enumerate_ternary_genus,
    extend_to_mukai,
    genus_symbol,
    glue_divisor,
    ns_and_transcendental_check,
    polarization_table,
    s11_complement_form,
)
from leechkit.core.short_vectors import count_roots, is_isometric_definite, minimum, theta_coefficients
from leechkit.schemas.schemas import ClaimStatus

Outcome = Tuple[ClaimStatus, Dict[str, Any]]

CHECKS: Dict[str, Callable[[], Outcome]] = {}

L2_11_RANKS = {2: [8], 3: [12], 5: [16], 6: [16], 11: [20]}
L2_11_COUNTS = {1: 1, 2: 55, 3: 110, 5: 264, 6: 110, 11: 120}
KLEIN_B = [(3, 0, 0, 0, 0, 0), (0, 2, 0, 0, 0, 1), (0, 0, 2, 0, 1, 0), (0, 0, 1, 2, 0, 0), (0, 1, 0, 0, 2, 0), (0, 0, 0, 1, 0, 2)]


def check(name: str) -> Callable[[Callable[[], Outcome]], Callable[[], Outcome]]:
    def register(func: Callable[[], Outcome]) -> Callable[[], Outcome]:
        CHECKS[name] = func
        return func

    return register


def _status(ok: bool) -> ClaimStatus:
    return ClaimStatus.PASS if ok else ClaimStatus.FAIL


@lru_cache(maxsize=None)
def _niemeier(name: str) -> Lattice:
    return build_niemeier(get_spec(name))


@lru_cache(maxsize=None)
def _holy_leech(name: str) -> Lattice:
    return holy_leech(get_spec(name))


def _on_n23(name: str) -> LatticeIsometry:
    return from_permutation(load_permutation(name), _niemeier("N23"), name)


@lru_cache(maxsize=None)
def _l2_11_group() -> FiniteIsometryGroup:
    return FiniteIsometryGroup([_on_n23("alpha"), _on_n23("beta"), _on_n23("gamma")])


def _permutation_group_order(gens: List[Permutation]) -> int:
    start = Permutation.identity(gens[0].labels)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.compose(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def _lattice_summary(lattice: Lattice) -> Dict[str, Any]:
    return {"rank": lattice.rank, "det": lattice.det, "roots": count_roots(lattice)}


@check("niemeier_roots")
def niemeier_roots() -> Outcome:
    table = {}
    for spec in load_table():
        if not spec.components:
            continue
        roots, ok = verify_roots(spec, _niemeier(spec.name))
        table[spec.name] = {"roots": roots, "expected": spec.expected_roots, "ok": ok}
    return _status(all(row["ok"] for row in table.values())), {"table": table}


@check("leech_rootless")
def leech_rootless() -> Outcome:
    leech = leech_from_pi()
    evidence = {
        "rank": leech.rank,
        "det": leech.det,
        "even": is_even(leech),
        "roots": count_roots(leech),
        "minimum": minimum(leech),
    }
    ok = evidence["rank"] == 24 and abs(evidence["det"]) == 1 and evidence["even"] and evidence["roots"] == 0
    return _status(ok and evidence["minimum"] == -4), evidence


@check("leech_constructions")
def leech_constructions() -> Outcome:
    models = {"N23": _holy_leech("N23"), "N22": _holy_leech("N22"), "Pi_1_25": leech_from_pi()}
    reference = models["N23"]
    evidence: Dict[str, Any] = {"comparisons": {}}
    statuses = []
    for name in ("N22", "Pi_1_25"):
        result = is_isometric_definite(reference, models[name])
        evidence["comparisons"][f"N23~{name}"] = {"status": result.status, "nodes": result.nodes}
        statuses.append(result.status)
    theta = {name: theta_coefficients(lat, settings.theta_fallback_bound) for name, lat in models.items()}
    evidence["theta"] = theta
    evidence["norm4"] = theta["N23"][4]
    if all(s == "isometric" for s in statuses):
        return _status(evidence["norm4"] == 196560), evidence
    if "not_isometric" in statuses:
        return ClaimStatus.FAIL, evidence
    same_theta = all(t == theta["N23"] for t in theta.values())
    if same_theta and evidence["norm4"] == 196560:
        return ClaimStatus.INDETERMINATE, evidence
    return ClaimStatus.FAIL, evidence


@check("holy_frame_index")
def holy_frame_index() -> Outcome:
    evidence = {}
    for name in ("N23", "N22", "N10"):
        i1, i2 = frame_intersection_index(get_spec(name))
        evidence[name] = {"nieme_index": i1, "leech_index": i2}
    ok = all(v["nieme_index"] is not None and v["leech_index"] is not None for v in evidence.values())
    return _status(ok), evidence


@check("order13_fixed_free")
def order13_fixed_free() -> Outcome:
    spec = get_spec("N10")
    frame = holy_frame(spec)
    leech = holy_leech(spec, frame)
    t = glue_generators(spec)[0]
    g = from_glue_translation(t, frame, leech)
    fixed = invariant_lattice(g)
    evidence = {"translation": list(t), "order": g.order(), "invariant_rank": fixed.rank}
    return _status(evidence["order"] == 13 and fixed.rank == 0), evidence


@check("order23_exclusion")
def order23_exclusion() -> Outcome:
    g = _on_n23("order23")
    s = coinvariant_lattice(g)
    evidence = {"order": g.order(), "coinvariant_rank": s.rank, "negative_room": 20}
    return _status(evidence["order"] == 23 and s.rank == 22 and s.rank > 20), evidence


@check("s11_printed")
def s11_printed() -> Outcome:
    s = catalog.s11()
    evidence = _lattice_summary(s)
    evidence["even"] = is_even(s)
    evidence["milgram_consistent"] = genus_symbol(s).is_consistent()
    ok = s.rank == 20 and abs(s.det) == 121 and evidence["roots"] == 0 and evidence["even"]
    return _status(ok), evidence


@check("s11_reproduction")
def s11_reproduction() -> Outcome:
    chi = _on_n23("chi_N23")
    s = coinvariant_lattice(chi, label="S_chi(N23)")
    evidence = _lattice_summary(s)
    result = is_isometric_definite(s, catalog.s11())
    evidence["isometry"] = result.status
    evidence["leech_couple"] = is_leech_couple(s, restrict(chi, s)).holds
    ok = s.rank == 20 and abs(s.det) == 121 and evidence["roots"] == 0 and evidence["leech_couple"]
    if result.status == "indeterminate":
        return (ClaimStatus.INDETERMINATE if ok else ClaimStatus.FAIL), evidence
    return _status(ok and bool(result)), evidence


@check("s11_n22")
def s11_n22() -> Outcome:
    n22 = _niemeier("N22")
    chi = from_permutation(load_permutation("chi_N22"), n22, "chi_N22")
    s = coinvariant_lattice(chi, label="S_chi(N22)")
    leech = _holy_leech("N22")
    evidence = _lattice_summary(s)
    evidence["inside_leech"] = all(leech.contains(v) for v in s.ambient.basis)
    evidence["genus_equal_printed"] = genus_equal(s, catalog.s11())
    ok = s.rank == 20 and abs(s.det) == 121 and evidence["roots"] == 0 and evidence["inside_leech"]
    return _status(ok and evidence["genus_equal_printed"]), evidence


@check("s11_genus")
def s11_genus() -> Outcome:
    s = catalog.s11()
    m = Lattice(M11_GRAM, "M")
    e8 = catalog.e_n(8, -1)
    evidence = {
        "E8(-1)^2+M^2": genus_equal(s, direct_sum([e8, e8, m, m])),
        "D16+(-1)+M^2": genus_equal(s, direct_sum([catalog.d16_plus(-1), m, m])),
    }
    return _status(all(evidence.values())), evidence


@check("complement_forms")
def complement_forms() -> Outcome:
    evidence = {}
    n22 = _niemeier("N22")
    pairs = {
        "N23/order23": (_on_n23("order23"), _niemeier("N23")),
        "N22/chi": (from_permutation(load_permutation("chi_N22"), n22, "chi_N22"), n22),
    }
    for name, (g, lattice) in pairs.items():
        t = invariant_lattice(g, lattice)
        s = coinvariant_lattice(g, lattice)
        match = disc_form_isomorphic(discriminant_group(s), discriminant_group(t).negate())
        evidence[name] = {"T_rank": t.rank, "S_rank": s.rank, "forms_match": bool(match)}
    t2 = Lattice(T2_GRAM, "T2_11")
    tx = orthogonal_complement([[1, 0, 0]], t2, "T(X)")
    evidence["T2/polarization"] = {"T_rank": tx.rank, "det": tx.det}
    ok = all(v.get("forms_match", True) for v in evidence.values())
    return _status(ok), evidence


def _suite_lattices() -> List[Lattice]:
    m = Lattice(M11_GRAM, "M")
    return [
        catalog.hyperbolic_plane(),
        catalog.a_n(2),
        catalog.a_n(12),
        catalog.d_n(4),
        catalog.e_n(6),
        catalog.e_n(7),
        catalog.e_n(8, -1),
        catalog.d16_plus(-1),
        catalog.l_k3_two(),
        catalog.l_mukai(),
        catalog.s11(),
        m,
        Lattice(T1_GRAM, "T1_11"),
        Lattice(T2_GRAM, "T2_11"),
        Lattice(catalog.TX_GRAM, "TX"),
        direct_sum([catalog.s11(), catalog.rank1(6)], "S11+(6)"),
        _niemeier("N22"),
    ]


@check("milgram_universal")
def milgram_universal() -> Outcome:
    evidence = {}
    for lattice in _suite_lattices():
        symbol = genus_symbol(lattice)
        evidence[lattice.label] = {"signature": str(symbol.signature), "milgram": symbol.milgram}
    return ClaimStatus.PASS, evidence


@check("ternary_genus")
def ternary_genus() -> Outcome:
    classes = enumerate_ternary_genus(242, s11_complement_form())
    printed = [Lattice(T1_GRAM, "T1_11"), Lattice(T2_GRAM, "T2_11")]
    matches = []
    for rep in classes:
        matches.append([p.label for p in printed if is_isometric_definite(rep, p)])
    evidence = {"classes": [lat.matrix() for lat in classes], "matches": matches}
    ok = len(classes) == 2 and sorted(m[0] for m in matches if len(m) == 1) == ["T1_11", "T2_11"]
    return _status(ok), evidence


@check("polar_tw1")
def polar_tw1() -> Outcome:
    t1 = Lattice(T1_GRAM, "T1_11")
    table = polarization_table(t1)
    least = table.least_degree_with_divisor(2)
    evidence = {
        "degrees": table.degrees(),
        "missing": table.missing_degrees(),
        "least_divisor_2": least,
        "divisor_e1": glue_divisor((1, 0, 0), t1),
        "divisor_e3": glue_divisor((0, 0, 1), t1),
    }
    ok = 2 in table.divisors and {4, 12, 14, 16, 20} <= set(table.missing_degrees()) and least == 22
    return _status(ok and evidence["divisor_e1"] == 1 and evidence["divisor_e3"] == 2), evidence


@check("polar_tw2")
def polar_tw2() -> Outcome:
    t2 = Lattice(T2_GRAM, "T2_11")
    table = polarization_table(t2)
    least = table.least_degree_with_divisor(2)
    evidence = {
        "degrees": table.degrees(),
        "missing": table.missing_degrees(),
        "least_divisor_2": least,
        "divisor_e1": glue_divisor((1, 0, 0), t2),
    }
    ok = least == 6 and {12, 14, 16, 20} <= set(table.missing_degrees()) and evidence["divisor_e1"] == 2
    return _status(ok), evidence


@check("ns_transcendental")
def ns_transcendental() -> Outcome:
    report = ns_and_transcendental_check()
    evidence = {
        "isotropic_elements": report.isotropic_elements,
        "genus_equal": report.genus_equal,
        "divisor": report.divisor,
        "transcendental": [list(r) for r in report.transcendental],
        "expected": [list(r) for r in report.expected],
    }
    return _status(report.holds), evidence


def _k3_two_generators() -> List[LatticeIsometry]:
    lattice = catalog.l_k3_two()
    n = lattice.rank
    swap = [[0] * n for _ in range(n)]
    for i in range(n):
        j = i
        if 6 <= i < 14:
            j = i + 8
        elif 14 <= i < 22:
            j = i - 8
        swap[j][i] = 1
    flip = [[int(i == j) * (-1 if i == n - 1 else 1) for j in range(n)] for i in range(n)]
    return [LatticeIsometry(lattice, swap, "matrix", "swap_E8"), LatticeIsometry(lattice, flip, "matrix", "-id(-2)")]


@check("mukai_extension")
def mukai_extension() -> Outcome:
    evidence = {}
    for g in _k3_two_generators():
        ext = extend_to_mukai([g])
        evidence[g.label] = {
            "even": is_even(ext.lattice),
            "unimodular": is_unimodular(ext.lattice),
            "coinvariant_rank": ext.coinvariant_rank,
            "coinvariant_equal": ext.coinvariant_equal,
        }
    ok = all(v["even"] and v["unimodular"] and v["coinvariant_equal"] for v in evidence.values())
    return _status(ok), evidence


@check("l2_11_order")
def l2_11_order() -> Outcome:
    group = _l2_11_group()
    table = rank_table_by_element_order(group)
    s = coinvariant_lattice(group)
    printed = [load_permutation(name) for name in ("alpha", "beta", "gamma_printed")]
    try:
        _on_n23("gamma_printed")
        printed_preserves_code = True
    except IsometryError:
        printed_preserves_code = False
    evidence = {
        "order": group.order,
        "ranks": {str(k): v for k, v in table.as_dict().items()},
        "counts": {str(k): v for k, v in table.counts.items()},
        "coinvariant_rank": s.rank,
        "abstract_order_printed": _permutation_group_order(printed),
        "printed_gamma_preserves_code": printed_preserves_code,
    }
    ok = (
        group.order == 660
        and table.as_dict() == L2_11_RANKS
        and table.counts == L2_11_COUNTS
        and s.rank == 20
        and evidence["abstract_order_printed"] == 660
    )
    return _status(ok), evidence


@check("klein_smooth")
def klein_smooth() -> Outcome:
    report = kc.smoothness_witness_mod_p(kc.klein_cubic(), settings.smoothness_prime)
    evidence = {"prime": report.prime, "points": report.points, "singular": report.singular}
    return _status(report.smooth), evidence


@check("klein_invariants")
def klein_invariants() -> Outcome:
    h = kc.klein_cubic()
    found = kc.invariant_cubics(kc.psi(), h)
    evidence = {"invariant_cubics": [list(m) for m in found], "identity_count": len(kc.invariant_cubics(kc.ProjAutomorphism.identity()))}
    ok = sorted(found) == sorted(KLEIN_B) and evidence["identity_count"] == 56
    return _status(ok), evidence


@check("klein_symplectic")
def klein_symplectic() -> Outcome:
    h = kc.klein_cubic()
    evidence = {g.label: kc.is_symplectic(g, h) for g in (kc.psi(), kc.beta(), kc.alpha())}
    evidence["alpha_action_is_eta"] = kc.residue_action(kc.alpha(), h) == CycloElement.zeta(3)
    ok = evidence["psi"] and evidence["beta"] and not evidence["alpha"] and evidence["alpha_action_is_eta"]
    return _status(ok), evidence


@check("klein_fixed_lines")
def klein_fixed_lines() -> Outcome:
    h = kc.klein_cubic()
    points = kc.fixed_points(kc.psi(), h)
    lines = kc.fixed_lines(kc.psi(), h)
    evidence = {"fixed_points": points, "lines": [list(line) for line in lines]}
    return _status(points == [1, 2, 3, 4, 5] and tuple(lines) == kc.EXPECTED_FIXED_LINES), evidence


@check("klein_jacobian")
def klein_jacobian() -> Outcome:
    values = kc.hilbert_function()
    piece = kc.jacobian_piece(kc.klein_cubic(), 3)
    evidence = {"hilbert_function": values, "dim_S3": piece.dim_s, "rank_J3": piece.rank_j}
    return _status(values == kc.expected_hilbert_function()), evidence


@check("klein_ranks")
def klein_ranks() -> Outcome:
    residue = {"psi": kc.rank_coinvariant_on_F(kc.psi()), "beta": kc.rank_coinvariant_on_F(kc.beta())}
    lattice_side = rank_table_by_element_order(_l2_11_group()).as_dict()
    evidence = {"residue": residue, "lattice": {"11": lattice_side.get(11), "5": lattice_side.get(5)}}
    ok = residue == {"psi": 20, "beta": 16} and lattice_side.get(11) == [20] and lattice_side.get(5) == [16]
    return _status(ok), evidence


def run_check(name: str) -> Outcome:
    logger.debug(f"[CLAIM] Executando verificação | verificacao={name}")
    return CHECKS[name]()
