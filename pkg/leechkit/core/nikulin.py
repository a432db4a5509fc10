"""
Critérios de existência e mergulho via formas discriminantes.

Inclui a assinatura de Milgram por soma de Gauss exata, os predicados de
existência de reticulados pares e de mergulho primitivo, a extensão ao
reticulado de Mukai, a enumeração de formas ternárias num gênero e o
cálculo de divisores de polarizações via o subgrupo de colagem H_T.
"""

import cmath
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Optional, Sequence, Set, Tuple

from loguru import logger

from leechkit.config.config import settings
from leechkit.core import exact_linalg as la
from leechkit.core.catalog import M11_GRAM, T2_GRAM, TX_GRAM, e_n, l_k3_two, rank1, s11
from leechkit.core.cyclotomic import CycloElement
from leechkit.core.errors import BoundExceededError, GlueAmbiguityError, LatticeError
from leechkit.core.group_actions import (
    LatticeIsometry,
    coinvariant_lattice,
    from_ambient_images,
)
from leechkit.core.lattice import (
    FiniteQuadraticForm,
    GlueSubgroup,
    Lattice,
    Signature,
    direct_sum,
    disc_form_isomorphic,
    discriminant_group,
    genus_equal,
    is_even,
    is_unimodular,
    isotropic_elements,
    orthogonal_complement,
    overlattice_from_isotropic,
    rescale,
    signature,
)
from leechkit.core.short_vectors import is_isometric_definite, primitive_vectors_of_norm


def milgram_signature(q: FiniteQuadraticForm, max_order: Optional[int] = None) -> int:
    """
    sign(q) mod 8 pela soma de Gauss Σ exp(πi·q(a)) = √|A|·exp(2πi·sign/8).

    Raises:
        LatticeError: forma ímpar ou soma com módulo diferente de √|A|
        BoundExceededError: grupo acima do limite configurado
    """
    if q.q is None:
        raise LatticeError("assinatura de Milgram exige forma par")
    if q.length == 0:
        return 0
    max_order = max_order or settings.disc_form_max_order
    if q.order > max_order:
        raise BoundExceededError(f"grupo de ordem {q.order} acima do limite {max_order}", max_order)
    conductor = 2 * la.lcm(*(x.denominator for x in q.q), *(x.denominator for row in q.b for x in row))
    counts: Dict[int, int] = {}
    for a in q.elements():
        value = q.value(a)
        k = int(value * conductor / 2) % conductor
        counts[k] = counts.get(k, 0) + 1
    gauss = CycloElement.from_powers(conductor, counts)
    if gauss * gauss.conj() != q.order:
        raise LatticeError(f"soma de Gauss com módulo incorreto | ordem={q.order}")
    angle = cmath.phase(gauss.to_complex())
    s = round(angle * 8 / (2 * cmath.pi)) % 8
    if gauss * gauss != CycloElement.zeta(4, s) * q.order:
        raise LatticeError(f"soma de Gauss fora das oitavas raízes da unidade | ordem={q.order}")
    return s


@dataclass(frozen=True)
class GenusSymbol:
    """Assinatura e forma discriminante de um reticulado par."""

    signature: Signature
    form: FiniteQuadraticForm

    @property
    def milgram(self) -> int:
        return milgram_signature(self.form)

    def is_consistent(self) -> bool:
        return self.milgram == (self.signature.plus - self.signature.minus) % 8


def genus_symbol(lattice: Lattice) -> GenusSymbol:
    """
    Raises:
        LatticeError: reticulado ímpar ou símbolo que viola a fórmula de Milgram
    """
    if not is_even(lattice):
        raise LatticeError(f"símbolo de gênero exige reticulado par | label={lattice.label}")
    symbol = GenusSymbol(signature(lattice), discriminant_group(lattice))
    if not symbol.is_consistent():
        raise LatticeError(f"símbolo de gênero inconsistente | label={lattice.label}")
    return symbol


def exists_even_lattice(sig: Signature, q: FiniteQuadraticForm) -> bool:
    """Existe T par com assinatura sig e forma q (versão simplificada do critério)."""
    if sig.plus < 0 or sig.minus < 0:
        return False
    if sig.plus + sig.minus < q.length:
        return False
    return milgram_signature(q) == (sig.plus - sig.minus) % 8


@dataclass(frozen=True)
class EmbeddingReport:
    exists: bool
    complement_signature: Signature
    complement_form: FiniteQuadraticForm

    def __bool__(self) -> bool:
        return self.exists


def primitive_embedding_exists(sub: Lattice, target: Signature) -> EmbeddingReport:
    """
    Mergulho primitivo de S num unimodular par de assinatura target.

    O complemento precisa ter assinatura (l₊ - s₊, l₋ - s₋) e forma -q_S.
    """
    if not is_even(sub):
        raise LatticeError(f"mergulho primitivo exige reticulado par | label={sub.label}")
    sig = signature(sub)
    comp = Signature(target.plus - sig.plus, target.minus - sig.minus)
    form = discriminant_group(sub).negate()
    exists = exists_even_lattice(comp, form)
    logger.debug(f"[NIKULIN] Mergulho primitivo | S={sub.label} | alvo={target} | existe={exists}")
    return EmbeddingReport(exists, comp, form)


@dataclass
class MukaiExtension:
    """L' gerado por L ⊕ ℤx e (x+v)/2, com G estendido por identidade em x."""

    lattice: Lattice
    isometries: List[LatticeIsometry]
    coinvariant_rank: int
    coinvariant_equal: bool


def _pad_isometry(g: LatticeIsometry) -> List[List[int]]:
    n = g.lattice.rank
    out = [list(row) + [0] for row in g.matrix]
    out.append([0] * n + [1])
    return out


def extend_to_mukai(generators: Sequence[LatticeIsometry], v_index: Optional[int] = None) -> MukaiExtension:
    """
    Estende G de L = U³⊕E₈(-1)²⊕(-2) ao reticulado unimodular par L'.

    Args:
        generators: isometrias de L (base do catálogo)
        v_index: índice do vetor v de quadrado -2 com (v, L) = 2ℤ (padrão: o último)

    Raises:
        LatticeError: v inadequado ou L' não unimodular par de assinatura (4,20)
    """
    base = generators[0].lattice if generators else l_k3_two()
    n = base.rank
    v_index = n - 1 if v_index is None else v_index
    v = [int(i == v_index) for i in range(n)]
    if base.norm(v) != -2 or any(base.pair(v, [int(i == j) for j in range(n)]) % 2 for i in range(n)):
        raise LatticeError("v precisa ter quadrado -2 e divisor 2")
    total = direct_sum([base, rank1(2)], "L+Zx")
    form = discriminant_group(total)
    glue = [Fraction(x, 2) for x in v] + [Fraction(1, 2)]
    subgroup = GlueSubgroup(form, (form.coordinates(glue),))
    mukai = overlattice_from_isotropic(total, subgroup, "L'")
    if not (is_even(mukai) and is_unimodular(mukai) and signature(mukai) == Signature(4, 20)):
        raise LatticeError("sobre-reticulado não é unimodular par de assinatura (4,20)")

    extended = []
    for g in generators:
        padded = _pad_isometry(g)
        images = [la.matvec(padded, list(row)) for row in mukai.ambient.basis]
        extended.append(from_ambient_images(mukai, images, "composite", f"{g.label}+id"))

    if generators:
        s_small = coinvariant_lattice(generators, base)
        s_big = coinvariant_lattice(extended, mukai)
        small_rows = [list(row) + [Fraction(0)] for row in s_small.ambient.basis]
        big_rows = [list(row) for row in s_big.ambient.basis]
        equal = (
            s_small.rank == s_big.rank
            and all(s_big.contains(r) for r in small_rows)
            and all(r[-1] == 0 and s_small.contains(r[:-1]) for r in big_rows)
        )
        rank = s_big.rank
    else:
        equal, rank = True, 0
    logger.info(f"[NIKULIN] Extensão de Mukai | geradores={len(generators)} | posto_S={rank} | igual={equal}")
    return MukaiExtension(mukai, extended, rank, equal)


def _positive_definite(gram: Sequence[Sequence[int]]) -> bool:
    return all(la.det([row[:k] for row in gram[:k]]) > 0 for k in range(1, len(gram) + 1))


def _ternary_candidates(a: int, det: int) -> List[Lattice]:
    out = []
    limit = 2 * det
    b = a
    while a * b * b <= limit:
        c = b
        while a * b * c <= limit:
            for g12 in range(-(a // 2), a // 2 + 1):
                for g13 in range(-(a // 2), a // 2 + 1):
                    for g23 in range(-(b // 2), b // 2 + 1):
                        gram = [[a, g12, g13], [g12, b, g23], [g13, g23, c]]
                        if la.det(gram) == det and _positive_definite(gram):
                            out.append(Lattice(tuple(map(tuple, gram))))
            c += 2
        b += 2
    return out


def enumerate_ternary_genus(
    det: int, form: FiniteQuadraticForm, max_workers: Optional[int] = None
) -> List[Lattice]:
    """
    Uma representante por classe de isometria de formas ternárias positivas pares
    de determinante det e forma discriminante isomorfa a form.

    Percorre formas de Minkowski: 0 < a ≤ b ≤ c pares, 2|g₁₂| ≤ a, 2|g₁₃| ≤ a,
    2|g₂₃| ≤ b e abc ≤ 2·det.
    """
    top = 2
    while (top + 2) ** 3 <= 2 * det:
        top += 2
    with ThreadPoolExecutor(max_workers=max_workers or settings.max_workers) as pool:
        batches = list(pool.map(lambda a: _ternary_candidates(a, det), range(2, top + 1, 2)))
    candidates = [lat for batch in batches for lat in batch]
    in_genus = [lat for lat in candidates if disc_form_isomorphic(discriminant_group(lat), form)]
    classes: List[Lattice] = []
    for lat in in_genus:
        duplicate = False
        for rep in classes:
            result = is_isometric_definite(lat, rep)
            if result.status == "indeterminate":
                raise BoundExceededError(f"isometria indeterminada entre ternárias | {result.reason}")
            if result:
                duplicate = True
                break
        if not duplicate:
            classes.append(lat.relabel(f"T{len(classes) + 1}"))
    logger.info(
        f"[NIKULIN] Gênero ternário | det={det} | candidatas={len(candidates)} | no_genero={len(in_genus)} | classes={len(classes)}"
    )
    return classes


def s11_complement_form() -> FiniteQuadraticForm:
    """Forma discriminante exigida de T_ψ: -q_{S₁₁} ⊕ q_{(-2)}."""
    return discriminant_group(direct_sum([rescale(s11(), -1), rank1(-2)]))


def subgroup_of_order(form: FiniteQuadraticForm, n: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Geradores do único subgrupo de ordem n quando n é ordem de Hall.

    Raises:
        GlueAmbiguityError: n não é ordem de Hall e há mais de um candidato
        LatticeError: não existe subgrupo de ordem n
    """
    if form.order % n:
        raise LatticeError(f"grupo de ordem {form.order} sem subgrupo de ordem {n}")
    if gcd(n, form.order // n) == 1:
        gens = []
        for i, d in enumerate(form.invariants):
            part = gcd(d, n)
            if part > 1:
                gens.append(tuple((d // part) * int(i == j) for j in range(form.length)))
        return tuple(gens)
    candidates: List[Tuple[Tuple[int, ...], ...]] = []
    seen: Set[frozenset] = set()
    for a in form.elements():
        if form.order_of(a) != n:
            continue
        group = frozenset(GlueSubgroup(form, (a,)).closure())
        if group not in seen:
            seen.add(group)
            candidates.append((a,))
    if len(candidates) != 1:
        raise GlueAmbiguityError(f"subgrupo de ordem {n} não é único", candidates)
    return candidates[0]


def _restricted_form(form: FiniteQuadraticForm, gens: Sequence[Tuple[int, ...]]) -> FiniteQuadraticForm:
    invariants = tuple(form.order_of(g) for g in gens)
    q = tuple(form.value(g) for g in gens) if form.q is not None else None
    b = tuple(tuple(form.pairing(g, h) for h in gens) for g in gens)
    return FiniteQuadraticForm(invariants, q, b)


@dataclass
class GlueData:
    """Subgrupo H_T ⊂ A_T e seus lifts duais em coordenadas de T."""

    order: int
    generators: Tuple[Tuple[int, ...], ...]
    lifts: List[List[Fraction]] = field(default_factory=list)


def glue_subgroup(t: Lattice, s: Lattice, ambient_det: int = 2) -> GlueData:
    """
    H_T para T ⊕ S ⊂ L com |det L| = ambient_det.

    Raises:
        LatticeError: |H|² não divide det T · det S / |det L| ou formas incompatíveis
        GlueAmbiguityError: H_T não determinado por ordem e forma
    """
    ratio = Fraction(abs(t.det * s.det), ambient_det)
    order = isqrt(int(ratio)) if ratio.denominator == 1 else 0
    if order == 0 or order * order != ratio:
        raise LatticeError(f"det T · det S / det L = {ratio} não é um quadrado")
    form_t = discriminant_group(t)
    gens = subgroup_of_order(form_t, order)
    restricted = _restricted_form(form_t, gens)
    target = discriminant_group(s).negate()
    if restricted.order != target.order or not disc_form_isomorphic(restricted, target):
        raise LatticeError(f"H_T incompatível com -q_S | T={t.label} | S={s.label}")
    return GlueData(order, gens, [form_t.lift(g) for g in gens])


def glue_divisor(
    f: Sequence[int], t: Lattice, s: Optional[Lattice] = None, ambient_det: int = 2, glue: Optional[GlueData] = None
) -> int:
    """
    Divisor de f ∈ T no reticulado ambiente: gerador de (f, p_T(L)).

    p_T(L) é gerado por T e pelos lifts de H_T.
    """
    glue = glue or glue_subgroup(t, s or s11(), ambient_det)
    values = [t.pair(f, [int(i == j) for j in range(t.rank)]) for i in range(t.rank)]
    values += [t.pair(f, lift) for lift in glue.lifts]
    out = 0
    for x in values:
        x = Fraction(x)
        if x.denominator != 1:
            raise LatticeError("lift fora do dual de T")
        out = gcd(out, x.numerator)
    return out


@dataclass
class PolarizationTable:
    """Divisores dos vetores primitivos de T por grau (norma)."""

    label: str
    divisors: Dict[int, Set[int]]
    max_degree: int

    def degrees(self) -> List[int]:
        return sorted(self.divisors)

    def missing_degrees(self) -> List[int]:
        return [d for d in range(2, self.max_degree + 1, 2) if d not in self.divisors]

    def least_degree_with_divisor(self, divisor: int) -> Optional[int]:
        return next((d for d in self.degrees() if divisor in self.divisors[d]), None)


def polarization_table(
    t: Lattice, s: Optional[Lattice] = None, max_degree: int = 24, ambient_det: int = 2
) -> PolarizationTable:
    glue = glue_subgroup(t, s or s11(), ambient_det)
    divisors: Dict[int, Set[int]] = {}
    for degree in range(2, max_degree + 1, 2):
        for f in primitive_vectors_of_norm(t, degree):
            divisors.setdefault(degree, set()).add(glue_divisor(f, t, glue=glue))
    logger.debug(f"[NIKULIN] Polarizações | T={t.label} | graus={sorted(divisors)}")
    return PolarizationTable(t.label, divisors, max_degree)


def reduce_binary_form(gram: Sequence[Sequence[int]]) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    Redução de Lagrange–Gauss de uma forma binária positiva definida.

    Returns:
        Gram reduzida [[a, b], [b, c]] com 2|b| ≤ a ≤ c e b ≥ 0 (representante
        único sob GL₂(ℤ))
    """
    (a, b), (_, c) = gram
    if a <= 0 or a * c - b * b <= 0:
        raise LatticeError("redução binária exige forma positiva definida")
    while True:
        if 2 * abs(b) > a:
            k = (2 * b + a) // (2 * a)
            c = c - 2 * k * b + k * k * a
            b = b - k * a
        if a > c:
            a, c = c, a
            continue
        if 2 * abs(b) <= a:
            break
    return (a, abs(b)), (abs(b), c)


@dataclass
class NSTranscendentalReport:
    isotropic_elements: int
    genus_equal: bool
    transcendental: Tuple[Tuple[int, int], Tuple[int, int]]
    expected: Tuple[Tuple[int, int], Tuple[int, int]]
    divisor: int

    @property
    def holds(self) -> bool:
        return (
            self.isotropic_elements == 0
            and self.genus_equal
            and self.divisor == 2
            and self.transcendental == self.expected
        )


def ns_and_transcendental_check(polarization: Sequence[int] = (1, 0, 0)) -> NSTranscendentalReport:
    """
    NS = S₁₁ ⊕ (6) sem sobre-reticulados, no gênero de (6)⊕E₈(-1)²⊕M², e
    T(X) = complemento da polarização de grau 6 em T²₁₁.
    A polarização precisa ter divisor 2 no reticulado ambiente.
    """
    ns = direct_sum([s11(), rank1(6)], "S11+(6)")
    isotropic = isotropic_elements(discriminant_group(ns))
    m = Lattice(M11_GRAM, "M")
    e8 = e_n(8, -1)
    model = direct_sum([rank1(6), e8, e8, m, m], "(6)+E8(-1)^2+M^2")
    same_genus = genus_equal(ns, model)
    t2 = Lattice(T2_GRAM, "T2_11")
    if t2.norm(polarization) != 6:
        raise LatticeError("a polarização precisa ter grau 6")
    divisor = glue_divisor(polarization, t2)
    tx = orthogonal_complement([list(polarization)], t2, "T(X)")
    reduced = reduce_binary_form(tx.gram)
    expected = reduce_binary_form(TX_GRAM)
    report = NSTranscendentalReport(len(isotropic), same_genus, reduced, expected, divisor)
    logger.info(
        f"[NIKULIN] NS/T | isotropicos={report.isotropic_elements} | genero={same_genus} | divisor={divisor} | T(X)={reduced}"
    )
    return report
