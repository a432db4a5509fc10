"""
Modelo exato do anel jacobiano da cúbica de Klein em ℙ⁵.

    h = x₀³ + x₁²x₅ + x₂²x₄ + x₃²x₂ + x₄²x₁ + x₅²x₃

Os automorfismos tratados são monomiais: x_j ↦ s_j·x_{σ(j)} com s_j raízes
da unidade, de modo que cada monômio vai num múltiplo escalar de outro
monômio e toda a álgebra linear fica em ℚ(ζ_N).
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy import ZZ, Poly, isprime, symbols

from leechkit.config.config import settings
from leechkit.core import exact_linalg as la
from leechkit.core.cyclotomic import CycloElement
from leechkit.core.errors import KleinCubicError

NVARS = 6
X = symbols("x0:6")
Monomial = Tuple[int, ...]

PSI_WEIGHTS = (0, 1, 3, 4, 5, 9)
EXPECTED_FIXED_LINES = ((1, 2), (1, 3), (2, 5), (3, 4), (4, 5))


@dataclass(frozen=True)
class CubicForm:
    """Forma cúbica com coeficientes inteiros em x₀, …, x₅."""

    terms: Tuple[Tuple[Monomial, int], ...]

    def __post_init__(self):
        if any(sum(m) != 3 or len(m) != NVARS for m, _ in self.terms):
            raise KleinCubicError("forma não homogênea de grau 3 em seis variáveis")

    @classmethod
    def from_poly(cls, poly: Poly) -> "CubicForm":
        return cls(tuple(sorted((tuple(m), int(c)) for m, c in poly.terms() if c)))

    def poly(self) -> Poly:
        return Poly.from_dict(dict(self.terms), *X, domain=ZZ)

    def coefficients(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    @lru_cache(maxsize=None)
    def partials(self) -> Tuple[Tuple[Tuple[Monomial, int], ...], ...]:
        poly = self.poly()
        out = []
        for i in range(NVARS):
            d = poly.diff(X[i])
            out.append(tuple((tuple(m), int(c)) for m, c in d.terms() if c))
        return tuple(out)

    def vanishes_on_span(self, coords: Sequence[int]) -> bool:
        """h ≡ 0 no subespaço gerado pelos e_i, i em coords."""
        allowed = set(coords)
        return not any(all(e == 0 or i in allowed for i, e in enumerate(m)) for m, _ in self.terms)


def klein_cubic() -> CubicForm:
    x0, x1, x2, x3, x4, x5 = X
    return CubicForm.from_poly(
        Poly(x0**3 + x1**2 * x5 + x2**2 * x4 + x3**2 * x2 + x4**2 * x1 + x5**2 * x3, *X, domain=ZZ)
    )


@dataclass(frozen=True)
class ProjAutomorphism:
    """
    Automorfismo monomial x_j ↦ ζ_N^{exponents[j]}·x_{sigma[j]}.

    Attributes:
        sigma: permutação das variáveis
        exponents: expoentes de ζ_N por variável
        conductor: N
    """

    sigma: Tuple[int, ...]
    exponents: Tuple[int, ...]
    conductor: int = 1
    label: str = ""

    def __post_init__(self):
        if sorted(self.sigma) != list(range(NVARS)) or len(self.exponents) != NVARS:
            raise KleinCubicError("automorfismo monomial inválido")
        object.__setattr__(self, "exponents", tuple(e % self.conductor for e in self.exponents))

    @classmethod
    def identity(cls) -> "ProjAutomorphism":
        return cls(tuple(range(NVARS)), (0,) * NVARS, 1, "id")

    @classmethod
    def diagonal(cls, exponents: Sequence[int], conductor: int, label: str = "") -> "ProjAutomorphism":
        return cls(tuple(range(NVARS)), tuple(exponents), conductor, label)

    @classmethod
    def from_cycle(cls, cycle: Sequence[int], label: str = "") -> "ProjAutomorphism":
        """Permutação cíclica x_{c₀} ↦ x_{c₁} ↦ … ↦ x_{c₀}."""
        sigma = list(range(NVARS))
        for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
            sigma[a] = b
        return cls(tuple(sigma), (0,) * NVARS, 1, label)

    @property
    def is_diagonal(self) -> bool:
        return self.sigma == tuple(range(NVARS))

    def _at(self, conductor: int) -> Tuple[int, ...]:
        step = conductor // self.conductor
        return tuple(e * step for e in self.exponents)

    def apply_monomial(self, m: Monomial) -> Tuple[int, Monomial]:
        """g·m = ζ_N^{k}·m' ; devolve (k, m')."""
        image = [0] * NVARS
        power = 0
        for j, e in enumerate(m):
            if e:
                image[self.sigma[j]] += e
                power += e * self.exponents[j]
        return power % self.conductor, tuple(image)

    def compose(self, other: "ProjAutomorphism") -> "ProjAutomorphism":
        """self ∘ other: aplica other primeiro."""
        n = la.lcm(self.conductor, other.conductor)
        mine, theirs = self._at(n), other._at(n)
        sigma = tuple(self.sigma[other.sigma[j]] for j in range(NVARS))
        exps = tuple(theirs[j] + mine[other.sigma[j]] for j in range(NVARS))
        return ProjAutomorphism(sigma, exps, n, "composite")

    def power(self, k: int) -> "ProjAutomorphism":
        result = ProjAutomorphism.identity()
        for _ in range(k):
            result = result.compose(self)
        return result

    def is_identity(self) -> bool:
        return self.is_diagonal and not any(self.exponents)

    @property
    def order(self) -> int:
        """Ordem do levantamento linear."""
        g = self
        k = 1
        while not g.is_identity():
            g = g.compose(self)
            k += 1
        return k

    def det(self) -> CycloElement:
        sign = 1
        seen = set()
        for start in range(NVARS):
            if start in seen:
                continue
            length = 0
            j = start
            while j not in seen:
                seen.add(j)
                j = self.sigma[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return CycloElement.zeta(self.conductor, sum(self.exponents)) * sign

    def matrix(self) -> List[List[CycloElement]]:
        """Matriz 6×6: coluna j tem ζ^{e_j} na linha σ(j)."""
        zero = CycloElement.from_rational(0, self.conductor)
        out = [[zero] * NVARS for _ in range(NVARS)]
        for j in range(NVARS):
            out[self.sigma[j]][j] = CycloElement.zeta(self.conductor, self.exponents[j])
        return out


def psi() -> ProjAutomorphism:
    return ProjAutomorphism.diagonal(PSI_WEIGHTS, 11, "psi")


def alpha() -> ProjAutomorphism:
    return ProjAutomorphism.diagonal((1, 0, 0, 0, 0, 0), 3, "alpha")


def beta() -> ProjAutomorphism:
    return ProjAutomorphism.from_cycle((1, 4, 2, 3, 5), "beta")


def scale_factor(g: ProjAutomorphism, h: CubicForm) -> CycloElement:
    """
    λ com g·h = λ·h.

    Raises:
        KleinCubicError: se g não preservar V(h)
    """
    coeffs = h.coefficients()
    lam: Optional[CycloElement] = None
    for m, c in coeffs.items():
        power, image = g.apply_monomial(m)
        if image not in coeffs:
            raise KleinCubicError(f"g não preserva a cúbica | label={g.label} | monomio={image}")
        ratio = CycloElement.zeta(g.conductor, power) * Fraction(c, coeffs[image])
        if lam is None:
            lam = ratio
        elif lam != ratio:
            raise KleinCubicError(f"g·h não é múltiplo escalar de h | label={g.label}")
    return lam


def residue_action(g: ProjAutomorphism, h: CubicForm) -> CycloElement:
    """Escalar pelo qual g age em Res(Ω/h²): det(g)/λ²."""
    lam = scale_factor(g, h)
    return g.det() / (lam * lam)


def is_symplectic(g: ProjAutomorphism, h: CubicForm) -> bool:
    result = residue_action(g, h) == 1
    logger.debug(f"[KLEIN] Simpleticidade | g={g.label} | simpletico={result}")
    return result


def cubic_monomials() -> List[Monomial]:
    return monomials(3)


@lru_cache(maxsize=None)
def monomials(d: int) -> Tuple[Monomial, ...]:
    out = []
    for combo in combinations_with_replacement(range(NVARS), d):
        m = [0] * NVARS
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return tuple(sorted(out, reverse=True))


def invariant_cubics(g: ProjAutomorphism, h: Optional[CubicForm] = None) -> List[Monomial]:
    """
    Monômios cúbicos m com g·m = λ·m (λ o fator de h quando h é dado, senão 1).

    Raises:
        KleinCubicError: g não diagonal
    """
    if not g.is_diagonal:
        raise KleinCubicError(f"invariant_cubics exige automorfismo diagonal | label={g.label}")
    target = 0
    if h is not None:
        lam = scale_factor(g, h)
        target = next(k for k in range(g.conductor) if CycloElement.zeta(g.conductor, k) == lam)
    return [m for m in cubic_monomials() if g.apply_monomial(m)[0] == target]


def fixed_points(g: ProjAutomorphism, h: CubicForm) -> List[int]:
    """
    Pontos fixos [e_i] de g diagonal sobre V(h) (autoespaços de dimensão 1).

    Raises:
        KleinCubicError: g não diagonal ou autoespaço de dimensão > 1
    """
    if not g.is_diagonal:
        raise KleinCubicError(f"pontos fixos exigem automorfismo diagonal | label={g.label}")
    if len(set(g.exponents)) != NVARS:
        raise KleinCubicError(f"autoespaço de dimensão > 1: pontos fixos não isolados | label={g.label}")
    return [i for i in range(NVARS) if h.vanishes_on_span([i])]


def fixed_lines(g: ProjAutomorphism, h: CubicForm) -> List[Tuple[int, int]]:
    """Retas [e_i][e_j] contidas em V(h) entre pontos fixos de g."""
    points = fixed_points(g, h)
    lines = [(i, j) for k, i in enumerate(points) for j in points[k + 1 :] if h.vanishes_on_span([i, j])]
    logger.debug(f"[KLEIN] Retas fixas | g={g.label} | retas={lines}")
    return lines


@dataclass
class SmoothnessReport:
    prime: int
    points: int
    singular: int
    elapsed: float = 0.0

    @property
    def smooth(self) -> bool:
        return self.singular == 0


def _evaluate(terms: Sequence[Tuple[Monomial, int]], coords: np.ndarray, p: int) -> np.ndarray:
    total = np.zeros(coords.shape[1], dtype=np.int64)
    for m, c in terms:
        term = np.full(coords.shape[1], c % p, dtype=np.int64)
        for i, e in enumerate(m):
            for _ in range(e):
                term = (term * coords[i]) % p
        total = (total + term) % p
    return total


def _scan_chunk(partials, p: int, lead: int, start: int, stop: int) -> int:
    idx = np.arange(start, stop, dtype=np.int64)
    coords = np.zeros((NVARS, len(idx)), dtype=np.int64)
    coords[lead] = 1
    for pos in range(NVARS - 1, lead, -1):
        coords[pos] = idx % p
        idx = idx // p
    mask = np.ones(coords.shape[1], dtype=bool)
    for terms in partials:
        mask &= _evaluate(terms, coords, p) == 0
        if not mask.any():
            return 0
    return int(mask.sum())


def smoothness_witness_mod_p(
    h: CubicForm, p: Optional[int] = None, chunk_size: Optional[int] = None, max_workers: Optional[int] = None
) -> SmoothnessReport:
    """
    Conta os pontos de ℙ⁵(𝔽_p) onde todas as derivadas parciais se anulam.

    Zero pontos singulares certifica a lisura de V(h) sobre ℚ. Em p = 2 e
    p = 3 as derivadas de x_i³ se anulam e a contagem não certifica nada.

    Raises:
        KleinCubicError: p não primo, ou p em {2, 3}
    """
    p = p or settings.smoothness_prime
    if not isprime(p):
        raise KleinCubicError(f"a varredura exige p primo | p={p}")
    if p in (2, 3):
        raise KleinCubicError(f"p divide os coeficientes das derivadas de x_i³ | p={p}")
    chunk = chunk_size or settings.scan_chunk_size
    start = time.perf_counter()
    tasks = []
    for lead in range(NVARS):
        count = p ** (NVARS - 1 - lead)
        for s in range(0, count, chunk):
            tasks.append((lead, s, min(s + chunk, count)))
    partials = h.partials()
    with ThreadPoolExecutor(max_workers=max_workers or settings.max_workers) as pool:
        counts = list(pool.map(lambda t: _scan_chunk(partials, p, *t), tasks))
    points = (p**NVARS - 1) // (p - 1)
    report = SmoothnessReport(p, points, sum(counts), time.perf_counter() - start)
    logger.info(
        f"[KLEIN] Varredura mod p | p={p} | pontos={points} | singulares={report.singular} | tempo={report.elapsed:.1f}s"
    )
    return report


@dataclass
class GradedJacobianPiece:
    """
    Parte de grau d de S = ℚ[x₀..x₅] e do ideal jacobiano J.

    Attributes:
        degree: d
        basis: monômios de S^d
        rows: forma escalonada reduzida de J_d (coordenadas na base de monômios)
        pivots: coluna pivô de cada linha
    """

    degree: int
    basis: Tuple[Monomial, ...]
    rows: List[List[Fraction]] = field(repr=False)
    pivots: List[int]

    @property
    def rank_j(self) -> int:
        return len(self.rows)

    @property
    def dim_s(self) -> int:
        return len(self.basis)

    @property
    def dim_r(self) -> int:
        return self.dim_s - self.rank_j


def _multiply(m: Monomial, terms: Sequence[Tuple[Monomial, int]]) -> Dict[Monomial, int]:
    out: Dict[Monomial, int] = {}
    for t, c in terms:
        key = tuple(a + b for a, b in zip(m, t))
        out[key] = out.get(key, 0) + c
    return out


@lru_cache(maxsize=None)
def jacobian_piece(h: CubicForm, d: int) -> GradedJacobianPiece:
    """S^d e J_d = span{m·∂h/∂x_i : deg m = d-2} com posto exato."""
    if d < 0:
        raise KleinCubicError(f"grau negativo | d={d}")
    basis = monomials(d)
    index = {m: i for i, m in enumerate(basis)}
    spanning = []
    if d >= 2:
        for m in monomials(d - 2):
            for terms in h.partials():
                row = [0] * len(basis)
                for mono, c in _multiply(m, terms).items():
                    row[index[mono]] += c
                spanning.append(row)
    rows, pivots = la.rref(spanning) if spanning else ([], [])
    piece = GradedJacobianPiece(d, basis, [list(r) for r in rows], list(pivots))
    logger.debug(f"[KLEIN] Parte jacobiana | d={d} | dim_S={piece.dim_s} | posto_J={piece.rank_j}")
    return piece


def _act(g: ProjAutomorphism, piece: GradedJacobianPiece, row: Sequence[Fraction]) -> Dict[int, List[Fraction]]:
    """g·(vetor racional) separado por potência de ζ_N."""
    index = {m: i for i, m in enumerate(piece.basis)}
    parts: Dict[int, List[Fraction]] = {}
    for i, c in enumerate(row):
        if c:
            power, image = g.apply_monomial(piece.basis[i])
            vec = parts.setdefault(power, [Fraction(0)] * piece.dim_s)
            vec[index[image]] += c
    return parts


def _residual(piece: GradedJacobianPiece, v: List[Fraction]) -> List[Fraction]:
    v = list(v)
    for row, p in zip(piece.rows, piece.pivots):
        if v[p]:
            c = v[p]
            v = [a - c * b for a, b in zip(v, row)]
    return v


def trace_on_R(g: ProjAutomorphism, h: CubicForm, d: int) -> CycloElement:
    """
    tr(g | R_d) = tr(g | S^d) - tr(g | J_d).

    Raises:
        KleinCubicError: se g não preservar J_d
    """
    scale_factor(g, h)
    piece = jacobian_piece(h, d)
    n = g.conductor
    counts: Dict[int, Fraction] = {}
    for m in piece.basis:
        power, image = g.apply_monomial(m)
        if image == m:
            counts[power] = counts.get(power, Fraction(0)) + 1
    trace_s = CycloElement.from_powers(n, counts)
    trace_j: Dict[int, Fraction] = {}
    for row, p in zip(piece.rows, piece.pivots):
        parts = _act(g, piece, row)
        residuals = {k: _residual(piece, v) for k, v in parts.items()}
        for col in range(piece.dim_s):
            if not any(r[col] for r in residuals.values()):
                continue
            value = CycloElement.from_powers(n, {k: r[col] for k, r in residuals.items() if r[col]})
            if not value.is_zero():
                raise KleinCubicError(f"g não preserva J_{d} | label={g.label}")
        for k, v in parts.items():
            if v[p]:
                trace_j[k] = trace_j.get(k, Fraction(0)) + v[p]
    return trace_s - CycloElement.from_powers(n, trace_j)


def invariant_dimension(g: ProjAutomorphism, h: CubicForm, d: int = 3) -> int:
    """
    dim R_d^g = (1/ord g)·Σ_k twist^k·tr(g^k | R_d), twist = det/λ^{d/3+2}.

    Raises:
        KleinCubicError: média não inteira não negativa
    """
    order = g.order
    twist = g.det() / scale_factor(g, h) ** (d // 3 + 2)
    total = CycloElement.from_rational(0, g.conductor)
    element = ProjAutomorphism.identity()
    for k in range(order):
        total = total + twist**k * trace_on_R(element, h, d)
        element = element.compose(g)
    if not total.is_rational():
        raise KleinCubicError(f"média de traços não racional | label={g.label}")
    value = total.to_rational() / order
    if value.denominator != 1 or value < 0:
        raise KleinCubicError(f"média de traços não é inteira não negativa | label={g.label} | valor={value}")
    return int(value)


def rank_coinvariant_on_F(g: ProjAutomorphism, h: Optional[CubicForm] = None) -> int:
    """
    rank S_⟨g⟩(F) = 20 - dim R₃^g para g simplético.

    Raises:
        KleinCubicError: g não simplético
    """
    h = h or klein_cubic()
    if not is_symplectic(g, h):
        raise KleinCubicError(f"posto co-invariante exige automorfismo simplético | label={g.label}")
    rank = 20 - invariant_dimension(g, h, 3)
    logger.info(f"[KLEIN] Posto co-invariante | g={g.label} | posto={rank}")
    return rank


def hilbert_function(h: Optional[CubicForm] = None, top: int = 6) -> List[int]:
    h = h or klein_cubic()
    return [jacobian_piece(h, d).dim_r for d in range(top + 1)]


def expected_hilbert_function() -> List[int]:
    """Coeficientes de (1+t)⁶."""
    return [comb(NVARS, d) for d in range(NVARS + 1)]
