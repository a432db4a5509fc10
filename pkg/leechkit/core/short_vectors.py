"""
Enumeração completa de vetores curtos em reticulados definidos.

O pré-processamento é uma redução LLL racional exata (δ = 3/4) sobre a
matriz de Gram; a enumeração é um Fincke–Pohst em aritmética inteira
(coeficientes de Gram–Schmidt reescalados por denominadores comuns), sem
ponto flutuante. Os vetores são contados uma vez a menos de sinal e as
contagens por norma incluem os dois sinais.
"""

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import exp, floor, isqrt, lgamma, log, pi
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from leechkit.config.config import settings
from leechkit.core import exact_linalg as la
from leechkit.core.errors import BoundExceededError, LatticeError
from leechkit.core.lattice import Lattice, signature

DELTA = Fraction(3, 4)
_INT64_SAFE = 2**62


def _gram_schmidt(gram: Sequence[Sequence[int]]) -> Tuple[List[List[Fraction]], List[Fraction]]:
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j]) - sum((mu[j][k] * mu[i][k] * b[k] for k in range(j)), Fraction(0))
            mu[i][j] = s / b[j]
        b[i] = Fraction(gram[i][i]) - sum((mu[i][k] ** 2 * b[k] for k in range(i)), Fraction(0))
        if b[i] <= 0:
            raise LatticeError("forma não positiva definida na ortogonalização")
    return mu, b


def lll_reduce(gram: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[List[int]]]:
    """
    Redução LLL exata de uma matriz de Gram positiva definida.

    Returns:
        (gram reduzida, T) com T unimodular, linhas = nova base em coordenadas
        antigas e gram' = T·G·Tᵀ
    """
    n = len(gram)
    g = [list(row) for row in gram]
    t = la.identity(n)
    if n <= 1:
        return g, t
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    b[0] = Fraction(g[0][0])
    k, kmax = 1, 0

    def red(k: int, l: int) -> None:
        if abs(mu[k][l]) <= Fraction(1, 2):
            return
        q = floor(mu[k][l] + Fraction(1, 2))
        t[k] = [x - q * y for x, y in zip(t[k], t[l])]
        g[k] = [x - q * y for x, y in zip(g[k], g[l])]
        for row in g:
            row[k] -= q * row[l]
        mu[k][l] -= q
        for i in range(l):
            mu[k][i] -= q * mu[l][i]

    def swap(k: int) -> None:
        t[k], t[k - 1] = t[k - 1], t[k]
        g[k], g[k - 1] = g[k - 1], g[k]
        for row in g:
            row[k], row[k - 1] = row[k - 1], row[k]
        for j in range(k - 1):
            mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
        m = mu[k][k - 1]
        big_b = b[k] + m * m * b[k - 1]
        mu[k][k - 1] = m * b[k - 1] / big_b
        b[k] = b[k - 1] * b[k] / big_b
        b[k - 1] = big_b
        for i in range(k + 1, kmax + 1):
            tmp = mu[i][k]
            mu[i][k] = mu[i][k - 1] - m * tmp
            mu[i][k - 1] = tmp + mu[k][k - 1] * mu[i][k]

    while k < n:
        if k > kmax:
            kmax = k
            for j in range(k):
                s = Fraction(g[k][j]) - sum((mu[j][i] * mu[k][i] * b[i] for i in range(j)), Fraction(0))
                mu[k][j] = s / b[j]
            b[k] = Fraction(g[k][k]) - sum((mu[k][j] ** 2 * b[j] for j in range(k)), Fraction(0))
            if b[k] <= 0:
                raise LatticeError("LLL exige forma positiva definida")
        red(k, k - 1)
        if b[k] < (DELTA - mu[k][k - 1] ** 2) * b[k - 1]:
            swap(k)
            k = max(1, k - 1)
            continue
        for l in range(k - 2, -1, -1):
            red(k, l)
        k += 1
    return g, t


@dataclass
class EnumerationReport:
    """
    Resultado de uma enumeração completa.

    Attributes:
        bound: limite |norma| <= bound
        counts: número de vetores por norma (os dois sinais)
        vectors: representantes a menos de sinal (quando solicitados)
        elapsed: segundos de relógio
    """

    bound: int
    counts: Dict[int, int] = field(default_factory=dict)
    vectors: Optional[List[Tuple[int, ...]]] = None
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _definite_sign(lattice: Lattice) -> int:
    if lattice.rank == 0:
        return 1
    sig = signature(lattice)
    if sig.minus == 0:
        return 1
    if sig.plus == 0:
        return -1
    raise LatticeError(f"reticulado indefinido | label={lattice.label} | assinatura={sig}")


class _Enumerator:
    """Fincke–Pohst inteiro sobre uma forma positiva definida já reduzida."""

    def __init__(self, gram: Sequence[Sequence[int]]):
        self.n = len(gram)
        self.reduced, self.transform = lll_reduce(gram)
        mu, b = _gram_schmidt(self.reduced)
        self.delta = la.common_denominator(mu[i][j] for i in range(self.n) for j in range(i))
        self.scale = la.common_denominator(b)
        self.m = [[int(mu[i][j] * self.delta) for j in range(self.n)] for i in range(self.n)]
        self.p = [int(x * self.scale) for x in b]
        self.unit = self.scale * self.delta * self.delta

    def top_values(self, bound: int) -> List[int]:
        if self.n == 0:
            return []
        scaled_bound = bound * self.unit
        t = isqrt(scaled_bound // self.p[-1])
        return list(range(0, t // self.delta + 1))

    def run(self, bound: int, top: int, keep: bool, limit: Optional[int]) -> Tuple[Dict[int, int], List[Tuple[int, ...]]]:
        n, delta, m, p = self.n, self.delta, self.m, self.p
        scaled_bound = bound * self.unit
        counts: Dict[int, int] = {}
        found: List[Tuple[int, ...]] = []
        x = [0] * n
        x[n - 1] = top
        y = delta * top
        rest = scaled_bound - p[n - 1] * y * y
        if rest < 0:
            return counts, found
        total = [0]

        def descend(j: int, remaining: int, nonzero: bool) -> None:
            if j < 0:
                if not nonzero:
                    return
                norm = (scaled_bound - remaining) // self.unit
                counts[norm] = counts.get(norm, 0) + 2
                total[0] += 1
                if limit is not None and total[0] > limit:
                    raise BoundExceededError(f"mais de {limit} vetores na enumeração", limit)
                if keep:
                    found.append(tuple(x))
                return
            s = 0
            for i in range(j + 1, n):
                if x[i]:
                    s += m[i][j] * x[i]
            t = isqrt(remaining // p[j])
            lo = -((t + s) // delta)
            hi = (t - s) // delta
            if not nonzero:
                lo = max(lo, 0)
            for v in range(lo, hi + 1):
                yy = delta * v + s
                r = remaining - p[j] * yy * yy
                if r < 0:
                    continue
                x[j] = v
                descend(j - 1, r, nonzero or v != 0)
            x[j] = 0

        descend(n - 2, rest, top != 0)
        return counts, found

    def to_original(self, x: Sequence[int]) -> Tuple[int, ...]:
        return tuple(la.vecmat(list(x), self.transform))


def enumerate_up_to(
    lattice: Lattice,
    bound: int,
    keep_vectors: bool = False,
    limit: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> EnumerationReport:
    """
    Enumera todos os vetores com |norma| <= bound.

    Args:
        lattice: reticulado definido (qualquer sinal)
        bound: limite para |norma|
        keep_vectors: guarda representantes a menos de sinal, em coordenadas originais
        limit: aborta com BoundExceededError acima deste número de vetores
        max_workers: threads para as fatias da coordenada superior

    Returns:
        EnumerationReport com normas no sinal original do reticulado
    """
    start = time.perf_counter()
    sign = _definite_sign(lattice)
    gram = [[sign * x for x in row] for row in lattice.gram]
    report = EnumerationReport(bound=bound, vectors=[] if keep_vectors else None)
    if lattice.rank == 0:
        report.elapsed = time.perf_counter() - start
        return report
    enum = _Enumerator(gram)
    tops = enum.top_values(bound)
    workers = max_workers or settings.max_workers
    logger.debug(
        f"[ENUM] Início | label={lattice.label} | posto={lattice.rank} | limite={bound} | fatias={len(tops)}"
    )
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda top: enum.run(bound, top, keep_vectors, limit), tops))
    for counts, found in results:
        for norm, c in counts.items():
            report.counts[sign * norm] = report.counts.get(sign * norm, 0) + c
        if keep_vectors:
            report.vectors.extend(enum.to_original(v) for v in found)
    if limit is not None and report.total // 2 > limit:
        raise BoundExceededError(f"mais de {limit} vetores na enumeração", limit)
    report.counts = dict(sorted(report.counts.items(), key=lambda kv: abs(kv[0])))
    report.elapsed = time.perf_counter() - start
    logger.debug(
        f"[ENUM] Fim | label={lattice.label} | vetores={report.total} | tempo={report.elapsed:.2f}s"
    )
    return report


def minimum(lattice: Lattice) -> int:
    """Norma mínima não nula (com o sinal do reticulado)."""
    sign = _definite_sign(lattice)
    reduced, _ = lll_reduce([[sign * x for x in row] for row in lattice.gram])
    bound = min(reduced[i][i] for i in range(lattice.rank))
    report = enumerate_up_to(lattice, bound)
    return min(report.counts, key=abs)


def count_roots(lattice: Lattice) -> int:
    """Número de vetores de norma ±2 (o sinal do reticulado)."""
    sign = _definite_sign(lattice)
    return enumerate_up_to(lattice, 2).counts.get(2 * sign, 0)


def theta_coefficients(lattice: Lattice, bound: int) -> List[int]:
    """Número de vetores de |norma| = 0, 1, ..., bound."""
    report = enumerate_up_to(lattice, bound)
    coeffs = [0] * (bound + 1)
    coeffs[0] = 1
    for norm, c in report.counts.items():
        coeffs[abs(norm)] += c
    return coeffs


def primitive_vectors_of_norm(lattice: Lattice, d: int) -> List[Tuple[int, ...]]:
    """Vetores primitivos de norma d (a menos de sinal)."""
    report = enumerate_up_to(lattice, abs(d), keep_vectors=True)
    out = []
    for v in report.vectors:
        if lattice.norm(v) == d and la.content(v) == 1:
            out.append(v)
    return sorted(out)


@dataclass
class IsometryResult:
    """Resultado do teste de isometria: status isometric, not_isometric ou indeterminate."""

    status: str
    witness: Optional[List[List[int]]] = None
    nodes: int = 0
    reason: str = ""

    def __bool__(self) -> bool:
        return self.status == "isometric"


def _expected_vectors(n: int, det: int, bound: int) -> float:
    """Estimativa pelo volume da bola: número de vetores com norma <= bound."""
    return exp(n / 2 * log(pi * bound) - lgamma(n / 2 + 1) - log(det) / 2)


def _shell_arrays(vectors: Sequence[Sequence[int]], gram: Sequence[Sequence[int]]) -> Tuple[np.ndarray, np.ndarray]:
    """Camada com os dois sinais e a matriz de Gram, em int64 quando os produtos cabem."""
    both = [list(v) for v in vectors] + [[-x for x in v] for v in vectors]
    n = len(gram)
    peak = max((abs(x) for v in both for x in v), default=1)
    gpeak = max((abs(x) for row in gram for x in row), default=1)
    dtype = np.int64 if peak * peak * gpeak * n < _INT64_SAFE else object
    return np.array(both, dtype=dtype).reshape(len(both), n), np.array(gram, dtype=dtype)


def neighbor_fingerprints(
    rows: np.ndarray, shell: np.ndarray, garr: np.ndarray, bound: int, chunk: int = 256
) -> np.ndarray:
    """
    Impressão digital de cada linha: quantos vetores da camada têm cada par
    (norma, produto interno) com ela.

    Args:
        rows: vetores a descrever (coordenadas do reticulado)
        shell: camada completa, com os dois sinais, de normas <= bound
        garr: matriz de Gram positiva definida
        bound: norma máxima da camada

    Returns:
        Matriz inteira len(rows) x (bound + 1)·(2·bound + 1)
    """
    width = 2 * bound + 1
    size = (bound + 1) * width
    base = ((shell @ garr * shell).sum(axis=1) * width + bound).astype(np.int64)
    out = np.zeros((len(rows), size), dtype=np.int64)
    right = (shell @ garr).T
    for start in range(0, len(rows), chunk):
        block = (rows[start : start + chunk] @ right).astype(np.int64) + base[None, :]
        k = len(block)
        flat = (block + np.arange(k, dtype=np.int64)[:, None] * size).ravel()
        out[start : start + k] = np.bincount(flat, minlength=k * size).reshape(k, size)
    return out


def shell_fingerprints(lattice: Lattice, bound: int) -> Counter:
    """Multiconjunto das impressões digitais da camada de |norma| <= bound."""
    sign = _definite_sign(lattice)
    pos = Lattice(tuple(tuple(sign * x for x in row) for row in lattice.gram), lattice.label)
    report = enumerate_up_to(pos, bound, keep_vectors=True)
    shell, garr = _shell_arrays(report.vectors, pos.gram)
    return Counter(map(tuple, neighbor_fingerprints(shell, shell, garr, bound)))


def is_isometric_definite(
    l1: Lattice,
    l2: Lattice,
    node_cap: Optional[int] = None,
    vector_limit: int = 10**6,
    theta_bound: Optional[int] = None,
) -> IsometryResult:
    """
    Decide se dois reticulados definidos são isométricos.

    Rejeita rapidamente por posto, determinante, assinatura e coeficientes
    theta (até theta_bound quando a estimativa de volume cabe em
    vector_limit). As imagens y_i da base reduzida de L1 são procuradas por
    retrocesso entre os vetores de L2 com a mesma norma, os mesmos produtos
    com as imagens já escolhidas e a mesma impressão digital de vizinhança.

    Returns:
        IsometryResult com a testemunha W (linhas = imagens da base de L1 em
        coordenadas de L2, W·G2·Wᵀ = G1) quando isométricos
    """
    node_cap = node_cap or settings.isometry_node_cap
    theta_bound = settings.isometry_theta_bound if theta_bound is None else theta_bound
    if l1.rank != l2.rank or l1.det != l2.det:
        return IsometryResult("not_isometric", reason="posto ou determinante")
    s1, s2 = _definite_sign(l1), _definite_sign(l2)
    if s1 != s2:
        return IsometryResult("not_isometric", reason="assinatura")
    n = l1.rank
    if n == 0:
        return IsometryResult("isometric", witness=[])
    g1 = [[s1 * x for x in row] for row in l1.gram]
    g2 = [[s2 * x for x in row] for row in l2.gram]
    red1, t1 = lll_reduce(g1)
    bound = max(red1[i][i] for i in range(n))
    pos1 = Lattice(tuple(map(tuple, g1)), l1.label)
    pos2 = Lattice(tuple(map(tuple, g2)), l2.label)
    try:
        rep1 = enumerate_up_to(pos1, bound, keep_vectors=True, limit=vector_limit)
        rep2 = enumerate_up_to(pos2, bound, keep_vectors=True, limit=vector_limit)
    except BoundExceededError as exc:
        return IsometryResult("indeterminate", reason=str(exc))
    if rep1.counts != rep2.counts:
        return IsometryResult("not_isometric", reason="coeficientes theta")
    if theta_bound > bound and _expected_vectors(n, abs(l1.det), theta_bound) <= vector_limit:
        try:
            far1 = enumerate_up_to(pos1, theta_bound, limit=vector_limit).counts
            far2 = enumerate_up_to(pos2, theta_bound, limit=vector_limit).counts
        except BoundExceededError:
            far1 = far2 = None
            logger.debug(f"[ISOM] Theta estendido ignorado | limite={theta_bound} | a={l1.label}")
        if far1 != far2:
            return IsometryResult("not_isometric", reason="coeficientes theta")

    arr, garr = _shell_arrays(rep2.vectors, g2)
    half = len(rep2.vectors)
    pairing = arr @ garr
    norms = (pairing * arr).sum(axis=1)
    allowed: List[Optional[np.ndarray]] = [None] * n
    if len(arr) <= settings.isometry_fingerprint_max_shell:
        shell1, garr1 = _shell_arrays(rep1.vectors, g1)
        basis1 = np.array(t1, dtype=shell1.dtype).reshape(n, n)
        prints1 = neighbor_fingerprints(basis1, shell1, garr1, bound)
        prints2 = neighbor_fingerprints(arr, arr, garr, bound)
        for i in range(n):
            allowed[i] = (prints2 == prints1[i]).all(axis=1)
            if not allowed[i].any():
                logger.debug(f"[ISOM] Impressão digital sem imagem | a={l1.label} | b={l2.label} | i={i}")
                return IsometryResult("not_isometric", reason="impressões digitais")
    else:
        logger.debug(f"[ISOM] Impressões digitais ignoradas | camada={len(arr)}")

    chosen: List[int] = []
    columns: List[np.ndarray] = []
    nodes = [0]

    def candidates(i: int) -> np.ndarray:
        mask = norms == red1[i][i]
        if allowed[i] is not None:
            mask &= allowed[i]
        if i == 0:
            mask[half:] = False
        for j, col in enumerate(columns):
            mask &= col == red1[i][j]
        return np.nonzero(mask)[0]

    def search(i: int) -> bool:
        if i == n:
            return True
        for idx in candidates(i):
            nodes[0] += 1
            if nodes[0] > node_cap:
                raise BoundExceededError(f"busca de isometria passou de {node_cap} nós", node_cap)
            chosen.append(int(idx))
            columns.append(pairing @ arr[idx])
            if search(i + 1):
                return True
            chosen.pop()
            columns.pop()
        return False

    try:
        found = search(0)
    except BoundExceededError as exc:
        logger.warning(f"[ISOM] Busca indeterminada | a={l1.label} | b={l2.label} | nos={nodes[0]}")
        return IsometryResult("indeterminate", nodes=nodes[0], reason=str(exc))
    if not found:
        return IsometryResult("not_isometric", nodes=nodes[0], reason="busca exaustiva sem solução")
    y = [[int(x) for x in arr[i]] for i in chosen]
    witness = la.to_integer_matrix(la.matmul(la.inverse_rational(t1), y))
    check = la.matmul(la.matmul(witness, l2.matrix()), la.transpose(witness))
    if check != l1.matrix():
        raise LatticeError("testemunha de isometria inconsistente")
    logger.debug(f"[ISOM] Isometria encontrada | a={l1.label} | b={l2.label} | nos={nodes[0]}")
    return IsometryResult("isometric", witness=witness, nodes=nodes[0])
