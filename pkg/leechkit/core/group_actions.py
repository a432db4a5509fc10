"""
Isometrias e grupos finitos agindo em reticulados.

Convenção: a matriz M de uma isometria está na base do reticulado e suas
colunas são as coordenadas das imagens dos vetores da base, de modo que
Mᵀ·G·M = G e g(c) = M·c para coordenadas c.
"""

import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

import numpy as np
from loguru import logger

from leechkit.config.config import settings
from leechkit.core import exact_linalg as la
from leechkit.core.catalog import DATA_DIR
from leechkit.core.errors import BoundExceededError, IsometryError
from leechkit.core.lattice import (
    Lattice,
    discriminant_group,
    orthogonal_complement,
    signature,
    sublattice,
)
from leechkit.core.niemeier import HolyFrame, holy_leech
from leechkit.core.short_vectors import count_roots

P1_23_LABELS = ("∞",) + tuple(str(i) for i in range(23))
_INFINITY = {"∞", "inf", "infty", "oo"}
_CYCLE = re.compile(r"\(([^()]*)\)")
_INT64_SAFE = 2**62


def _normalize_label(label: str) -> str:
    label = label.strip()
    return "∞" if label.lower() in _INFINITY else label


@dataclass(frozen=True)
class Permutation:
    """Permutação de um conjunto de rótulos (imagens por índice)."""

    labels: Tuple[str, ...]
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.labels))):
            raise IsometryError("imagens não formam uma bijeção dos rótulos")

    @classmethod
    def identity(cls, labels: Sequence[str]) -> "Permutation":
        return cls(tuple(labels), tuple(range(len(labels))))

    @classmethod
    def parse(cls, cycles: str, labels: Sequence[str] = P1_23_LABELS) -> "Permutation":
        """
        Lê notação de ciclos como "(0)(15 7 14)(∞)(3 6 12)".

        Raises:
            IsometryError: rótulo desconhecido ou repetido
        """
        labels = tuple(_normalize_label(x) for x in labels)
        index = {lab: i for i, lab in enumerate(labels)}
        images = list(range(len(labels)))
        seen: Set[int] = set()
        for body in _CYCLE.findall(cycles):
            tokens = [_normalize_label(t) for t in body.replace(",", " ").split()]
            try:
                idx = [index[t] for t in tokens]
            except KeyError as exc:
                raise IsometryError(f"rótulo desconhecido na permutação | rotulo={exc.args[0]}") from None
            if seen.intersection(idx) or len(set(idx)) != len(idx):
                raise IsometryError(f"rótulo repetido na permutação | ciclo=({body})")
            seen.update(idx)
            for a, b in zip(idx, idx[1:] + idx[:1]):
                images[a] = b
        return cls(labels, tuple(images))

    @property
    def degree(self) -> int:
        return len(self.labels)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other (aplica other primeiro)."""
        return Permutation(self.labels, tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(self.labels, tuple(inv))

    def orbits(self) -> List[Tuple[int, ...]]:
        seen: Set[int] = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            orbit = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                orbit.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(orbit))
        return out

    @property
    def order(self) -> int:
        return la.lcm(*(len(o) for o in self.orbits()))

    def __str__(self) -> str:
        return "".join("(" + " ".join(self.labels[i] for i in o) + ")" for o in self.orbits() if len(o) > 1) or "()"


@lru_cache(maxsize=1)
def _permutation_data() -> dict:
    with open(DATA_DIR / "permutations.json", encoding="utf-8") as fh:
        return json.load(fh)


def load_permutation(name: str) -> Permutation:
    """Permutação impressa guardada em data/permutations.json."""
    data = _permutation_data()
    try:
        row = data["permutations"][name]
    except KeyError:
        raise IsometryError(f"permutação desconhecida | nome={name}") from None
    return Permutation.parse(row["cycles"], data["label_sets"][row["labels"]])


def permutation_names() -> List[str]:
    return sorted(_permutation_data()["permutations"])


def _key(a: np.ndarray):
    return a.tobytes() if a.dtype != object else tuple(map(tuple, a.tolist()))


def _peak(m) -> int:
    if isinstance(m, np.ndarray) and m.dtype != object:
        return int(np.abs(m).max(initial=0))
    return max((abs(int(x)) for row in m for x in row), default=0)


def _array(m) -> np.ndarray:
    """Matriz inteira em int64 quando as entradas cabem, senão em inteiros Python."""
    return np.array(m, dtype=np.int64 if _peak(m) < _INT64_SAFE else object)


def _product(*mats) -> np.ndarray:
    """
    Produto exato m1·m2·…·mk.

    O dtype vem do limite n^(k-1)·∏ pico(mi) das entradas do produto, de modo
    que nenhuma multiplicação em int64 transborda.
    """
    n = max(len(m) for m in mats)
    bound = n ** (len(mats) - 1)
    for m in mats:
        bound *= max(_peak(m), 1)
    dtype = np.int64 if bound < _INT64_SAFE else object
    out = np.array(mats[0], dtype=dtype)
    for m in mats[1:]:
        out = out @ np.array(m, dtype=dtype)
    return out if dtype is np.int64 else _array(out)


@dataclass(frozen=True)
class LatticeIsometry:
    """
    Isometria de um reticulado, na base do reticulado.

    Attributes:
        lattice: reticulado em que age
        matrix: colunas = coordenadas das imagens da base
        provenance: permutation | glue_translation | restriction | composite | matrix
        label: rótulo livre
    """

    lattice: Lattice
    matrix: Tuple[Tuple[int, ...], ...]
    provenance: str = "matrix"
    label: str = ""

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        n = self.lattice.rank
        if len(m) != n or any(len(row) != n for row in m):
            raise IsometryError(f"matriz com forma incompatível | label={self.label}")
        if not np.array_equal(_product(tuple(zip(*m)), self.lattice.gram, m), _array(self.lattice.gram)):
            raise IsometryError(f"matriz não preserva a forma | label={self.label}")

    @property
    def key(self) -> Tuple[Tuple[int, ...], ...]:
        return self.matrix

    def apply(self, coords: Sequence[Union[int, Fraction]]) -> List[Union[int, Fraction]]:
        return la.matvec(self.matrix, list(coords))

    def compose(self, other: "LatticeIsometry") -> "LatticeIsometry":
        """self ∘ other."""
        product = _product(self.matrix, other.matrix)
        return LatticeIsometry(self.lattice, tuple(map(tuple, product.tolist())), "composite")

    def inverse(self) -> "LatticeIsometry":
        inv = la.to_integer_matrix(la.inverse_rational(self.matrix))
        return LatticeIsometry(self.lattice, tuple(map(tuple, inv)), self.provenance, f"{self.label}^-1")

    def power(self, k: int) -> "LatticeIsometry":
        base = self if k >= 0 else self.inverse()
        result = identity_isometry(self.lattice)
        for _ in range(abs(k)):
            result = result.compose(base)
        return result

    def is_identity(self) -> bool:
        n = self.lattice.rank
        return all(self.matrix[i][j] == int(i == j) for i in range(n) for j in range(n))

    def order(self, cap: int = 10**4) -> int:
        """
        Raises:
            BoundExceededError: se a ordem passar de cap
        """
        arr = _array(self.matrix)
        current = arr
        ident = np.identity(self.lattice.rank, dtype=arr.dtype)
        for k in range(1, cap + 1):
            if np.array_equal(current, ident):
                return k
            current = _product(current, arr)
        raise BoundExceededError(f"ordem acima de {cap}", cap)


def identity_isometry(lattice: Lattice) -> LatticeIsometry:
    return LatticeIsometry(lattice, tuple(map(tuple, la.identity(lattice.rank))), "identity", "id")


def from_ambient_images(
    lattice: Lattice, images: Sequence[Sequence[Fraction]], provenance: str, label: str
) -> LatticeIsometry:
    """
    Isometria cujas imagens da base são dadas no ambiente de `lattice`.

    Raises:
        IsometryError: se alguma imagem não estiver em `lattice`
    """
    columns = []
    for i, image in enumerate(images):
        coords = lattice.coordinates(image)
        if coords is None or any(x.denominator != 1 for x in coords):
            raise IsometryError(
                f"aplicação não preserva o reticulado | label={lattice.label} | vetor_base={i}"
            )
        columns.append([int(x) for x in coords])
    return LatticeIsometry(lattice, tuple(map(tuple, la.transpose(columns, lattice.rank))), provenance, label)


def from_permutation(p: Permutation, lattice: Lattice, label: str = "") -> LatticeIsometry:
    """
    Isometria induzida por uma permutação dos blocos ambientes.

    O bloco r vai para o bloco p(r). Todos os blocos precisam ter a mesma
    forma ambiente.

    Raises:
        IsometryError: blocos incompatíveis ou reticulado não preservado
    """
    amb = lattice.ambient
    if amb is None or amb.blocks is None:
        raise IsometryError(f"reticulado sem blocos ambientes | label={lattice.label}")
    blocks = amb.blocks
    if len(blocks) != p.degree:
        raise IsometryError(f"permutação de grau {p.degree} para {len(blocks)} blocos")
    offsets = [sum(blocks[:r]) for r in range(len(blocks))]
    size = blocks[0]
    if any(b != size for b in blocks):
        raise IsometryError("permutação de blocos exige blocos de mesmo tamanho")
    first = [row[:size] for row in amb.gram[:size]]
    for off in offsets:
        if [row[off : off + size] for row in amb.gram[off : off + size]] != first:
            raise IsometryError("permutação de blocos exige blocos com a mesma forma")

    def move(v: Sequence[Fraction]) -> List[Fraction]:
        out = [Fraction(0)] * len(v)
        for r, off in enumerate(offsets):
            dst = offsets[p(r)]
            out[dst : dst + size] = v[off : off + size]
        return out

    iso = from_ambient_images(lattice, [move(b) for b in amb.basis], "permutation", label or str(p))
    logger.debug(f"[GROUP] Isometria por permutação | label={iso.label} | reticulado={lattice.label}")
    return iso


def from_glue_translation(
    t: Sequence[int], frame: HolyFrame, lattice: Optional[Lattice] = None, label: str = ""
) -> LatticeIsometry:
    """
    Isometria h_w ↦ h_{w+t} (e f_j^r ↦ f_{j+t_r}^r) estendida linearmente.

    Args:
        t: palavra do código de colagem
        frame: moldura holy do buraco
        lattice: reticulado que deve ser preservado (padrão: Leech holy)

    Raises:
        IsometryError: t fora do código, extensão inconsistente ou reticulado não preservado
    """
    t = tuple(t)
    if t not in frame.h:
        raise IsometryError(f"tradução fora do código de colagem | t={t}")
    lattice = lattice or holy_leech(frame.spec, frame)
    h = frame.coxeter
    comps = frame.spec.components

    def shift(w: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(c.add(a, b) for c, a, b in zip(comps, w, t))

    sources, targets = [], []
    for r in range(frame.m):
        for j in range(h):
            sources.append(frame.f[r][j])
            targets.append(frame.f[r][(j + t[r]) % h])
    for w, vec in frame.h.items():
        sources.append(vec)
        targets.append(frame.h[shift(w)])
    linear = la.solve_rational(sources, targets)
    if linear is None:
        raise IsometryError(f"extensão linear inconsistente para a tradução | t={t}")
    images = [la.vecmat(list(b), linear) for b in lattice.ambient.basis]
    iso = from_ambient_images(lattice, images, "glue_translation", label or f"t{t}")
    logger.debug(f"[GROUP] Isometria por tradução de colagem | t={t} | reticulado={lattice.label}")
    return iso


def restrict(g: LatticeIsometry, sub: Lattice) -> LatticeIsometry:
    """
    Isometria induzida num sub-reticulado g-estável (mesmo ambiente).

    Raises:
        IsometryError: se sub não for g-estável
    """
    parent = g.lattice
    images = []
    for row in sub.ambient.basis:
        c = parent.coordinates(row)
        if c is None:
            raise IsometryError(f"sub-reticulado fora de {parent.label}")
        images.append(parent.ambient_vector(g.apply(c)))
    return from_ambient_images(sub, images, "restriction", g.label)


@dataclass
class FiniteIsometryGroup:
    """Grupo gerado por isometrias de um mesmo reticulado (fecho preguiçoso)."""

    generators: List[LatticeIsometry]
    cap: int = field(default_factory=lambda: settings.closure_cap)
    _elements: Optional[List[LatticeIsometry]] = field(default=None, init=False, repr=False)

    def __post_init__(self):
        if not self.generators:
            raise IsometryError("grupo sem geradores")
        base = self.generators[0].lattice
        if any(g.lattice.gram != base.gram for g in self.generators):
            raise IsometryError("geradores agem em reticulados diferentes")

    @property
    def lattice(self) -> Lattice:
        return self.generators[0].lattice

    def elements(self) -> List[LatticeIsometry]:
        """
        Fecho por busca em largura, em ordem determinística.

        Raises:
            BoundExceededError: se o fecho passar do limite configurado
        """
        if self._elements is not None:
            return self._elements
        lattice = self.lattice
        gens = [_array(g.matrix) for g in self.generators]
        start = np.identity(lattice.rank, dtype=np.int64)
        seen = {_key(start): start}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = _product(g, x)
                    key = _key(y)
                    if key not in seen:
                        seen[key] = y
                        nxt.append(y)
                        if len(seen) > self.cap:
                            raise BoundExceededError(f"fecho passou de {self.cap} elementos", self.cap)
            frontier = sorted(nxt, key=lambda a: a.tolist())
        ordered = sorted(seen.values(), key=lambda a: a.tolist())
        self._elements = [
            LatticeIsometry(lattice, tuple(map(tuple, a.tolist())), "composite") for a in ordered
        ]
        logger.debug(f"[GROUP] Fecho calculado | reticulado={lattice.label} | ordem={len(self._elements)}")
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())


IsometrySource = Union[LatticeIsometry, FiniteIsometryGroup, Sequence[LatticeIsometry]]


def _generators(source: IsometrySource) -> List[LatticeIsometry]:
    if isinstance(source, LatticeIsometry):
        return [source]
    if isinstance(source, FiniteIsometryGroup):
        return list(source.generators)
    return list(source)


def closure(source: IsometrySource, cap: Optional[int] = None) -> List[LatticeIsometry]:
    group = FiniteIsometryGroup(_generators(source), cap or settings.closure_cap)
    return group.elements()


def _fixed_coordinates(gens: Sequence[LatticeIsometry], n: int) -> List[List[int]]:
    rows: List[List[int]] = []
    for g in gens:
        rows.extend([g.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n))
    return la.kernel_basis(rows, n) if rows else la.identity(n)


def invariant_lattice(source: IsometrySource, lattice: Optional[Lattice] = None, label: str = "") -> Lattice:
    """T_G(L): sub-reticulado (saturado) dos vetores fixos por todos os geradores."""
    gens = _generators(source)
    lattice = lattice or gens[0].lattice
    basis = _fixed_coordinates(gens, lattice.rank)
    return sublattice(lattice, basis, label or f"T({lattice.label})")


def coinvariant_lattice(source: IsometrySource, lattice: Optional[Lattice] = None, label: str = "") -> Lattice:
    """S_G(L) = T_G(L)^⊥ em L."""
    gens = _generators(source)
    lattice = lattice or gens[0].lattice
    fixed = _fixed_coordinates(gens, lattice.rank)
    result = orthogonal_complement(fixed, lattice, label or f"S({lattice.label})")
    logger.debug(
        f"[GROUP] Co-invariante | reticulado={lattice.label} | posto_T={len(fixed)} | posto_S={result.rank}"
    )
    return result


def coinvariant_generators(source: IsometrySource, lattice: Optional[Lattice] = None) -> Lattice:
    """Sub-reticulado gerado pelos vetores v - g(v) (v na base, g gerador)."""
    gens = _generators(source)
    lattice = lattice or gens[0].lattice
    n = lattice.rank
    rows = []
    for g in gens:
        for i in range(n):
            v = [int(k == i) for k in range(n)]
            diff = [a - b for a, b in zip(v, g.apply(v))]
            if any(diff):
                rows.append(diff)
    return sublattice(lattice, rows, f"span(v-gv)({lattice.label})")


@dataclass(frozen=True)
class DiscriminantAction:
    """Imagens dos geradores de A_L sob g, em coordenadas do grupo."""

    invariants: Tuple[int, ...]
    images: Tuple[Tuple[int, ...], ...]

    @property
    def is_trivial(self) -> bool:
        return all(
            img == tuple(int(i == j) % d for j, d in enumerate(self.invariants))
            for i, img in enumerate(self.images)
        )


def action_on_discriminant(g: LatticeIsometry) -> DiscriminantAction:
    form = discriminant_group(g.lattice)
    images = tuple(form.coordinates(g.apply(gen)) for gen in (form.generators or ()))
    return DiscriminantAction(form.invariants, images)


@dataclass
class LeechCoupleReport:
    negative_definite: bool
    rootless: bool
    trivial_on_discriminant: bool
    no_invariants: bool

    @property
    def holds(self) -> bool:
        return self.negative_definite and self.rootless and self.trivial_on_discriminant and self.no_invariants


def is_leech_couple(lattice: Lattice, source: IsometrySource) -> LeechCoupleReport:
    """Verifica as quatro condições de par de Leech, uma a uma."""
    gens = _generators(source)
    sig = signature(lattice)
    negative = sig.plus == 0
    rootless = negative and count_roots(lattice) == 0
    trivial = all(action_on_discriminant(g).is_trivial for g in gens)
    no_invariants = len(_fixed_coordinates(gens, lattice.rank)) == 0
    report = LeechCoupleReport(negative, rootless, trivial, no_invariants)
    logger.debug(f"[GROUP] Par de Leech | reticulado={lattice.label} | resultado={report.holds}")
    return report


@dataclass
class RankTable:
    """Posto de S_⟨g⟩ e número de elementos, por ordem de elemento."""

    ranks: Dict[int, Set[int]]
    counts: Dict[int, int]

    def as_dict(self, include_identity: bool = False) -> Dict[int, List[int]]:
        return {k: sorted(v) for k, v in self.ranks.items() if include_identity or k != 1}


def _order_and_rank(g: LatticeIsometry) -> Tuple[int, int]:
    n = g.lattice.rank
    diff = [[g.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n)]
    return g.order(), la.rank(diff)


def rank_table_by_element_order(
    source: Union[FiniteIsometryGroup, Iterable[LatticeIsometry]], max_workers: Optional[int] = None
) -> RankTable:
    """rank S_⟨g⟩(L) = rank(g - id) agregado pela ordem de g."""
    elements = source.elements() if isinstance(source, FiniteIsometryGroup) else list(source)
    with ThreadPoolExecutor(max_workers=max_workers or settings.max_workers) as pool:
        results = list(pool.map(_order_and_rank, elements))
    ranks: Dict[int, Set[int]] = {}
    counts: Dict[int, int] = {}
    for order, rank in results:
        ranks.setdefault(order, set()).add(rank)
        counts[order] = counts.get(order, 0) + 1
    table = RankTable(dict(sorted(ranks.items())), dict(sorted(counts.items())))
    logger.debug(f"[GROUP] Tabela de postos | ordens={list(table.counts)}")
    return table


def orbit_count_matches(p: Permutation, g: LatticeIsometry) -> bool:
    """Para permutações de blocos A_1: posto de T_⟨g⟩ = número de órbitas."""
    return len(_fixed_coordinates([g], g.lattice.rank)) == len(p.orbits())
