"""
Reticulados de Niemeier a partir da tabela de colagem, construção "holy" do
reticulado de Leech e quocientes isotrópicos de Π₁,₂₅.

Todos os reticulados são negativos definidos. Cada componente de Dynkin vive
no seu próprio bloco de coordenadas ambientes:

  - A_n: ℚ^{n+1} com forma -I, raízes f_j = -e_j + e_{j+1 mod h} (j = 1..n)
  - D_n: ℚ^n com forma -I, raízes e_i - e_{i+1} e e_{n-1} + e_n
  - E_6, E_7, E_8: base de raízes simples com forma -Cartan
"""

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from leechkit.core import exact_linalg as la
from leechkit.core.catalog import DATA_DIR, e_cartan, pi_1_25
from leechkit.core.errors import GlueCodeError, LatticeError
from leechkit.core.lattice import Lattice, intersection_index
from leechkit.core.short_vectors import count_roots

W_VECTOR = (70,) + tuple(range(25))
V_VECTOR = (17,) + (1,) * 8 + (3,) * 9 + (5,) * 8

# códigos do grupo (ℤ/2)² de D_n com n par: [1] = 01, [3] = 10, [2] = 11
_D_EVEN_CODE = {0: 0, 1: 1, 2: 3, 3: 2}
_D_EVEN_DIGIT = {v: k for k, v in _D_EVEN_CODE.items()}
_HEXACODE_RELABEL = {0: 0, 1: 2, 2: 3, 3: 1}


@dataclass(frozen=True)
class Component:
    """Componente de Dynkin (tipo A, D ou E) com suas classes de colagem."""

    kind: str
    n: int

    def __post_init__(self):
        valid = (
            (self.kind == "A" and self.n >= 1)
            or (self.kind == "D" and self.n >= 4)
            or (self.kind == "E" and self.n in (6, 7, 8))
        )
        if not valid:
            raise GlueCodeError(f"componente inválida | tipo={self.kind}{self.n}")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.n}"

    @property
    def coxeter(self) -> int:
        return {"A": self.n + 1, "D": 2 * self.n - 2}.get(self.kind) or {6: 12, 7: 18, 8: 30}[self.n]

    @property
    def dimension(self) -> int:
        return self.n + 1 if self.kind == "A" else self.n

    @property
    def disc_order(self) -> int:
        if self.kind == "A":
            return self.n + 1
        if self.kind == "D":
            return 4
        return {6: 3, 7: 2, 8: 1}[self.n]

    def ambient_gram(self) -> List[List[int]]:
        if self.kind == "E":
            return [[-x for x in row] for row in e_cartan(self.n)]
        return [[-1 if i == j else 0 for j in range(self.dimension)] for i in range(self.dimension)]

    def roots(self) -> List[List[Fraction]]:
        dim = self.dimension
        out = []
        if self.kind == "A":
            for j in range(1, self.n + 1):
                v = [Fraction(0)] * dim
                v[j] -= 1
                v[(j + 1) % dim] += 1
                out.append(v)
        elif self.kind == "D":
            for i in range(self.n - 1):
                v = [Fraction(0)] * dim
                v[i], v[i + 1] = Fraction(1), Fraction(-1)
                out.append(v)
            v = [Fraction(0)] * dim
            v[-2], v[-1] = Fraction(1), Fraction(1)
            out.append(v)
        else:
            out = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
        return out

    def _check_digit(self, d: int) -> int:
        limit = {"A": self.n + 1, "D": 4}.get(self.kind) or self.disc_order
        if not 0 <= d < limit:
            raise GlueCodeError(f"dígito fora do intervalo | componente={self.name} | digito={d}")
        return d

    def add(self, a: int, b: int) -> int:
        if self.kind == "D" and self.n % 2 == 0:
            return _D_EVEN_DIGIT[_D_EVEN_CODE[a] ^ _D_EVEN_CODE[b]]
        return (a + b) % self.disc_order

    @lru_cache(maxsize=None)
    def _weight(self) -> Tuple[Fraction, ...]:
        inverse = la.inverse_rational(e_cartan(self.n))
        rows = [i for i in range(self.n) if any(x.denominator != 1 for x in inverse[i])]
        best = min(rows, key=lambda i: inverse[i][i])
        return tuple(inverse[best])

    def representative(self, d: int) -> List[Fraction]:
        """Vetor do dual representando a classe de colagem de dígito d."""
        self._check_digit(d)
        dim = self.dimension
        if d == 0:
            return [Fraction(0)] * dim
        if self.kind == "A":
            h = self.n + 1
            return [Fraction(d, h)] * (h - d) + [Fraction(-(h - d), h)] * d
        if self.kind == "D":
            half = [Fraction(1, 2)] * dim
            if self.n % 2 == 1:
                return [d * x for x in half]
            if d == 1:
                return half
            if d == 2:
                return [Fraction(0)] * (dim - 1) + [Fraction(1)]
            return half[:-1] + [Fraction(-1, 2)]
        return [d * x for x in self._weight()]


@dataclass(frozen=True)
class NiemeierSpec:
    """Linha da tabela de Niemeier."""

    name: str
    components: Tuple[Component, ...]
    coxeter: int
    glue: Tuple[str, ...]
    leech_group: str = ""
    leech_group_order: int = 0
    closure: Optional[str] = None

    @property
    def rank(self) -> int:
        return sum(c.n for c in self.components)

    @property
    def dimension(self) -> int:
        return sum(c.dimension for c in self.components)

    @property
    def expected_roots(self) -> int:
        return 24 * self.coxeter

    def ambient_gram(self) -> List[List[int]]:
        return la.block_diagonal([c.ambient_gram() for c in self.components])

    def pad(self, index: int, vector: Sequence[Fraction]) -> List[Fraction]:
        offset = sum(c.dimension for c in self.components[:index])
        out = [Fraction(0)] * self.dimension
        out[offset : offset + len(vector)] = list(vector)
        return out


@dataclass(frozen=True)
class GlueVector:
    """Elemento do código de colagem com o seu representante ambiente."""

    digits: Tuple[int, ...]
    vector: Tuple[Fraction, ...] = field(compare=False)


_WORD = re.compile(r"^\[([0-9]*)(?:\(([0-9]+)\))?([0-9]*)\]$")


def parse_glue_word(word: str, length: int) -> List[Tuple[int, ...]]:
    """
    Expande uma palavra da tabela: "[pre(cic)suf]" gera todas as rotações de cic.

    Raises:
        GlueCodeError: notação inválida ou comprimento incompatível
    """
    match = _WORD.match(word.replace(" ", ""))
    if not match:
        raise GlueCodeError(f"palavra de colagem inválida | palavra={word}")
    pre, cyc, suf = match.group(1), match.group(2) or "", match.group(3)
    rotations = [cyc[r:] + cyc[:r] for r in range(len(cyc))] if cyc else [""]
    out = []
    for rot in rotations:
        digits = tuple(int(ch) for ch in pre + rot + suf)
        if len(digits) != length:
            raise GlueCodeError(f"palavra com comprimento {len(digits)} != {length} | palavra={word}")
        if digits not in out:
            out.append(digits)
    return out


def glue_generators(spec: NiemeierSpec) -> List[Tuple[int, ...]]:
    words: List[Tuple[int, ...]] = []
    for word in spec.glue:
        for w in parse_glue_word(word, len(spec.components)):
            if w not in words:
                words.append(w)
    if spec.closure == "hexacode":
        extra = []
        for w in words:
            once = tuple(_HEXACODE_RELABEL[d] for d in w)
            twice = tuple(_HEXACODE_RELABEL[d] for d in once)
            extra.extend([once, twice])
        for w in extra:
            if w not in words:
                words.append(w)
    elif spec.closure is not None:
        raise GlueCodeError(f"regra de fecho desconhecida | regra={spec.closure}")
    for w in words:
        for comp, d in zip(spec.components, w):
            comp._check_digit(d)
    return words


def glue_vector(spec: NiemeierSpec, digits: Sequence[int]) -> List[Fraction]:
    out: List[Fraction] = []
    for comp, d in zip(spec.components, digits):
        out.extend(comp.representative(d))
    return out


def expand_glue_code(spec: NiemeierSpec) -> List[GlueVector]:
    """
    Código de colagem completo (fecho aditivo dos geradores).

    Raises:
        GlueCodeError: se a ordem do código não for √(∏ ordens discriminantes)
    """
    comps = spec.components
    zero = tuple(0 for _ in comps)
    gens = glue_generators(spec)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(c.add(a, b) for c, a, b in zip(comps, x, g))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    disc = prod(c.disc_order for c in comps)
    if len(seen) ** 2 != disc:
        raise GlueCodeError(
            f"ordem do código incompatível | nome={spec.name} | ordem={len(seen)} | esperado={isqrt(disc)}"
        )
    return [GlueVector(w, tuple(glue_vector(spec, w))) for w in sorted(seen)]


@lru_cache(maxsize=1)
def load_table() -> Tuple[NiemeierSpec, ...]:
    """Lê data/niemeier_table.json."""
    with open(DATA_DIR / "niemeier_table.json", encoding="utf-8") as fh:
        data = json.load(fh)
    specs = []
    for row in data["rows"]:
        specs.append(
            NiemeierSpec(
                name=row["name"],
                components=tuple(Component(kind, n) for kind, n in row["components"]),
                coxeter=row["coxeter"],
                glue=tuple(row["glue"]),
                leech_group=row.get("leech_group", ""),
                leech_group_order=row.get("leech_group_order", 0),
                closure=row.get("closure"),
            )
        )
    logger.debug(f"[NIEMEIER] Tabela carregada | versao={data.get('version')} | linhas={len(specs)}")
    return tuple(specs)


def get_spec(name: str) -> NiemeierSpec:
    key = name.strip().lower()
    if key in ("λ", "lambda", "leech"):
        key = "leech"
    for spec in load_table():
        if spec.name.lower() == key:
            return spec
    raise LatticeError(f"linha de Niemeier desconhecida | nome={name}")


def build_niemeier(spec: NiemeierSpec) -> Lattice:
    """
    Reticulado de Niemeier gerado pelas raízes das componentes e pela colagem.

    Raises:
        GlueCodeError: se o resultado não for unimodular
    """
    if not spec.components:
        return leech_from_pi()
    expand_glue_code(spec)
    generators: List[List[Fraction]] = []
    for idx, comp in enumerate(spec.components):
        generators.extend(spec.pad(idx, r) for r in comp.roots())
    generators.extend(glue_vector(spec, w) for w in glue_generators(spec))
    lattice = Lattice.from_ambient(
        spec.ambient_gram(), generators, spec.name, [c.dimension for c in spec.components]
    )
    if lattice.rank != 24 or abs(lattice.det) != 1:
        raise GlueCodeError(
            f"reticulado não unimodular | nome={spec.name} | posto={lattice.rank} | det={lattice.det}"
        )
    logger.info(f"[NIEMEIER] Reticulado construído | nome={spec.name} | componentes={_components(spec)}")
    return lattice


def verify_roots(spec: NiemeierSpec, lattice: Optional[Lattice] = None) -> Tuple[int, bool]:
    """Conta as raízes e compara com 24·h."""
    lattice = lattice or build_niemeier(spec)
    roots = count_roots(lattice)
    return roots, roots == spec.expected_roots


def _components(spec: NiemeierSpec) -> str:
    return "".join(c.name for c in spec.components) or "∅"


@dataclass
class HolyFrame:
    """
    Vetores f_j^r, g_j e h_k da construção "holy" sobre A_n^m (nm = 24).

    Attributes:
        f: f[r][j], j = 0..n, no bloco r (coordenadas ambientes completas)
        g: g_j locais a um bloco, j = 0..n
        h: h_k para cada palavra k do código de colagem
    """

    spec: NiemeierSpec
    n: int
    m: int
    f: List[List[List[Fraction]]]
    g: List[List[Fraction]]
    h: Dict[Tuple[int, ...], List[Fraction]]

    @property
    def coxeter(self) -> int:
        return self.n + 1

    @property
    def h0(self) -> List[Fraction]:
        return self.h[tuple(0 for _ in range(self.m))]

    def ambient_gram(self) -> List[List[int]]:
        return self.spec.ambient_gram()

    def simple_roots(self) -> List[List[Fraction]]:
        return [self.f[r][j] for r in range(self.m) for j in range(1, self.n + 1)]

    def norm(self, v: Sequence[Fraction]) -> Fraction:
        return -sum((x * x for x in v), Fraction(0))


def holy_frame(spec: NiemeierSpec) -> HolyFrame:
    """
    Raises:
        LatticeError: se o buraco não for da forma A_n^m com nm = 24
    """
    comps = spec.components
    if not comps or any(c.kind != "A" or c.n != comps[0].n for c in comps) or spec.rank != 24:
        raise LatticeError(f"construção holy exige buraco A_n^m com nm = 24 | nome={spec.name}")
    n, m = comps[0].n, len(comps)
    h = n + 1
    f_local = []
    for j in range(h):
        v = [Fraction(0)] * h
        v[j] -= 1
        v[(j + 1) % h] += 1
        f_local.append(v)
    g0 = [Fraction(2 * k - n, 2 * h) for k in range(h)]
    g_local = [[g0[(i - j) % h] for i in range(h)] for j in range(h)]
    f = [[spec.pad(r, f_local[j]) for j in range(h)] for r in range(m)]
    code = expand_glue_code(spec)
    hk = {}
    for word in code:
        vec: List[Fraction] = []
        for d in word.digits:
            vec.extend(g_local[d])
        hk[word.digits] = vec
    return HolyFrame(spec, n, m, f, g_local, hk)


def holy_nieme(spec: NiemeierSpec, frame: Optional[HolyFrame] = None) -> Lattice:
    """Σ m_j^r f_j^r + Σ n_k h_k com Σ n_k = 0."""
    frame = frame or holy_frame(spec)
    h0 = frame.h0
    generators = frame.simple_roots() + [
        [a - b for a, b in zip(v, h0)] for k, v in frame.h.items() if any(k)
    ]
    return Lattice.from_ambient(frame.ambient_gram(), generators, f"{spec.name}-holy", [frame.n + 1] * frame.m)


def holy_leech(spec: NiemeierSpec, frame: Optional[HolyFrame] = None) -> Lattice:
    """
    Σ m_j^r f_j^r + Σ n_k h_k com Σ n_k + Σ m_j^r = 0.

    Raises:
        LatticeError: se o resultado tiver raízes ou não for unimodular
    """
    frame = frame or holy_frame(spec)
    h0 = frame.h0
    vectors = frame.simple_roots() + [v for k, v in frame.h.items() if any(k)]
    generators = [[a - b for a, b in zip(v, h0)] for v in vectors]
    lattice = Lattice.from_ambient(
        frame.ambient_gram(), generators, f"Leech[{spec.name}]", [frame.n + 1] * frame.m
    )
    if abs(lattice.det) != 1:
        raise LatticeError(f"construção holy não unimodular | buraco={spec.name} | det={lattice.det}")
    roots = count_roots(lattice)
    if roots:
        raise LatticeError(f"construção holy com raízes | buraco={spec.name} | raizes={roots}")
    logger.info(f"[NIEMEIER] Leech pela construção holy | buraco={spec.name}")
    return lattice


def frame_intersection_index(spec: NiemeierSpec) -> Tuple[Optional[int], Optional[int]]:
    """Índices de holy_nieme ∩ holy_leech em cada um dos dois reticulados."""
    frame = holy_frame(spec)
    return intersection_index(holy_nieme(spec, frame), holy_leech(spec, frame))


def quotient_by_isotropic(v: Sequence[int], label: str = "") -> Lattice:
    """
    (v^⊥ ∩ Π₁,₂₅)/v para v isotrópico e primitivo.

    Raises:
        LatticeError: v não isotrópico, fora de Π₁,₂₅ ou não primitivo
    """
    pi = pi_1_25()
    amb = pi.ambient
    vector = [Fraction(x) for x in v]
    if len(vector) != amb.dimension:
        raise LatticeError(f"vetor com dimensão {len(vector)} != {amb.dimension}")
    if amb.pair(vector, vector) != 0:
        raise LatticeError(f"vetor não isotrópico | norma={amb.pair(vector, vector)}")
    coords = pi.coordinates(vector)
    if coords is None or any(x.denominator != 1 for x in coords):
        raise LatticeError("vetor fora de Π₁,₂₅")
    c = [int(x) for x in coords]
    if la.content(c) != 1:
        raise LatticeError(f"vetor não primitivo | conteudo={la.content(c)}")
    gram = pi.matrix()
    kernel = la.kernel_basis([la.vecmat(c, gram)], pi.rank)
    d = la.solve_vector(la.transpose(kernel), c)
    d = [int(x) for x in d]
    basis = la.matmul(la.unimodular_completion(d), kernel)
    if basis[0] != c:
        raise LatticeError("falha ao completar v numa base de v^⊥")
    rest = basis[1:]
    quotient = la.matmul(la.matmul(rest, gram), la.transpose(rest))
    lattice = Lattice(tuple(map(tuple, quotient)), label or f"Pi/{tuple(v)}")
    logger.debug(f"[NIEMEIER] Quociente isotrópico | label={lattice.label} | det={lattice.det}")
    return lattice


def leech_from_pi() -> Lattice:
    return quotient_by_isotropic(W_VECTOR, "Leech")
