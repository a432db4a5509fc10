"""
Construtores dos reticulados nomeados usados pelo toolkit.

Bases fixas: raízes simples para A_n, D_n e E_n (numeração de Bourbaki),
coordenadas ambientes inteiras para A_n (em ℤ^{n+1}), D_n e D16+ (em ℤ^n) e
para Π₁,₂₅ (em ℤ^{1,25} com a forma diag(1, -1, ..., -1)).
"""

import json
import re
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import List, Optional

from leechkit.core import exact_linalg as la
from leechkit.core.errors import LatticeError
from leechkit.core.lattice import Ambient, Lattice, direct_sum, rescale

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

CATALOG_NAMES = (
    "U",
    "A_n",
    "D_n",
    "E6",
    "E7",
    "E8",
    "rank1",
    "Pi_1_25",
    "L_K3two",
    "L_Mukai",
    "D16plus",
    "M11",
    "S11",
    "T1_11",
    "T2_11",
    "TX_binary",
)

_E8_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))

M11_GRAM = ((-2, 1), (1, -6))
T1_GRAM = ((2, 1, 0), (1, 6, 0), (0, 0, 22))
T2_GRAM = ((6, -2, -2), (-2, 8, -3), (-2, -3, 8))
TX_GRAM = ((22, 33), (33, 66))


def catalog_names() -> List[str]:
    return list(CATALOG_NAMES)


def hyperbolic_plane(scale: int = 1) -> Lattice:
    return Lattice(((0, scale), (scale, 0)), "U" if scale == 1 else f"U({scale})")


def _scaled_identity(n: int, scale: int) -> List[List[int]]:
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def a_n(n: int, scale: int = 1) -> Lattice:
    """A_n em ℤ^{n+1}: raízes e_i - e_{i+1}."""
    if n < 1:
        raise LatticeError(f"A_n exige n >= 1 | n={n}")
    roots = []
    for i in range(n):
        v = [0] * (n + 1)
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    return _from_roots(roots, _scaled_identity(n + 1, scale), _label(f"A{n}", scale))


def d_n(n: int, scale: int = 1) -> Lattice:
    """D_n em ℤ^n: raízes e_i - e_{i+1} e e_{n-1} + e_n."""
    if n < 2:
        raise LatticeError(f"D_n exige n >= 2 | n={n}")
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    v = [0] * n
    v[n - 2], v[n - 1] = 1, 1
    roots.append(v)
    return _from_roots(roots, _scaled_identity(n, scale), _label(f"D{n}", scale))


def _from_roots(roots, ambient_gram, label: str) -> Lattice:
    gram = la.matmul(la.matmul(roots, ambient_gram), la.transpose(roots))
    ambient = Ambient(
        tuple(tuple(Fraction(x) for x in row) for row in ambient_gram),
        tuple(tuple(Fraction(x) for x in row) for row in roots),
    )
    return Lattice(tuple(map(tuple, gram)), label, ambient)


def e_cartan(n: int) -> List[List[int]]:
    """Matriz de Cartan de E_n (n = 6, 7, 8) na numeração de Bourbaki."""
    if n not in (6, 7, 8):
        raise LatticeError(f"E_n definido apenas para n = 6, 7, 8 | n={n}")
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for a, b in _E8_EDGES:
        if a <= n and b <= n:
            m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    return m


def e_n(n: int, scale: int = 1) -> Lattice:
    gram = [[scale * x for x in row] for row in e_cartan(n)]
    return Lattice(tuple(map(tuple, gram)), _label(f"E{n}", scale))


def rank1(k: int) -> Lattice:
    if k == 0:
        raise LatticeError("reticulado de posto 1 exige k != 0")
    return Lattice(((k,),), f"({k})")


def pi_1_25() -> Lattice:
    """Π₁,₂₅ = {x ∈ ℤ^26 ∪ (ℤ+½)^26 : Σ x_i par} com a forma diag(1, -1^25)."""
    gram = [[0] * 26 for _ in range(26)]
    gram[0][0] = 1
    for i in range(1, 26):
        gram[i][i] = -1
    generators: List[List[Fraction]] = []
    for i in range(25):
        v = [Fraction(0)] * 26
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        generators.append(v)
    v = [Fraction(0)] * 26
    v[25] = Fraction(2)
    generators.append(v)
    generators.append([Fraction(1, 2)] * 26)
    return Lattice.from_ambient(gram, generators, "Pi_1_25")


def d16_plus(scale: int = 1) -> Lattice:
    """Sobre-reticulado unimodular par de D16 gerado pela classe (½)^16."""
    roots = d_n(16).ambient.basis
    glue = [Fraction(1, 2)] * 16
    return Lattice.from_ambient(_scaled_identity(16, scale), list(roots) + [glue], _label("D16+", scale))


@lru_cache(maxsize=None)
def _load_gram(filename: str) -> tuple:
    with open(DATA_DIR / filename, encoding="utf-8") as fh:
        data = json.load(fh)
    return tuple(tuple(int(x) for x in row) for row in data["gram"])


def s11() -> Lattice:
    """Matriz impressa de S₁₁ (20 x 20, det 121), lida de data/s11.json."""
    return Lattice(_load_gram("s11.json"), "S11")


def l_k3_two() -> Lattice:
    """U³ ⊕ E8(-1)² ⊕ (-2)."""
    u = hyperbolic_plane()
    e8 = e_n(8, -1)
    return direct_sum([u, u, u, e8, e8, rank1(-2)], "L_K3two")


def l_mukai() -> Lattice:
    """U⁴ ⊕ E8(-1)²."""
    u = hyperbolic_plane()
    e8 = e_n(8, -1)
    return direct_sum([u, u, u, u, e8, e8], "L_Mukai")


def _label(base: str, scale: int) -> str:
    return base if scale == 1 else f"{base}({scale})"


_SHORT = re.compile(r"^([AD])_?(\d+)$|^E_?([678])$")


def is_catalog_name(name: str) -> bool:
    return name in CATALOG_NAMES or bool(_SHORT.match(name))


def build(name: str, n: Optional[int] = None, k: Optional[int] = None, scale: int = 1) -> Lattice:
    """
    Constrói um reticulado do catálogo.

    Args:
        name: nome do catálogo (também aceita formas curtas como "A2", "D16", "E8")
        n: posto para A_n e D_n
        k: entrada de rank1(k)
        scale: fator de reescala aplicado ao resultado

    Raises:
        LatticeError: nome desconhecido ou parâmetros inválidos
    """
    if scale == 0:
        raise LatticeError("fator de escala nulo")
    match = _SHORT.match(name)
    if match:
        if match.group(1):
            name, n = f"{match.group(1)}_n", int(match.group(2))
        else:
            name = f"E{match.group(3)}"
    if name in ("A_n", "D_n") and n is None:
        raise LatticeError(f"{name} exige o parâmetro n")
    if name == "A_n":
        return a_n(n, scale)
    if name == "D_n":
        return d_n(n, scale)
    if name in ("E6", "E7", "E8"):
        return e_n(int(name[1]), scale)
    if name == "D16plus":
        return d16_plus(scale)
    builders = {
        "U": hyperbolic_plane,
        "Pi_1_25": pi_1_25,
        "L_K3two": l_k3_two,
        "L_Mukai": l_mukai,
        "M11": lambda: Lattice(M11_GRAM, "M11"),
        "S11": s11,
        "T1_11": lambda: Lattice(T1_GRAM, "T1_11"),
        "T2_11": lambda: Lattice(T2_GRAM, "T2_11"),
        "TX_binary": lambda: Lattice(TX_GRAM, "TX_binary"),
    }
    if name == "rank1":
        if k is None:
            raise LatticeError("rank1 exige o parâmetro k")
        base = rank1(k)
    elif name in builders:
        base = builders[name]()
    else:
        raise LatticeError(f"nome de catálogo desconhecido | nome={name}")
    return base if scale == 1 else rescale(base, scale)
