"""
Reticulados inteiros e suas formas discriminantes.

Um Lattice guarda a matriz de Gram numa base fixa e, opcionalmente, a base
mergulhada num espaço quadrático racional (Ambient). Com o ambiente presente,
pertinência e igualdade de conjuntos são decidíveis, não apenas isometria.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import gcd, prod
from typing import List, Optional, Sequence, Tuple, Union

from loguru import logger
from sympy import factorint

from leechkit.config.config import settings
from leechkit.core import exact_linalg as la
from leechkit.core.errors import BoundExceededError, LatticeError

Vector = Sequence[Union[int, Fraction]]


def _frac_tuple(rows) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * (x.numerator // (x.denominator * m))


@dataclass(frozen=True)
class Ambient:
    """Espaço quadrático racional com a base do reticulado em coordenadas."""

    gram: Tuple[Tuple[Fraction, ...], ...]
    basis: Tuple[Tuple[Fraction, ...], ...]
    blocks: Optional[Tuple[int, ...]] = None

    @property
    def dimension(self) -> int:
        return len(self.gram)

    @cached_property
    def _sparse_rows(self) -> Tuple[Tuple[Tuple[int, Fraction], ...], ...]:
        return tuple(tuple((j, x) for j, x in enumerate(row) if x) for row in self.gram)

    def pair(self, u: Vector, v: Vector) -> Fraction:
        rows = self._sparse_rows
        total = Fraction(0)
        for i, x in enumerate(u):
            if x:
                total += x * sum((g * v[j] for j, g in rows[i]), Fraction(0))
        return total

    def with_basis(self, basis) -> "Ambient":
        return Ambient(self.gram, _frac_tuple(basis), self.blocks)


@dataclass(frozen=True)
class Signature:
    plus: int
    minus: int

    def __str__(self) -> str:
        return f"({self.plus},{self.minus})"


@dataclass(frozen=True)
class Lattice:
    """
    Reticulado inteiro não degenerado.

    Attributes:
        gram: matriz de Gram simétrica
        label: rótulo livre
        ambient: base num espaço ambiente racional (opcional)
    """

    gram: Tuple[Tuple[int, ...], ...]
    label: str = ""
    ambient: Optional[Ambient] = field(default=None, compare=False)

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if not la.is_symmetric(gram):
            raise LatticeError(f"matriz de Gram não simétrica | label={self.label}")
        if gram and la.det(gram) == 0:
            raise LatticeError(f"matriz de Gram degenerada | label={self.label}")
        if self.ambient is not None:
            if len(self.ambient.basis) != len(gram):
                raise LatticeError(f"base ambiente com tamanho incompatível | label={self.label}")
            b = self.ambient.basis
            for i in range(len(gram)):
                for j in range(i, len(gram)):
                    if self.ambient.pair(b[i], b[j]) != gram[i][j]:
                        raise LatticeError(
                            f"base ambiente não reproduz a Gram | label={self.label} | entrada=({i},{j})"
                        )

    @classmethod
    def from_ambient(
        cls,
        ambient_gram: Sequence[Vector],
        generators: Sequence[Vector],
        label: str = "",
        blocks: Optional[Sequence[int]] = None,
    ) -> "Lattice":
        """
        Reticulado gerado por vetores racionais de um espaço ambiente.

        Raises:
            LatticeError: se a forma induzida não for inteira ou for degenerada
        """
        basis = la.rational_span_basis(generators, len(ambient_gram))
        amb = Ambient(_frac_tuple(ambient_gram), _frac_tuple(basis), tuple(blocks) if blocks else None)
        gram = []
        for u in basis:
            row = []
            for v in basis:
                x = amb.pair(u, v)
                if x.denominator != 1:
                    raise LatticeError(f"forma induzida não inteira | label={label} | valor={x}")
                row.append(x.numerator)
            gram.append(row)
        return cls(tuple(map(tuple, gram)), label, amb)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def matrix(self) -> List[List[int]]:
        return [list(row) for row in self.gram]

    @cached_property
    def det(self) -> int:
        return int(la.det(self.gram))

    def pair(self, u: Vector, v: Vector) -> Union[int, Fraction]:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) if u[i] for j in range(self.rank) if v[j])

    def norm(self, v: Vector) -> Union[int, Fraction]:
        return self.pair(v, v)

    def relabel(self, label: str) -> "Lattice":
        return Lattice(self.gram, label, self.ambient)

    def ambient_vector(self, coords: Vector) -> List[Fraction]:
        if self.ambient is None:
            raise LatticeError(f"reticulado sem ambiente | label={self.label}")
        return la.vecmat(list(coords), [list(r) for r in self.ambient.basis])

    @cached_property
    def _solver(self) -> Tuple[List[int], List[List[Fraction]]]:
        basis = [list(r) for r in self.ambient.basis]
        _, pivots = la.rref(basis)
        square = [[row[p] for p in pivots] for row in basis]
        return pivots, la.inverse_rational(square)

    def coordinates(self, v: Vector) -> Optional[List[Fraction]]:
        """
        Coordenadas exatas de um vetor ambiente na base do reticulado.

        Returns:
            Coordenadas racionais, ou None se v não está no span racional
        """
        if self.ambient is None:
            raise LatticeError(f"reticulado sem ambiente | label={self.label}")
        if self.rank == 0:
            return [] if all(x == 0 for x in v) else None
        pivots, inv = self._solver
        c = la.vecmat([Fraction(v[p]) for p in pivots], inv)
        if la.vecmat(c, [list(r) for r in self.ambient.basis]) != [Fraction(x) for x in v]:
            return None
        return c

    def contains(self, v: Vector) -> bool:
        c = self.coordinates(v)
        return c is not None and all(x.denominator == 1 for x in c)

    def __repr__(self) -> str:
        return f"Lattice(label={self.label!r}, rank={self.rank}, det={self.det})"


def signature(lattice: Union[Lattice, Sequence[Vector]]) -> Signature:
    """
    Assinatura exata por decomposição simétrica racional (Sylvester).

    Raises:
        LatticeError: se a forma for degenerada
    """
    gram = lattice.gram if isinstance(lattice, Lattice) else lattice
    a = [[Fraction(x) for x in row] for row in gram]
    plus = minus = 0
    while a:
        n = len(a)
        i = next((k for k in range(n) if a[k][k] != 0), None)
        if i is None:
            pair = next(((k, j) for k in range(n) for j in range(n) if a[k][j] != 0), None)
            if pair is None:
                raise LatticeError(f"forma degenerada no cálculo da assinatura | nulidade={n}")
            k, j = pair
            a[k] = [x + y for x, y in zip(a[k], a[j])]
            for row in a:
                row[k] += row[j]
            i = k
        pivot = a[i][i]
        if pivot > 0:
            plus += 1
        else:
            minus += 1
        rest = [k for k in range(n) if k != i]
        a = [[a[r][c] - a[r][i] * a[i][c] / pivot for c in rest] for r in rest]
    return Signature(plus, minus)


def is_even(lattice: Lattice) -> bool:
    return all(lattice.gram[i][i] % 2 == 0 for i in range(lattice.rank))


def is_unimodular(lattice: Lattice) -> bool:
    return abs(lattice.det) == 1


def is_definite(lattice: Lattice) -> bool:
    sig = signature(lattice)
    return sig.plus == 0 or sig.minus == 0


def direct_sum(lattices: Sequence[Lattice], label: Optional[str] = None) -> Lattice:
    """
    Soma ortogonal; o ambiente é a soma dos ambientes quando todos existem.
    """
    lattices = list(lattices)
    label = label if label is not None else "⊕".join(L.label for L in lattices)
    gram = la.block_diagonal([L.gram for L in lattices])
    ambient = None
    if lattices and all(L.ambient is not None for L in lattices):
        dims = [L.ambient.dimension for L in lattices]
        total = sum(dims)
        basis: List[List[Fraction]] = []
        offset = 0
        for L, dim in zip(lattices, dims):
            for row in L.ambient.basis:
                basis.append([Fraction(0)] * offset + list(row) + [Fraction(0)] * (total - offset - dim))
            offset += dim
        blocks: List[int] = []
        for L in lattices:
            blocks.extend(L.ambient.blocks or (L.ambient.dimension,))
        ambient = Ambient(
            _frac_tuple(la.block_diagonal([L.ambient.gram for L in lattices])),
            _frac_tuple(basis),
            tuple(blocks),
        )
    return Lattice(tuple(map(tuple, gram)), label, ambient)


def rescale(lattice: Lattice, c: int, label: Optional[str] = None) -> Lattice:
    """L(c): mesma base com a forma multiplicada por c."""
    if c == 0:
        raise LatticeError("fator de escala nulo")
    gram = tuple(tuple(c * x for x in row) for row in lattice.gram)
    ambient = None
    if lattice.ambient is not None:
        ambient = Ambient(
            tuple(tuple(c * x for x in row) for row in lattice.ambient.gram),
            lattice.ambient.basis,
            lattice.ambient.blocks,
        )
    return Lattice(gram, label if label is not None else f"{lattice.label}({c})", ambient)


def _coords_of(sub: Union[Lattice, Sequence[Vector]], lattice: Lattice) -> List[List[Fraction]]:
    if isinstance(sub, Lattice):
        if sub.ambient is None or lattice.ambient is None:
            raise LatticeError("sub-reticulado dado como Lattice exige ambiente comum")
        coords = []
        for row in sub.ambient.basis:
            c = lattice.coordinates(row)
            if c is None:
                raise LatticeError(f"vetor fora do span de {lattice.label}")
            coords.append(c)
        return coords
    return [[Fraction(x) for x in v] for v in sub]


def sublattice(lattice: Lattice, coords: Sequence[Vector], label: str = "") -> Lattice:
    """
    Sub-reticulado gerado por vetores em coordenadas de `lattice`.

    O resultado carrega o ambiente de `lattice` (ou o próprio `lattice` como
    ambiente, quando este não tem um).
    """
    coords = [list(v) for v in coords]
    if any(Fraction(x).denominator != 1 for v in coords for x in v):
        raise LatticeError("coordenadas de sub-reticulado devem ser inteiras")
    span = la.IntegerSpan(lattice.rank, [[int(x) for x in v] for v in coords])
    basis = span.basis()
    gram = la.matmul(la.matmul(basis, lattice.matrix()), la.transpose(basis))
    if lattice.ambient is not None:
        amb_basis = la.matmul(basis, [list(r) for r in lattice.ambient.basis])
        ambient = lattice.ambient.with_basis(amb_basis)
    else:
        ambient = Ambient(_frac_tuple(lattice.gram), _frac_tuple(basis), None)
    return Lattice(tuple(map(tuple, gram)), label, ambient)


def saturate(sub: Union[Lattice, Sequence[Vector]], lattice: Lattice, label: str = "") -> Lattice:
    """Menor sub-reticulado primitivo de `lattice` contendo `sub`."""
    coords = _coords_of(sub, lattice)
    d = la.common_denominator(x for v in coords for x in v)
    rows = [[int(x * d) for x in v] for v in coords]
    k = la.kernel_basis(rows, lattice.rank) if rows else la.identity(lattice.rank)
    sat = la.kernel_basis(k, lattice.rank)
    return sublattice(lattice, sat, label)


def orthogonal_complement(sub: Union[Lattice, Sequence[Vector]], lattice: Lattice, label: str = "") -> Lattice:
    """
    Complemento ortogonal (primitivo) de `sub` dentro de `lattice`.

    Raises:
        LatticeError: se `sub` for degenerado em `lattice`
    """
    coords = _coords_of(sub, lattice)
    if coords:
        d = la.common_denominator(x for v in coords for x in v)
        rows = [[int(x * d) for x in v] for v in coords]
        sg = la.matmul(rows, lattice.matrix())
        if la.rank(la.matmul(sg, la.transpose(rows))) != la.rank(rows):
            raise LatticeError(f"sub-reticulado degenerado em {lattice.label}")
        basis = la.kernel_basis(sg, lattice.rank)
    else:
        basis = la.identity(lattice.rank)
    logger.debug(f"[LATTICE] Complemento ortogonal | em={lattice.label} | posto={len(basis)}")
    return sublattice(lattice, basis, label)


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """
    Forma quadrática finita em forma de fatores invariantes.

    Attributes:
        invariants: fatores d1 | d2 | ... (todos > 1)
        q: valores q(g_i) em ℚ/2ℤ, ou None para reticulados ímpares
        b: emparelhamentos b(g_i, g_j) em ℚ/ℤ
        generators: geradores g_i como vetores duais (coordenadas do reticulado)
        coordinate_rows: linhas que levam um vetor dual às coordenadas do grupo
    """

    invariants: Tuple[int, ...]
    q: Optional[Tuple[Fraction, ...]]
    b: Tuple[Tuple[Fraction, ...], ...]
    generators: Optional[Tuple[Tuple[Fraction, ...], ...]] = field(default=None, compare=False)
    coordinate_rows: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, compare=False)

    @property
    def order(self) -> int:
        return prod(self.invariants)

    @property
    def length(self) -> int:
        return len(self.invariants)

    @property
    def is_even(self) -> bool:
        return self.q is not None

    def normalize(self, a: Sequence[int]) -> Tuple[int, ...]:
        return tuple(x % d for x, d in zip(a, self.invariants))

    def value(self, a: Sequence[int]) -> Fraction:
        """q(Σ a_i g_i) em ℚ/2ℤ."""
        if self.q is None:
            raise LatticeError("forma ímpar: q não está definida em ℚ/2ℤ")
        k = self.length
        total = sum((a[i] * a[i] * self.q[i] for i in range(k) if a[i]), Fraction(0))
        total += 2 * sum(
            (a[i] * a[j] * self.b[i][j] for i in range(k) if a[i] for j in range(i + 1, k) if a[j]),
            Fraction(0),
        )
        return _mod(total, 2)

    def pairing(self, a: Sequence[int], c: Sequence[int]) -> Fraction:
        """b(Σ a_i g_i, Σ c_j g_j) em ℚ/ℤ."""
        k = self.length
        total = sum(
            (a[i] * c[j] * self.b[i][j] for i in range(k) if a[i] for j in range(k) if c[j]),
            Fraction(0),
        )
        return _mod(total, 1)

    def elements(self):
        return product(*(range(d) for d in self.invariants))

    def order_of(self, a: Sequence[int]) -> int:
        return la.lcm(*(d // gcd(x, d) for x, d in zip(a, self.invariants)))

    def add(self, a: Sequence[int], c: Sequence[int]) -> Tuple[int, ...]:
        return self.normalize([x + y for x, y in zip(a, c)])

    def coordinates(self, y: Vector) -> Tuple[int, ...]:
        """Coordenadas no grupo de um vetor dual (coordenadas do reticulado)."""
        if self.coordinate_rows is None:
            raise LatticeError("forma sem geradores concretos")
        out = []
        for row, d in zip(self.coordinate_rows, self.invariants):
            x = sum((Fraction(r) * Fraction(v) for r, v in zip(row, y)), Fraction(0))
            if x.denominator != 1:
                raise LatticeError("vetor fora do dual do reticulado")
            out.append(x.numerator % d)
        return tuple(out)

    def lift(self, a: Sequence[int]) -> List[Fraction]:
        """Representante dual Σ a_i g_i em coordenadas do reticulado."""
        if self.generators is None:
            raise LatticeError("forma sem geradores concretos")
        n = len(self.generators[0]) if self.generators else 0
        out = [Fraction(0)] * n
        for x, g in zip(a, self.generators):
            if x:
                out = [u + x * v for u, v in zip(out, g)]
        return out

    def negate(self) -> "FiniteQuadraticForm":
        q = None if self.q is None else tuple(_mod(-x, 2) for x in self.q)
        b = tuple(tuple(_mod(-x, 1) for x in row) for row in self.b)
        return FiniteQuadraticForm(self.invariants, q, b, self.generators, self.coordinate_rows)

    def direct_sum(self, other: "FiniteQuadraticForm") -> "FiniteQuadraticForm":
        """Soma ortogonal abstrata (geradores concretos descartados)."""
        k, m = self.length, other.length
        b = [[Fraction(0)] * (k + m) for _ in range(k + m)]
        for i in range(k):
            for j in range(k):
                b[i][j] = self.b[i][j]
        for i in range(m):
            for j in range(m):
                b[k + i][k + j] = other.b[i][j]
        q = None if self.q is None or other.q is None else self.q + other.q
        return FiniteQuadraticForm(self.invariants + other.invariants, q, tuple(map(tuple, b)))


def discriminant_group(lattice: Lattice) -> FiniteQuadraticForm:
    """
    Grupo discriminante L^∨/L com forma q (L par) e emparelhamento b.

    Usa a forma de Smith U·G·V = D: os geradores são V·e_i/d_i e as
    coordenadas de um vetor dual y são D·V⁻¹·y mod d.
    """
    n = lattice.rank
    if n == 0:
        return FiniteQuadraticForm((), (), ())
    d, _, v = la.snf(lattice.matrix())
    diag = [d[i][i] for i in range(n)]
    keep = [i for i in range(n) if diag[i] > 1]
    vinv = la.to_integer_matrix(la.inverse_rational(v))
    generators = [[Fraction(v[r][i], diag[i]) for r in range(n)] for i in keep]
    coordinate_rows = [[diag[i] * x for x in vinv[i]] for i in keep]
    even = is_even(lattice)
    q = []
    b = []
    for gi in generators:
        row = []
        for gj in generators:
            row.append(_mod(Fraction(lattice.pair(gi, gj)), 1))
        b.append(tuple(row))
        q.append(_mod(Fraction(lattice.norm(gi)), 2))
    return FiniteQuadraticForm(
        tuple(diag[i] for i in keep),
        tuple(q) if even else None,
        tuple(b),
        _frac_tuple(generators),
        tuple(tuple(r) for r in coordinate_rows),
    )


@dataclass(frozen=True)
class GlueSubgroup:
    """Subgrupo de A_L dado por geradores em coordenadas do grupo."""

    form: FiniteQuadraticForm
    generators: Tuple[Tuple[int, ...], ...]

    def closure(self) -> List[Tuple[int, ...]]:
        zero = tuple(0 for _ in self.form.invariants)
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                for g in self.generators:
                    y = self.form.add(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @property
    def order(self) -> int:
        return len(self.closure())

    def is_isotropic(self) -> bool:
        f = self.form
        if any(f.value(g) != 0 for g in self.generators):
            return False
        return all(f.pairing(g, h) == 0 for g in self.generators for h in self.generators)


def overlattice_from_isotropic(lattice: Lattice, subgroup: GlueSubgroup, label: str = "") -> Lattice:
    """
    Sobre-reticulado par de índice |H| gerado por L e lifts de H.

    Raises:
        LatticeError: se H não for totalmente isotrópico
    """
    if not subgroup.is_isotropic():
        raise LatticeError(f"subgrupo de colagem não isotrópico | em={lattice.label}")
    n = lattice.rank
    vectors = [[Fraction(x) for x in row] for row in la.identity(n)]
    vectors += [subgroup.form.lift(g) for g in subgroup.generators]
    basis = la.rational_span_basis(vectors, n)
    gram = la.matmul(la.matmul(basis, lattice.matrix()), la.transpose(basis))
    if any(x.denominator != 1 for row in gram for x in row):
        raise LatticeError("sobre-reticulado com forma não inteira")
    gram = la.to_integer_matrix(gram)
    if lattice.ambient is not None:
        ambient = lattice.ambient.with_basis(la.matmul(basis, [list(r) for r in lattice.ambient.basis]))
    else:
        ambient = Ambient(_frac_tuple(lattice.gram), _frac_tuple(basis), None)
    result = Lattice(tuple(map(tuple, gram)), label or f"{lattice.label}+", ambient)
    logger.debug(
        f"[LATTICE] Sobre-reticulado | base={lattice.label} | indice={subgroup.order} | det={result.det}"
    )
    return result


def isotropic_elements(form: FiniteQuadraticForm, max_order: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    Elementos não nulos com q(x) = 0 em ℚ/2ℤ, por varredura exaustiva.

    Raises:
        BoundExceededError: se a ordem do grupo passar do limite configurado
    """
    max_order = max_order or settings.isotropic_max_order
    if form.order > max_order:
        raise BoundExceededError(f"grupo de ordem {form.order} acima do limite {max_order}", max_order)
    return [a for a in form.elements() if any(a) and form.value(a) == 0]


def _elementary_divisors(invariants: Sequence[int]) -> List[int]:
    out = []
    for d in invariants:
        out.extend(p**e for p, e in factorint(d).items())
    return sorted(out)


@dataclass(frozen=True)
class DiscFormMatch:
    isomorphic: bool
    witness: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __bool__(self) -> bool:
        return self.isomorphic


def disc_form_isomorphic(
    q1: FiniteQuadraticForm,
    q2: FiniteQuadraticForm,
    max_order: Optional[int] = None,
    max_generators: Optional[int] = None,
) -> DiscFormMatch:
    """
    Decide se duas formas finitas (não degeneradas) são isomorfas.

    Busca por retrocesso as imagens dos geradores de q1 entre os elementos de
    q2 com a mesma ordem, o mesmo valor de q e os emparelhamentos já fixados.

    Returns:
        DiscFormMatch com as imagens dos geradores como testemunha

    Raises:
        BoundExceededError: se ordem ou número de geradores passarem dos limites
    """
    max_order = max_order or settings.disc_form_max_order
    max_generators = max_generators or settings.disc_form_max_generators
    if q1.order != q2.order or _elementary_divisors(q1.invariants) != _elementary_divisors(q2.invariants):
        return DiscFormMatch(False)
    if (q1.q is None) != (q2.q is None):
        return DiscFormMatch(False)
    if q1.order > max_order:
        raise BoundExceededError(f"grupo de ordem {q1.order} acima do limite {max_order}", max_order)
    if q1.length > max_generators:
        raise BoundExceededError(
            f"{q1.length} geradores acima do limite {max_generators}", max_generators
        )
    k = q1.length
    if k == 0:
        return DiscFormMatch(True, ())
    even = q1.q is not None
    candidates: List[List[Tuple[int, ...]]] = [[] for _ in range(k)]
    for c in q2.elements():
        oc = q2.order_of(c)
        for i in range(k):
            if oc != q1.invariants[i]:
                continue
            if even and q2.value(c) != q1.q[i]:
                continue
            if not even and q2.pairing(c, c) != q1.b[i][i]:
                continue
            candidates[i].append(c)
    images: List[Tuple[int, ...]] = []

    def search(i: int) -> bool:
        if i == k:
            return True
        for c in candidates[i]:
            if all(q2.pairing(c, images[j]) == q1.b[i][j] for j in range(i)):
                images.append(c)
                if search(i + 1):
                    return True
                images.pop()
        return False

    if search(0):
        return DiscFormMatch(True, tuple(images))
    return DiscFormMatch(False)


def genus_equal(l1: Lattice, l2: Lattice) -> bool:
    """
    Igualdade de gênero para reticulados pares: assinatura e forma discriminante.

    Raises:
        LatticeError: se algum dos reticulados for ímpar
    """
    if not (is_even(l1) and is_even(l2)):
        raise LatticeError("igualdade de gênero implementada apenas para reticulados pares")
    if l1.rank != l2.rank or abs(l1.det) != abs(l2.det):
        return False
    if signature(l1) != signature(l2):
        return False
    result = bool(disc_form_isomorphic(discriminant_group(l1), discriminant_group(l2)))
    logger.debug(f"[GENUS] Comparação | a={l1.label} | b={l2.label} | igual={result}")
    return result


def intersection_index(l1: Lattice, l2: Lattice) -> Tuple[Optional[int], Optional[int]]:
    """
    Índices [L1 : L1∩L2] e [L2 : L1∩L2] para reticulados no mesmo ambiente.

    Returns:
        Par de índices; None quando a interseção não tem posto máximo
    """
    if l1.ambient is None or l2.ambient is None:
        raise LatticeError("interseção exige ambiente comum")
    b1 = [list(r) for r in l1.ambient.basis]
    b2 = [list(r) for r in l2.ambient.basis]
    stacked = b1 + [[-x for x in r] for r in b2]
    d = la.common_denominator(x for r in stacked for x in r)
    cols = la.transpose([[int(x * d) for x in r] for r in stacked], l1.ambient.dimension)
    kernel = la.kernel_basis(cols, len(stacked))
    n1 = l1.rank
    xs = [v[:n1] for v in kernel]
    ys = [v[n1:] for v in kernel]
    i1 = abs(la.det(xs)) if len(xs) == n1 else None
    i2 = abs(la.det(ys)) if len(ys) == l2.rank else None
    return i1, i2


def same_set(l1: Lattice, l2: Lattice) -> bool:
    if l1.rank != l2.rank:
        return False
    return all(l2.contains(v) for v in l1.ambient.basis) and all(l1.contains(v) for v in l2.ambient.basis)
