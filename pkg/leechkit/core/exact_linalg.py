"""
Álgebra linear exata sobre ℤ e ℚ.

Matrizes são listas de linhas com inteiros de precisão arbitrária (ou
Fraction). As formas normais, determinantes e eliminações rodam em
DomainMatrix do sympy sobre ZZ/QQ; nenhuma função altera seus argumentos.
"""

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMError
from sympy.polys.matrices.normalforms import hermite_normal_form, invariant_factors as _invariant_factors
from sympy.polys.matrices.normalforms import smith_normal_decomp

from leechkit.core.errors import LatticeError

Number = Union[int, Fraction]
IntMatrix = List[List[int]]
RatMatrix = List[List[Fraction]]


def _is_rational(m: Sequence[Sequence[Number]]) -> bool:
    return any(isinstance(x, Fraction) and x.denominator != 1 for row in m for x in row)


def to_domain(m: Sequence[Sequence[Number]], cols: Optional[int] = None, field: bool = False) -> DomainMatrix:
    """Converte listas de linhas em DomainMatrix sobre ZZ, ou QQ quando há frações."""
    rows = len(m)
    c = len(m[0]) if m else (cols or 0)
    if field or _is_rational(m):
        data = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in m]
        return DomainMatrix(data, (rows, c), QQ)
    return DomainMatrix([[ZZ(int(x)) for x in row] for row in m], (rows, c), ZZ)


def _scalar(x, domain) -> Number:
    if domain == ZZ:
        return int(x)
    return Fraction(int(x.numerator), int(x.denominator))


def from_domain(dm: DomainMatrix) -> list:
    return [[_scalar(x, dm.domain) for x in row] for row in dm.to_list()]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Algoritmo de Euclides estendido.

    Returns:
        (g, x, y) com g = gcd(a, b) >= 0 e a*x + b*y = g
    """
    x, y, g = (int(t) for t in ZZ.gcdex(ZZ(a), ZZ(b)))
    if g < 0:
        return -g, -x, -y
    return g, x, y


def lcm(*values: int) -> int:
    result = 1
    for v in values:
        if v:
            result = abs(result * v) // gcd(result, v)
    return result


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def transpose(m: Sequence[Sequence[Number]], cols: Optional[int] = None) -> list:
    if not m:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list:
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m: Sequence[Sequence[Number]], v: Sequence[Number]) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def vecmat(v: Sequence[Number], m: Sequence[Sequence[Number]]) -> list:
    if not m:
        return []
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    return sum(x * y for x, y in zip(u, v))


def block_diagonal(blocks: Iterable[Sequence[Sequence[Number]]]) -> list:
    blocks = [b for b in blocks]
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[offset + i][offset + j] = x
        offset += len(b)
    return out


def is_symmetric(m: Sequence[Sequence[Number]]) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def content(v: Sequence[int]) -> int:
    """MDC das entradas (0 para o vetor nulo)."""
    return gcd(*v) if v else 0


def common_denominator(values: Iterable[Number]) -> int:
    d = 1
    for x in values:
        if isinstance(x, Fraction):
            d = lcm(d, x.denominator)
    return d


def hnf(m: Sequence[Sequence[int]]) -> IntMatrix:
    """
    Forma normal de Hermite por colunas.

    Returns:
        H cujas colunas formam uma base do ℤ-módulo gerado pelas colunas de
        m (colunas nulas removidas, pivôs positivos)
    """
    if not m or not m[0]:
        return [[] for _ in m]
    return from_domain(hermite_normal_form(to_domain(m)))


def snf(m: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Forma normal de Smith.

    Returns:
        (D, L, R) com L·m·R = D diagonal, d1 | d2 | ..., entradas >= 0 e
        L, R unimodulares
    """
    r = len(m)
    c = len(m[0]) if m else 0
    if r == 0 or c == 0:
        return zeros(r, c), identity(r), identity(c)
    d, left, right = smith_normal_decomp(to_domain(m))
    return from_domain(d), from_domain(left), from_domain(right)


def invariant_factors(m: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal da forma de Smith (inclui zeros para matrizes singulares)."""
    if not m or not m[0]:
        return []
    return [int(x) for x in _invariant_factors(to_domain(m))]


def kernel_basis(m: Sequence[Sequence[int]], cols: Optional[int] = None) -> IntMatrix:
    """
    Base do núcleo inteiro {x : m·x = 0}.

    Com L·m·R = D, o núcleo é gerado pelas colunas de R fora do posto de D,
    logo a base é saturada.

    Returns:
        Lista de vetores (um por linha)
    """
    c = len(m[0]) if m else (cols or 0)
    if not m:
        return identity(c)
    d, _, right = snf(m)
    r = sum(1 for i in range(min(len(d), c)) if d[i][i] != 0)
    return [[right[i][j] for i in range(c)] for j in range(r, c)]


def unimodular_completion(v: Sequence[int]) -> IntMatrix:
    """
    Matriz unimodular cuja primeira linha é o vetor primitivo v.

    Raises:
        LatticeError: v não primitivo
    """
    if content(v) != 1:
        raise LatticeError(f"vetor não primitivo | conteudo={content(v)}")
    _, left, right = snf([list(v)])
    completion = to_integer_matrix(inverse_rational(right))
    # v·R = ±e1, logo a primeira linha de R⁻¹ é ±v
    if left[0][0] < 0:
        completion[0] = [-x for x in completion[0]]
    return completion


def det(m: Sequence[Sequence[Number]]) -> Number:
    """Determinante exato."""
    if not m:
        return 1
    dm = to_domain(m)
    return _scalar(dm.det(), dm.domain)


def rref(m: Sequence[Sequence[Number]]) -> Tuple[RatMatrix, List[int]]:
    """
    Forma escalonada reduzida sobre ℚ.

    Returns:
        (linhas não nulas da forma reduzida, colunas pivô)
    """
    if not m or not m[0]:
        return [], []
    reduced, pivots = to_domain(m, field=True).rref()
    rows = from_domain(reduced)
    return rows[: len(pivots)], list(pivots)


def rank(m: Sequence[Sequence[Number]]) -> int:
    if not m or not m[0]:
        return 0
    return to_domain(m, field=True).rank()


def solve_rational(
    m: Sequence[Sequence[Number]], rhs: Sequence[Sequence[Number]]
) -> Optional[RatMatrix]:
    """
    Resolve m·X = rhs sobre ℚ.

    Args:
        m: matriz r x c
        rhs: matriz r x k

    Returns:
        X (c x k) com variáveis livres nulas, ou None se o sistema é inconsistente
    """
    rows = len(m)
    c = len(m[0]) if m else 0
    k = len(rhs[0]) if rhs else 0
    aug = [list(m[i]) + list(rhs[i]) for i in range(rows)]
    if not aug:
        return [[Fraction(0)] * k for _ in range(c)]
    red, pivots = rref(aug)
    if any(p >= c for p in pivots):
        return None
    x = [[Fraction(0)] * k for _ in range(c)]
    for row, p in zip(red, pivots):
        x[p] = row[c:]
    return x


def solve_vector(m: Sequence[Sequence[Number]], b: Sequence[Number]) -> Optional[List[Fraction]]:
    """Resolve m·x = b; devolve None se não houver solução."""
    sol = solve_rational(m, [[x] for x in b])
    return None if sol is None else [row[0] for row in sol]


def inverse_rational(m: Sequence[Sequence[Number]]) -> RatMatrix:
    if not m:
        return []
    try:
        return from_domain(to_domain(m, field=True).inv())
    except DMError as e:
        raise LatticeError(f"matriz singular não possui inversa | erro={e}") from None


def to_integer_matrix(m: Sequence[Sequence[Number]]) -> IntMatrix:
    out = []
    for row in m:
        new_row = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise LatticeError(f"entrada não inteira | valor={x}")
            new_row.append(x.numerator)
        out.append(new_row)
    return out


class IntegerSpan:
    """
    Escalonamento de Hermite incremental de um ℤ-módulo gerado por vetores.

    Cada inserção combina o novo vetor com a linha do seu pivô usando o
    algoritmo de Euclides estendido, de modo que o conjunto de linhas é sempre
    uma base escalonada do módulo gerado.
    """

    def __init__(self, dimension: int, vectors: Iterable[Sequence[int]] = ()):
        self.dimension = dimension
        self._rows: Dict[int, List[int]] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @staticmethod
    def _lead(v: Sequence[int]) -> Optional[int]:
        return next((i for i, x in enumerate(v) if x != 0), None)

    def add(self, vector: Sequence[int]) -> bool:
        """Insere um vetor; devolve True se o módulo mudou."""
        v = list(vector)
        if len(v) != self.dimension:
            raise LatticeError(f"dimensão incompatível | esperado={self.dimension} | recebido={len(v)}")
        changed = False
        while True:
            lead = self._lead(v)
            if lead is None:
                return changed
            row = self._rows.get(lead)
            if row is None:
                self._rows[lead] = v if v[lead] > 0 else [-x for x in v]
                return True
            a, b = row[lead], v[lead]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, row)]
                continue
            g, x, y = xgcd(a, b)
            s, t = a // g, b // g
            self._rows[lead] = [x * p + y * q for p, q in zip(row, v)]
            v = [s * q - t * p for p, q in zip(row, v)]
            changed = True

    def reduce(self, vector: Sequence[Number]) -> List[Number]:
        """Resto de um vetor após redução pelas linhas pivô."""
        v = list(vector)
        for lead in sorted(self._rows):
            row = self._rows[lead]
            if v[lead] == 0:
                continue
            q = v[lead] // row[lead] if isinstance(v[lead], int) else None
            if q is None or v[lead] != q * row[lead]:
                return v
            v = [x - q * y for x, y in zip(v, row)]
        return v

    def contains(self, vector: Sequence[Number]) -> bool:
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in vector):
            return False
        v = [int(x) for x in vector]
        return all(x == 0 for x in self.reduce(v))

    def basis(self) -> IntMatrix:
        """Base em forma de Hermite (pivôs positivos, entradas acima reduzidas)."""
        leads = sorted(self._rows)
        rows = [list(self._rows[p]) for p in leads]
        for j, p in enumerate(leads):
            for i in range(j):
                q = rows[i][p] // rows[j][p]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[j])]
        return rows


def rational_span_basis(vectors: Sequence[Sequence[Number]], dimension: Optional[int] = None) -> RatMatrix:
    """
    Base do ℤ-módulo gerado por vetores racionais.

    Returns:
        Linhas racionais linearmente independentes gerando o mesmo ℤ-módulo
    """
    vectors = [list(v) for v in vectors]
    n = dimension if dimension is not None else (len(vectors[0]) if vectors else 0)
    d = common_denominator(x for v in vectors for x in v)
    span = IntegerSpan(n)
    for v in vectors:
        span.add([int(Fraction(x) * d) for x in v])
    return [[Fraction(x, d) for x in row] for row in span.basis()]
