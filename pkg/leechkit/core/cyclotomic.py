"""
Aritmética exata em corpos ciclotômicos ℚ(ζ_N).

Um elemento é guardado pelo vetor de coeficientes do seu representante
módulo o N-ésimo polinômio ciclotômico Φ_N (grau φ(N)). Elementos de
condutores diferentes são mergulhados no mmc antes de operar.
"""

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Mapping, Tuple, Union

from sympy import Poly, QQ, Rational, cyclotomic_poly, symbols

_X = symbols("x")

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def _phi(n: int) -> Poly:
    return Poly(cyclotomic_poly(n, _X), _X, domain=QQ)


def _to_poly(coeffs: Iterable[Fraction]) -> Poly:
    terms = [Rational(c.numerator, c.denominator) for c in coeffs]
    if not terms:
        return Poly(0, _X, domain=QQ)
    return Poly(list(reversed(terms)), _X, domain=QQ)


def _reduce(n: int, poly: Poly) -> Tuple[Fraction, ...]:
    rem = poly.rem(_phi(n))
    degree = _phi(n).degree()
    coeffs = [Fraction(0)] * degree
    for (k,), c in rem.terms():
        c = Rational(c)
        coeffs[k] = Fraction(int(c.p), int(c.q))
    return tuple(coeffs)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True, eq=False)
class CycloElement:
    """Elemento de ℚ(ζ_N) em forma reduzida módulo Φ_N."""

    conductor: int
    coeffs: Tuple[Fraction, ...]

    __hash__ = None  # igualdade depende do mergulho entre condutores

    @classmethod
    def from_powers(cls, conductor: int, counts: Union[Mapping[int, Scalar], Iterable[Scalar]]) -> "CycloElement":
        """Σ counts[k]·ζ_N^k (aceita lista densa ou dicionário expoente -> coeficiente)."""
        items = counts.items() if isinstance(counts, Mapping) else enumerate(counts)
        dense: Dict[int, Fraction] = {}
        for k, c in items:
            if c:
                k %= conductor
                dense[k] = dense.get(k, Fraction(0)) + Fraction(c)
        size = max(dense, default=-1) + 1
        raw = [dense.get(k, Fraction(0)) for k in range(size)]
        return cls(conductor, _reduce(conductor, _to_poly(raw)))

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> "CycloElement":
        return cls.from_powers(conductor, {power % conductor: 1})

    @classmethod
    def from_rational(cls, value: Scalar, conductor: int = 1) -> "CycloElement":
        return cls.from_powers(conductor, {0: value})

    def _poly(self) -> Poly:
        return _to_poly(self.coeffs)

    def embed(self, conductor: int) -> "CycloElement":
        """Mergulha em ℚ(ζ_M) com N | M, via ζ_N = ζ_M^{M/N}."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"condutor {self.conductor} não divide {conductor}")
        step = conductor // self.conductor
        return CycloElement.from_powers(conductor, {k * step: c for k, c in enumerate(self.coeffs)})

    def _unify(self, other: object) -> Tuple["CycloElement", "CycloElement"]:
        if not isinstance(other, CycloElement):
            other = CycloElement.from_rational(Fraction(other), self.conductor)
        n = _lcm(self.conductor, other.conductor)
        return self.embed(n), other.embed(n)

    def __add__(self, other: object) -> "CycloElement":
        a, b = self._unify(other)
        return CycloElement(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other: object) -> "CycloElement":
        a, b = self._unify(other)
        return CycloElement(a.conductor, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other: object) -> "CycloElement":
        return (-self) + other

    def __mul__(self, other: object) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            return CycloElement(self.conductor, tuple(x * other for x in self.coeffs))
        a, b = self._unify(other)
        return CycloElement(a.conductor, _reduce(a.conductor, a._poly() * b._poly()))

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if self.is_zero():
            raise ZeroDivisionError("inverso do elemento nulo em corpo ciclotômico")
        inv = self._poly().invert(_phi(self.conductor))
        return CycloElement(self.conductor, _reduce(self.conductor, inv))

    def __truediv__(self, other: object) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("divisão por zero em corpo ciclotômico")
            return CycloElement(self.conductor, tuple(x / other for x in self.coeffs))
        a, b = self._unify(other)
        return a * b.inverse()

    def __rtruediv__(self, other: object) -> "CycloElement":
        return CycloElement.from_rational(Fraction(other), self.conductor) / self

    def __pow__(self, exponent: int) -> "CycloElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloElement.from_rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (CycloElement, int, Fraction)):
            return NotImplemented
        a, b = self._unify(other)
        return a.coeffs == b.coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("elemento não é racional")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def conj(self) -> "CycloElement":
        """Conjugação complexa ζ -> ζ^{-1}."""
        n = self.conductor
        return CycloElement.from_powers(n, {(-k) % n: c for k, c in enumerate(self.coeffs)})

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.conductor)
        return sum(complex(float(c)) * z**k for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*z^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycloElement(N={self.conductor}: {' + '.join(terms) or '0'})"
