from fractions import Fraction

import pytest

from leechkit.core import exact_linalg as la
from leechkit.core.errors import LatticeError


def test_xgcd_bezout():
    g, x, y = la.xgcd(240, 46)
    assert g == 2
    assert 240 * x + 46 * y == 2


def test_xgcd_negative_inputs():
    g, x, y = la.xgcd(-12, 18)
    assert g == 6
    assert -12 * x + 18 * y == 6


def test_hnf_known_form():
    m = [[12, 6, 4], [3, 9, 6], [2, 16, 14]]
    h = la.hnf(m)
    assert h == [[10, 0, 2], [0, 15, 3], [0, 0, 2]]
    # mesmas colunas geram o mesmo ℤ-módulo
    span = la.IntegerSpan(3, la.transpose(h))
    assert all(span.contains(col) for col in la.transpose(m))
    assert abs(la.det(h)) == abs(la.det(m))


def test_unimodular_completion_first_row():
    v = [6, 10, 15]
    u = la.unimodular_completion(v)
    assert u[0] == v
    assert abs(la.det(u)) == 1


def test_unimodular_completion_rejects_imprimitive():
    with pytest.raises(LatticeError):
        la.unimodular_completion([2, 4])


def test_snf_transforms_larger_matrix():
    m = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    d, left, right = la.snf(m)
    assert la.matmul(la.matmul(left, m), right) == d
    assert abs(la.det(left)) == 1
    assert abs(la.det(right)) == 1
    assert [d[i][i] for i in range(3)] == [2, 6, 12]


def test_kernel_basis_is_saturated():
    m = [[2, 4, 6]]
    kernel = la.kernel_basis(m)
    assert len(kernel) == 2
    for v in kernel:
        assert la.matvec(m, v) == [0]
    # [1, 1, -1] lies in the kernel and must be an integer combination
    span = la.IntegerSpan(3, kernel)
    assert span.contains([1, 1, -1])


def test_snf_of_cartan_a2():
    d, left, right = la.snf([[2, -1], [-1, 2]])
    assert la.matmul(la.matmul(left, [[2, -1], [-1, 2]]), right) == d
    assert la.invariant_factors([[2, -1], [-1, 2]]) == [1, 3]


def test_invariant_factors_divisibility():
    factors = la.invariant_factors([[2, 0, 0], [0, 4, 0], [0, 0, 6]])
    assert factors == [2, 2, 12]


def test_det_exact():
    assert la.det([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4
    assert la.det([[Fraction(1, 2), 0], [0, 4]]) == 2


def test_rref_and_rank():
    rows, pivots = la.rref([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert pivots == [0, 1]
    assert len(rows) == 2
    assert la.rank([[1, 2], [2, 4]]) == 1


def test_solve_rational_consistent_and_inconsistent():
    x = la.solve_vector([[2, 0], [0, 3]], [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)]
    assert la.solve_vector([[1, 1], [1, 1]], [1, 2]) is None


def test_inverse_rational_singular():
    with pytest.raises(LatticeError):
        la.inverse_rational([[1, 2], [2, 4]])


def test_to_integer_matrix_rejects_fractions():
    with pytest.raises(LatticeError):
        la.to_integer_matrix([[Fraction(1, 2)]])


def test_integer_span_membership():
    span = la.IntegerSpan(2, [[2, 0], [0, 3], [4, 6]])
    assert len(span) == 2
    assert span.contains([2, 3])
    assert not span.contains([1, 0])
    assert not span.contains([Fraction(1, 2), 0])


def test_integer_span_gcd_combination():
    span = la.IntegerSpan(1, [[4], [6]])
    assert span.basis() == [[2]]


def test_rational_span_basis_half_vectors():
    basis = la.rational_span_basis([[1, -1], [1, 1], [Fraction(1, 2), Fraction(1, 2)]], 2)
    assert len(basis) == 2
    assert abs(la.det(basis)) == Fraction(1)


def test_dimension_mismatch():
    with pytest.raises(LatticeError):
        la.IntegerSpan(2).add([1, 2, 3])
