from fractions import Fraction

import pytest

from leechkit.core.cyclotomic import CycloElement


def test_sum_of_roots_of_unity_is_minus_one():
    total = CycloElement.from_powers(11, {k: 1 for k in range(1, 11)})
    assert total == -1


def test_zeta_power_wraps():
    z = CycloElement.zeta(11)
    assert z**11 == 1
    assert CycloElement.zeta(11, 22) == 1


def test_embedding_between_conductors():
    eta = CycloElement.zeta(3)
    assert eta == CycloElement.zeta(33, 11)
    assert (eta + CycloElement.zeta(11)).conductor == 33


def test_inverse_and_division():
    x = CycloElement.from_powers(5, {0: 2, 1: 1})
    assert x * x.inverse() == 1
    assert (x / x) == 1


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        CycloElement.from_rational(0, 7).inverse()


def test_quadratic_gauss_sum_mod_11():
    # Σ ζ^{k²} has square -11
    g = CycloElement.from_powers(11, {(k * k) % 11: 1 for k in range(11)})
    assert g * g == -11


def test_conj_and_rational_part():
    z = CycloElement.zeta(8)
    assert (z * z.conj()) == 1
    assert (z + z.conj()).is_rational() is False
    assert (z**4).to_rational() == Fraction(-1)


def test_to_complex_close():
    z = CycloElement.zeta(4)
    assert abs(z.to_complex() - 1j) < 1e-12
