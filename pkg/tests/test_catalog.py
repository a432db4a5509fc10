import pytest

from leechkit.core import catalog
from leechkit.core.errors import LatticeError
from leechkit.core.lattice import is_even, is_unimodular, signature


@pytest.mark.parametrize(
    "name, n, det",
    [("A_n", 2, 3), ("A_n", 12, 13), ("D_n", 4, 4), ("D_n", 5, 4), ("E6", None, 3), ("E7", None, 2), ("E8", None, 1)],
)
def test_root_lattice_determinants(name, n, det):
    lattice = catalog.build(name, n=n)
    assert abs(lattice.det) == det
    assert is_even(lattice)


def test_short_names():
    assert catalog.build("A2").rank == 2
    assert catalog.build("D16").rank == 16
    assert catalog.build("E_8").rank == 8


def test_scale_changes_signature(e8):
    neg = catalog.build("E8", scale=-1)
    assert signature(neg).minus == 8
    assert signature(e8).plus == 8


def test_rank1_flags_odd():
    assert not is_even(catalog.rank1(3))
    assert is_even(catalog.rank1(-2))
    with pytest.raises(LatticeError):
        catalog.rank1(0)


def test_unknown_name():
    with pytest.raises(LatticeError):
        catalog.build("X9")
    assert not catalog.is_catalog_name("X9")
    assert catalog.is_catalog_name("A_n")


def test_a_n_requires_n():
    with pytest.raises(LatticeError):
        catalog.build("A_n")


def test_unimodular_catalog_entries():
    for name in ("U", "E8", "Pi_1_25", "L_Mukai", "D16plus"):
        lattice = catalog.build(name)
        assert is_unimodular(lattice), name
        assert is_even(lattice), name


def test_k3_two_signature():
    lattice = catalog.l_k3_two()
    assert lattice.rank == 23
    assert (signature(lattice).plus, signature(lattice).minus) == (3, 20)
    assert abs(lattice.det) == 2


def test_mukai_signature():
    sig = signature(catalog.l_mukai())
    assert (sig.plus, sig.minus) == (4, 20)


def test_printed_s11(s11):
    assert s11.rank == 20
    assert abs(s11.det) == 121
    assert is_even(s11)
    assert signature(s11).minus == 20


def test_ternary_forms_have_det_242(t1, t2):
    assert t1.det == 242
    assert t2.det == 242
    assert catalog.build("TX_binary").det == 363


def test_catalog_names_listed():
    assert "S11" in catalog.catalog_names()
