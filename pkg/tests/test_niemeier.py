import pytest

from leechkit.core.errors import GlueCodeError, LatticeError
from leechkit.core.lattice import is_even, is_unimodular, same_set
from leechkit.core.niemeier import (
    W_VECTOR,
    Component,
    build_niemeier,
    expand_glue_code,
    frame_intersection_index,
    get_spec,
    glue_generators,
    holy_frame,
    holy_leech,
    holy_nieme,
    leech_from_pi,
    load_table,
    parse_glue_word,
    quotient_by_isotropic,
    verify_roots,
)
from leechkit.core.short_vectors import count_roots


def test_table_rows():
    table = load_table()
    assert len(table) == 24
    assert len({spec.name for spec in table}) == 24
    for spec in table:
        if spec.components:
            assert spec.rank == 24
            assert sum(c.n * c.coxeter for c in spec.components) == spec.expected_roots


def test_get_spec_aliases():
    assert get_spec("n23").name == "N23"
    assert get_spec("Λ").name == "Leech"
    assert get_spec("leech").leech_group == "Co0"
    with pytest.raises(LatticeError):
        get_spec("N24")


def test_invalid_component():
    with pytest.raises(GlueCodeError):
        Component("D", 3)
    with pytest.raises(GlueCodeError):
        Component("E", 9)


def test_glue_word_rotations():
    assert parse_glue_word("[1(012)]", 4) == [(1, 0, 1, 2), (1, 1, 2, 0), (1, 2, 0, 1)]
    with pytest.raises(GlueCodeError):
        parse_glue_word("[12]", 3)
    with pytest.raises(GlueCodeError):
        parse_glue_word("1(2", 2)


@pytest.mark.parametrize("name", ["N1", "N4", "N10", "N12", "N19", "N22", "N23"])
def test_glue_code_order(name):
    spec = get_spec(name)
    code = expand_glue_code(spec)
    disc = 1
    for c in spec.components:
        disc *= c.disc_order
    assert len(code) ** 2 == disc


def test_n19_needs_hexacode_closure():
    spec = get_spec("N19")
    assert spec.closure == "hexacode"
    assert len(glue_generators(spec)) > len(spec.glue)


def test_e8_cubed_is_unimodular_even():
    lattice = build_niemeier(get_spec("N3"))
    assert lattice.rank == 24
    assert is_unimodular(lattice)
    assert is_even(lattice)


def test_n23_roots(n23):
    assert verify_roots(get_spec("N23"), n23) == (48, True)


def test_n22_roots(n22):
    assert verify_roots(get_spec("N22"), n22) == (72, True)


def test_leech_from_pi():
    leech = leech_from_pi()
    assert leech.rank == 24
    assert abs(leech.det) == 1
    assert count_roots(leech) == 0


def test_quotient_rejects_bad_vectors():
    with pytest.raises(LatticeError):
        quotient_by_isotropic((1,) + (0,) * 25)
    with pytest.raises(LatticeError):
        quotient_by_isotropic(tuple(2 * x for x in W_VECTOR))
    with pytest.raises(LatticeError):
        quotient_by_isotropic(W_VECTOR[:-1])


def test_holy_frame_requires_a_type_hole():
    with pytest.raises(LatticeError):
        holy_frame(get_spec("N3"))
    with pytest.raises(LatticeError):
        holy_frame(get_spec("N11"))


def test_holy_nieme_recovers_niemeier(n23):
    spec = get_spec("N23")
    nieme = holy_nieme(spec)
    assert is_unimodular(nieme)
    assert count_roots(nieme) == spec.expected_roots


def test_holy_leech_n23():
    leech = holy_leech(get_spec("N23"))
    assert leech.rank == 24
    assert abs(leech.det) == 1
    assert not same_set(leech, holy_nieme(get_spec("N23")))


@pytest.mark.slow
def test_frame_intersection_index_n23():
    i1, i2 = frame_intersection_index(get_spec("N23"))
    assert i1 is not None and i2 is not None
    assert i1 == i2


def test_a8_cubed_roots():
    spec = get_spec("N15")
    assert [c.name for c in spec.components] == ["A8", "A8", "A8"]
    assert verify_roots(spec) == (216, True)
