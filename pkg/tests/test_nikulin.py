import pytest

from leechkit.core import catalog, nikulin
from leechkit.core.catalog import TX_GRAM
from leechkit.core.errors import GlueAmbiguityError, LatticeError
from leechkit.core.lattice import (
    Signature,
    direct_sum,
    discriminant_group,
    is_even,
    is_unimodular,
    rescale,
    signature,
)
from leechkit.core.nikulin import (
    enumerate_ternary_genus,
    exists_even_lattice,
    extend_to_mukai,
    genus_symbol,
    glue_divisor,
    glue_subgroup,
    milgram_signature,
    ns_and_transcendental_check,
    polarization_table,
    primitive_embedding_exists,
    reduce_binary_form,
    s11_complement_form,
    subgroup_of_order,
)
from leechkit.core.short_vectors import is_isometric_definite


@pytest.mark.parametrize(
    "lattice, expected",
    [
        (catalog.a_n(1), 1),
        (catalog.a_n(2), 2),
        (catalog.d_n(4), 4),
        (catalog.e_n(6), 6),
        (catalog.e_n(8), 0),
        (rescale(catalog.a_n(1), -1), 7),
        (catalog.hyperbolic_plane(2), 0),
    ],
)
def test_milgram_matches_signature(lattice, expected):
    assert milgram_signature(discriminant_group(lattice)) == expected


def test_milgram_rejects_odd_forms():
    with pytest.raises(LatticeError):
        milgram_signature(discriminant_group(catalog.rank1(3)))


def test_s11_genus_symbol(s11):
    symbol = genus_symbol(s11)
    assert symbol.milgram == 4
    assert symbol.is_consistent()


def test_exists_even_lattice():
    trivial = discriminant_group(catalog.e_n(8))
    assert exists_even_lattice(Signature(8, 0), trivial)
    assert not exists_even_lattice(Signature(4, 0), trivial)
    assert not exists_even_lattice(Signature(1, 0), discriminant_group(direct_sum([catalog.a_n(1)] * 2)))


def test_s11_embeds_in_mukai_and_leech(s11):
    report = primitive_embedding_exists(s11, Signature(4, 20))
    assert report
    assert report.complement_signature == Signature(4, 0)
    assert primitive_embedding_exists(s11, Signature(0, 24)).exists


def test_complement_form_order():
    form = s11_complement_form()
    assert form.order == 242
    assert form.is_even


def test_ternary_genus_has_two_classes(t1, t2):
    classes = enumerate_ternary_genus(242, s11_complement_form())
    assert len(classes) == 2
    for reference in (t1, t2):
        assert sum(bool(is_isometric_definite(reference, c)) for c in classes) == 1


def test_hall_subgroup_rule():
    form = discriminant_group(catalog.a_n(5))
    assert subgroup_of_order(form, 2) == ((3,),)
    assert subgroup_of_order(form, 3) == ((2,),)


def test_non_hall_subgroup_is_ambiguous():
    form = discriminant_group(direct_sum([catalog.a_n(1), catalog.a_n(1)]))
    with pytest.raises(GlueAmbiguityError):
        subgroup_of_order(form, 2)
    with pytest.raises(LatticeError):
        subgroup_of_order(form, 3)


def test_glue_subgroup_order(t1, s11):
    assert glue_subgroup(t1, s11).order == 121
    with pytest.raises(LatticeError):
        glue_subgroup(t1, s11, ambient_det=3)


def test_divisors(t1, t2):
    assert glue_divisor((1, 0, 0), t1) == 1
    assert glue_divisor((0, 0, 1), t1) == 2
    assert glue_divisor((1, 0, 0), t2) == 2


def test_polarization_table_t1(t1):
    table = polarization_table(t1)
    assert 2 in table.degrees()
    assert {4, 12, 14, 16, 20} <= set(table.missing_degrees())
    assert table.least_degree_with_divisor(2) == 22


def test_polarization_table_t2(t2):
    table = polarization_table(t2)
    assert table.least_degree_with_divisor(2) == 6
    assert {12, 14, 16, 20} <= set(table.missing_degrees())


def test_binary_reduction():
    assert reduce_binary_form(TX_GRAM) == ((22, 11), (11, 22))
    assert reduce_binary_form(((2, 1), (1, 2))) == ((2, 1), (1, 2))
    with pytest.raises(LatticeError):
        reduce_binary_form(((0, 1), (1, 0)))


def test_ns_and_transcendental():
    report = ns_and_transcendental_check()
    assert report.isotropic_elements == 0
    assert report.genus_equal
    assert report.divisor == 2
    assert report.holds


def test_ns_report_requires_divisor_two(monkeypatch):
    # mesma norma 6, mas divisor 1 no reticulado ambiente
    monkeypatch.setattr(nikulin, "glue_divisor", lambda *args, **kwargs: 1)
    report = ns_and_transcendental_check()
    assert report.divisor == 1
    assert report.transcendental == report.expected
    assert not report.holds


def test_ns_rejects_wrong_degree():
    with pytest.raises(LatticeError):
        ns_and_transcendental_check((0, 1, 0))


def test_mukai_lattice():
    ext = extend_to_mukai([])
    assert is_even(ext.lattice)
    assert is_unimodular(ext.lattice)
    assert signature(ext.lattice) == Signature(4, 20)
    with pytest.raises(LatticeError):
        extend_to_mukai([], v_index=0)
