from fractions import Fraction

import pytest

from leechkit.core import catalog
from leechkit.core.errors import BoundExceededError, LatticeError
from leechkit.core.lattice import (
    GlueSubgroup,
    Lattice,
    direct_sum,
    disc_form_isomorphic,
    discriminant_group,
    genus_equal,
    intersection_index,
    is_definite,
    is_even,
    is_unimodular,
    isotropic_elements,
    orthogonal_complement,
    overlattice_from_isotropic,
    rescale,
    same_set,
    saturate,
    signature,
    sublattice,
)


def test_rejects_asymmetric_and_degenerate():
    with pytest.raises(LatticeError):
        Lattice(((2, 1), (0, 2)))
    with pytest.raises(LatticeError):
        Lattice(((1, 1), (1, 1)))


def test_signature_of_hyperbolic_plane():
    sig = signature(catalog.hyperbolic_plane())
    assert (sig.plus, sig.minus) == (1, 1)
    assert not is_definite(catalog.hyperbolic_plane())


def test_direct_sum_and_rescale():
    a2 = catalog.a_n(2)
    total = direct_sum([a2, rescale(a2, -1)])
    assert total.rank == 4
    sig = signature(total)
    assert (sig.plus, sig.minus) == (2, 2)
    assert total.det == 9


def test_ambient_coordinates_and_membership():
    a2 = catalog.a_n(2)
    assert a2.contains([1, -1, 0])
    assert a2.contains([1, 0, -1])
    assert not a2.contains([1, 0, 0])
    assert a2.coordinates([1, 0, 0]) is None


def test_discriminant_of_a2():
    form = discriminant_group(catalog.a_n(2))
    assert form.invariants == (3,)
    assert form.value((1,)) == Fraction(2, 3)
    assert form.pairing((1,), (1,)) == Fraction(2, 3)


def test_discriminant_of_unimodular_is_trivial(e8):
    form = discriminant_group(e8)
    assert form.order == 1
    assert is_unimodular(e8)


def test_odd_lattice_has_no_q():
    form = discriminant_group(catalog.rank1(3))
    assert form.q is None
    with pytest.raises(LatticeError):
        form.value((1,))


def test_disc_form_negation_matches_e6():
    a2 = discriminant_group(catalog.a_n(2))
    e6 = discriminant_group(catalog.e_n(6))
    e6_neg = discriminant_group(catalog.e_n(6, -1))
    assert not disc_form_isomorphic(a2, e6)
    assert disc_form_isomorphic(a2, e6_neg)
    assert disc_form_isomorphic(a2, e6.negate())


def test_d16_glue_gives_unimodular():
    d16 = catalog.d_n(16)
    form = discriminant_group(d16)
    assert form.invariants == (2, 2)
    isotropic = isotropic_elements(form)
    assert len(isotropic) == 2
    plus = overlattice_from_isotropic(d16, GlueSubgroup(form, (isotropic[0],)))
    assert is_unimodular(plus)
    assert is_even(plus)


def test_non_isotropic_glue_rejected():
    d16 = catalog.d_n(16)
    form = discriminant_group(d16)
    vector_class = next(a for a in form.elements() if any(a) and form.value(a) == 1)
    with pytest.raises(LatticeError):
        overlattice_from_isotropic(d16, GlueSubgroup(form, (vector_class,)))


def test_isotropic_bound():
    form = discriminant_group(catalog.a_n(12))
    with pytest.raises(BoundExceededError):
        isotropic_elements(form, max_order=10)


def test_genus_e8_squared_vs_d16_plus(e8):
    assert genus_equal(direct_sum([e8, e8]), catalog.d16_plus())
    assert not genus_equal(e8, catalog.a_n(8))


def test_orthogonal_complement_in_a2():
    a2 = catalog.a_n(2)
    comp = orthogonal_complement([[1, 0]], a2)
    assert comp.gram == ((6,),)


def test_sublattice_index():
    a2 = catalog.a_n(2)
    doubled = sublattice(a2, [[2, 0], [0, 2]])
    assert doubled.det == 16 * a2.det
    assert intersection_index(doubled, a2) == (1, 4)
    assert not same_set(doubled, a2)
    assert same_set(sublattice(a2, [[1, 0], [1, 1]]), a2)


def test_saturation_of_rank_one_sublattice():
    a2 = catalog.a_n(2)
    doubled_root = sublattice(a2, [[2, 0]])
    assert doubled_root.gram == ((8,),)
    assert saturate(doubled_root, a2).gram == ((2,),)


def test_glue_subgroup_closure():
    form = discriminant_group(catalog.d_n(16))
    group = GlueSubgroup(form, ((1, 0), (0, 1)))
    assert group.order == 4
