import pytest

from leechkit.core import catalog
from leechkit.core.errors import IsometryError
from leechkit.core.group_actions import (
    FiniteIsometryGroup,
    LatticeIsometry,
    Permutation,
    action_on_discriminant,
    coinvariant_generators,
    coinvariant_lattice,
    from_glue_translation,
    from_permutation,
    identity_isometry,
    invariant_lattice,
    is_leech_couple,
    load_permutation,
    orbit_count_matches,
    permutation_names,
    rank_table_by_element_order,
    restrict,
)
from leechkit.core.lattice import Lattice, direct_sum
from leechkit.core.niemeier import get_spec, glue_generators, holy_frame, holy_leech

A1A1 = direct_sum([catalog.a_n(1), catalog.a_n(1)], "A1+A1")
SWAP = ((0, 1), (1, 0))


def test_parse_cycles():
    p = Permutation.parse("(0 1 2)(∞ 5)")
    assert p.order == 6
    assert p(1) == 2
    assert p.compose(p.inverse()) == Permutation.identity(p.labels)
    assert str(Permutation.identity(p.labels)) == "()"


def test_parse_rejects_bad_cycles():
    with pytest.raises(IsometryError):
        Permutation.parse("(0 1 99)")
    with pytest.raises(IsometryError):
        Permutation.parse("(0 1)(1 2)")


def test_printed_permutations():
    assert {"alpha", "beta", "gamma", "chi_N23", "chi_N22", "order23"} <= set(permutation_names())
    assert load_permutation("chi_N23").order == 11
    assert len(load_permutation("chi_N23").orbits()) == 4
    assert load_permutation("beta").order == 5
    assert load_permutation("order23").order == 23
    with pytest.raises(IsometryError):
        load_permutation("delta")


def test_matrix_must_preserve_form():
    with pytest.raises(IsometryError):
        LatticeIsometry(catalog.a_n(2), ((1, 1), (0, 1)))
    assert LatticeIsometry(A1A1, SWAP).order() == 2
    assert identity_isometry(A1A1).is_identity()


def test_swap_invariants_and_coinvariants():
    g = LatticeIsometry(A1A1, SWAP, label="swap")
    assert invariant_lattice(g).gram == ((4,),)
    assert coinvariant_lattice(g).gram == ((4,),)
    assert coinvariant_generators(g).gram == ((4,),)


def test_group_closure_and_rank_table():
    a2 = catalog.a_n(2)
    flip = LatticeIsometry(a2, SWAP, label="flip")
    minus = LatticeIsometry(a2, ((-1, 0), (0, -1)), label="-id")
    group = FiniteIsometryGroup([flip, minus])
    assert group.order == 4
    table = rank_table_by_element_order(group)
    assert table.counts == {1: 1, 2: 3}
    assert table.as_dict() == {2: [1, 2]}
    assert table.as_dict(include_identity=True)[1] == [0]


def test_group_needs_common_lattice():
    with pytest.raises(IsometryError):
        FiniteIsometryGroup([])
    with pytest.raises(IsometryError):
        FiniteIsometryGroup([identity_isometry(A1A1), identity_isometry(catalog.a_n(2))])


def test_discriminant_action():
    a2 = catalog.a_n(2)
    assert action_on_discriminant(identity_isometry(a2)).is_trivial
    minus = LatticeIsometry(a2, ((-1, 0), (0, -1)))
    assert not action_on_discriminant(minus).is_trivial


def test_chi_on_n23(n23):
    p = load_permutation("chi_N23")
    chi = from_permutation(p, n23, "chi")
    assert chi.order() == 11
    assert orbit_count_matches(p, chi)
    assert coinvariant_lattice(chi).rank == 20


def test_order23_coinvariant_rank(n23):
    g = from_permutation(load_permutation("order23"), n23)
    assert g.order() == 23
    assert coinvariant_lattice(g).rank == 22


def test_printed_gamma_does_not_preserve_n23(n23):
    with pytest.raises(IsometryError):
        from_permutation(load_permutation("gamma_printed"), n23)


def test_permutation_degree_must_match_blocks(n22):
    with pytest.raises(IsometryError):
        from_permutation(load_permutation("chi_N23"), n22)


def test_chi_on_n22(n22):
    chi = from_permutation(load_permutation("chi_N22"), n22)
    assert chi.order() == 11
    assert coinvariant_lattice(chi).rank == 20


def test_glue_translation_needs_code_word():
    frame = holy_frame(get_spec("N10"))
    with pytest.raises(IsometryError):
        from_glue_translation((1, 1), frame)


def test_order13_translation_is_fixed_point_free():
    spec = get_spec("N10")
    frame = holy_frame(spec)
    leech = holy_leech(spec, frame)
    g = from_glue_translation(glue_generators(spec)[0], frame, leech)
    assert g.order() == 13
    assert invariant_lattice(g).rank == 0


@pytest.mark.slow
def test_s_chi_is_leech_couple(n23):
    chi = from_permutation(load_permutation("chi_N23"), n23)
    s = coinvariant_lattice(chi)
    assert is_leech_couple(s, restrict(chi, s)).holds


@pytest.mark.slow
def test_l2_11_rank_table(n23):
    group = FiniteIsometryGroup([from_permutation(load_permutation(p), n23) for p in ("alpha", "beta", "gamma")])
    assert group.order == 660
    table = rank_table_by_element_order(group)
    assert table.as_dict() == {2: [8], 3: [12], 5: [16], 6: [16], 11: [20]}
    assert table.counts == {1: 1, 2: 55, 3: 110, 5: 264, 6: 110, 11: 120}


BIG = Lattice(((2**30, 0), (0, 2**30)), "big")


def test_form_check_exact_with_large_entries():
    # MᵀGM = (2^30 + 2^64)·I coincide com G apenas módulo 2^64
    with pytest.raises(IsometryError):
        LatticeIsometry(BIG, ((1, -(2**17)), (2**17, 1)))


def test_large_entry_isometries_compose_and_close():
    g = LatticeIsometry(BIG, SWAP, label="swap")
    minus = LatticeIsometry(BIG, ((-1, 0), (0, -1)), label="-id")
    assert g.order() == 2
    assert g.compose(g).is_identity()
    assert FiniteIsometryGroup([g, minus]).order == 4
