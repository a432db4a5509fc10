import pytest

from leechkit.core import klein_cubic as kc
from leechkit.core.cyclotomic import CycloElement
from leechkit.core.errors import KleinCubicError

KLEIN_TERMS = [
    (3, 0, 0, 0, 0, 0),
    (0, 2, 0, 0, 0, 1),
    (0, 0, 2, 0, 1, 0),
    (0, 0, 1, 2, 0, 0),
    (0, 1, 0, 0, 2, 0),
    (0, 0, 0, 1, 0, 2),
]


def test_cubic_terms(h):
    assert sorted(h.coefficients()) == sorted(KLEIN_TERMS)
    assert set(h.coefficients().values()) == {1}
    assert len(h.partials()) == 6


def test_rejects_non_cubic_terms():
    with pytest.raises(KleinCubicError):
        kc.CubicForm((((2, 0, 0, 0, 0, 0), 1),))


def test_monomial_counts():
    assert len(kc.monomials(2)) == 21
    assert len(kc.cubic_monomials()) == 56


def test_orders():
    assert kc.psi().order == 11
    assert kc.alpha().order == 3
    assert kc.beta().order == 5
    assert kc.psi().power(11).is_identity()
    assert kc.psi().compose(kc.psi().power(10)).is_identity()


def test_symplectic_actions(h):
    assert kc.is_symplectic(kc.psi(), h)
    assert kc.is_symplectic(kc.beta(), h)
    assert not kc.is_symplectic(kc.alpha(), h)
    assert kc.residue_action(kc.alpha(), h) == CycloElement.zeta(3)


def test_non_automorphisms_rejected(h):
    with pytest.raises(KleinCubicError):
        kc.scale_factor(kc.ProjAutomorphism.from_cycle((0, 1)), h)
    with pytest.raises(KleinCubicError):
        kc.scale_factor(kc.ProjAutomorphism.diagonal((0, 1, 0, 0, 0, 0), 2), h)


def test_invariant_cubics(h):
    assert sorted(kc.invariant_cubics(kc.psi(), h)) == sorted(KLEIN_TERMS)
    assert len(kc.invariant_cubics(kc.ProjAutomorphism.identity())) == 56
    with pytest.raises(KleinCubicError):
        kc.invariant_cubics(kc.beta(), h)


def test_fixed_points_and_lines(h):
    assert kc.fixed_points(kc.psi(), h) == [1, 2, 3, 4, 5]
    assert tuple(kc.fixed_lines(kc.psi(), h)) == kc.EXPECTED_FIXED_LINES
    with pytest.raises(KleinCubicError):
        kc.fixed_points(kc.alpha(), h)


def test_scan_requires_prime(h):
    with pytest.raises(KleinCubicError):
        kc.smoothness_witness_mod_p(h, 4)


@pytest.mark.parametrize("prime", [2, 3])
def test_scan_rejects_small_primes(h, prime):
    with pytest.raises(KleinCubicError):
        kc.smoothness_witness_mod_p(h, prime)


def test_scan_mod_5_is_smooth(h):
    report = kc.smoothness_witness_mod_p(h, 5)
    assert report.points == (5**6 - 1) // 4
    assert report.singular == 0


def test_scan_finds_singular_point_without_cube_term(h):
    degenerate = kc.CubicForm(tuple(t for t in h.terms if t[0] != (3, 0, 0, 0, 0, 0)))
    report = kc.smoothness_witness_mod_p(degenerate, 5)
    # (1:0:0:0:0:0) anula todas as derivadas
    assert report.singular >= 1
    assert not report.smooth


@pytest.mark.slow
@pytest.mark.parametrize("prime", [13, 23])
def test_scan_is_smooth_at_good_primes(h, prime):
    report = kc.smoothness_witness_mod_p(h, prime)
    assert report.singular == 0
    assert report.smooth


def test_jacobian_piece(h):
    piece = kc.jacobian_piece(h, 3)
    assert piece.dim_s == 56
    assert piece.rank_j == 36
    assert piece.dim_r == 20


def test_hilbert_function(h):
    assert kc.hilbert_function(h) == [1, 6, 15, 20, 15, 6, 1]
    assert kc.hilbert_function(h) == kc.expected_hilbert_function()


def test_coinvariant_ranks(h):
    assert kc.rank_coinvariant_on_F(kc.psi(), h) == 20
    assert kc.rank_coinvariant_on_F(kc.beta(), h) == 16
    assert kc.rank_coinvariant_on_F(kc.ProjAutomorphism.identity(), h) == 0


def test_coinvariant_rank_needs_symplectic(h):
    with pytest.raises(KleinCubicError):
        kc.rank_coinvariant_on_F(kc.alpha(), h)
