import pytest

from leechkit.core import catalog
from leechkit.core import exact_linalg as la
from leechkit.core.errors import BoundExceededError
from leechkit.core.lattice import Lattice, direct_sum
from leechkit.core.short_vectors import (
    count_roots,
    enumerate_up_to,
    is_isometric_definite,
    lll_reduce,
    minimum,
    primitive_vectors_of_norm,
    shell_fingerprints,
    theta_coefficients,
)


def test_lll_transform_reproduces_reduced_gram(t2):
    reduced, transform = lll_reduce(t2.gram)
    assert la.matmul(la.matmul(transform, t2.matrix()), la.transpose(transform)) == reduced
    assert abs(la.det(transform)) == 1


def test_e8_shells(e8):
    report = enumerate_up_to(e8, 4)
    assert report.counts == {2: 240, 4: 2160}
    assert report.total == 2400


def test_negative_definite_keeps_sign():
    report = enumerate_up_to(catalog.e_n(8, -1), 2)
    assert report.counts == {-2: 240}
    assert minimum(catalog.e_n(8, -1)) == -2


def test_vectors_are_kept_up_to_sign():
    a2 = catalog.a_n(2)
    report = enumerate_up_to(a2, 2, keep_vectors=True)
    assert len(report.vectors) == 3
    assert all(a2.norm(v) == 2 for v in report.vectors)


def test_enumeration_limit(e8):
    with pytest.raises(BoundExceededError):
        enumerate_up_to(e8, 4, limit=100)


def test_theta_and_roots():
    a2 = catalog.a_n(2)
    assert theta_coefficients(a2, 6) == [1, 0, 6, 0, 0, 0, 6]
    assert count_roots(catalog.d_n(4)) == 24


def test_primitive_vectors(t1):
    assert len(primitive_vectors_of_norm(catalog.a_n(2), 6)) == 3
    assert len(primitive_vectors_of_norm(t1, 2)) == 1
    assert primitive_vectors_of_norm(t1, 4) == []
    assert minimum(t1) == 2


def test_isometric_after_basis_change():
    a2 = catalog.a_n(2)
    other = Lattice(((2, 1), (1, 2)), "A2'")
    result = is_isometric_definite(a2, other)
    assert result.status == "isometric"
    w = result.witness
    assert la.matmul(la.matmul(w, other.matrix()), la.transpose(w)) == a2.matrix()


def test_not_isometric_cases(t1, t2):
    assert is_isometric_definite(t1, t2).status == "not_isometric"
    a1a1 = direct_sum([catalog.a_n(1), catalog.a_n(1)])
    assert is_isometric_definite(catalog.a_n(2), a1a1).status == "not_isometric"


def test_node_cap_gives_indeterminate(e8):
    shuffled = Lattice(tuple(reversed([tuple(reversed(r)) for r in e8.gram])), "E8 reversed")
    result = is_isometric_definite(e8, shuffled, node_cap=1)
    assert result.status == "indeterminate"
    assert not result


@pytest.fixture(scope="module")
def same_roots_pair():
    # 288 raízes nos dois, mesmo posto e determinante
    first = direct_sum([catalog.e_n(8), catalog.d_n(4), catalog.d_n(4)], "E8+D4+D4")
    second = direct_sum([catalog.d_n(4), catalog.d_n(12)], "D4+D12")
    return first, second


def test_fingerprints_separate_equal_root_counts(same_roots_pair):
    first, second = same_roots_pair
    assert first.det == second.det == 16
    assert theta_coefficients(first, 2) == theta_coefficients(second, 2) == [1, 0, 288]
    prints1 = shell_fingerprints(first, 2)
    prints2 = shell_fingerprints(second, 2)
    assert sum(prints1.values()) == sum(prints2.values()) == 288
    assert prints1 != prints2


def test_isometry_rejected_without_search(same_roots_pair):
    first, second = same_roots_pair
    result = is_isometric_definite(first, second, theta_bound=2)
    assert result.status == "not_isometric"
    assert result.nodes == 0


def test_fingerprints_keep_isometric_pair():
    a2 = catalog.a_n(2)
    other = Lattice(((2, 1), (1, 2)), "A2'")
    assert shell_fingerprints(a2, 2) == shell_fingerprints(other, 2)
    assert is_isometric_definite(a2, other).status == "isometric"
