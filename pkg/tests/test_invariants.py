import pytest

from quatlat.invariants import (
    albanese_certificate,
    albanese_kernel_dim,
    boundary_matrix,
    chern_numbers,
    complex_counts,
    hom_cyclic_dim,
)
from quatlat.lattice import standard_structure
from quatlat.smith import smith_normal_form


def test_complex_counts():
    counts = complex_counts(4, 2)
    assert (counts.edges, counts.squares, counts.chi) == (12, 9, 1)
    counts = complex_counts(1, 3)
    assert (counts.edges, counts.squares, counts.chi) == (4, 4, 1)
    with pytest.raises(ValueError):
        complex_counts(0, 2)
    with pytest.raises(ValueError):
        complex_counts(3, 2)  # 3*9 not divisible by 4


def test_chern_numbers():
    assert chern_numbers(4, 2) == (8, 4)
    assert chern_numbers(1, 3) == (8, 4)
    c1_sq, c2 = chern_numbers(8, 4)
    assert (c1_sq + c2) % 12 == 0
    assert (c1_sq + c2) // 12 == complex_counts(8, 4).chi


def test_counts_match_the_built_complex():
    from quatlat.lattice import standard_complex
    from quatlat.squares import euler_characteristic

    counts = complex_counts(4, 2)
    complex_ = standard_complex()
    assert complex_.counts() == (4, counts.edges, counts.squares)
    assert euler_characteristic(complex_) == counts.chi == 1


def test_boundary_matrix_shape():
    s = standard_structure()
    matrix = boundary_matrix(s)
    assert len(matrix[0]) == 4 * (2 + 2)  # 16 columns: zero-sum bases at 4 vertices
    assert len(matrix) == 12 * 3  # one row per (unoriented edge, attached square)


def test_albanese_kernel_dims():
    s = standard_structure()
    assert albanese_kernel_dim(s, 5) == 0
    assert albanese_kernel_dim(s, 7) == 0
    with pytest.raises(ValueError):
        albanese_kernel_dim(s, 6)


def test_albanese_kernel_mod_two_report_only():
    """No vanishing assertion is available mod 2; the value is pinned against
    an independent route through the integer Smith normal form."""
    s = standard_structure()
    matrix = boundary_matrix(s)
    _, d, _ = smith_normal_form(matrix)
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    rank_mod_2 = sum(1 for x in diag if x % 2 != 0)
    oracle_dim = len(matrix[0]) - rank_mod_2
    assert albanese_kernel_dim(s, 2) == oracle_dim == 0


def test_kernel_dim_is_sign_convention_independent():
    s = standard_structure()
    for ell in (2, 3, 5, 7):
        assert albanese_kernel_dim(s, ell) == albanese_kernel_dim(s, ell, flip_signs=True)


def test_hom_dimensions():
    assert hom_cyclic_dim(15, 7) == 0
    assert hom_cyclic_dim(15, 5) == 1
    assert hom_cyclic_dim(15, 3) == 1
    assert hom_cyclic_dim(15, 11) == 0


def test_albanese_certificate():
    report = albanese_certificate(standard_structure())
    assert report.passed
    assert report.kernel_dims == {5: 0, 7: 0}
    assert report.gamma_ab_factors == (15,)
    assert report.gamma_ab_free_rank == 0
    assert report.hom_checks == {7: 0, 11: 0, 13: 0}
