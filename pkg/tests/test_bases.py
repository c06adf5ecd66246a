"""The explicit tableau bases, their cardinalities, and the D_X ladder."""

from itertools import product
from math import factorial

import pytest

from lattice_harmonics.bases import (
    BasisElement,
    apply_DX,
    artin_basis,
    basis_B_mu,
    basis_B_mu_ij,
    d_mu_ij,
    d_mu_ij_shadow_form,
    equal_up_to_scalars,
    normalized_set,
    predicted_cardinality_B_mu,
    punctured_delta,
    set_A_uv,
)
from lattice_harmonics.polynomials import Polynomial
from lattice_harmonics.shapes import (
    alpha_vector,
    corners,
    diagram_of,
    partition_factorial,
    partitions_of,
    removable_partitions,
    standard_tableaux,
)
from lattice_harmonics.spans import y_free_space


def test_artin_basis_small():
    assert normalized_set(artin_basis(1).polynomials()) == {"1"}
    b2 = artin_basis(2)
    assert b2.cardinality == b2.rank() == 2
    b3 = artin_basis(3)
    assert b3.cardinality == b3.rank() == 6
    degrees = sorted(p.bidegree()[0] for p in b3.polynomials())
    assert degrees == [0, 1, 1, 2, 2, 3]


def test_basis_B_mu_row_shape():
    fam = basis_B_mu((4,))
    assert fam.cardinality == 1
    assert fam.polynomials()[0] == Polynomial.constant(4, 1)


def test_basis_B_mu_column_matches_artin():
    for n in (2, 3, 4):
        col = basis_B_mu((1,) * n)
        art = artin_basis(n)
        assert equal_up_to_scalars(col.polynomials(), art.polynomials())


def test_basis_B_mu_21_explicit():
    fam = basis_B_mu((2, 1))
    x1, x2, x3 = (Polynomial.x(3, i) for i in (1, 2, 3))
    assert normalized_set(fam.polynomials()) == normalized_set(
        [x3 - x1, Polynomial.constant(3, 1), x2 - x1]
    )
    assert fam.rank() == predicted_cardinality_B_mu((2, 1)) == 3


def test_weak_alpha_bound_overcounts():
    # replacing the strict bound m_i < alpha(i) by m_i <= alpha(i) already
    # produces linearly dependent sets at (2,1)
    mu = (2, 1)
    elements = []
    for t in standard_tableaux(diagram_of(mu)):
        av = alpha_vector(t)
        for m in product(*[range(a + 1) for a in av]):
            elements.append(BasisElement(t, m))
    polys = [e.polynomial for e in elements if e.polynomial]
    from lattice_harmonics.polynomials import RowSpace

    space = RowSpace(3)
    for p in polys:
        space.insert(p)
    assert len(polys) > space.rank


def test_set_A_uv_top_row_is_basis_of_nu():
    mu = (2, 2)
    nu = removable_partitions(mu)[0]
    fam = set_A_uv(mu, 0, corners(mu)[0][0])
    assert equal_up_to_scalars(fam.polynomials(), basis_B_mu(nu).polynomials())


def test_set_A_uv_column_example():
    fam = set_A_uv((1, 1), 0, 0)
    assert normalized_set(fam.polynomials()) == {"x1"}


def test_set_A_uv_cardinality():
    for mu in partitions_of(4):
        for ell, (a_ell, _b) in enumerate(corners(mu)):
            nu = removable_partitions(mu)[ell]
            for u in range(a_ell + 1):
                fam = set_A_uv(mu, ell, u)
                assert fam.cardinality == factorial(3) // partition_factorial(nu)


def test_d_mu_ij_examples():
    assert d_mu_ij((4, 2, 1), 0, 1) == 90
    assert d_mu_ij((2, 1), 0, 0) == 3
    assert d_mu_ij((1, 1), 1, 0) == 1


def test_d_mu_ij_fractional_intermediate():
    # n!/mu! is 3/2 here; the product with the row sum must still be exact
    assert d_mu_ij((2, 2), 0, 0) == 6
    assert d_mu_ij((2, 2), 1, 0) == 3


def test_d_mu_ij_forms_agree():
    for w in range(2, 8):
        for mu in partitions_of(w):
            for (i, j) in diagram_of(mu):
                assert d_mu_ij(mu, i, j) == d_mu_ij_shadow_form(mu, i, j)


def test_d_mu_ij_rejects_outside_hole():
    with pytest.raises(ValueError):
        d_mu_ij((2, 1), 1, 1)


def test_basis_B_mu_ij_cardinality_matches_formula():
    for w in range(2, 8):
        for mu in partitions_of(w):
            for (i, j) in diagram_of(mu):
                fam = basis_B_mu_ij(mu, i, j)
                assert fam.cardinality == d_mu_ij(mu, i, j)


def test_basis_B_mu_ij_union_pieces_are_disjoint():
    for mu in ((2, 2), (3, 1), (2, 1, 1), (3, 2)):
        for (i, j) in diagram_of(mu):
            fam = basis_B_mu_ij(mu, i, j)
            texts = normalized_set(fam.polynomials())
            assert len(texts) == fam.cardinality


def test_basis_B_mu_ij_corner_hole_reduces_to_B_nu():
    mu = (3, 1)
    for ell, (a, b) in enumerate(corners(mu)):
        fam = basis_B_mu_ij(mu, a, b)
        nu = removable_partitions(mu)[ell]
        assert equal_up_to_scalars(fam.polynomials(), basis_B_mu(nu).polynomials())


def test_basis_B_mu_ij_21_spans_oracle():
    fam = basis_B_mu_ij((2, 1), 0, 0)
    space = y_free_space(diagram_of((2, 1))[1:])  # puncture at (0,0)
    assert fam.cardinality == fam.rank() == space.dimension == 3
    assert all(space.contains(p) for p in fam.polynomials())


def test_apply_DX_scalars_and_zero():
    assert apply_DX(Polynomial.x(2, 1) + Polynomial.x(2, 2)) == \
        Polynomial.constant(2, 2)
    with pytest.raises(TypeError):
        apply_DX("nope")


def test_DX_moves_hole_up_and_kills_top_border():
    mu = (2, 2)
    low = punctured_delta(mu, 0, 0)
    high = punctured_delta(mu, 1, 0)
    assert apply_DX(low).normalized() == high.normalized()
    assert apply_DX(high).is_zero()


def test_DX_ladder_on_A_sets():
    for mu in ((2, 1), (2, 2), (3, 1), (2, 1, 1)):
        for ell, (a_ell, _b) in enumerate(corners(mu)):
            for u in range(a_ell + 1):
                images = apply_DX(set_A_uv(mu, ell, u))
                if u < a_ell:
                    target = set_A_uv(mu, ell, u + 1)
                    assert equal_up_to_scalars(images, target.polynomials())
                else:
                    assert all(not p for p in images)


def test_DX_maps_B_mu_ij_one_row_up():
    mu = (2, 2)
    images = apply_DX(basis_B_mu_ij(mu, 0, 0))
    target = basis_B_mu_ij(mu, 1, 0)
    assert equal_up_to_scalars(images, target.polynomials())
