"""Lattice determinants, tableau monomials, and Garnir polynomials."""

import random
from itertools import permutations

import pytest

from lattice_harmonics.determinants import (
    dY_applied_to_delta,
    gamma,
    garnir,
    lattice_delta,
    tableau_monomials,
    vandermonde,
)
from lattice_harmonics.polynomials import Polynomial
from lattice_harmonics.shapes import (
    Tableau,
    diagram_of,
    partitions_of,
    puncture,
    standard_tableaux,
)


def test_lattice_delta_small():
    x1, x2 = Polynomial.x(2, 1), Polynomial.x(2, 2)
    y1, y2 = Polynomial.y(2, 1), Polynomial.y(2, 2)
    assert lattice_delta(((0, 0), (1, 0))) == x2 - x1
    assert lattice_delta(((0, 0), (0, 1))) == y2 - y1
    assert lattice_delta(puncture((2, 1), 0, 0)) == y1 * x2 - x1 * y2


def test_lattice_delta_rejects_wrong_variable_count():
    with pytest.raises(ValueError):
        lattice_delta(((0, 0), (1, 0)), num_vars=3)


def test_lattice_delta_is_bihomogeneous_alternant():
    rng = random.Random(5)
    for n in range(2, 5):
        for mu in partitions_of(n):
            cells = diagram_of(mu)
            delta = lattice_delta(cells)
            rows = sum(r for r, _c in cells)
            cols = sum(c for _r, c in cells)
            assert delta.bidegree() == (rows, cols)
            sigma = list(range(1, n + 1))
            i = rng.randrange(n - 1)
            sigma[i], sigma[i + 1] = sigma[i + 1], sigma[i]
            assert delta.permuted(tuple(sigma)) == -delta


def test_vandermonde():
    assert vandermonde(1) == Polynomial.constant(1, 1)
    assert vandermonde(2) == Polynomial.x(2, 1) - Polynomial.x(2, 2)
    v3 = vandermonde(3)
    assert len(v3) == 6 and v3.bidegree() == (3, 0)


def test_vandermonde_sign_against_column_determinant():
    for n in range(1, 6):
        det = lattice_delta(diagram_of((1,) * n))
        sign = (-1) ** (n * (n - 1) // 2)
        assert vandermonde(n) == det * sign


def test_tableau_monomials_section2_example():
    t = Tableau.from_rows([[1, 2, 4, 5, 7], [3, 6]])
    triple = tableau_monomials(t)
    n = 7
    expected = [0] * (2 * n)
    for k, c in ((2, 1), (6, 1), (4, 2), (5, 3), (7, 4)):
        expected[n + k - 1] = c
    assert triple.y == tuple(expected)
    assert triple.z == tuple(
        a + b for a, b in zip(triple.x, triple.y)
    )


def test_tableau_monomials_single_column():
    t = Tableau.from_rows([[1], [2], [3]])
    triple = tableau_monomials(t)
    assert triple.y == (0,) * 6
    assert triple.x == (0, 1, 2, 0, 0, 0)


def test_gamma():
    assert gamma(diagram_of((4, 2, 1))) == 12
    assert gamma(diagram_of((1, 1, 1))) == 1
    assert gamma(diagram_of((3,))) == 2


def test_garnir_single_column_is_vandermonde_up_to_sign():
    for n in (2, 3, 4):
        t = Tableau.from_rows([[k] for k in range(1, n + 1)])
        g = garnir(t)
        assert g == vandermonde(n) or g == -vandermonde(n)


def test_garnir_one_row_is_one():
    t = Tableau.from_rows([[1, 2]])
    assert garnir(t) == Polynomial.constant(2, 1)


def test_garnir_21_example():
    t = Tableau.from_rows([[1, 2], [3]])
    assert garnir(t) == Polynomial.x(3, 3) - Polynomial.x(3, 1)


def test_garnir_column_permutation_alternates():
    base = Tableau.from_rows([[1, 3], [2], [4]])
    swapped = Tableau.from_rows([[2, 3], [1], [4]])
    g, h = garnir(base), garnir(swapped)
    assert g == -h


def test_dY_on_matching_shape_gives_garnir():
    for mu in partitions_of(4):
        cells = diagram_of(mu)
        g = gamma(cells)
        for t in standard_tableaux(cells):
            result = dY_applied_to_delta(t, cells)
            target = garnir(t) * g
            assert result == target or result == -target


def test_dY_on_mismatched_shape_has_no_y_free_part():
    cells = diagram_of((2, 2))
    for t in standard_tableaux(diagram_of((3, 1))):
        assert dY_applied_to_delta(t, cells).y_free_part().is_zero()
