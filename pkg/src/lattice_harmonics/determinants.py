"""Lattice determinants, tableau monomials and Garnir polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .polynomials import (
    QQ,
    Monomial,
    Polynomial,
    apply_diff_operator,
    det_monomial_matrix,
    monomial_mul,
)
from .shapes import Diagram, Tableau


def lattice_delta(cells: Diagram, num_vars: int | None = None) -> Polynomial:
    """The lattice determinant det|x_i^{r_j} y_i^{c_j}| over lex-ordered cells."""
    cells = tuple(sorted(cells))
    n = len(cells)
    if num_vars is not None and num_vars != n:
        raise ValueError(f"diagram has {n} cells but num_vars={num_vars}")
    entries = []
    for i in range(n):
        row = []
        for (r, c) in cells:
            e = [0] * (2 * n)
            e[i] = r
            e[n + i] = c
            row.append(tuple(e))
        entries.append(row)
    return det_monomial_matrix(entries, n)


def vandermonde(n: int) -> Polynomial:
    """The product form Vandermonde determinant in x_1..x_n."""
    if n < 1:
        raise ValueError("n must be positive")
    p = Polynomial.constant(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p = p * (Polynomial.x(n, i) - Polynomial.x(n, j))
    return p


def gamma(cells: Diagram) -> int:
    """gamma_D = product of c! over the cells (r,c) of D."""
    out = 1
    for (_r, c) in cells:
        out *= factorial(c)
    return out


@dataclass(frozen=True)
class TableauMonomials:
    """The column monomial Y_T, row monomial X_T and their product Z_T."""

    y: Monomial
    x: Monomial
    z: Monomial


def tableau_monomials(t: Tableau) -> TableauMonomials:
    n = t.n
    xe = [0] * (2 * n)
    ye = [0] * (2 * n)
    for (r, c), v in t.entries.items():
        xe[v - 1] = r
        ye[n + v - 1] = c
    x, y = tuple(xe), tuple(ye)
    return TableauMonomials(y=y, x=x, z=monomial_mul(x, y))


def y_monomial_poly(t: Tableau) -> Polynomial:
    """Y_T as a polynomial, suitable as a differential operator."""
    return Polynomial.monomial(t.n, tableau_monomials(t).y)


def z_monomial_poly(t: Tableau) -> Polynomial:
    return Polynomial.monomial(t.n, tableau_monomials(t).z)


def garnir(t: Tableau) -> Polynomial:
    """The Garnir polynomial: product over columns of generalized Vandermondes.

    Each column with entries m_1 < ... < m_k and heights h(m_i) contributes
    det |x_{m}^{h(l)}| with rows and columns indexed by the sorted entries.
    """
    n = t.n
    p = Polynomial.constant(n, 1)
    for _col, members in sorted(t.column_entries().items()):
        k = len(members)
        entries = []
        for m in members:
            row = []
            for l in members:
                e = [0] * (2 * n)
                e[m - 1] = t.height(l)
                row.append(tuple(e))
            entries.append(row)
        p = p * det_monomial_matrix(entries, n)
    return p


def dY_applied_to_delta(t: Tableau, cells: Diagram) -> Polynomial:
    """Apply the operator dY_T to the lattice determinant of the diagram."""
    cells = tuple(sorted(cells))
    if t.n != len(cells):
        raise ValueError("tableau and diagram sizes differ")
    return apply_diff_operator(y_monomial_poly(t), lattice_delta(cells))
