"""The explicit tableau bases and the D_X ladder between them.

Derivative orders are always bounded strictly by the alpha statistic
(0 <= m_i < alpha_T(i)); the weak bound printed in one place of the source
material overcounts and already produces dependent sets for (2,1), which is
pinned by a regression test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial

from .determinants import garnir, lattice_delta
from .polynomials import Polynomial, RowSpace, format_polynomial
from .shapes import (
    Tableau,
    alpha_corner,
    alpha_vector,
    check_partition,
    corners,
    diagram_of,
    partition_factorial,
    puncture,
    removable_partitions,
    shadow_corner_indices,
    slide_up,
    standard_tableaux,
)


@dataclass
class BasisElement:
    """One basis polynomial: a mixed X-derivative of a Garnir polynomial."""

    tableau: Tableau
    orders: tuple[int, ...]
    source_tableau: Tableau | None = None
    _poly: Polynomial | None = field(default=None, repr=False, compare=False)

    @property
    def polynomial(self) -> Polynomial:
        if self._poly is None:
            p = garnir(self.tableau)
            for i, k in enumerate(self.orders):
                if k:
                    p = p.dx(i + 1, k)
            self._poly = p
        return self._poly

    def __repr__(self):
        return f"BasisElement({self.tableau!r}, orders={self.orders})"


@dataclass
class BasisFamily:
    """A labelled list of basis elements with rank/span verification helpers."""

    label: str
    params: dict
    elements: list[BasisElement]

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    def polynomials(self) -> list[Polynomial]:
        return [e.polynomial for e in self.elements]

    def rowspace(self, num_vars: int | None = None) -> RowSpace:
        n = num_vars if num_vars is not None else self.elements[0].tableau.n
        space = RowSpace(n)
        for e in self.elements:
            space.insert(e.polynomial)
        return space

    def rank(self) -> int:
        return self.rowspace().rank

    def __repr__(self):
        return f"BasisFamily({self.label}, {self.params}, size={self.cardinality})"


def _delta_n_tableau(n: int) -> Tableau:
    """The unique standard single-column tableau on n letters."""
    return Tableau.from_rows([[k] for k in range(1, n + 1)])


def artin_basis(n: int) -> BasisFamily:
    """B_n: the n! derivatives d_X^a Delta_n with a_i < i."""
    t = _delta_n_tableau(n)
    elements = [
        BasisElement(t, m)
        for m in product(*[range(i) for i in range(1, n + 1)])
    ]
    return BasisFamily("B_n", {"n": n}, elements)


def _elements_for_tableau(t: Tableau, garnir_tableau: Tableau | None = None):
    """All derivative orders 0 <= m_i < alpha_T(i) for one standard tableau."""
    av = alpha_vector(t)
    gt = garnir_tableau if garnir_tableau is not None else t
    return [
        BasisElement(gt, m, source_tableau=t if garnir_tableau is not None else None)
        for m in product(*[range(a) for a in av])
    ]


def basis_B_mu(mu) -> BasisFamily:
    """The standard-tableau basis of M^0_mu (cardinality n!/mu!)."""
    mu = check_partition(mu)
    elements = []
    for t in standard_tableaux(diagram_of(mu)):
        elements.extend(_elements_for_tableau(t))
    return BasisFamily("B_mu", {"mu": mu}, elements)


def predicted_cardinality_B_mu(mu) -> int:
    return factorial(sum(mu)) // partition_factorial(mu)


def set_A_uv(mu, ell: int, u: int) -> BasisFamily:
    """A_{u,v}: slid-tableau derivatives for corner ell of mu (v = b_ell)."""
    mu = check_partition(mu)
    cs = corners(mu)
    if not 0 <= ell < len(cs):
        raise ValueError(f"corner index {ell} out of range for {mu}")
    a_ell, b_ell = cs[ell]
    if not 0 <= u <= a_ell:
        raise ValueError(f"u={u} out of range 0..{a_ell}")
    nu = removable_partitions(mu)[ell]
    elements = []
    for t in standard_tableaux(diagram_of(nu)) if nu else [Tableau((), {})]:
        slid = slide_up(t, u, b_ell)
        elements.extend(_elements_for_tableau(t, garnir_tableau=slid))
    return BasisFamily(
        "A_uv", {"mu": mu, "corner": (a_ell, b_ell), "u": u, "v": b_ell}, elements
    )


def d_mu_ij(mu, i: int, j: int) -> int:
    """The predicted dimension of M^0_{mu/ij} (hole-row weighted count)."""
    mu = check_partition(mu)
    if (i, j) not in diagram_of(mu):
        raise ValueError(f"hole ({i},{j}) outside {mu}")
    n = sum(mu) - 1
    total = factorial(n) * sum(mu[r] for r in range(i, len(mu)) if mu[r] > j)
    # n!/mu! alone need not be integral for mu of n+1; the product always is
    quotient, rem = divmod(total, partition_factorial(mu))
    assert rem == 0, (mu, i, j)
    return quotient


def d_mu_ij_shadow_form(mu, i: int, j: int) -> int:
    """The equivalent shadow-row-interval form of the dimension formula."""
    mu = check_partition(mu)
    if (i, j) not in diagram_of(mu):
        raise ValueError(f"hole ({i},{j}) outside {mu}")
    n = sum(mu) - 1
    top = max(r for r in range(len(mu)) if mu[r] > j)
    total = factorial(n) * sum(mu[r] for r in range(i, top + 1))
    quotient, rem = divmod(total, partition_factorial(mu))
    assert rem == 0, (mu, i, j)
    return quotient


def basis_B_mu_ij(mu, i: int, j: int) -> BasisFamily:
    """The union-of-ladders basis of M^0_{mu/ij} for mu a partition of n+1."""
    mu = check_partition(mu)
    if (i, j) not in diagram_of(mu):
        raise ValueError(f"hole ({i},{j}) outside {mu}")
    cs = corners(mu)
    elements = []
    for ell in shadow_corner_indices(mu, i, j):
        a_ell, b_ell = cs[ell]
        a = alpha_corner(mu, ell)
        for u in range(i, min(i + a - 1, a_ell) + 1):
            elements.extend(set_A_uv(mu, ell, u).elements)
    return BasisFamily("B_mu_ij", {"mu": mu, "hole": (i, j)}, elements)


def apply_DX(obj):
    """The lowering operator D_X = sum of all x-partials.

    Accepts a Polynomial (returns a Polynomial) or a BasisFamily (returns the
    list of images, zeros included, in element order).
    """
    if isinstance(obj, Polynomial):
        n = obj.num_vars
        out = Polynomial.zero(n)
        for i in range(1, n + 1):
            out = out + obj.dx(i)
        return out
    if isinstance(obj, BasisFamily):
        return [apply_DX(e.polynomial) for e in obj.elements]
    raise TypeError(f"cannot apply D_X to {type(obj).__name__}")


def normalized_set(polys) -> frozenset:
    """Canonical up-to-scalar fingerprint of a set of polynomials (zeros dropped)."""
    return frozenset(
        format_polynomial(p.normalized()) for p in polys if p
    )


def equal_up_to_scalars(polys_a, polys_b) -> bool:
    return normalized_set(polys_a) == normalized_set(polys_b)


def punctured_delta(mu, i: int, j: int) -> Polynomial:
    """Delta of the punctured diagram mu/ij, over n = |mu|-1 variables."""
    return lattice_delta(puncture(mu, i, j))
