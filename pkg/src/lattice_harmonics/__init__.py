"""Exact constructions and machine verification of Y-free lattice diagram
harmonic modules, their standard-tableau bases, and the q=0 four-term
recurrence for their graded Frobenius characteristics."""

from .polynomials import (
    QQ,
    Polynomial,
    RowSpace,
    apply_diff_operator,
    det_monomial_matrix,
    format_polynomial,
    parse_polynomial,
)
from .shapes import (
    Tableau,
    alpha,
    alpha_corner,
    alpha_vector,
    corners,
    diagram_of,
    dominance_join,
    dominance_leq,
    dominance_meet,
    partitions_of,
    puncture,
    removable_partitions,
    shadow_corners,
    slide_up,
    standard_tableaux,
)
from .determinants import (
    dY_applied_to_delta,
    gamma,
    garnir,
    lattice_delta,
    tableau_monomials,
    vandermonde,
)
from .spans import (
    GradedSpace,
    SpanCache,
    derivative_closure,
    garnir_span,
    hilbert_series,
    nesting_check,
    y_free_component,
    y_free_space,
)
from .bases import (
    BasisElement,
    BasisFamily,
    apply_DX,
    artin_basis,
    basis_B_mu,
    basis_B_mu_ij,
    d_mu_ij,
    set_A_uv,
)
from .symfunc import (
    CharacterTable,
    SymFunc,
    TPoly,
    charge,
    graded_frobenius,
    hall_littlewood_H,
    kostka_foulkes,
    mn_character,
    recurrence_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
