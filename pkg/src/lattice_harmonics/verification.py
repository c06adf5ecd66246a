"""Theorem-verification sweeps shared by the CLI and the acceptance suite.

Each sweep returns one report dict per case with an "ok" flag; reports are
deterministic and independent of the parallelism degree.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from math import factorial

from .bases import (
    apply_DX,
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
from .determinants import dY_applied_to_delta, garnir, gamma, lattice_delta, \
    tableau_monomials, z_monomial_poly
from .polynomials import Polynomial, apply_diff_operator
from .shapes import (
    Tableau,
    alpha_corner,
    corners,
    diagram_of,
    partition_factorial,
    partitions_of,
    puncture,
    standard_tableaux,
)
from .spans import garnir_span, nesting_check, y_free_space

YFREE_ORACLE_CELL_BUDGET = 7


# -- basis-mu ---------------------------------------------------------------

def _cases_basis_mu(max_n: int, span_max: int = 5):
    for n in range(1, max_n + 1):
        for mu in partitions_of(n):
            yield (mu, n <= span_max)


def _run_basis_mu_case(args) -> dict:
    mu, check_span = args
    n = sum(mu)
    fam = basis_B_mu(mu)
    predicted = predicted_cardinality_B_mu(mu)
    space = fam.rowspace(num_vars=n)
    report = {
        "suite": "basis-mu",
        "case": f"mu={list(mu)}",
        "cardinality": fam.cardinality,
        "predicted": predicted,
        "rank": space.rank,
    }
    ok = fam.cardinality == predicted == space.rank
    if check_span:
        oracle = y_free_space(diagram_of(mu))
        gspan = garnir_span(mu)
        span_ok = (
            oracle.dimension == space.rank
            and gspan == oracle
            and all(oracle.contains(p) for p in fam.polynomials())
        )
        report["oracle_dim"] = oracle.dimension
        report["span_ok"] = span_ok
        ok = ok and span_ok
    report["ok"] = ok
    return report


# -- basis-mu-ij (with the D_X ladder) ---------------------------------------

def _cases_basis_mu_ij(max_weight: int, full_max: int = 5):
    for w in range(2, max_weight + 1):
        for mu in partitions_of(w):
            for (i, j) in diagram_of(mu):
                yield (mu, i, j, w <= full_max)


def _run_basis_mu_ij_case(args) -> dict:
    mu, i, j, full = args
    fam = basis_B_mu_ij(mu, i, j)
    d = d_mu_ij(mu, i, j)
    report = {
        "suite": "basis-mu-ij",
        "case": f"mu={list(mu)} hole=({i},{j})",
        "cardinality": fam.cardinality,
        "d_formula": d,
        "formula_forms_agree": d == d_mu_ij_shadow_form(mu, i, j),
    }
    ok = fam.cardinality == d and report["formula_forms_agree"]
    cells = puncture(mu, i, j)
    if full and len(cells) <= YFREE_ORACLE_CELL_BUDGET:
        space = fam.rowspace(num_vars=sum(mu) - 1)
        oracle = y_free_space(cells)
        report["rank"] = space.rank
        report["oracle_dim"] = oracle.dimension
        span_ok = space.rank == d == oracle.dimension and all(
            oracle.contains(p) for p in fam.polynomials()
        )
        report["span_ok"] = span_ok
        ok = ok and span_ok
        ladder = _check_ladder(mu, i, j)
        report["ladder_ok"] = ladder
        ok = ok and ladder
    report["ok"] = ok
    return report


def _check_ladder(mu, i: int, j: int) -> bool:
    """The three D_X ladder identities at one hole."""
    # D_X on the punctured determinant moves the hole one row up
    delta = punctured_delta(mu, i, j)
    image = apply_DX(delta)
    if (i + 1, j) in diagram_of(mu):
        if image.normalized() != punctured_delta(mu, i + 1, j).normalized():
            return False
    else:
        if image:
            return False
    # D_X A_{u,b} = A_{u+1,b} up to scalars, and kills the top rung
    for ell, (a_ell, _b_ell) in enumerate(corners(mu)):
        for u in range(a_ell + 1):
            fam = set_A_uv(mu, ell, u)
            images = apply_DX(fam)
            if u < a_ell:
                target = set_A_uv(mu, ell, u + 1)
                if not equal_up_to_scalars(images, target.polynomials()):
                    return False
            else:
                if any(p for p in images):
                    return False
    # D_X B_{mu/i,j} = B_{mu/i+1,j} up to scalars (zeros dropped)
    if (i + 1, j) in diagram_of(mu):
        images = apply_DX(basis_B_mu_ij(mu, i, j))
        target = basis_B_mu_ij(mu, i + 1, j)
        if not equal_up_to_scalars(images, target.polynomials()):
            return False
    return True


# -- recurrence ---------------------------------------------------------------

def _cases_recurrence(max_weight: int, _unused: int = 0):
    for w in range(1, max_weight + 1):
        for mu in partitions_of(w):
            for (i, j) in diagram_of(mu):
                yield (mu, i, j)


def _run_recurrence_case(args) -> dict:
    from .symfunc import recurrence_check

    mu, i, j = args
    report = recurrence_check(mu, i, j)
    report["suite"] = "recurrence"
    report["case"] = f"mu={list(mu)} hole=({i},{j})"
    return report


# -- nesting -------------------------------------------------------------------

# The punctured nesting claim (inclusion and intersection at a common hole) is
# false in general: exact span computation refutes it at the hole cases below,
# all found by exhaustive sweep over partitions of weight <= 6.  The hole-free
# claims hold everywhere.  The suite asserts exact agreement with this list,
# so it fails both if a listed case unexpectedly holds and if a new
# counterexample appears.
PUNCTURED_NESTING_ERRATA = frozenset({
    ((2, 2), (2, 1, 1), (0, 1)),
    ((3, 2), (3, 1, 1), (0, 1)),
    ((3, 2), (2, 1, 1, 1), (0, 1)),
    ((2, 2, 1), (2, 1, 1, 1), (0, 1)),
    ((4, 2), (4, 1, 1), (0, 1)),
    ((4, 2), (3, 1, 1, 1), (0, 1)),
    ((4, 2), (2, 1, 1, 1, 1), (0, 1)),
    ((4, 1, 1), (3, 3), (0, 1)),
    ((3, 3), (3, 2, 1), (0, 2)),
    ((3, 3), (3, 1, 1, 1), (0, 1)),
    ((3, 3), (3, 1, 1, 1), (0, 2)),
    ((3, 3), (2, 1, 1, 1, 1), (0, 1)),
    ((3, 2, 1), (3, 1, 1, 1), (0, 1)),
    ((3, 2, 1), (2, 1, 1, 1, 1), (0, 1)),
    ((3, 1, 1, 1), (2, 2, 2), (0, 1)),
    ((3, 1, 1, 1), (2, 2, 2), (2, 0)),
    ((2, 2, 2), (2, 2, 1, 1), (0, 1)),
    ((2, 2, 2), (2, 2, 1, 1), (1, 1)),
    ((2, 2, 2), (2, 1, 1, 1, 1), (0, 1)),
    ((2, 2, 1, 1), (2, 1, 1, 1, 1), (0, 1)),
})


def is_known_nesting_erratum(mu, lam, hole) -> bool:
    if hole is None:
        return False
    key = (tuple(mu), tuple(lam), tuple(hole))
    alt = (tuple(lam), tuple(mu), tuple(hole))
    return key in PUNCTURED_NESTING_ERRATA or alt in PUNCTURED_NESTING_ERRATA


def _cases_nesting(max_n: int, _unused: int = 0):
    for n in range(1, max_n + 1):
        parts = partitions_of(n)
        for a in range(len(parts)):
            for b in range(a, len(parts)):
                mu, lam = parts[a], parts[b]
                yield (mu, lam, None)
                common = sorted(set(diagram_of(mu)) & set(diagram_of(lam)))
                for hole in common:
                    if sum(mu) > 1:  # puncturing a 1-cell shape empties it
                        yield (mu, lam, hole)


def _run_nesting_case(args) -> dict:
    mu, lam, hole = args
    report = nesting_check(mu, lam, hole)
    if is_known_nesting_erratum(mu, lam, hole):
        # identities must fail exactly where the frozen counterexample list
        # says they do
        report["known_erratum"] = True
        report["ok"] = not report["ok"]
    report["suite"] = "nesting"
    report["case"] = (
        f"mu={list(mu)} lambda={list(lam)}"
        + (f" hole=({hole[0]},{hole[1]})" if hole else "")
    )
    return report


# -- lemmas ---------------------------------------------------------------------

def _cases_lemmas(max_n: int, pairwise_max: int = 4):
    # the rearrangement lemma quantifies over all (n!)^2 injective tableau
    # pairs, so its range is capped separately from the Garnir statement
    for n in range(1, min(max_n, pairwise_max) + 1):
        for mu in partitions_of(n):
            yield ("rearrangement", mu)
    for n in range(1, max_n + 1):
        for mu in partitions_of(n):
            for lam in partitions_of(n):
                yield ("garnir-scaling", mu, lam)


def _injective_tableaux(cells):
    cells = tuple(sorted(cells))
    n = len(cells)
    for perm in permutations(range(1, n + 1)):
        yield Tableau(cells, dict(zip(cells, perm)))


def _run_lemma_case(args) -> dict:
    if args[0] == "rearrangement":
        return _run_rearrangement(args[1])
    return _run_garnir_scaling(args[1], args[2])


def _run_rearrangement(mu) -> dict:
    """dY_T Z_R = gamma_D X_R exactly for column-fixing rearrangements, else 0."""
    cells = diagram_of(mu)
    n = len(cells)
    g = gamma(cells)
    ok = True
    tabs = list(_injective_tableaux(cells))
    for t in tabs:
        op = Polynomial.monomial(n, tableau_monomials(t).y)
        for r in tabs:
            result = apply_diff_operator(op, z_monomial_poly(r))
            if t.column_sets() == r.column_sets():
                expected = Polynomial.monomial(n, tableau_monomials(r).x, g)
            else:
                expected = Polynomial.zero(n)
            if result != expected:
                ok = False
    return {
        "suite": "lemmas",
        "case": f"rearrangement mu={list(mu)}",
        "pairs": len(tabs) ** 2,
        "ok": ok,
    }


def _run_garnir_scaling(mu, lam) -> dict:
    """dY_T Delta_mu is +-gamma Delta_T on matching column profiles, else Y-positive."""
    cells = diagram_of(mu)
    g = gamma(cells)
    ok = True
    signs = []
    matching = mu == lam  # partition diagrams share column profiles iff equal
    for t in standard_tableaux(diagram_of(lam)):
        result = dY_applied_to_delta(t, cells)
        if matching:
            target = garnir(t) * g
            if result == target:
                signs.append(1)
            elif result == -target:
                signs.append(-1)
            else:
                ok = False
        else:
            if result.y_free_part():
                ok = False
    return {
        "suite": "lemmas",
        "case": f"garnir-scaling D={list(mu)} shape(T)={list(lam)}",
        "signs": signs,
        "ok": ok,
    }


# -- driver ----------------------------------------------------------------------

SUITES = {
    "basis-mu": (_cases_basis_mu, _run_basis_mu_case, 6),
    "basis-mu-ij": (_cases_basis_mu_ij, _run_basis_mu_ij_case, 5),
    "recurrence": (_cases_recurrence, _run_recurrence_case, 4),
    "nesting": (_cases_nesting, _run_nesting_case, 5),
    "lemmas": (_cases_lemmas, _run_lemma_case, 5),
}


def run_suite(name: str, max_n: int | None = None, jobs: int = 1) -> list[dict]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    gen, runner, default_n = SUITES[name]
    cases = list(gen(max_n if max_n is not None else default_n))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(runner, cases))
    return [runner(c) for c in cases]
