"""Acceptance gate: the nine top-level criteria, one printed line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
PASS/FAIL lines.  Every check is exact; no tolerances anywhere.
"""

import random
import time
from fractions import Fraction
from math import factorial

from lattice_harmonics.bases import basis_B_mu_ij, d_mu_ij
from lattice_harmonics.polynomials import Polynomial, RowSpace
from lattice_harmonics.shapes import diagram_of, partition_factorial, partitions_of
from lattice_harmonics.spans import y_free_space
from lattice_harmonics.symfunc import (
    class_size_denominator,
    graded_frobenius,
    hall_littlewood_H,
    mn_character,
)
from lattice_harmonics.verification import _check_ladder, run_suite

SEED = 20260823


def report(number, ok, detail, started):
    elapsed = time.time() - started
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {status}: {detail} ({elapsed:.1f}s)")
    assert ok, f"criterion {number} failed: {detail}"


def test_criterion_1_brute_force_dimension_formula():
    started = time.time()
    ok = True
    for n in range(1, 7):
        for mu in partitions_of(n):
            dim = y_free_space(diagram_of(mu)).dimension
            if dim != factorial(n) // partition_factorial(mu):
                ok = False
    report(1, ok and time.time() - started < 300,
           "brute-force dim of the Y-free module equals n!/mu! for all "
           "mu of n <= 6, under five minutes", started)


def test_criterion_2_standard_tableau_basis():
    started = time.time()
    reports = run_suite("basis-mu", max_n=6)
    ok = all(r["ok"] for r in reports)
    report(2, ok,
           f"B_mu independence and cardinality for n <= 6, span equality "
           f"for n <= 5 ({len(reports)} shapes)", started)


def test_criterion_3_punctured_basis_dimension():
    started = time.time()
    reports = run_suite("basis-mu-ij", max_n=5)
    ok = all(r["ok"] for r in reports)
    count = 0
    for w in range(6, 8):
        for mu in partitions_of(w):
            for (i, j) in diagram_of(mu):
                count += 1
                if basis_B_mu_ij(mu, i, j).cardinality != d_mu_ij(mu, i, j):
                    ok = False
    report(3, ok,
           f"rank(B_mu/ij) = d_mu/ij = brute-force dim for weight <= 5 "
           f"({len(reports)} holes), cardinality formula through weight 7 "
           f"({count} more holes)", started)


def test_criterion_4_recurrence():
    started = time.time()
    reports = run_suite("recurrence", max_n=5)
    ok = all(r["ok"] for r in reports)
    report(4, ok,
           f"q=0 four-term recurrence (corrected a=0 case) at every hole "
           f"of every shape of weight <= 5 ({len(reports)} holes)", started)


def test_criterion_5_hall_littlewood():
    started = time.time()
    # calibration shapes first, then the full sweep
    ok = all(
        graded_frobenius(y_free_space(diagram_of(mu))) == hall_littlewood_H(mu)
        for n in (2, 3) for mu in partitions_of(n)
    )
    cases = 0
    for n in range(1, 6):
        for mu in partitions_of(n):
            cases += 1
            if graded_frobenius(y_free_space(diagram_of(mu))) != \
                    hall_littlewood_H(mu):
                ok = False
    report(5, ok,
           f"graded Frobenius equals the cocharge Hall-Littlewood expansion "
           f"for all mu of n <= 5 ({cases} shapes)", started)


def test_criterion_6_lemmas():
    started = time.time()
    reports = run_suite("lemmas", max_n=5)
    ok = all(r["ok"] for r in reports)
    pairs = sum(r.get("pairs", 0) for r in reports)
    report(6, ok,
           f"rearrangement lemma exhaustive to 4 cells ({pairs} tableau "
           f"pairs) and the Garnir derivative identity for weight <= 5",
           started)


def test_criterion_7_dx_ladder():
    started = time.time()
    ok = True
    holes = 0
    for w in range(2, 6):
        for mu in partitions_of(w):
            for (i, j) in diagram_of(mu):
                holes += 1
                if not _check_ladder(mu, i, j):
                    ok = False
    report(7, ok,
           f"D_X ladder: hole moves up on determinants, A-sets map rung to "
           f"rung, top rungs die, B-sets map hole row up ({holes} holes)",
           started)


def test_criterion_8_nesting():
    started = time.time()
    reports = run_suite("nesting", max_n=5)
    ok = all(r["ok"] for r in reports)
    errata = sum(1 for r in reports if r.get("known_erratum"))
    report(8, ok,
           f"dominance nesting and join-intersection identities for all "
           f"pairs of weight <= 5 with and without common holes "
           f"({len(reports)} cases; the punctured inclusion fails exactly "
           f"on the {errata} frozen counterexample holes)", started)


# -- criterion 9: randomized property suites ------------------------------


def _random_poly(rng, num_vars=2, max_terms=4, max_exp=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = tuple(rng.randint(0, max_exp) for _ in range(2 * num_vars))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if c:
            terms[m] = terms.get(m, 0) + c
    return Polynomial(num_vars, terms)


def _suite_leibniz(rng):
    p, q = _random_poly(rng), _random_poly(rng)
    v = rng.randrange(4)
    return (p * q).derivative(v) == \
        p.derivative(v) * q + p * q.derivative(v)


def _suite_mixed_partials(rng):
    p = _random_poly(rng)
    u, v = rng.randrange(4), rng.randrange(4)
    return p.derivative(u).derivative(v) == p.derivative(v).derivative(u)


def _suite_rank_order(rng):
    polys = [_random_poly(rng) for _ in range(rng.randint(1, 5))]
    a = RowSpace(2)
    for p in polys:
        a.insert(p)
    rng.shuffle(polys)
    b = RowSpace(2)
    for p in polys:
        b.insert(p)
    return a.rank == b.rank and a == b


_SPACE_POOL = [
    (mu, y_free_space(diagram_of(mu)))
    for n in range(2, 5)
    for mu in partitions_of(n)
]


def _suite_sn_invariance(rng):
    mu, space = _SPACE_POOL[rng.randrange(len(_SPACE_POOL))]
    n = sum(mu)
    sigma = list(range(1, n + 1))
    rng.shuffle(sigma)
    pieces = [p for p in space.pieces.values() if p.rank]
    piece = pieces[rng.randrange(len(pieces))]
    member = Polynomial.zero(n)
    for row in piece.polynomials():
        member = member + row * Fraction(rng.randint(-3, 3))
    return space.contains(member.permuted(tuple(sigma)))


def _suite_orthogonality(rng):
    n = rng.randint(2, 7)
    parts = partitions_of(n)
    lam = parts[rng.randrange(len(parts))]
    kappa = parts[rng.randrange(len(parts))]
    total = Fraction(0)
    for rho in parts:
        total += Fraction(
            mn_character(lam, rho) * mn_character(kappa, rho),
            class_size_denominator(rho),
        )
    return total == (1 if lam == kappa else 0)


def test_criterion_9_property_suites():
    started = time.time()
    suites = {
        "leibniz": _suite_leibniz,
        "mixed-partials": _suite_mixed_partials,
        "rank-order-independence": _suite_rank_order,
        "sn-invariance": _suite_sn_invariance,
        "character-orthogonality": _suite_orthogonality,
    }
    ok = True
    for name, check in suites.items():
        rng = random.Random(SEED)
        failures = sum(1 for _ in range(1000) if not check(rng))
        if failures:
            ok = False
            print(f"  property suite {name}: {failures}/1000 failures")
    report(9, ok,
           f"five property suites x 1000 random cases each, seed {SEED}",
           started)
