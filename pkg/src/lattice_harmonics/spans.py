"""Derivative-closed graded spans: the brute-force side of every theorem check.

A GradedSpace holds one reduced row-echelon RowSpace per bidegree.  The
expensive constructions (derivative closures of lattice determinants) are
memoized in-process and can optionally be persisted to a JSON-lines cache.
"""

from __future__ import annotations

import json
from math import factorial
from typing import Iterable

from .determinants import garnir, lattice_delta
from .polynomials import Polynomial, RowSpace
from .shapes import Diagram, diagram_key, diagram_of, dominance_join, dominance_leq, \
    puncture, standard_tableaux


class GradedSpace:
    """Bigraded span with one RowSpace per bidegree (r, s)."""

    def __init__(self, num_vars: int, provenance: str = ""):
        self.num_vars = num_vars
        self.provenance = provenance
        self.pieces: dict[tuple[int, int], RowSpace] = {}

    def insert(self, p: Polynomial) -> bool:
        if not p:
            return False
        bideg = p.bidegree()
        if bideg is None:
            raise ValueError("graded spaces hold bihomogeneous polynomials")
        piece = self.pieces.get(bideg)
        if piece is None:
            piece = self.pieces[bideg] = RowSpace(self.num_vars)
        return piece.insert(p)

    def contains(self, p: Polynomial) -> bool:
        if not p:
            return True
        n = self.num_vars
        components: dict[tuple[int, int], dict] = {}
        for m, c in p.terms.items():
            components.setdefault((sum(m[:n]), sum(m[n:])), {})[m] = c
        for bideg, terms in components.items():
            piece = self.pieces.get(bideg)
            if piece is None or not piece.contains(Polynomial(n, terms)):
                return False
        return True

    @property
    def dimension(self) -> int:
        return sum(piece.rank for piece in self.pieces.values())

    def piece_dims(self) -> dict[tuple[int, int], int]:
        return {k: v.rank for k, v in sorted(self.pieces.items()) if v.rank}

    def is_y_free(self) -> bool:
        return all(s == 0 for (_r, s) in self.piece_dims())

    def hilbert_series(self) -> list[int]:
        """Coefficients of the Hilbert series in t, graded by X-degree."""
        dims = self.piece_dims()
        if not dims:
            return [0]
        if any(s != 0 for (_r, s) in dims):
            raise ValueError("Hilbert series in t is defined for Y-free spaces")
        top = max(r for (r, _s) in dims)
        return [dims.get((r, 0), 0) for r in range(top + 1)]

    def is_subspace_of(self, other: "GradedSpace") -> bool:
        for bideg, piece in self.pieces.items():
            if not piece.rank:
                continue
            opiece = other.pieces.get(bideg)
            if opiece is None or not piece.is_subspace_of(opiece):
                return False
        return True

    def intersection(self, other: "GradedSpace") -> "GradedSpace":
        out = GradedSpace(
            self.num_vars,
            provenance=f"intersection({self.provenance}; {other.provenance})",
        )
        for bideg, piece in self.pieces.items():
            opiece = other.pieces.get(bideg)
            if opiece is None or not piece.rank or not opiece.rank:
                continue
            meet = piece.intersection(opiece)
            if meet.rank:
                out.pieces[bideg] = meet
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSpace) or self.num_vars != other.num_vars:
            return NotImplemented if not isinstance(other, GradedSpace) else False
        mine = {k: v for k, v in self.pieces.items() if v.rank}
        theirs = {k: v for k, v in other.pieces.items() if v.rank}
        return mine == theirs

    def __repr__(self):
        return (
            f"GradedSpace(num_vars={self.num_vars}, dim={self.dimension},"
            f" provenance={self.provenance!r})"
        )


def derivative_closure(
    generators: Iterable[Polynomial],
    variables: str = "xy",
    provenance: str = "derivative closure",
) -> GradedSpace:
    """Smallest derivative-closed graded span containing the generators.

    variables: "xy" closes under all 2n partials, "x" under the x-partials
    only (used for the Y-free slices).
    """
    generators = [g for g in generators if g]
    if not generators:
        raise ValueError("need at least one nonzero generator")
    n = generators[0].num_vars
    if variables == "xy":
        var_indices = range(2 * n)
    elif variables == "x":
        var_indices = range(n)
    else:
        raise ValueError("variables must be 'x' or 'xy'")
    space = GradedSpace(n, provenance=provenance)
    stack = []
    for g in generators:
        if space.insert(g):
            stack.append(g)
    while stack:
        p = stack.pop()
        for v in var_indices:
            d = p.derivative(v)
            if d and space.insert(d):
                stack.append(d)
    return space


def y_free_component(delta: Polynomial, provenance: str = "") -> GradedSpace:
    """The Y-free component of the derivative closure of a lattice determinant.

    Every Y-free derivative of delta is an X-derivative of some full-Y-degree
    partial dY^b(delta), so it suffices to extract, for each Y-monomial, the
    X-polynomial it multiplies and close under X-derivatives.
    """
    n = delta.num_vars
    if not delta:
        raise ValueError("zero polynomial has no derivative span")
    groups: dict[tuple, dict] = {}
    for m, c in delta.terms.items():
        groups.setdefault(m[n:], {})[m[:n] + (0,) * n] = c
    generators = []
    for yexp, xterms in groups.items():
        f = 1
        for e in yexp:
            f *= factorial(e)
        generators.append(Polynomial(n, {m: c * f for m, c in xterms.items()}))
    return derivative_closure(
        generators, variables="x", provenance=provenance or "y-free component"
    )


def garnir_span(mu) -> GradedSpace:
    """X-derivative closure of the standard-tableau Garnir polynomials of mu."""
    gens = [garnir(t) for t in standard_tableaux(diagram_of(mu))]
    return derivative_closure(
        gens, variables="x", provenance=f"garnir span of {mu}"
    )


def hilbert_series(space: GradedSpace) -> list[int]:
    return space.hilbert_series()


# -- memoized oracle ----------------------------------------------------

_YFREE_MEMO: dict[str, GradedSpace] = {}


def y_free_space(cells: Diagram) -> GradedSpace:
    """Memoized Y-free component of the lattice determinant of a diagram."""
    key = diagram_key(cells)
    space = _YFREE_MEMO.get(key)
    if space is None:
        space = y_free_component(
            lattice_delta(cells), provenance=f"M^0 of {key}"
        )
        _YFREE_MEMO[key] = space
    return space


def y_free_hilbert(cells: Diagram, cache: "SpanCache | None" = None) -> list[int]:
    key = diagram_key(cells)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit[0]
    hs = y_free_space(cells).hilbert_series()
    if cache is not None:
        cache.put(key, hs)
    return hs


class SpanCache:
    """JSON-lines cache of (diagram -> Hilbert series) oracle results."""

    def __init__(self, path):
        self.path = str(path)
        self.records: dict[str, list[int]] = {}
        try:
            with open(self.path) as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self.records[rec["diagram"]] = [int(v) for v in rec["hilbert"]]
        except FileNotFoundError:
            pass

    def get(self, key: str) -> tuple[list[int], int] | None:
        hs = self.records.get(key)
        if hs is None:
            return None
        return hs, sum(hs)

    def put(self, key: str, hilbert: list[int]):
        if key in self.records:
            return
        self.records[key] = list(hilbert)
        with open(self.path, "a") as fh:
            fh.write(
                json.dumps(
                    {"diagram": key, "hilbert": list(hilbert), "dim": sum(hilbert)}
                )
                + "\n"
            )


def nesting_check(mu, lam, hole: tuple[int, int] | None = None) -> dict:
    """Verify the dominance nesting and intersection identities on spans.

    The Y-free modules shrink as the shape grows in dominance order: if
    mu <= lambda (partial-sum comparison) then M^0 of lambda sits inside M^0
    of mu. Consequently the intersection of two such modules is the module of
    the dominance join (least upper bound), which contains every common cell
    of the two shapes, so the punctured variant of the identity makes sense.
    """
    mu, lam = tuple(mu), tuple(lam)
    wedge = dominance_join(mu, lam)
    if hole is None:
        dia_mu, dia_lam = diagram_of(mu), diagram_of(lam)
        dia_wedge = diagram_of(wedge)
    else:
        i, j = hole
        dia_mu, dia_lam = puncture(mu, i, j), puncture(lam, i, j)
        dia_wedge = puncture(wedge, i, j)
    s_mu, s_lam = y_free_space(dia_mu), y_free_space(dia_lam)
    s_wedge = y_free_space(dia_wedge)
    report = {
        "mu": list(mu),
        "lambda": list(lam),
        "hole": list(hole) if hole is not None else None,
        "dim_mu": s_mu.dimension,
        "dim_lambda": s_lam.dimension,
        "join": list(wedge),
        "dim_join": s_wedge.dimension,
    }
    comparable = dominance_leq(mu, lam) or dominance_leq(lam, mu)
    report["comparable"] = comparable
    if comparable:
        big, small = (s_mu, s_lam) if dominance_leq(mu, lam) else (s_lam, s_mu)
        report["subset_ok"] = small.is_subspace_of(big)
    else:
        report["subset_ok"] = None
    inter = s_mu.intersection(s_lam)
    report["dim_intersection"] = inter.dimension
    report["intersection_ok"] = inter == s_wedge
    report["ok"] = report["intersection_ok"] and report["subset_ok"] is not False
    return report
