"""Symmetric-function layer: characters, graded Frobenius characteristics,
Kostka-Foulkes polynomials and the q=0 four-term recurrence verifier.

Frobenius coefficients and Kostka-Foulkes polynomials are polynomials in t
with integer coefficients, held exactly in TPoly.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .polynomials import QQ, Polynomial, RowSpace
from .shapes import (
    check_partition,
    conjugate,
    corners,
    diagram_of,
    partitions_of,
    puncture,
    removable_partitions,
)
from .spans import GradedSpace, garnir_span, y_free_space


class TPoly:
    """Polynomial in t with exact integer coefficients (trailing zeros trimmed)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "TPoly":
        return cls()

    @classmethod
    def one(cls) -> "TPoly":
        return cls((1,))

    @classmethod
    def t_power(cls, k: int, coeff: int = 1) -> "TPoly":
        return cls((0,) * k + (coeff,))

    @classmethod
    def geometric(cls, top: int) -> "TPoly":
        """1 + t + ... + t^top."""
        return cls((1,) * (top + 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "TPoly") -> "TPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return TPoly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __neg__(self) -> "TPoly":
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TPoly([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def reversed_to_degree(self, n: int) -> "TPoly":
        """t^n * self(1/t): coefficient reversal within degree n."""
        if self.coeffs and self.degree() > n:
            raise ValueError("degree exceeds reversal bound")
        out = [0] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return TPoly(out)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                tc = "t" if i == 1 else f"t^{i}"
                parts.append(tc if c == 1 else f"{c}*{tc}")
        return " + ".join(parts)


class SymFunc:
    """Symmetric function in the Schur basis, coefficients in TPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {
            lam: c for lam, c in (terms or {}).items() if not c.is_zero()
        }

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def schur(cls, lam, coeff: TPoly | None = None) -> "SymFunc":
        return cls({tuple(lam): coeff if coeff is not None else TPoly.one()})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "SymFunc") -> "SymFunc":
        t = dict(self.terms)
        for lam, c in other.terms.items():
            t[lam] = t.get(lam, TPoly.zero()) + c
        return SymFunc(t)

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + other.scaled(TPoly((-1,)))

    def scaled(self, f: TPoly) -> "SymFunc":
        return SymFunc({lam: c * f for lam, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SymFunc) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def dimension_series(self) -> TPoly:
        """Sum over lambda of f^lambda times the coefficient: the Hilbert series."""
        out = TPoly.zero()
        for lam, c in self.terms.items():
            out = out + c * irrep_dimension(lam)
        return out

    def to_json(self) -> dict:
        return {
            "basis": "schur",
            "terms": [
                {"lambda": list(lam), "t_coeffs": list(self.terms[lam].coeffs)}
                for lam in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymFunc":
        if data.get("basis") != "schur":
            raise ValueError("expected a schur-basis symmetric function")
        return cls(
            {
                tuple(rec["lambda"]): TPoly(rec["t_coeffs"])
                for rec in data["terms"]
            }
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, reverse=True):
            bits.append(f"({self.terms[lam]!r})*s{list(lam)}")
        return " + ".join(bits)


# -- characters ----------------------------------------------------------

@lru_cache(maxsize=None)
def mn_character(lam: tuple, rho: tuple) -> int:
    """chi^lam(rho) by border-strip (rim hook) recursion on beta numbers."""
    lam, rho = tuple(lam), tuple(rho)
    if sum(lam) != sum(rho):
        raise ValueError("character requires partitions of equal weight")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        crossings = sum(1 for x in beta if nb < x < b)
        new_beta = sorted(beta_set - {b} | {nb}, reverse=True)
        new_lam = tuple(
            v
            for v in (new_beta[i] - (k - 1 - i) for i in range(k))
            if v
        )
        total += (-1) ** crossings * mn_character(new_lam, rest)
    return total


@lru_cache(maxsize=None)
def irrep_dimension(lam: tuple) -> int:
    """f^lambda via the hook length formula."""
    lam = tuple(lam)
    n = sum(lam)
    conj = conjugate(lam)
    out = factorial(n)
    for r in range(len(lam)):
        for c in range(lam[r]):
            out //= (lam[r] - c) + (conj[c] - r) - 1
    return out


def class_size_denominator(rho: tuple) -> int:
    """z_rho = product over part sizes i of i^{m_i} m_i!."""
    out = 1
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    for p, m in mult.items():
        out *= p**m * factorial(m)
    return out


def representative_permutation(rho: tuple, n: int) -> tuple[int, ...]:
    """Canonical permutation of cycle type rho: cycles on consecutive blocks."""
    sigma = list(range(1, n + 1))
    start = 0
    for part in rho:
        for i in range(start, start + part - 1):
            sigma[i] = i + 2
        sigma[start + part - 1] = start + 1
        start += part
    return tuple(sigma)


class CharacterTable:
    """Exact character table of S_n with orthogonality checking."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions_of(n)

    def chi(self, lam, rho) -> int:
        return mn_character(tuple(lam), tuple(rho))

    def orthogonality_holds(self) -> bool:
        from fractions import Fraction

        for lam in self.partitions:
            for kappa in self.partitions:
                total = Fraction(0)
                for rho in self.partitions:
                    total += Fraction(
                        self.chi(lam, rho) * self.chi(kappa, rho),
                        class_size_denominator(rho),
                    )
                if total != (1 if lam == kappa else 0):
                    return False
        return True


# -- graded Frobenius ------------------------------------------------------

def _piece_trace(piece: RowSpace, sigma: tuple[int, ...], n: int):
    """Trace of the permutation action on one graded piece.

    Rows are in RREF, so coordinates of any member are read off at the
    pivot monomials; membership of each permuted row is verified exactly.
    """
    total = QQ(0)
    for piv, row in piece.rows.items():
        image = Polynomial(n, row).permuted(sigma)
        if piece._reduced(image.terms):
            raise ValueError("space is not invariant under the diagonal action")
        total += image.terms.get(piv, QQ(0))
    return total


def graded_frobenius(space: GradedSpace, n: int | None = None) -> SymFunc:
    """Schur expansion, degree by degree, of the character of a Y-free space."""
    n = space.num_vars if n is None else n
    dims = space.piece_dims()
    if any(s != 0 for (_r, s) in dims):
        raise ValueError("graded Frobenius is computed for Y-free spaces")
    degrees = sorted(r for (r, _s) in dims)
    classes = partitions_of(n)
    traces: dict[tuple, dict[int, object]] = {}
    for rho in classes:
        sigma = representative_permutation(rho, n)
        traces[rho] = {
            r: _piece_trace(space.pieces[(r, 0)], sigma, n) for r in degrees
        }
    terms = {}
    for lam in classes:
        coeffs = []
        for r in range(max(degrees) + 1 if degrees else 0):
            m = QQ(0)
            if (r, 0) in dims:
                for rho in classes:
                    m += (
                        traces[rho][r]
                        * mn_character(lam, rho)
                        / QQ(class_size_denominator(rho))
                    )
            if m.denominator != 1 or m < 0:
                raise ValueError(
                    f"non-integral or negative multiplicity {m} for {lam} at t^{r}"
                )
            coeffs.append(int(m))
        tp = TPoly(coeffs)
        if tp:
            terms[lam] = tp
    return SymFunc(terms)


# -- Kostka-Foulkes / Hall-Littlewood --------------------------------------

def charge(word) -> int:
    """Charge of a word whose content is a partition."""
    word = list(word)
    length = len(word)
    used = [False] * length
    remaining = length
    total = 0
    while remaining:
        maxval = max(w for w, u in zip(word, used) if not u)
        positions = {}
        cur = length
        for a in range(1, maxval + 1):
            found = None
            for step in range(1, length + 1):
                p = (cur - step) % length
                if not used[p] and word[p] == a:
                    found = p
                    break
            if found is None:
                raise ValueError("word content is not a partition")
            used[found] = True
            positions[a] = found
            cur = found
            remaining -= 1
        index = 0
        for a in range(2, maxval + 1):
            if positions[a] > positions[a - 1]:
                index += 1
            total += index
    return total


def _ssyt_reading_words(shape: tuple, content: tuple):
    """Reading words (rows top to bottom, left to right) of all SSYT of the
    given shape and content; columns are strict bottom-to-top."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    counts = list(content)
    filling: dict = {}

    def place(k: int):
        if k == len(cells):
            word = []
            for r in range(len(shape) - 1, -1, -1):
                word.extend(filling[(r, c)] for c in range(shape[r]))
            yield word
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, len(counts) + 1):
            if counts[v - 1] > 0:
                counts[v - 1] -= 1
                filling[(r, c)] = v
                yield from place(k + 1)
                counts[v - 1] += 1
        filling.pop((r, c), None)

    yield from place(0)


@lru_cache(maxsize=None)
def kostka_foulkes(lam: tuple, mu: tuple) -> TPoly:
    """K_{lam,mu}(t): charge generating function over SSYT(lam, mu)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("Kostka-Foulkes requires equal weights")
    coeffs: dict[int, int] = {}
    for word in _ssyt_reading_words(lam, mu):
        ch = charge(word)
        coeffs[ch] = coeffs.get(ch, 0) + 1
    if not coeffs:
        return TPoly.zero()
    out = [0] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return TPoly(out)


def n_statistic(mu) -> int:
    """n(mu) = sum over 1-based rows i of (i-1) * mu_i."""
    return sum(i * p for i, p in enumerate(mu))


def hall_littlewood_H(mu) -> SymFunc:
    """H_mu(X;t) = sum over lam of Ktilde_{lam,mu}(t) s_lam.

    Ktilde is the cocharge normalization t^{n(mu)} K_{lam,mu}(1/t), the
    convention calibrated against the graded Frobenius of the modules on
    n = 2, 3 (see the calibration tests).
    """
    mu = check_partition(tuple(mu)) if mu else ()
    n = sum(mu)
    nmu = n_statistic(mu)
    terms = {}
    for lam in partitions_of(n):
        k = kostka_foulkes(lam, mu)
        if k:
            terms[lam] = k.reversed_to_degree(nmu)
    return SymFunc(terms)


# -- the q=0 four-term recurrence -------------------------------------------

_H0_MEMO: dict[tuple, SymFunc] = {}


def frobenius_of_diagram(cells) -> SymFunc:
    """Memoized graded Frobenius characteristic of the Y-free span of a diagram."""
    key = tuple(sorted(cells))
    out = _H0_MEMO.get(key)
    if out is None:
        out = graded_frobenius(y_free_space(key))
        _H0_MEMO[key] = out
    return out


def arm_and_leg(mu, i: int, j: int) -> tuple[int, int]:
    """Cells strictly east (a) and strictly north (l) of (i,j) in mu."""
    mu = tuple(mu)
    a = mu[i] - j - 1
    leg = conjugate(mu)[j] - i - 1
    return a, leg


def recurrence_check(mu, i: int, j: int) -> dict:
    """Verify the q=0 specialization of the four-term recurrence at one hole.

    Case a=0, l>0 is checked in the corrected reading
    H0_{mu/i,j} * (1+...+t^{l-1}) = H0_{mu/i+1,j} * (1+...+t^l): the printed
    right-hand hole (i,j+1) falls outside mu whenever a=0, and both the basis
    decomposition and the q->0 limit of the bivariate recurrence put the
    surviving term at (i+1,j).
    """
    mu = check_partition(mu)
    if (i, j) not in diagram_of(mu):
        raise ValueError(f"hole ({i},{j}) outside {mu}")
    a, leg = arm_and_leg(mu, i, j)
    lhs = frobenius_of_diagram(puncture(mu, i, j))
    report = {
        "mu": list(mu),
        "hole": [i, j],
        "arm": a,
        "leg": leg,
        "H0": lhs.to_json(),
    }

    def term(ii, jj) -> SymFunc:
        if (ii, jj) not in diagram_of(mu):
            return SymFunc.zero()
        return frobenius_of_diagram(puncture(mu, ii, jj))

    if a == 0 and leg > 0:
        report["case"] = "a=0,l>0 (corrected reading)"
        rhs = term(i + 1, j)
        ok = lhs.scaled(TPoly.geometric(leg - 1)) == rhs.scaled(
            TPoly.geometric(leg)
        )
        report["rhs"] = rhs.to_json()
    elif a > 0:
        report["case"] = "a>0"
        rhs = term(i, j + 1) + term(i + 1, j).scaled(TPoly.t_power(1)) - term(
            i + 1, j + 1
        ).scaled(TPoly.t_power(1))
        ok = lhs == rhs
        report["rhs"] = rhs.to_json()
    else:
        report["case"] = "corner"
        nu = None
        for corner_nu, cs in zip(removable_partitions(mu), corners(mu)):
            if cs == (i, j):
                nu = corner_nu
        rhs = graded_frobenius(garnir_span(nu))
        ok = lhs == rhs
        report["rhs"] = rhs.to_json()
    report["ok"] = bool(ok)
    # t=1 specialization must reproduce the counting recurrence
    from .bases import d_mu_ij

    report["dim_ok"] = lhs.dimension_series().evaluate(1) == d_mu_ij(mu, i, j)
    report["ok"] = report["ok"] and report["dim_ok"]
    return report
