"""Sparse exact polynomial arithmetic in x_1..x_n, y_1..y_n over the rationals.

A polynomial in n pairs of variables is stored as a dictionary mapping
monomials to nonzero rational coefficients.  A monomial is a tuple of 2n
non-negative integers: the first n entries are the exponents of x_1..x_n,
the last n those of y_1..y_n.  The zero polynomial has an empty dictionary.

All arithmetic is exact.  gmpy2.mpq is used for coefficients when available
(it is substantially faster on the large eliminations); fractions.Fraction
is the drop-in fallback.
"""

from __future__ import annotations

import re
from itertools import permutations
from typing import Iterable, Iterator

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover - gmpy2 is normally present
    from fractions import Fraction as QQ

Monomial = tuple  # length 2n tuple of ints

_ONE = QQ(1)
_SCALARS = (int, type(_ONE))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(u + v for u, v in zip(a, b))


def monomial_bidegree(m: Monomial, n: int) -> tuple[int, int]:
    """(total x-degree, total y-degree) of a monomial over n variable pairs."""
    return sum(m[:n]), sum(m[n:])


def term_order_key(m: Monomial):
    """Canonical monomial order: reverse lexicographic, last variable first."""
    return m[::-1]


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict | None = None):
        self.num_vars = num_vars
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = c if isinstance(c, _SCALARS) else QQ(c)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls(num_vars)

    @classmethod
    def constant(cls, num_vars: int, value) -> "Polynomial":
        return cls(num_vars, {(0,) * (2 * num_vars): QQ(value)})

    @classmethod
    def x(cls, num_vars: int, i: int) -> "Polynomial":
        """The variable x_i, 1-based."""
        if not 1 <= i <= num_vars:
            raise ValueError(f"x index {i} out of range for n={num_vars}")
        e = [0] * (2 * num_vars)
        e[i - 1] = 1
        return cls(num_vars, {tuple(e): _ONE})

    @classmethod
    def y(cls, num_vars: int, i: int) -> "Polynomial":
        """The variable y_i, 1-based."""
        if not 1 <= i <= num_vars:
            raise ValueError(f"y index {i} out of range for n={num_vars}")
        e = [0] * (2 * num_vars)
        e[num_vars + i - 1] = 1
        return cls(num_vars, {tuple(e): _ONE})

    @classmethod
    def monomial(cls, num_vars: int, m: Monomial, coeff=1) -> "Polynomial":
        return cls(num_vars, {tuple(m): QQ(coeff)})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def bidegree(self) -> tuple[int, int] | None:
        """The common bidegree of all terms, or None (for 0 or mixed)."""
        degs = {monomial_bidegree(m, self.num_vars) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_bihomogeneous(self) -> bool:
        return self.bidegree() is not None or self.is_zero()

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=term_order_key)

    def normalized(self) -> "Polynomial":
        """Scale so the leading coefficient is 1 (canonical up-to-scalar form)."""
        if not self.terms:
            return self
        c = self.terms[self.leading_monomial()]
        return Polynomial(self.num_vars, {m: v / c for m, v in self.terms.items()})

    def y_free_part(self) -> "Polynomial":
        n = self.num_vars
        return Polynomial(
            self.num_vars,
            {m: c for m, c in self.terms.items() if not any(m[n:])},
        )

    # -- ring operations -----------------------------------------------

    def _check_compat(self, other: "Polynomial"):
        if self.num_vars != other.num_vars:
            raise ValueError(
                f"variable count mismatch: {self.num_vars} vs {other.num_vars}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_compat(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            nv = t.get(m, 0) + c
            if nv:
                t[m] = nv
            else:
                t.pop(m, None)
        return Polynomial(self.num_vars, t)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.num_vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, _SCALARS) or not isinstance(other, Polynomial):
            c = QQ(other)
            return Polynomial(
                self.num_vars, {m: c * v for m, v in self.terms.items()}
            )
        self._check_compat(other)
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                nv = t.get(m, 0) + c1 * c2
                if nv:
                    t[m] = nv
                else:
                    t.pop(m, None)
        return Polynomial(self.num_vars, t)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.num_vars == other.num_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {format_polynomial(self)!r})"

    # -- calculus -------------------------------------------------------

    def derivative(self, var: int, order: int = 1) -> "Polynomial":
        """Formal partial derivative, var indexing one of the 2n variables."""
        if not 0 <= var < 2 * self.num_vars:
            raise ValueError(f"variable index {var} out of range")
        if order == 0:
            return self
        t: dict = {}
        for m, c in self.terms.items():
            e = m[var]
            if e < order:
                continue
            f = 1
            for k in range(order):
                f *= e - k
            nm = m[:var] + (e - order,) + m[var + 1 :]
            nv = t.get(nm, 0) + c * f
            if nv:
                t[nm] = nv
            else:
                t.pop(nm, None)
        return Polynomial(self.num_vars, t)

    def dx(self, i: int, order: int = 1) -> "Polynomial":
        """Derivative by x_i, 1-based."""
        return self.derivative(i - 1, order)

    def dy(self, i: int, order: int = 1) -> "Polynomial":
        """Derivative by y_i, 1-based."""
        return self.derivative(self.num_vars + i - 1, order)

    def mixed_partial(self, orders: Monomial) -> "Polynomial":
        """Apply the mixed partial with the given 2n-vector of orders."""
        p = self
        for var, k in enumerate(orders):
            if k:
                p = p.derivative(var, k)
                if not p:
                    break
        return p

    def permuted(self, sigma: tuple[int, ...]) -> "Polynomial":
        """Diagonal action of sigma (1-based images): x_i -> x_{sigma(i)}, same on y."""
        n = self.num_vars
        t = {}
        for m, c in self.terms.items():
            e = [0] * (2 * n)
            for i in range(n):
                e[sigma[i] - 1] = m[i]
                e[n + sigma[i] - 1] = m[n + i]
            t[tuple(e)] = c
        return Polynomial(n, t)


def apply_diff_operator(op: Polynomial, target: Polynomial) -> Polynomial:
    """Replace each monomial of op by the corresponding mixed partial of target."""
    if op.num_vars != target.num_vars:
        raise ValueError("operator and target must share the variable set")
    out = Polynomial.zero(target.num_vars)
    for m, c in op.terms.items():
        d = target.mixed_partial(m)
        if d:
            out = out + d * c
    return out


def det_monomial_matrix(entries: list[list[Monomial]], num_vars: int) -> Polynomial:
    """Signed Leibniz expansion of a square matrix of single monomials."""
    n = len(entries)
    for row in entries:
        if len(row) != n:
            raise ValueError("matrix must be square")
    if n == 0:
        return Polynomial.constant(num_vars, 1)
    terms: dict = {}
    for perm in permutations(range(n)):
        sign = _permutation_sign(perm)
        m = entries[0][perm[0]]
        for i in range(1, n):
            m = monomial_mul(m, entries[i][perm[i]])
        nv = terms.get(m, 0) + sign
        if nv:
            terms[m] = nv
        else:
            terms.pop(m, None)
    return Polynomial(num_vars, {m: QQ(c) for m, c in terms.items()})


def _permutation_sign(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


class RowSpace:
    """Incrementally maintained reduced row-echelon span of polynomials.

    Rows are keyed by their pivot monomial; every row has pivot coefficient 1
    and zero at every other row's pivot.  This makes the representation
    canonical: two RowSpaces are equal as spans iff their row maps coincide.
    """

    def __init__(self, num_vars: int):
        self.num_vars = num_vars
        self.rows: dict[Monomial, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[Monomial]:
        return sorted(self.rows, key=term_order_key, reverse=True)

    def _reduced(self, terms: dict) -> dict:
        """Fully reduce a term dict against the stored rows (pure)."""
        t = dict(terms)
        # rows are in RREF, so reduction never reintroduces a pivot monomial
        for m in [k for k in t if k in self.rows]:
            c = t.get(m)
            if not c:
                continue
            get = t.get
            for mm, cc in self.rows[m].items():
                nv = get(mm, 0) - c * cc
                if nv:
                    t[mm] = nv
                else:
                    t.pop(mm, None)
        return t

    def insert(self, p: Polynomial) -> bool:
        """Add p to the span.  Returns False iff p was already in the span."""
        if p.num_vars != self.num_vars:
            raise ValueError("variable count mismatch")
        t = self._reduced(p.terms)
        if not t:
            return False
        lead = max(t, key=term_order_key)
        c = t[lead]
        row = {m: v / c for m, v in t.items()}
        for other in self.rows.values():
            oc = other.get(lead)
            if oc:
                get = other.get
                for mm, cc in row.items():
                    nv = get(mm, 0) - oc * cc
                    if nv:
                        other[mm] = nv
                    else:
                        other.pop(mm, None)
        self.rows[lead] = row
        return True

    def contains(self, p: Polynomial) -> bool:
        return not self._reduced(p.terms)

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial(self.num_vars, row) for _, row in
                sorted(self.rows.items(), key=lambda kv: term_order_key(kv[0]),
                       reverse=True)]

    def coordinates(self, p: Polynomial) -> list:
        """Coordinates of p in the echelon basis, ordered like pivots()."""
        coords = [p.terms.get(piv, QQ(0)) for piv in self.pivots()]
        if self._reduced(p.terms):
            raise ValueError("polynomial is not in the span")
        return coords

    def is_subspace_of(self, other: "RowSpace") -> bool:
        return all(not other._reduced(row) for row in self.rows.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RowSpace)
            and self.num_vars == other.num_vars
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"RowSpace(num_vars={self.num_vars}, rank={self.rank})"

    def intersection(self, other: "RowSpace") -> "RowSpace":
        """Exact intersection of two spans over the shared monomial universe.

        Stacks the two bases and reads intersection vectors off the kernel of
        the combined system: a vanishing combination splits into an element
        common to both spans.
        """
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        a_rows = [dict(r) for r in self.rows.values()]
        b_rows = [dict(r) for r in other.rows.values()]
        elim: dict[Monomial, tuple[dict, dict]] = {}
        result = RowSpace(self.num_vars)
        for idx, vec0 in enumerate(a_rows + b_rows):
            vec = dict(vec0)
            combo = {idx: _ONE}
            while vec:
                lead = max(vec, key=term_order_key)
                if lead not in elim:
                    break
                evec, ecombo = elim[lead]
                f = vec[lead] / evec[lead]
                for mm, cc in evec.items():
                    nv = vec.get(mm, 0) - f * cc
                    if nv:
                        vec[mm] = nv
                    else:
                        vec.pop(mm, None)
                for k, cc in ecombo.items():
                    nv = combo.get(k, 0) - f * cc
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
            if vec:
                elim[lead] = (vec, combo)
            else:
                # sum of the a-part of the vanishing combination lies in both spans
                common: dict = {}
                for k, cc in combo.items():
                    if k < len(a_rows):
                        for mm, vv in a_rows[k].items():
                            nv = common.get(mm, 0) + cc * vv
                            if nv:
                                common[mm] = nv
                            else:
                                common.pop(mm, None)
                result.insert(Polynomial(self.num_vars, common))
        return result


# -- text form ---------------------------------------------------------

def _var_name(num_vars: int, idx: int) -> str:
    if idx < num_vars:
        return f"x{idx + 1}"
    return f"y{idx - num_vars + 1}"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form: sum of coeff*x1^a*y3^b terms."""
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=term_order_key, reverse=True):
        c = p.terms[m]
        factors = [
            _var_name(p.num_vars, i) + (f"^{e}" if e > 1 else "")
            for i, e in enumerate(m)
            if e
        ]
        body = "*".join(factors)
        mag = -c if c < 0 else c
        coeff = str(mag)
        if body and mag == 1:
            text = body
        elif body:
            text = f"{coeff}*{body}"
        else:
            text = coeff
        parts.append(("- " if c < 0 else "+ ") + text)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


_TERM_RE = re.compile(r"^([0-9]+(?:/[0-9]+)?)?\*?((?:[xy][0-9]+(?:\^[0-9]+)?(?:\*|$))*)$")
_FACTOR_RE = re.compile(r"([xy])([0-9]+)(?:\^([0-9]+))?")


def parse_polynomial(text: str, num_vars: int) -> Polynomial:
    """Inverse of format_polynomial (round-trip exact)."""
    text = text.strip()
    if text in ("0", ""):
        return Polynomial.zero(num_vars)
    text = text.replace("- ", "+ -").replace(" ", "")
    terms: dict = {}
    for chunk in text.split("+"):
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m:
            raise ValueError(f"cannot parse term {chunk!r}")
        coeff_text, body = m.groups()
        coeff = QQ(1)
        if coeff_text:
            if "/" in coeff_text:
                a, b = coeff_text.split("/")
                coeff = QQ(int(a)) / QQ(int(b))
            else:
                coeff = QQ(int(coeff_text))
        exps = [0] * (2 * num_vars)
        for kind, idx, power in _FACTOR_RE.findall(body or ""):
            i = int(idx) - 1 + (num_vars if kind == "y" else 0)
            exps[i] += int(power) if power else 1
        mono = tuple(exps)
        nv = terms.get(mono, 0) + sign * coeff
        if nv:
            terms[mono] = nv
        else:
            terms.pop(mono, None)
    return Polynomial(num_vars, terms)
