"""Partitions, lattice diagrams, punctured diagrams, tableaux and statistics.

Cells are (row, column) pairs, 0-based, rows counted from the bottom.
A lattice diagram is a tuple of cells in increasing lexicographic order
(row first), which is also the sign-fixing order for lattice determinants.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator

Cell = tuple  # (row, column)
Diagram = tuple  # sorted tuple of cells


def check_partition(mu: tuple[int, ...]) -> tuple[int, ...]:
    mu = tuple(mu)
    if any(p <= 0 for p in mu):
        raise ValueError(f"partition parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {mu}")
    return mu


def partition_weight(mu) -> int:
    return sum(mu)


def partition_factorial(mu) -> int:
    """mu! = product of factorials of the parts."""
    out = 1
    for p in mu:
        out *= factorial(p)
    return out


def conjugate(mu) -> tuple[int, ...]:
    mu = tuple(mu)
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p > j) for j in range(mu[0]))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, in reverse lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining: int, cap: int, prefix: tuple):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def diagram_of(mu) -> Diagram:
    """The lattice diagram of a partition, cells in lex order."""
    mu = check_partition(mu)
    return tuple((r, c) for r in range(len(mu)) for c in range(mu[r]))


def puncture(mu, i: int, j: int) -> Diagram:
    """The punctured diagram mu/ij: the cell (i,j) removed from mu."""
    cells = diagram_of(mu)
    if (i, j) not in cells:
        raise ValueError(f"hole ({i},{j}) outside partition {mu}")
    return tuple(cell for cell in cells if cell != (i, j))


def diagram_key(cells: Diagram) -> str:
    """Canonical text key for a diagram, used by caches and reports."""
    return ";".join(f"{r},{c}" for r, c in sorted(cells))


def corners(mu) -> list[Cell]:
    """Corner cells of mu, in increasing column order."""
    mu = check_partition(mu)
    out = []
    for r in range(len(mu) - 1, -1, -1):
        if r == len(mu) - 1 or mu[r] > mu[r + 1]:
            out.append((r, mu[r] - 1))
    return out


def removable_partitions(mu) -> list[tuple[int, ...]]:
    """Partitions obtained from mu by removing one corner, matching corners(mu)."""
    mu = check_partition(mu)
    out = []
    for (r, _c) in corners(mu):
        parts = list(mu)
        parts[r] -= 1
        out.append(tuple(p for p in parts if p))
    return out


def shadow_corner_indices(mu, i: int, j: int) -> list[int]:
    """Indices (into corners(mu)) of the corners in the shadow of (i,j)."""
    if (i, j) not in diagram_of(mu):
        raise ValueError(f"cell ({i},{j}) outside partition {mu}")
    return [k for k, (a, b) in enumerate(corners(mu)) if a >= i and b >= j]


def shadow_corners(mu, i: int, j: int) -> list[Cell]:
    cs = corners(mu)
    return [cs[k] for k in shadow_corner_indices(mu, i, j)]


def alpha_corner(mu, ell: int) -> int:
    """The corner statistic alpha_ell = a_ell - a_{ell+1} (a_{k+1} = -1)."""
    cs = corners(mu)
    if not 0 <= ell < len(cs):
        raise ValueError(f"corner index {ell} out of range for {mu}")
    a = cs[ell][0]
    a_next = cs[ell + 1][0] if ell + 1 < len(cs) else -1
    return a - a_next


class Tableau:
    """Injective filling of a lattice diagram by 1..n."""

    __slots__ = ("shape", "entries", "_positions")

    def __init__(self, shape: Diagram, entries: dict):
        shape = tuple(sorted(shape))
        if set(entries) != set(shape):
            raise ValueError("filling must cover exactly the shape's cells")
        vals = sorted(entries.values())
        if vals != list(range(1, len(shape) + 1)):
            raise ValueError("filling must be a bijection onto 1..n")
        self.shape = shape
        self.entries = dict(entries)
        self._positions = {v: cell for cell, v in entries.items()}

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "Tableau":
        """Build from row lists, bottom row first; row r occupies columns 0.."""
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                entries[(r, c)] = v
        return cls(tuple(entries), entries)

    @property
    def n(self) -> int:
        return len(self.shape)

    def position(self, value: int) -> Cell:
        return self._positions[value]

    def height(self, value: int) -> int:
        """h_T(value): the row of the entry."""
        return self._positions[value][0]

    def column_entries(self) -> dict[int, list[int]]:
        """Column set map: column -> sorted entries appearing in that column."""
        cols: dict[int, list[int]] = {}
        for (r, c), v in self.entries.items():
            cols.setdefault(c, []).append(v)
        return {c: sorted(vs) for c, vs in cols.items()}

    def column_sets(self) -> frozenset:
        return frozenset(
            (c, frozenset(vs)) for c, vs in self.column_entries().items()
        )

    def is_standard(self) -> bool:
        for (r, c), v in self.entries.items():
            left = _nearest_left(self.shape, r, c)
            below = _nearest_below(self.shape, r, c)
            if left is not None and self.entries[left] > v:
                return False
            if below is not None and self.entries[below] > v:
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, frozenset(self.entries.items())))

    def __repr__(self):
        rows: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            rows.setdefault(r, {})[c] = v
        lines = []
        for r in sorted(rows, reverse=True):
            cols = rows[r]
            width = max(cols)
            lines.append(
                " ".join(str(cols.get(c, ".")) for c in range(width + 1))
            )
        return "Tableau[" + " / ".join(lines) + "]"

    def to_json(self) -> dict:
        return {
            "shape": [list(cell) for cell in self.shape],
            "entries": [[r, c, v] for (r, c), v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tableau":
        shape = tuple(tuple(cell) for cell in data["shape"])
        entries = {(r, c): v for r, c, v in data["entries"]}
        return cls(shape, entries)


def _nearest_left(shape: Diagram, r: int, c: int) -> Cell | None:
    best = None
    for (rr, cc) in shape:
        if rr == r and cc < c and (best is None or cc > best[1]):
            best = (rr, cc)
    return best


def _nearest_below(shape: Diagram, r: int, c: int) -> Cell | None:
    best = None
    for (rr, cc) in shape:
        if cc == c and rr < r and (best is None or rr > best[0]):
            best = (rr, cc)
    return best


def standard_tableaux(shape: Diagram) -> Iterator[Tableau]:
    """All standard (row- and column-increasing) fillings of the diagram.

    Rows and columns are read along the cells actually present, so punctured
    and slid shapes are handled by the same predicate.
    """
    shape = tuple(sorted(shape))
    n = len(shape)
    preds: dict[Cell, list[Cell]] = {}
    for (r, c) in shape:
        ps = []
        left = _nearest_left(shape, r, c)
        below = _nearest_below(shape, r, c)
        if left is not None:
            ps.append(left)
        if below is not None:
            ps.append(below)
        preds[(r, c)] = ps

    filling: dict = {}

    def place(k: int) -> Iterator[Tableau]:
        if k > n:
            yield Tableau(shape, dict(filling))
            return
        for cell in shape:
            if cell in filling:
                continue
            if all(p in filling for p in preds[cell]):
                filling[cell] = k
                yield from place(k + 1)
                del filling[cell]

    yield from place(1)


def count_standard_tableaux(shape: Diagram) -> int:
    return sum(1 for _ in standard_tableaux(shape))


def alpha(t: Tableau, j: int) -> int:
    """The derivative-bound statistic of entry j.

    r_j - r_k where k is the largest entry smaller than j in the column just
    to the right of j's column; r_j + 1 if there is no such entry.
    """
    rj, cj = t.position(j)
    best = None
    for v, (r, c) in t._positions.items():
        if c == cj + 1 and v < j and (best is None or v > best):
            best = v
    if best is None:
        return rj + 1
    return rj - t.position(best)[0]


def alpha_vector(t: Tableau) -> tuple[int, ...]:
    return tuple(alpha(t, j) for j in range(1, t.n + 1))


def slide_up(t: Tableau, u: int, v: int) -> Tableau:
    """Slide the column-v entries on or above row u up by one cell.

    The shape of t must be a partition diagram nu with an addable corner on
    top of column v (that corner being (a+1, v) for a the top filled row);
    the result is a filling of mu/uv where mu = nu plus that corner.
    """
    col_rows = [r for (r, c) in t.shape if c == v]
    # nu's column v fills rows 0..a_ell-1; the restored corner of mu is (a_ell, v)
    a_ell = max(col_rows) + 1 if col_rows else 0
    mu_cells = set(t.shape) | {(a_ell, v)}
    # validate that mu is a partition diagram
    rows: dict[int, int] = {}
    for (r, c) in mu_cells:
        rows[r] = rows.get(r, 0) + 1
    mu = tuple(rows.get(r, 0) for r in range(max(rows) + 1))
    ok = (
        all(mu)
        and all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1))
        and set(diagram_of(mu)) == mu_cells
    )
    if not ok:
        raise ValueError(f"column {v} has no addable corner on shape {t.shape}")
    if (a_ell, v) not in corners(mu):
        raise ValueError(f"({a_ell},{v}) is not a corner of {mu}")
    if not 0 <= u <= a_ell:
        raise ValueError(f"slide row {u} out of range 0..{a_ell}")
    entries = {}
    for (r, c), val in t.entries.items():
        if c != v or r < u:
            entries[(r, c)] = val
        else:
            entries[(r + 1, c)] = val
    return Tableau(tuple(entries), entries)


def dominance_leq(mu, lam) -> bool:
    """mu <= lam in dominance order (equal weights required)."""
    mu, lam = check_partition(mu), check_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares partitions of equal weight")
    k = max(len(mu), len(lam))
    sm = sl = 0
    for i in range(k):
        sm += mu[i] if i < len(mu) else 0
        sl += lam[i] if i < len(lam) else 0
        if sm > sl:
            return False
    return True


def dominance_meet(mu, lam) -> tuple[int, ...]:
    """Greatest lower bound in dominance order, via pointwise minimum of sums."""
    mu, lam = check_partition(mu), check_partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError("meet requires partitions of equal weight")
    k = max(len(mu), len(lam))
    sums = []
    sm = sl = 0
    for i in range(k):
        sm += mu[i] if i < len(mu) else 0
        sl += lam[i] if i < len(lam) else 0
        sums.append(min(sm, sl))
    parts = []
    prev = 0
    for s in sums:
        parts.append(s - prev)
        prev = s
    return tuple(p for p in parts if p)


def dominance_join(mu, lam) -> tuple[int, ...]:
    """Least upper bound in dominance order (conjugate of the meet of conjugates)."""
    return conjugate(dominance_meet(conjugate(mu), conjugate(lam)))
