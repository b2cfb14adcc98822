"""Bar Codes of finite term sets.

Row ``r`` of a Bar Code belongs to the variable of rank ``r`` (row 0, the
top row, is the minimal variable). A bar is a half-open column span; the
bars of row ``r`` group the lex-sorted columns whose exponents agree on
every variable of rank ``>= r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import EmptyTermSetError, MalformedBarCodeError, NotAdmissibleError
from .terms import (
    Term,
    VariableOrdering,
    as_termset,
    lex_key,
    pi_projection,
    times_var,
    variable_name,
)

__all__ = [
    "Bar",
    "BarCode",
    "StarMarking",
    "build_barcode",
    "decode",
    "elist",
    "is_admissible",
    "order_ideal_violation",
    "is_order_ideal",
    "star_marking",
    "star_set",
    "star_set_formula",
]


@dataclass(frozen=True)
class Bar:
    rank: int
    index: int
    start: int
    end: int

    @property
    def length(self) -> int:
        return self.end - self.start

    def lies_over(self, other: Bar) -> bool:
        return other.start <= self.start and self.end <= other.end

    def columns(self) -> range:
        return range(self.start, self.end)


@dataclass(frozen=True)
class BarCode:
    """Layered bar diagram.

    ``rows[r]`` holds the bars of rank ``r`` left to right. ``column_terms``
    is the lex-sorted term list when the code was built from a set, and
    ``None`` for a code given by its shape alone.
    """

    rows: tuple[tuple[Bar, ...], ...]
    ordering: VariableOrdering
    column_terms: tuple[Term, ...] | None = None
    _bar_at: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = self.rows
        if not rows:
            raise MalformedBarCodeError("a bar code needs at least one row")
        if len(rows) != self.ordering.n:
            raise MalformedBarCodeError(
                f"{len(rows)} rows but the ordering has {self.ordering.n} variables"
            )
        if not rows[0]:
            raise MalformedBarCodeError("row 0 is empty")
        m = rows[0][-1].end
        bar_at = []
        for r, row in enumerate(rows):
            if not row:
                raise MalformedBarCodeError(f"row {r} is empty")
            pos = 0
            owner = []
            for j, bar in enumerate(row):
                if bar.rank != r or bar.index != j:
                    raise MalformedBarCodeError(f"bar {bar} misplaced at row {r}, index {j}")
                if bar.start != pos or bar.end <= bar.start:
                    raise MalformedBarCodeError(f"bar {bar} is not contiguous or is empty")
                owner.extend([j] * bar.length)
                pos = bar.end
            if pos != m:
                raise MalformedBarCodeError(f"row {r} has length {pos}, row 0 has length {m}")
            bar_at.append(tuple(owner))
        if any(bar.length != 1 for bar in rows[0]):
            raise MalformedBarCodeError("every bar of row 0 must span one column")
        for r in range(len(rows) - 1):
            upper = {bar.start for bar in rows[r]}
            if not {bar.start for bar in rows[r + 1]} <= upper:
                raise MalformedBarCodeError(f"a bar of row {r} lies over two bars of row {r + 1}")
        if self.column_terms is not None and len(self.column_terms) != m:
            raise MalformedBarCodeError(f"{len(self.column_terms)} column terms for {m} columns")
        object.__setattr__(self, "_bar_at", tuple(bar_at))

    @classmethod
    def from_row_lengths(
        cls, lengths: Sequence[Sequence[int]], ordering: VariableOrdering | None = None
    ) -> BarCode:
        """Build a code from the 1-lengths of each row, top row first."""
        rows = []
        for r, row in enumerate(lengths):
            bars, pos = [], 0
            for j, length in enumerate(row):
                bars.append(Bar(r, j, pos, pos + length))
                pos += length
            rows.append(tuple(bars))
        return cls(tuple(rows), ordering or VariableOrdering.identity(len(rows)))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return self.rows[0][-1].end

    def mu(self, rank: int) -> int:
        return len(self.rows[rank])

    def bar_under(self, rank: int, column: int) -> Bar:
        """The bar of row ``rank`` lying under ``column``."""
        return self.rows[rank][self._bar_at[rank][column]]

    def parent(self, bar: Bar) -> Bar | None:
        """The bar of the next row that ``bar`` lies over, ``None`` on the last row."""
        if bar.rank == self.n - 1:
            return None
        return self.bar_under(bar.rank + 1, bar.start)

    def row_lengths(self) -> list[list[int]]:
        return [[bar.length for bar in row] for row in self.rows]

    def length_over(self, bar: Bar, rank: int) -> int:
        """``rank``-length of ``bar``: number of bars of row ``rank`` over it."""
        return sum(1 for b in self.rows[rank] if b.lies_over(bar))

    def diagram(self, labels: Sequence[Term] | None = None) -> dict:
        """Plain-data rendering model: spans, stars and column labels."""
        labels = labels if labels is not None else (self.column_terms or decode(self))
        stars = star_marking(self)
        return {
            "columns": [str(t) for t in labels],
            "rows": [
                {
                    "rank": r,
                    "variable": variable_name(self.ordering.var(r)),
                    "bars": [
                        {"start": b.start, "end": b.end, "starred": stars.is_starred(r, b.index)}
                        for b in row
                    ],
                }
                for r, row in enumerate(self.rows)
            ],
        }


def build_barcode(M, ord: VariableOrdering) -> BarCode:
    """Bar Code of ``M`` under ``ord``."""
    U = as_termset(M, ord.n)
    if not len(U):
        raise EmptyTermSetError("cannot build the bar code of an empty set")
    n = ord.n
    cols = sorted(U, key=lambda t: lex_key(t, ord))
    keys = [lex_key(t, ord) for t in cols]
    m = len(cols)
    rows = []
    for r in range(n):
        # rank >= r agree  <=>  the first n - r entries of the max-first key agree
        width = n - r
        bars, start = [], 0
        for c in range(1, m + 1):
            if c == m or keys[c][:width] != keys[c - 1][:width]:
                bars.append(Bar(r, len(bars), start, c))
                start = c
        rows.append(tuple(bars))
    return BarCode(tuple(rows), ord, tuple(cols))


def decode(B: BarCode) -> list[Term]:
    """Column labels obtained by the top-down labelling procedure.

    The bottom row's ``j``-th bar gets the ``j``-th power of the maximal
    variable; moving up, the ``k``-th bar over a labelled bar gets that
    label times the row's variable to the ``k``.
    """
    ord, n = B.ordering, B.n
    labels: dict[Bar, list[int]] = {}
    top = n - 1
    for j, bar in enumerate(B.rows[top]):
        exps = [0] * n
        exps[ord.var(top)] = j
        labels[bar] = exps
    for r in range(top - 1, -1, -1):
        v = ord.var(r)
        k = 0
        prev_parent = None
        for bar in B.rows[r]:
            parent = B.parent(bar)
            k = k + 1 if parent == prev_parent else 0
            prev_parent = parent
            exps = list(labels[parent])
            exps[v] = k
            labels[bar] = exps
    return [Term._raw(tuple(labels[bar])) for bar in B.rows[0]]


def elist(B: BarCode, column: int) -> tuple[int, ...]:
    """E-list of ``column``, ordered from the maximal rank down to rank 0.

    Entry for rank ``r`` counts the bars of row ``r`` to the left of the one
    under ``column`` inside the same rank ``r + 1`` block.
    """
    if not 0 <= column < B.m:
        raise IndexError(f"column {column} out of range for m={B.m}")
    out = []
    for r in range(B.n - 1, -1, -1):
        bar = B.bar_under(r, column)
        parent = B.parent(bar)
        if parent is None:
            out.append(bar.index)
        else:
            out.append(sum(1 for b in B.rows[r][: bar.index] if b.lies_over(parent)))
    return tuple(out)


def is_admissible(B: BarCode) -> bool:
    """E-list criterion: every positive entry can be decremented inside the code."""
    lists = [elist(B, c) for c in range(B.m)]
    present = set(lists)
    for e in lists:
        for k, b in enumerate(e):
            if b > 0 and e[:k] + (b - 1,) + e[k + 1 :] not in present:
                return False
    return True


def order_ideal_violation(terms) -> tuple[Term, Term] | None:
    """A pair ``(t, s)`` with ``s | t``, ``t`` in the set and ``s`` not, or ``None``."""
    members = {tuple(t) for t in terms}
    for t in terms:
        for v, e in enumerate(t):
            if e:
                s = list(t)
                s[v] -= 1
                if tuple(s) not in members:
                    return Term(t), Term(s)
    return None


def is_order_ideal(terms) -> bool:
    return order_ideal_violation(terms) is None


@dataclass(frozen=True)
class StarMarking:
    """Bars followed by a star, as ``(rank, bar index)`` pairs."""

    starred: frozenset[tuple[int, int]]

    def is_starred(self, rank: int, index: int) -> bool:
        return (rank, index) in self.starred


def star_marking(B: BarCode) -> StarMarking:
    starred = set()
    for r, row in enumerate(B.rows):
        starred.add((r, len(row) - 1))
        if r == B.n - 1:
            continue
        for j in range(len(row) - 1):
            if B.parent(row[j]) != B.parent(row[j + 1]):
                starred.add((r, j))
    return StarMarking(frozenset(starred))


def star_set(B: BarCode) -> tuple[Term, ...]:
    """Star set of an admissible code, in lex-increasing order.

    Each starred bar contributes ``x * pi(t)`` where ``x`` is the row's
    variable and ``t`` labels any column over the bar. Terms are emitted
    left to right by star position, top to bottom for equal positions.
    """
    labels = decode(B)
    bad = order_ideal_violation(labels)
    if bad is not None or not is_admissible(B):
        raise NotAdmissibleError(
            "star sets are defined for order ideals only"
            + (f": {bad[1]} divides {bad[0]} but is missing" if bad else ""),
            witness=bad,
        )
    ord = B.ordering
    placed = []
    for r, j in star_marking(B).starred:
        bar = B.rows[r][j]
        t = labels[bar.start]
        placed.append((bar.end, r, times_var(pi_projection(t, r, ord), ord.var(r))))
    placed.sort(key=lambda item: (item[0], item[1]))
    return tuple(t for _, _, t in placed)


def star_set_formula(N, ord: VariableOrdering) -> frozenset[Term]:
    """Terms outside ``N`` whose quotient by their minimal variable lies in ``N``.

    Every such term is ``x * s`` with ``s`` in ``N``, so scanning those
    products is exhaustive.
    """
    members = {tuple(t) for t in N}
    out = set()
    for s in members:
        for v in range(ord.n):
            w = times_var(s, v)
            if w in members:
                continue
            low = min((u for u in range(ord.n) if w[u]), key=ord.rank)
            q = list(w)
            q[low] -= 1
            if tuple(q) in members:
                out.add(w)
    return frozenset(out)

