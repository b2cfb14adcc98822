"""Terms, variable orderings and the lexicographic machinery built on them.

A term ``x_1^g_1 ... x_n^g_n`` is stored as its dense exponent vector.
Variables are 0-based indices internally; ``x1`` is index 0 when printed.

A :class:`VariableOrdering` lists variable indices from the minimal one to
the maximal one, so ``VariableOrdering((0, 1, 3, 2))`` is ``x1<x2<x4<x3``.
Ranks are 0-based positions in that list: rank 0 is the minimal variable,
rank ``n - 1`` the maximal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, DuplicateTermError, EmptyTermSetError

__all__ = [
    "Term",
    "VariableOrdering",
    "TermSet",
    "as_termset",
    "lex_compare",
    "lex_key",
    "pi_projection",
    "divides",
    "quotient",
    "multiply",
    "times_var",
    "support",
    "degree_profile",
    "variable_name",
]


def variable_name(v: int) -> str:
    return f"x{v + 1}"


class Term(tuple):
    """Exponent vector of a monomial; hashes and compares like a plain tuple."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        values = tuple(int(e) for e in exponents)
        if not values:
            raise DimensionError("a term needs at least one variable")
        if any(e < 0 for e in values):
            raise ValueError(f"negative exponent in {values}")
        return tuple.__new__(cls, values)

    @classmethod
    def _raw(cls, values) -> Term:
        # trusted constructor for internal arithmetic
        return tuple.__new__(cls, values)

    @classmethod
    def one(cls, n: int) -> Term:
        return cls((0,) * n)

    @classmethod
    def var(cls, v: int, n: int, power: int = 1) -> Term:
        if not 0 <= v < n:
            raise DimensionError(f"variable index {v} out of range for n={n}")
        values = [0] * n
        values[v] = power
        return cls(values)

    @property
    def n(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def deg(self, h: int) -> int:
        return self[h]

    def __str__(self) -> str:
        factors = []
        for v, e in enumerate(self):
            if e == 1:
                factors.append(variable_name(v))
            elif e > 1:
                factors.append(f"{variable_name(v)}^{e}")
        return "*".join(factors) if factors else "1"

    def __repr__(self) -> str:
        return f"Term({tuple(self)!r})"


def _check_same_n(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} vs {len(b)}")


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff ``a`` divides ``b`` (componentwise ``<=``)."""
    _check_same_n(a, b)
    return all(x <= y for x, y in zip(a, b))


def quotient(b: Sequence[int], a: Sequence[int]) -> Term:
    """``b / a``; raises ``ValueError`` when ``a`` does not divide ``b``."""
    _check_same_n(a, b)
    values = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in values):
        raise ValueError(f"{Term(a)} does not divide {Term(b)}")
    return Term._raw(values)


def multiply(a: Sequence[int], b: Sequence[int]) -> Term:
    _check_same_n(a, b)
    return Term._raw(tuple(x + y for x, y in zip(a, b)))


def times_var(t: Sequence[int], v: int) -> Term:
    values = list(t)
    values[v] += 1
    return Term._raw(tuple(values))


def support(t: Sequence[int]) -> frozenset[int]:
    """Indices of the variables occurring in ``t``."""
    return frozenset(v for v, e in enumerate(t) if e)


@dataclass(frozen=True)
class VariableOrdering:
    """Permutation of variable indices, listed from minimal to maximal."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        object.__setattr__(self, "order", order)
        if not order:
            raise DimensionError("an ordering needs at least one variable")
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"{order} is not a permutation of 0..{len(order) - 1}")
        object.__setattr__(self, "_rank", tuple(order.index(v) for v in range(len(order))))

    @classmethod
    def identity(cls, n: int) -> VariableOrdering:
        return cls(tuple(range(n)))

    @classmethod
    def from_max_first(cls, variables: Sequence[int]) -> VariableOrdering:
        return cls(tuple(reversed(tuple(variables))))

    @property
    def n(self) -> int:
        return len(self.order)

    def rank(self, v: int) -> int:
        """Rank of variable ``v``: 0 for the minimal variable."""
        return self._rank[v]

    def var(self, rank: int) -> int:
        return self.order[rank]

    @property
    def max_first(self) -> tuple[int, ...]:
        return tuple(reversed(self.order))

    def relabel(self, t: Sequence[int]) -> Term:
        """Term whose ``k``-th exponent is the exponent of the rank-``k`` variable of ``t``."""
        _check_same_n(t, self.order)
        return Term._raw(tuple(t[v] for v in self.order))

    def __str__(self) -> str:
        return "<".join(variable_name(v) for v in self.order)


def lex_key(t: Sequence[int], ord: VariableOrdering) -> tuple[int, ...]:
    """Sort key for lex: exponents read from the maximal variable down."""
    return tuple(t[v] for v in reversed(ord.order))


def lex_compare(a: Sequence[int], b: Sequence[int], ord: VariableOrdering) -> int:
    """Compare ``a`` and ``b`` in lex induced by ``ord``; returns -1, 0 or 1."""
    _check_same_n(a, b)
    _check_same_n(a, ord.order)
    for v in reversed(ord.order):
        if a[v] != b[v]:
            return -1 if a[v] < b[v] else 1
    return 0


def pi_projection(t: Sequence[int], rank: int, ord: VariableOrdering) -> Term:
    """Zero the exponents of every variable of rank below ``rank``."""
    _check_same_n(t, ord.order)
    if not 0 <= rank < ord.n:
        raise DimensionError(f"rank {rank} out of range for n={ord.n}")
    values = list(t)
    for r in range(rank):
        values[ord.order[r]] = 0
    return Term._raw(tuple(values))


def degree_profile(M: Iterable[Sequence[int]], v: int) -> frozenset[int]:
    """Set of exponents of variable ``v`` attained in ``M``."""
    return frozenset(t[v] for t in M)


@dataclass(frozen=True)
class TermSet:
    """Finite duplicate-free set of terms over ``n`` variables.

    ``terms`` keeps the order the terms were given in; equality is set
    equality.
    """

    terms: tuple[Term, ...]
    n: int

    def __post_init__(self):
        seen = set()
        for t in self.terms:
            if len(t) != self.n:
                raise DimensionError(f"term {t!r} has {len(t)} variables, expected {self.n}")
            if t in seen:
                raise DuplicateTermError(f"duplicate term {t}")
            seen.add(t)
        object.__setattr__(self, "_members", frozenset(seen))

    @classmethod
    def of(cls, terms: Iterable[Sequence[int]], n: int | None = None) -> TermSet:
        ts = tuple(t if type(t) is Term else Term(t) for t in terms)
        if n is None:
            if not ts:
                raise EmptyTermSetError("cannot infer n from an empty term set")
            n = len(ts[0])
        return cls(ts, n)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, t) -> bool:
        return tuple(t) in self._members

    def __eq__(self, other) -> bool:
        if isinstance(other, TermSet):
            return self.n == other.n and self._members == other._members
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self._members))

    def sorted(self, ord: VariableOrdering | None = None) -> list[Term]:
        ord = ord or VariableOrdering.identity(self.n)
        return sorted(self.terms, key=lambda t: lex_key(t, ord))

    def __str__(self) -> str:
        return "{" + ", ".join(str(t) for t in self.terms) + "}"


def as_termset(U, n: int | None = None) -> TermSet:
    if isinstance(U, TermSet):
        if n is not None and n != U.n:
            raise DimensionError(f"term set has n={U.n}, expected {n}")
        return U
    return TermSet.of(U, n)
