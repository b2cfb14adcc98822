"""Greedy search for a variable ordering that makes a term set complete.

The bar code is drawn from the maximal variable down. After each placement
the candidate involutive divisors of every non-multiplicative prolongation
are recorded, and earlier candidates whose quotient uses the new variable
survive only if that variable is multiplicative for them. A variable that
empties some candidate list is revoked and the next one tried.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from .errors import CapExceededError, EmptyTermSetError, InternalInvariantError
from .janet import is_complete_definition
from .terms import (
    Term,
    VariableOrdering,
    as_termset,
    degree_profile,
    divides,
    quotient,
    support,
    times_var,
)

__all__ = [
    "PartialBarCode",
    "CandidateMap",
    "TraceEvent",
    "SearchResult",
    "candidate_var",
    "candidates",
    "candidate_divisors",
    "friends",
    "common",
    "find_ordering",
    "brute_force_orderings",
    "DEFAULT_BRUTE_FORCE_CAP",
]

DEFAULT_BRUTE_FORCE_CAP = 8

# (t, x_j) -> {(u, alpha)}: u divides x_j * t over the next bar, alpha = support of the quotient
CandidateMap = Dict[Tuple[Term, int], FrozenSet[Tuple[Term, FrozenSet[int]]]]


@dataclass(frozen=True)
class PartialBarCode:
    """Bottom rows of a bar code, for the variables placed so far.

    ``levels[k]`` lists the bars drawn for ``chosen[k]``; each bar is the
    tuple of terms over it in column order. ``parents[k][b]`` is the index
    of the level ``k - 1`` bar that bar ``b`` lies over.
    """

    terms: tuple[Term, ...]
    chosen: tuple[int, ...] = ()
    levels: tuple[tuple[tuple[Term, ...], ...], ...] = ()
    parents: tuple[tuple[int, ...], ...] = ()
    _where: tuple[dict, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        where = []
        for bars in self.levels:
            where.append({t: b for b, bar in enumerate(bars) for t in bar})
        object.__setattr__(self, "_where", tuple(where))

    @classmethod
    def start(cls, U) -> PartialBarCode:
        U = as_termset(U)
        # identity-lex column order puts t before t' whenever t | t'
        return cls(tuple(sorted(U, key=lambda t: t[::-1])))

    @property
    def n(self) -> int:
        return len(self.terms[0])

    @property
    def bars(self) -> tuple[tuple[Term, ...], ...]:
        return self.levels[-1] if self.levels else (self.terms,)

    @property
    def remaining(self) -> list[int]:
        return [v for v in range(self.n) if v not in self.chosen]

    def place(self, v: int) -> PartialBarCode:
        """Split every current bar by the degree in ``x_v``, ascending."""
        if v in self.chosen:
            raise ValueError(f"x{v + 1} is already placed")
        new_bars, new_parents = [], []
        for p, bar in enumerate(self.bars):
            ordered = sorted(bar, key=lambda t: t[v])
            for _, group in itertools.groupby(ordered, key=lambda t: t[v]):
                group = tuple(group)
                assert all(
                    not (divides(b, a) and a != b)
                    for i, a in enumerate(group)
                    for b in group[i + 1 :]
                ), "a multiple precedes its divisor inside a bar"
                new_bars.append(group)
                new_parents.append(p)
        return PartialBarCode(
            self.terms,
            self.chosen + (v,),
            self.levels + (tuple(new_bars),),
            self.parents + (tuple(new_parents),),
        )

    def bar_index(self, t, level: int = -1) -> int:
        return self._where[level][t]

    def next_bar(self, b: int, level: int = -1) -> int | None:
        """Index of the bar right after ``b`` over the same parent, else ``None``."""
        parents = self.parents[level]
        if b + 1 < len(parents) and parents[b + 1] == parents[b]:
            return b + 1
        return None

    def starred(self, t, v: int) -> bool:
        """Whether ``t``'s bar for the placed variable ``v`` is followed by a star."""
        level = self.chosen.index(v)
        return self.next_bar(self.bar_index(t, level), level) is None

    def is_unitary(self) -> bool:
        return all(len(bar) == 1 for bar in self.bars)


def candidate_var(M: Iterable[Sequence[int]], C: Iterable[int]) -> frozenset[int]:
    """Drop from ``C`` every variable whose attained degrees skip a value below their max."""
    M = list(M)
    keep = set()
    for v in C:
        D = degree_profile(M, v)
        top = max(D, default=0)
        if all(g + 1 in D for g in D if g < top):
            keep.add(v)
    return frozenset(keep)


def candidates(groups: Sequence[Iterable[Sequence[int]]], C: Iterable[int]) -> frozenset[int]:
    """Variables surviving :func:`candidate_var` in every group."""
    out = frozenset(C)
    for g in groups:
        out = candidate_var(g, out)
    return out


def candidate_divisors(partial: PartialBarCode, t) -> frozenset[tuple[Term, frozenset[int]]] | None:
    """Candidates for ``x_j * t`` with ``x_j`` the last placed variable.

    ``None`` when ``x_j`` is multiplicative for ``t`` (its bar is starred).
    """
    v = partial.chosen[-1]
    nb = partial.next_bar(partial.bar_index(t))
    if nb is None:
        return None
    w = times_var(t, v)
    return frozenset(
        (u, support(quotient(w, u))) for u in partial.bars[nb] if divides(u, w)
    )


def friends(partial: PartialBarCode, table: CandidateMap) -> CandidateMap | None:
    """Extend ``table`` with the candidates of the newest level, pruning older entries.

    Returns ``None`` when some term has no candidate left, meaning the last
    placed variable has to be revoked.
    """
    v = partial.chosen[-1]
    out: CandidateMap = {}
    for bar in partial.bars:
        for t in bar:
            found = candidate_divisors(partial, t)
            if found is None:
                continue
            if not found:
                return None
            out[(t, v)] = found
    for key, cands in table.items():
        kept = frozenset((u, a) for u, a in cands if v not in a or partial.starred(u, v))
        if not kept:
            return None
        out[key] = kept
    return out


@dataclass(frozen=True)
class TraceEvent:
    """One search decision. ``outcome`` is one of ``placed``, ``rejected``
    (Friends failed), ``revoked`` (no extension below worked), ``unitary``
    and ``no-candidates`` (``variable`` is then ``None``)."""

    depth: int
    variable: Optional[int]
    outcome: str

    def __str__(self) -> str:
        name = "-" if self.variable is None else f"x{self.variable + 1}"
        return f"{'  ' * self.depth}{name}: {self.outcome}"


@dataclass(frozen=True)
class SearchResult:
    ordering: Optional[VariableOrdering]
    trace: tuple[TraceEvent, ...]
    unitary_prefix: Optional[tuple[int, ...]] = None

    @property
    def found(self) -> bool:
        return self.ordering is not None


def common(partial: PartialBarCode, table: CandidateMap, trace: list | None = None):
    """Place the remaining variables below ``partial``.

    Returns the placed suffix, maximal first, or ``None`` if no choice of the
    next variable can be completed. Candidates are tried by ascending index.
    """
    trace = [] if trace is None else trace
    depth = len(partial.chosen)
    remaining = partial.remaining
    if not remaining:
        return ()
    ys = candidates(partial.bars, remaining)
    if not ys:
        trace.append(TraceEvent(depth, None, "no-candidates"))
        return None
    for v in sorted(ys):
        nxt = partial.place(v)
        new_table = friends(nxt, table)
        if new_table is None:
            trace.append(TraceEvent(depth, v, "rejected"))
            continue
        trace.append(TraceEvent(depth, v, "placed"))
        rest = [u for u in remaining if u != v]
        if nxt.is_unitary():
            trace.append(TraceEvent(depth, v, "unitary"))
            return (v,) + tuple(sorted(rest, reverse=True))
        below = common(nxt, new_table, trace)
        if below is not None:
            return (v,) + below
        trace.append(TraceEvent(depth, v, "revoked"))
    return None


def find_ordering(M) -> SearchResult:
    """Search for an ordering under which ``M`` is complete.

    The answer is re-checked against the definition before it is returned.
    """
    U = as_termset(M)
    if not len(U):
        raise EmptyTermSetError("cannot search orderings for an empty set")
    if len(U) == 1:
        return SearchResult(VariableOrdering.identity(U.n), (), ())
    trace: list[TraceEvent] = []
    suffix = common(PartialBarCode.start(U), {}, trace)
    if suffix is None:
        return SearchResult(None, tuple(trace))
    ordering = VariableOrdering.from_max_first(suffix)
    report = is_complete_definition(U, ordering)
    if not report.complete:
        raise InternalInvariantError(
            f"search returned {ordering} but {report.first_failure} has no involutive divisor"
        )
    unitary = [e for e in trace if e.outcome == "unitary"]
    prefix = suffix[: unitary[-1].depth + 1] if unitary else None
    return SearchResult(ordering, tuple(trace), prefix)


def brute_force_orderings(M, cap: int = DEFAULT_BRUTE_FORCE_CAP) -> set[VariableOrdering]:
    """Every ordering under which ``M`` is complete, by trying all ``n!``."""
    U = as_termset(M)
    if not len(U):
        raise EmptyTermSetError("cannot enumerate orderings for an empty set")
    if U.n > cap:
        raise CapExceededError(f"n={U.n} exceeds the brute-force cap {cap}")
    return {
        VariableOrdering(p)
        for p in itertools.permutations(range(U.n))
        if is_complete_definition(U, VariableOrdering(p)).complete
    }
