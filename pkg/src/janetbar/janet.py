"""Janet multiplicative variables, cones and completeness.

Three independent routes decide completeness: a scan straight from the
definition, the bar-code criterion that looks only at the next bar, and
the recursion on slices of the maximal variable. They must always agree.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .barcode import build_barcode, star_marking
from .errors import EmptyTermSetError, InternalInvariantError
from .terms import (
    Term,
    TermSet,
    VariableOrdering,
    as_termset,
    divides,
    lex_key,
    times_var,
)

__all__ = [
    "JanetDecomposition",
    "CompletenessReport",
    "mult_vars_definition",
    "decomposition_definition",
    "mult_vars_barcode",
    "cone_contains",
    "involutive_divisor",
    "is_complete_definition",
    "is_complete_barcode",
    "is_complete_recursive",
]


@dataclass(frozen=True)
class JanetDecomposition:
    """Multiplicative variables of every term of a set under one ordering."""

    ordering: VariableOrdering
    mult: Mapping[Term, frozenset[int]]

    def nonmult(self, t) -> frozenset[int]:
        return frozenset(range(self.ordering.n)) - self.mult[t]

    def __getitem__(self, t) -> frozenset[int]:
        return self.mult[t]

    def __iter__(self):
        return iter(self.mult)

    def __len__(self) -> int:
        return len(self.mult)


@dataclass(frozen=True)
class CompletenessReport:
    """Outcome of a completeness test.

    ``witnesses`` maps every pair ``(t, v)`` with ``v`` non-multiplicative
    for ``t`` to the involutive divisor of ``x_v * t``, or ``None``.
    """

    complete: bool
    witnesses: Mapping[tuple[Term, int], Term | None]
    first_failure: tuple[Term, int] | None
    ordering: VariableOrdering

    def failures(self) -> list[tuple[Term, int]]:
        return _sorted_pairs([p for p, s in self.witnesses.items() if s is None], self.ordering)


def _sorted_pairs(pairs, ord: VariableOrdering):
    return sorted(pairs, key=lambda p: (lex_key(p[0], ord), ord.rank(p[1])))


def _report(witnesses: dict, ord: VariableOrdering) -> CompletenessReport:
    failing = [p for p, s in witnesses.items() if s is None]
    first = _sorted_pairs(failing, ord)[0] if failing else None
    return CompletenessReport(not failing, witnesses, first, ord)


def _nonempty(U, ord: VariableOrdering) -> TermSet:
    U = as_termset(U, ord.n)
    if not len(U):
        raise EmptyTermSetError("completeness is only decided for non-empty sets")
    return U


def mult_vars_definition(t, U, ord: VariableOrdering) -> tuple[frozenset[int], frozenset[int]]:
    """``(mult, nonmult)`` for ``t`` by scanning ``U``.

    ``x_v`` is non-multiplicative iff some ``u`` in ``U`` agrees with ``t`` on
    every variable above ``x_v`` and has a larger ``x_v`` exponent.
    """
    U = as_termset(U, ord.n)
    if t not in U:
        raise ValueError(f"{Term(t)} is not in the set")
    mult, nonmult = set(), set()
    for v in range(ord.n):
        higher = ord.order[ord.rank(v) + 1 :]
        blocked = any(
            u[v] > t[v] and all(u[w] == t[w] for w in higher) for u in U
        )
        (nonmult if blocked else mult).add(v)
    return frozenset(mult), frozenset(nonmult)


def _nonmult_matrix(terms: Sequence[Term], ord: VariableOrdering) -> np.ndarray:
    """Boolean ``(m, n)`` array; entry ``[i, v]`` is True iff ``x_v`` is non-multiplicative for ``terms[i]``.

    Same rule as :func:`mult_vars_definition`, evaluated over all pairs at once.
    """
    K = np.array([[t[v] for v in ord.order] for t in terms], dtype=np.int64)  # column = rank
    eq = K[:, None, :] == K[None, :, :]
    # from_rank[t, u, r]: agree on every rank >= r
    from_rank = np.logical_and.accumulate(eq[:, :, ::-1], axis=2)[:, :, ::-1]
    above = np.ones_like(eq)
    above[:, :, :-1] = from_rank[:, :, 1:]
    larger = K[None, :, :] > K[:, None, :]
    by_rank = (above & larger).any(axis=1)
    return by_rank[:, np.argsort(ord.order)]


def decomposition_definition(U, ord: VariableOrdering) -> JanetDecomposition:
    U = as_termset(U, ord.n)
    if not len(U):
        return JanetDecomposition(ord, {})
    nm = _nonmult_matrix(U.terms, ord)
    return JanetDecomposition(
        ord,
        {t: frozenset(np.flatnonzero(~nm[i]).tolist()) for i, t in enumerate(U.terms)},
    )


def mult_vars_barcode(U, ord: VariableOrdering) -> JanetDecomposition:
    """Read multiplicative variables off the stars of the bar code."""
    U = _nonempty(U, ord)
    B = build_barcode(U, ord)
    stars = star_marking(B)
    mult = {}
    for c, t in enumerate(B.column_terms):
        mult[t] = frozenset(
            ord.var(r) for r in range(B.n) if stars.is_starred(r, B.bar_under(r, c).index)
        )
    return JanetDecomposition(ord, mult)


def cone_contains(w, t, mult) -> bool:
    """True iff ``w`` is ``t`` times a product of variables from ``mult``."""
    if not divides(t, w):
        return False
    return all(a == b or v in mult for v, (a, b) in enumerate(zip(t, w)))


def involutive_divisor(w, U, dec: JanetDecomposition) -> Term | None:
    """The element of ``U`` whose cone contains ``w``, if any."""
    owners = [t for t in as_termset(U, dec.ordering.n) if cone_contains(w, t, dec.mult[t])]
    if len(owners) > 1:
        raise InternalInvariantError(f"cones of {owners} overlap at {Term(w)}")
    return owners[0] if owners else None


def is_complete_definition(U, ord: VariableOrdering) -> CompletenessReport:
    """Check every non-multiplicative prolongation against every cone in ``U``."""
    U = _nonempty(U, ord)
    terms = U.terms
    nm = _nonmult_matrix(terms, ord)
    pairs = [(t, v) for i, t in enumerate(terms) for v in range(ord.n) if nm[i, v]]
    if not pairs:
        return _report({}, ord)
    T = np.array(terms, dtype=np.int64)
    W = np.array([times_var(t, v) for t, v in pairs], dtype=np.int64)
    diff = W[:, None, :] - T[None, :, :]
    # w in C(u): u | w and every variable of w / u is multiplicative for u
    inside = ((diff == 0) | ((diff > 0) & ~nm[None, :, :])).all(axis=2)
    witnesses = {}
    for p, w, row in zip(pairs, W, inside):
        owners = np.flatnonzero(row)
        if len(owners) > 1:
            raise InternalInvariantError(
                f"cones of {[terms[k] for k in owners]} overlap at {Term(w)}"
            )
        witnesses[p] = terms[owners[0]] if len(owners) else None
    return _report(witnesses, ord)


def is_complete_barcode(U, ord: VariableOrdering) -> CompletenessReport:
    """Completeness read from the bar code.

    For ``x_v`` non-multiplicative on ``t`` only the terms over the bar right
    after ``t``'s rank(v)-bar can divide ``x_v * t`` involutively; such an
    ``s`` qualifies iff it divides and every variable of the quotient has a
    star after its bar under ``s``.
    """
    U = _nonempty(U, ord)
    B = build_barcode(U, ord)
    stars = star_marking(B)
    cols = B.column_terms
    witnesses = {}
    for c, t in enumerate(cols):
        for r in range(B.n):
            bar = B.bar_under(r, c)
            if stars.is_starred(r, bar.index):
                continue
            if bar.index + 1 >= B.mu(r):
                # the last bar of a row always carries a star
                raise InternalInvariantError(f"unstarred last bar {bar}")
            v = ord.var(r)
            w = times_var(t, v)
            found = []
            for s_col in B.rows[r][bar.index + 1].columns():
                s = cols[s_col]
                if not divides(s, w):
                    continue
                if all(
                    stars.is_starred(ord.rank(y), B.bar_under(ord.rank(y), s_col).index)
                    for y, (a, b) in enumerate(zip(s, w))
                    if a != b
                ):
                    found.append(s)
            if len(found) > 1:
                raise InternalInvariantError(f"cones of {found} overlap at {w}")
            witnesses[(t, v)] = found[0] if found else None
    return _report(witnesses, ord)


def _mult_positions(S: set[tuple[int, ...]]) -> dict[tuple[int, ...], set[int]]:
    # keys are max-first; position p is multiplicative for s iff nothing in S
    # shares s[:p] and beats s[p]
    out = {}
    for s in S:
        out[s] = {
            p
            for p in range(len(s))
            if not any(u[p] > s[p] and u[:p] == s[:p] for u in S)
        }
    return out


def _complete_slices(S: set[tuple[int, ...]]) -> bool:
    if not S or not len(next(iter(S))):
        return True
    slices: dict[int, set] = defaultdict(set)
    for k in S:
        slices[k[0]].add(k[1:])
    alpha = max(slices)
    if not all(_complete_slices(part) for part in slices.values()):
        return False
    for lam, part in slices.items():
        if lam == alpha:
            continue
        upper = slices.get(lam + 1)
        if not upper:
            return False
        mult = _mult_positions(upper)
        for tp in part:
            if not any(
                all(a <= b for a, b in zip(s, tp))
                and all(a == b or p in mult[s] for p, (a, b) in enumerate(zip(s, tp)))
                for s in upper
            ):
                return False
    return True


def is_complete_recursive(U, ord: VariableOrdering) -> bool:
    """Completeness by recursion on the maximal variable.

    The set splits into slices of equal top exponent. It is complete iff
    every slice (top variable dropped) is complete and each element of a
    non-top slice lies in a cone of the next slice up, cones taken inside
    that slice.
    """
    U = _nonempty(U, ord)
    return _complete_slices({lex_key(t, ord) for t in U})
