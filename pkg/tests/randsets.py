"""Seeded random term sets and small reference helpers shared by the tests."""

import itertools
import random

from janetbar import VariableOrdering, is_complete_definition, mult_vars_definition
from janetbar.formats import parse_term
from janetbar.terms import Term, times_var


def T(text, n):
    return parse_term(text, n)


def S(texts, n):
    return [parse_term(s, n) for s in texts.split()]


def random_set(rng, n_max=5, m_max=20, e_max=4, n=None):
    n = n or rng.randint(1, n_max)
    e = rng.randint(1, e_max)
    m = rng.randint(1, min(m_max, (e + 1) ** n))
    seen = set()
    while len(seen) < m:
        seen.add(tuple(rng.randint(0, e) for _ in range(n)))
    return [Term(t) for t in sorted(seen)]


def downward_closure(terms):
    out = set()
    for t in terms:
        for d in itertools.product(*(range(e + 1) for e in t)):
            out.add(d)
    return [Term(t) for t in sorted(out)]


def random_order_ideal(rng, n_max=4, e_max=3, size_max=40):
    while True:
        n = rng.randint(1, n_max)
        gens = [tuple(rng.randint(0, e_max) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        N = downward_closure(gens)
        if len(N) <= size_max:
            return N


def random_ordering(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return VariableOrdering(tuple(p))


def janet_completion(U, ord, limit=60):
    """Add non-multiplicative prolongations lacking an involutive divisor until complete.

    Returns ``None`` once the set grows past ``limit``.
    """
    U = list(U)
    while True:
        report = is_complete_definition(U, ord)
        if report.complete:
            return U
        t, v = report.first_failure
        U.append(times_var(t, v))
        if len(U) > limit:
            return None


def random_search_instance(rng, n_max=5, m_max=15, e_max=4):
    """Plain random set two times in three, otherwise a completed set (so orderings exist)."""
    if rng.random() < 2 / 3:
        return random_set(rng, n_max, m_max, e_max)
    while True:
        base = random_set(rng, n_max, max(2, m_max // 3), e_max)
        done = janet_completion(base, random_ordering(rng, len(base[0])), limit=m_max)
        if done is not None:
            return sorted(done)


def all_orderings(n):
    return [VariableOrdering(p) for p in itertools.permutations(range(n))]


def brute_decomposition(U, ord):
    return {t: mult_vars_definition(t, U, ord)[0] for t in U}
