"""Term text syntax, term-set files and JSON encodings.

Terms are written either as products such as ``x1^4*x2*x3`` (``1`` is the
constant term) or as whitespace-separated exponent vectors such as
``4 1 1``. A lone ``1`` always means the constant term. Files hold one term
per line; ``#`` starts a comment and blank lines are ignored.
"""

from __future__ import annotations

import re

from .errors import DimensionError, ParseError
from .janet import CompletenessReport, JanetDecomposition
from .search import SearchResult, TraceEvent
from .terms import Term, TermSet, VariableOrdering, variable_name

__all__ = [
    "parse_term",
    "parse_terms",
    "parse_ordering",
    "format_ordering",
    "termset_to_json",
    "termset_from_json",
    "ordering_to_json",
    "ordering_from_json",
    "report_to_json",
    "report_from_json",
    "decomposition_to_json",
    "decomposition_from_json",
    "search_to_json",
    "search_from_json",
]

_FACTOR = re.compile(r"\s*x(\d+)(?:\s*\^\s*(\d+))?\s*")
_VECTOR = re.compile(r"\s*\d+(?:\s+\d+)*\s*")
_VAR = re.compile(r"x(\d+)$")


def _parse_factors(text: str, line: int, col0: int) -> dict[int, int]:
    if text.strip() == "1":
        return {}
    exps: dict[int, int] = {}
    pos = 0
    while True:
        m = _FACTOR.match(text, pos)
        if not m:
            raise ParseError(f"expected a factor like x3 or x3^2 in {text.strip()!r}", line, col0 + pos + 1)
        index = int(m.group(1))
        if index < 1:
            raise ParseError(f"variable x{index}: variables are numbered from x1", line, col0 + m.start(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        exps[index - 1] = exps.get(index - 1, 0) + power
        pos = m.end()
        if pos == len(text):
            return exps
        if text[pos] != "*":
            raise ParseError(f"unexpected {text[pos]!r}", line, col0 + pos + 1)
        pos += 1


def _parse_raw(text: str, line: int = 1, col0: int = 0):
    """Exponent vector (list) or sparse factor map (dict) for one term."""
    if text.strip() != "1" and _VECTOR.fullmatch(text):
        return [int(x) for x in text.split()]
    return _parse_factors(text, line, col0)


def _densify(raw, n: int, line: int) -> Term:
    if isinstance(raw, list):
        if len(raw) != n:
            raise ParseError(f"exponent vector has {len(raw)} entries, expected {n}", line)
        return Term(raw)
    if raw and max(raw) >= n:
        raise ParseError(f"x{max(raw) + 1} exceeds the declared {n} variables", line)
    values = [0] * n
    for v, e in raw.items():
        values[v] = e
    return Term(values)


def parse_term(text: str, n: int | None = None) -> Term:
    raw = _parse_raw(text)
    if n is None:
        n = len(raw) if isinstance(raw, list) else max(raw, default=0) + 1
    return _densify(raw, n, 1)


def parse_terms(lines, n: int | None = None) -> TermSet:
    """Parse a term-set file (a string or an iterable of lines)."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    entries = []
    for lineno, line in enumerate(lines, 1):
        body = line.split("#", 1)[0]
        if not body.strip():
            continue
        col0 = len(body) - len(body.lstrip())
        entries.append((lineno, _parse_raw(body.strip(), lineno, col0)))
    if n is None:
        widths = {len(r) for _, r in entries if isinstance(r, list)}
        sparse = max((max(r, default=0) + 1 for _, r in entries if isinstance(r, dict)), default=1)
        if len(widths) > 1:
            raise ParseError(f"exponent vectors of different lengths {sorted(widths)}", entries[0][0])
        n = widths.pop() if widths else sparse
    terms, seen = [], {}
    for lineno, raw in entries:
        t = _densify(raw, n, lineno)
        if t in seen:
            raise ParseError(f"duplicate term {t} (first on line {seen[t]})", lineno)
        seen[t] = lineno
        terms.append(t)
    return TermSet(tuple(terms), n)


def parse_ordering(text: str, n: int) -> VariableOrdering:
    """``identity`` or ``x1<x2<x4<x3`` (minimal variable first)."""
    text = text.strip()
    if text == "identity":
        return VariableOrdering.identity(n)
    order = []
    for part in text.split("<"):
        m = _VAR.match(part.strip())
        if not m or int(m.group(1)) < 1:
            raise ParseError(f"bad variable {part.strip()!r} in ordering {text!r}")
        order.append(int(m.group(1)) - 1)
    if sorted(order) != list(range(n)):
        raise ParseError(f"ordering {text!r} is not a permutation of x1..x{n}")
    return VariableOrdering(tuple(order))


def format_ordering(ord: VariableOrdering) -> str:
    return str(ord)


def termset_to_json(U: TermSet) -> dict:
    return {"n": U.n, "terms": [list(t) for t in U]}


def termset_from_json(data: dict) -> TermSet:
    return TermSet.of(data["terms"], data["n"])


def ordering_to_json(ord: VariableOrdering | None):
    return None if ord is None else str(ord)


def ordering_from_json(data, n: int | None = None) -> VariableOrdering | None:
    if data is None:
        return None
    n = n if n is not None else data.count("<") + 1
    return parse_ordering(data, n)


def _var_from_json(name: str) -> int:
    m = _VAR.match(name)
    if not m:
        raise ParseError(f"bad variable name {name!r}")
    return int(m.group(1)) - 1


def report_to_json(report: CompletenessReport) -> dict:
    pairs = sorted(report.witnesses.items(), key=lambda kv: (kv[0][0][::-1], kv[0][1]))
    return {
        "ordering": str(report.ordering),
        "complete": report.complete,
        "first_failure": None
        if report.first_failure is None
        else {"term": list(report.first_failure[0]), "variable": variable_name(report.first_failure[1])},
        "witnesses": [
            {
                "term": list(t),
                "variable": variable_name(v),
                "divisor": None if s is None else list(s),
            }
            for (t, v), s in pairs
        ],
    }


def report_from_json(data: dict) -> CompletenessReport:
    ord = ordering_from_json(data["ordering"])
    witnesses = {
        (Term(w["term"]), _var_from_json(w["variable"])): None if w["divisor"] is None else Term(w["divisor"])
        for w in data["witnesses"]
    }
    ff = data["first_failure"]
    first = None if ff is None else (Term(ff["term"]), _var_from_json(ff["variable"]))
    return CompletenessReport(data["complete"], witnesses, first, ord)


def decomposition_to_json(dec: JanetDecomposition) -> dict:
    return {
        "ordering": str(dec.ordering),
        "terms": [
            {
                "term": list(t),
                "mult": [variable_name(v) for v in sorted(dec.mult[t])],
                "nonmult": [variable_name(v) for v in sorted(dec.nonmult(t))],
            }
            for t in dec
        ],
    }


def decomposition_from_json(data: dict) -> JanetDecomposition:
    ord = ordering_from_json(data["ordering"])
    mult = {}
    for row in data["terms"]:
        t = Term(row["term"])
        if len(t) != ord.n:
            raise DimensionError(f"term {row['term']} does not match {ord}")
        mult[t] = frozenset(_var_from_json(v) for v in row["mult"])
    return JanetDecomposition(ord, mult)


def search_to_json(result: SearchResult) -> dict:
    return {
        "ordering": ordering_to_json(result.ordering),
        "unitary_prefix": None
        if result.unitary_prefix is None
        else [variable_name(v) for v in result.unitary_prefix],
        "trace": [
            {
                "depth": e.depth,
                "variable": None if e.variable is None else variable_name(e.variable),
                "outcome": e.outcome,
            }
            for e in result.trace
        ],
    }


def search_from_json(data: dict) -> SearchResult:
    trace = tuple(
        TraceEvent(e["depth"], None if e["variable"] is None else _var_from_json(e["variable"]), e["outcome"])
        for e in data["trace"]
    )
    prefix = data["unitary_prefix"]
    return SearchResult(
        ordering_from_json(data["ordering"]),
        trace,
        None if prefix is None else tuple(_var_from_json(v) for v in prefix),
    )
