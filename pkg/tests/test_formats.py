import json
import random
from pathlib import Path

import jsonschema
import pytest

from janetbar import ParseError, Term, TermSet, VariableOrdering, build_barcode, find_ordering
from janetbar.formats import (
    decomposition_from_json,
    decomposition_to_json,
    ordering_from_json,
    ordering_to_json,
    parse_ordering,
    parse_term,
    parse_terms,
    report_from_json,
    report_to_json,
    search_from_json,
    search_to_json,
    termset_from_json,
    termset_to_json,
)
from janetbar.janet import is_complete_barcode, mult_vars_barcode

from conftest import FOUR_TERMS, GAPPED, TEN_TERMS
from randsets import random_ordering, random_search_instance, random_set

SCHEMA = json.loads((Path(__file__).parent.parent / "docs" / "report.schema.json").read_text())


def validate(doc, kind):
    jsonschema.validate(doc, {**SCHEMA, "$ref": f"#/$defs/{kind}"})


def test_parse_products_and_vectors():
    assert parse_term("x1^4*x2*x3") == (4, 1, 1)
    assert parse_term("x2 * x2^2", 3) == (0, 3, 0)
    assert parse_term("4 1 1") == (4, 1, 1)
    assert parse_term("1", 2) == (0, 0)
    assert parse_term("0 1") == (0, 1)


def test_parse_term_file():
    text = "# the four-term set\nx1^3\nx2^3   # comment\n\nx1^4*x2*x3\nx3^2\n"
    U = parse_terms(text)
    assert U == TermSet.of(FOUR_TERMS) and U.n == 3
    assert parse_terms("1 0\n0 1\n").n == 2
    assert parse_terms("x1\n", 4).n == 4


@pytest.mark.parametrize(
    "text, line",
    [
        ("x1\nx0\n", 2),
        ("x1\nx1\n", 2),
        ("x1\ny2\n", 2),
        ("1 0\n1 0 0\n", 1),
        ("x1^\n", 1),
        ("x1**x2\n", 1),
    ],
)
def test_parse_errors_carry_a_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_terms(text)
    assert info.value.line == line


def test_declared_width_is_enforced():
    with pytest.raises(ParseError):
        parse_terms("x3\n", 2)
    with pytest.raises(ParseError):
        parse_terms("1 2 3\n", 2)


def test_parse_ordering():
    assert parse_ordering("identity", 3) == VariableOrdering.identity(3)
    assert parse_ordering("x1<x2<x4<x3", 4) == VariableOrdering((0, 1, 3, 2))
    for bad in ("x1<x1", "x1<x2", "x1<y2<x3", "x0<x1<x2"):
        with pytest.raises(ParseError):
            parse_ordering(bad, 3)


def test_ordering_json():
    o = VariableOrdering((2, 0, 1))
    assert ordering_to_json(o) == "x3<x1<x2"
    assert ordering_from_json(ordering_to_json(o)) == o
    assert ordering_from_json(None) is None
    validate(ordering_to_json(o), "ordering")


def test_termset_round_trip():
    U = TermSet.of(TEN_TERMS)
    doc = termset_to_json(U)
    validate(doc, "termset")
    assert termset_from_json(json.loads(json.dumps(doc))) == U


def test_reports_decompositions_searches_round_trip():
    rng = random.Random(17)
    for _ in range(40):
        U = random_set(rng, n_max=4, m_max=10)
        ord = random_ordering(rng, len(U[0]))
        report = is_complete_barcode(U, ord)
        doc = json.loads(json.dumps(report_to_json(report)))
        validate(doc, "report")
        assert report_from_json(doc) == report
        dec = mult_vars_barcode(U, ord)
        doc = json.loads(json.dumps(decomposition_to_json(dec)))
        validate(doc, "decomposition")
        assert decomposition_from_json(doc) == dec
        result = find_ordering(random_search_instance(rng, n_max=4, m_max=10))
        doc = json.loads(json.dumps(search_to_json(result)))
        validate(doc, "search")
        assert search_from_json(doc) == result


def test_negative_search_serialises():
    doc = search_to_json(find_ordering(GAPPED))
    validate(doc, "search")
    assert doc["ordering"] is None and doc["trace"][-1]["outcome"] == "no-candidates"


def test_diagram_model_matches_schema():
    validate(build_barcode(TEN_TERMS, VariableOrdering((0, 1, 3, 2))).diagram(), "diagram")


def test_schema_rejects_bad_documents():
    with pytest.raises(jsonschema.ValidationError):
        validate({"n": 0, "terms": []}, "termset")
    with pytest.raises(jsonschema.ValidationError):
        validate({"ordering": "x1<", "complete": True, "first_failure": None, "witnesses": []}, "report")
    with pytest.raises(jsonschema.ValidationError):
        validate({"ordering": None, "unitary_prefix": None, "trace": [{"depth": 0, "variable": "x1", "outcome": "x"}]}, "search")


def test_term_display_round_trips_through_the_parser():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(1, 5)
        t = Term(rng.randint(0, 4) for _ in range(n))
        assert parse_term(str(t), n) == t
