import random

import pytest

from janetbar import (
    Bar,
    BarCode,
    MalformedBarCodeError,
    NotAdmissibleError,
    VariableOrdering,
    build_barcode,
    decode,
    elist,
    is_admissible,
    is_order_ideal,
    star_marking,
    star_set,
    star_set_formula,
)
from janetbar.errors import EmptyTermSetError

from conftest import FIVE_TERMS, ESCALIER, FOUR_TERMS, TEN_TERMS
from randsets import S, T, downward_closure, random_order_ideal, random_ordering, random_set

I3 = VariableOrdering.identity(3)


def test_row_lengths_of_the_five_column_code():
    B = build_barcode(FIVE_TERMS, I3)
    assert B.row_lengths() == [[1, 1, 1, 1, 1], [2, 1, 1, 1], [2, 3]]
    assert [str(t) for t in B.column_terms] == ["x1", "x1^2", "x2*x3", "x1*x2^2*x3", "x2^3*x3"]
    assert all(sum(row) == 5 for row in B.row_lengths())


def test_lengths_measured_in_other_rows():
    B = BarCode.from_row_lengths([[1, 1, 1, 1, 1], [2, 1, 1, 1], [2, 3]])
    first, second = B.rows[2]
    assert B.length_over(first, 1) == 1 and first.length == 2
    assert B.length_over(second, 1) == 3 and second.length == 3
    assert B.mu(0) == 5 and B.mu(1) == 4 and B.mu(2) == 2


def test_decode_labels_the_shape_not_the_set():
    # the set is not an order ideal; decoding yields the unique order-ideal-style labelling
    B = build_barcode(FIVE_TERMS, I3)
    assert [str(t) for t in decode(B)] == ["1", "x1", "x3", "x2*x3", "x2^2*x3"]
    relabelled = build_barcode(decode(B), I3)
    assert relabelled.row_lengths() == B.row_lengths()


def test_elist_equals_decoded_exponents():
    B = build_barcode(FIVE_TERMS, I3)
    assert elist(B, 4) == (1, 2, 0)  # labelled x2^2*x3 after decoding; ranks x3, x2, x1
    B_esc = build_barcode(ESCALIER, I3)
    assert elist(B_esc, 3) == (1, 0, 0)
    for B_ in (B, B_esc):
        for c, t in enumerate(decode(B_)):
            assert elist(B_, c) == tuple(t[v] for v in B_.ordering.max_first)
    with pytest.raises(IndexError):
        elist(B, 5)


def test_admissibility_examples():
    assert is_admissible(build_barcode(ESCALIER, I3))
    assert not is_admissible(build_barcode(FIVE_TERMS, I3))
    assert not is_order_ideal(decode(build_barcode(FIVE_TERMS, I3)))  # x3 divides x2*x3, x2 missing


def test_round_trip_on_order_ideals():
    rng = random.Random(7)
    for _ in range(200):
        N = random_order_ideal(rng)
        ord = random_ordering(rng, len(N[0]))
        assert set(decode(build_barcode(N, ord))) == set(N)


def test_star_marking_of_the_four_term_example():
    stars = star_marking(build_barcode(FOUR_TERMS, I3))
    assert stars.starred == {(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2)}


def test_star_set_of_the_escalier():
    F = star_set(build_barcode(ESCALIER, I3))
    assert [str(t) for t in F] == ["x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3", "x3^2"]
    assert set(F) == star_set_formula(ESCALIER, I3)


def test_star_set_small_cases():
    I2 = VariableOrdering.identity(2)
    assert [str(t) for t in star_set(build_barcode(S("1 x1", 2), I2))] == ["x1^2", "x2"]
    assert [str(t) for t in star_set(build_barcode(S("1", 1), VariableOrdering.identity(1)))] == ["x1"]


def test_star_set_rejects_non_order_ideals():
    with pytest.raises(NotAdmissibleError) as info:
        star_set(build_barcode(FIVE_TERMS, I3))
    assert info.value.witness is not None


def test_star_set_is_lex_sorted_and_matches_formula():
    rng = random.Random(11)
    for _ in range(200):
        N = random_order_ideal(rng)
        ord = random_ordering(rng, len(N[0]))
        F = star_set(build_barcode(N, ord))
        keys = [tuple(t[v] for v in ord.max_first) for t in F]
        assert keys == sorted(keys) and len(set(F)) == len(F)
        assert set(F) == star_set_formula(N, ord)


def test_last_row_of_the_ten_term_example():
    B = build_barcode(TEN_TERMS, VariableOrdering((0, 1, 3, 2)))  # x1 < x2 < x4 < x3
    assert B.row_lengths()[-1] == [6, 3, 1]
    assert sum(B.row_lengths()[-1]) == 10


def test_builder_invariants_on_random_sets():
    rng = random.Random(5)
    for _ in range(300):
        M = random_set(rng)
        ord = random_ordering(rng, len(M[0]))
        B = build_barcode(M, ord)
        assert all(sum(row) == len(M) for row in B.row_lengths())
        assert B.mu(B.n - 1) == len({t[ord.var(B.n - 1)] for t in M})
        assert [B.bar_under(0, c).index for c in range(B.m)] == list(range(B.m))
        # every column sits under exactly one bar per row, and its parent chain is consistent
        for c in range(B.m):
            for r in range(B.n - 1):
                assert B.parent(B.bar_under(r, c)) == B.bar_under(r + 1, c)


@pytest.mark.parametrize(
    "rows",
    [
        [[1, 1], [1]],  # row lengths differ
        [[2], [2]],  # top row bar wider than one column
        [[1, 1, 1], [2, 1], [1, 2]],  # a row-1 bar straddles two row-2 bars
        [[1], []],
    ],
)
def test_malformed_codes_are_rejected(rows):
    with pytest.raises(MalformedBarCodeError):
        BarCode.from_row_lengths(rows)


def test_misplaced_bar_and_wrong_row_count():
    with pytest.raises(MalformedBarCodeError):
        BarCode(((Bar(0, 0, 0, 1), Bar(0, 0, 1, 2)),), VariableOrdering.identity(1))
    with pytest.raises(MalformedBarCodeError):
        BarCode(((Bar(0, 0, 0, 1),),), VariableOrdering.identity(2))


def test_empty_set_is_rejected():
    with pytest.raises(EmptyTermSetError):
        build_barcode([], I3)


def test_diagram_model():
    model = build_barcode(FOUR_TERMS, I3).diagram()
    assert model["columns"] == ["x1^3", "x2^3", "x1^4*x2*x3", "x3^2"]
    assert [r["variable"] for r in model["rows"]] == ["x1", "x2", "x3"]
    bottom = model["rows"][2]["bars"]
    assert [(b["start"], b["end"], b["starred"]) for b in bottom] == [(0, 2, False), (2, 3, False), (3, 4, True)]


def test_downward_closure_helper_gives_order_ideals():
    N = downward_closure([T("x1^2*x2", 2)])
    assert is_order_ideal(N) and len(N) == 6
