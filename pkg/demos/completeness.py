"""
Deciding completeness
=====================

A set is complete when every product of a term with one of its
non-multiplicative variables lies in the cone of some term of the set.
On the Bar Code only the terms over the next bar of the same row can
serve, which turns the check into a short local scan.
"""

from janetbar import (
    VariableOrdering,
    is_complete_barcode,
    is_complete_definition,
    is_complete_recursive,
)
from janetbar.formats import parse_terms
from janetbar.terms import times_var, variable_name


def show(report):
    for (t, v), s in report.witnesses.items():
        w = times_var(t, v)
        print(f"  {t} * {variable_name(v)} = {w}: {'no involutive divisor' if s is None else 'in the cone of ' + str(s)}")
    print("  complete" if report.complete else f"  not complete, first failure {report.first_failure[0]} * {variable_name(report.first_failure[1])}")


# x1^3 * x2 would need a divisor among the terms over the next x2-bar,
# and the only one there is x2^3.
U = parse_terms("x1^3\nx2^3\nx1^4*x2*x3\nx3^2")
show(is_complete_barcode(U, VariableOrdering.identity(3)))

# {x^2, xy} with x < y: x^2 * y falls in the cone of xy.
V = parse_terms("x1^2\nx1*x2")
show(is_complete_barcode(V, VariableOrdering.identity(2)))

# Three independent deciders: the bar-code scan, a brute check of every
# cone, and a recursion slicing the set by the degree of the maximal
# variable. They always agree.
for S, o in [(U, VariableOrdering.identity(3)), (V, VariableOrdering.identity(2))]:
    print(
        is_complete_barcode(S, o).complete,
        is_complete_definition(S, o).complete,
        is_complete_recursive(S, o),
    )
