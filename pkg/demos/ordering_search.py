"""
Searching for a good variable ordering
======================================

Completeness depends on the ordering. Rather than testing all n!
orderings, the search builds the Bar Code from the maximal variable down,
keeps a table of candidate involutive divisors, and backtracks as soon as
some product is left without one.
"""

from janetbar import (
    PartialBarCode,
    VariableOrdering,
    brute_force_orderings,
    build_barcode,
    candidate_var,
    find_ordering,
    friends,
)
from janetbar.formats import parse_terms
from janetbar.render import ascii_diagram
from janetbar.terms import variable_name

# Degree gaps rule variables out immediately: with x1 degrees {1, 3} and
# x2 degrees {1, 3}, neither can be the maximal variable, so no ordering
# works.
U = parse_terms("x1*x2^3\nx1^3*x2")
print("candidates for the maximal variable:", sorted(candidate_var(U, range(2))))
print("search:", find_ordering(U).ordering, " brute force:", brute_force_orderings(U))

# A ten-term set in four variables, followed step by step.
M = parse_terms(
    "x2*x3\nx1^2\nx3^2\nx2^2\nx1*x2\nx1*x2*x4\nx1^2*x4\nx4*x3\nx2^2*x4\nx1^2*x3"
)
x1, x2, x3, x4 = range(4)
p = PartialBarCode.start(M).place(x3)
table = friends(p, {})
print("\nafter placing x3, candidate involutive divisors of x3 * x1^2*x4:")
for (t, v), cands in table.items():
    if str(t) == "x1^2*x4":
        print("  ", [(str(u), sorted(variable_name(a) for a in alpha)) for u, alpha in cands])

p = p.place(x4)
table = friends(p, table)
print("after placing x4 (x1^2*x3 is not on the last x4-bar, so it drops out):")
for (t, v), cands in table.items():
    if str(t) == "x1^2*x4":
        print("  ", [(str(u), sorted(variable_name(a) for a in alpha)) for u, alpha in cands])

p = p.place(x2)
print("after placing x2 every bar holds one term:", p.is_unitary())
print("x1 is the only variable left, giving x1<x2<x4<x3")
print(ascii_diagram(build_barcode(M, VariableOrdering((x1, x2, x4, x3)))))

# The search itself tries candidates by increasing index and reports its trace
result = find_ordering(M)
for event in result.trace:
    print("#", event)
print("found:", result.ordering)
print("every complete ordering:", sorted(str(o) for o in brute_force_orderings(M)))
