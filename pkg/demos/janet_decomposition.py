"""
Multiplicative variables from the stars
=======================================

A star after a bar means the row's variable is multiplicative, in Janet's
sense, for every term over that bar. Reading the stars column by column
gives the whole decomposition at once.
"""

from janetbar import VariableOrdering, build_barcode, decomposition_definition, mult_vars_barcode
from janetbar.formats import parse_terms
from janetbar.render import ascii_diagram
from janetbar.terms import variable_name

U = parse_terms("x1^3\nx2^3\nx1^4*x2*x3\nx3^2")
ordering = VariableOrdering.identity(3)
print(ascii_diagram(build_barcode(U, ordering)))


def names(vs):
    return "{" + ", ".join(variable_name(v) for v in sorted(vs)) + "}"


dec = mult_vars_barcode(U, ordering)
for t in dec:
    print(f"{str(t):12} multiplicative {names(dec.mult[t]):14} non-multiplicative {names(dec.nonmult(t))}")

# The same table straight from the definition: x_v is non-multiplicative
# for t when another term agrees with t on every variable above x_v and has
# a higher power of x_v.
assert decomposition_definition(U, ordering).mult == dec.mult
print("stars agree with the definition")

# The decomposition depends on the ordering. With two linear terms, the
# larger variable is multiplicative for everything and the smaller one
# only for itself.
V = parse_terms("x1\nx2")
for order in [(0, 1), (1, 0)]:
    o = VariableOrdering(order)
    d = mult_vars_barcode(V, o)
    print(o, {str(t): names(d.mult[t]) for t in d})
