"""
Drawing a Bar Code
==================

A finite set of terms, sorted lexicographically, becomes a stack of rows
of bars: one row per variable, minimal variable on top. Columns sharing
the exponents of every variable from a given row downwards sit over the
same bar of that row.
"""

from janetbar import VariableOrdering, build_barcode, decode, elist, is_admissible, star_set
from janetbar.formats import parse_terms
from janetbar.render import ascii_diagram

# A five-term set in three variables, with x1 < x2 < x3
M = parse_terms("x1\nx1^2\nx2*x3\nx1*x2^2*x3\nx2^3*x3")
B = build_barcode(M, VariableOrdering.identity(3))
print(ascii_diagram(B))

# Each row covers all five columns; the row lengths record the bar widths
print("row lengths:", B.row_lengths())

# The shape alone does not remember the set. Labelling it from the bottom
# up (j-th bar of the last row gets x3^j, the k-th bar above a labelled bar
# multiplies in the row variable to the k) gives the canonical labels:
print("decoded labels:", [str(t) for t in decode(B)])

# Those labels are exactly the e-lists of the columns, read x3, x2, x1
for c in range(B.m):
    print(f"  column {c}: e-list {elist(B, c)}")

# The decoded set misses x2 although x2*x3 is present, so this shape is not
# admissible: it is not the Bar Code of any order ideal.
print("admissible:", is_admissible(B))

# An order ideal, by contrast, decodes to itself and carries a star set:
# the terms just outside it.
N = parse_terms("1\nx1\nx2\nx3")
BN = build_barcode(N, VariableOrdering.identity(3))
print()
print(ascii_diagram(BN))
print("decoded labels:", [str(t) for t in decode(BN)])
print("star set:", [str(t) for t in star_set(BN)])
