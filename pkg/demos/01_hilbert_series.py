"""
Graded dimensions and Hilbert series of a presented algebra
===========================================================

Parse a small presentation, read off the dimension of each graded
piece from the truncated multiplication engine, and compare with the
closed-form rational series computed from a Groebner basis.
"""

import finalg

# a polynomial ring over GF(2) with one degree-1 and one degree-2
# generator, modulo the square of the first
text = """\
algebra demo_ring
char 2
mode commutative
gen x 1
gen y 2
rel x^2
"""
pres = finalg.parse(text)
print("presentation:", pres.name, "over GF(%d)" % pres.p)

# the truncated engine gives dim A_n for every n up to the bound
T = finalg.TruncatedAlgebra(pres, 12)
print("dims to degree 12:", T.dims())

# the same counts in closed form: a complete Groebner basis yields a
# rational generating function
G = finalg.groebner_basis(pres)
series = finalg.series_of_quotient(G)
print("series:", series.canonical())

# expanding the series must reproduce the engine's counts
expanded = finalg.dims_from_series(series, 12)
print("series expansion:", expanded)
assert expanded == T.dims()
print("engine and series agree")
