"""
Sign conventions at an odd prime
================================

Over GF(3) the grading imposes signs: swapping two odd-degree factors
negates a product and every odd-degree generator squares to zero.
Both rules are applied during normalization, before any user relation
is consulted.
"""

import finalg

pres = finalg.parse("""\
algebra signs
char 3
mode commutative
gen x 1
gen y 1
""")

# x*x collapses to the zero polynomial all by itself
print("x*x ->", pres.format_poly(pres.parse_poly("x*x")))

# y*x is rewritten to -x*y, i.e. coefficient 2 mod 3
print("y*x ->", pres.format_poly(pres.parse_poly("y*x")))

# with one odd and one even generator the ring is a tensor of an
# exterior line and a polynomial line: one basis monomial per degree
mixed = finalg.parse("""\
algebra mixed
char 3
mode commutative
gen a 1
gen b 2
""")
T = finalg.TruncatedAlgebra(mixed, 10)
print("dims of GF(3)<a:1> (x) GF(3)[b:2]:", T.dims())

# the sign rules matter to isomorphism testing: these two rings agree
# in every dimension but only one of them kills a*b
flat = finalg.parse("""\
algebra flat
char 3
mode commutative
gen a 1
gen b 2
rel a*b
""")
verdict = finalg.graded_isomorphism(mixed, flat)
print("mixed vs flat:", verdict.outcome, "--", verdict.reason)
