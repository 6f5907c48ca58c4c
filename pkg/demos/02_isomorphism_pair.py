"""
Deciding graded isomorphism of two presentations
================================================

The same ring written in two coordinate systems should be recognized
as isomorphic, and the engine should hand back a checkable generator
map as the witness.
"""

import finalg

# the ring GF(2)[x,y]/(xy) with both generators in degree 1
left = finalg.parse("""\
algebra plain
char 2
mode commutative
gen x 1
gen y 1
rel x*y
""")

# the same ring after the change of basis x -> x, y -> x + y:
# xy turns into x^2 + xy
right = finalg.parse("""\
algebra sheared
char 2
mode commutative
gen x 1
gen y 1
rel x^2 + x*y
""")

verdict = finalg.graded_isomorphism(left, right)
print("outcome:", verdict.outcome)
print("certificate:", verdict.certificate)
print("candidates enumerated:", verdict.statistics["enumerated"],
      "of", verdict.statistics["candidate_space"])

# the certificate is an independent object: re-check it from scratch
assert finalg.verify_certificate(left, right, verdict.certificate)
print("certificate re-verified")

# a pair with the same dimensions in low degrees can still be refuted
other = finalg.parse("""\
algebra square_zero
char 2
mode commutative
gen x 1
gen y 1
rel x^2
rel x*y
rel y^2
""")
verdict = finalg.graded_isomorphism(left, other)
print("against square_zero:", verdict.outcome, "--", verdict.reason)
