"""
Normal forms in a PBW presentation
==================================

A presentation lists generators with degrees and one rewrite rule for every
pair ``g_j*g_i`` with ``j > i``.  Products are reduced to standard monomials.
"""

# %%
from semigraded import corpus, normal_form, parse_presentation, validate
from semigraded.ncpoly import NcPolynomial

weyl = parse_presentation(
    """
    field Q
    gen x 1
    gen y 1
    rel y*x = x*y + 1
    """
)
print(weyl.render())

# %%
# Moving ``y`` past powers of ``x`` produces lower-degree terms.
for n in range(2, 6):
    print(f"y*x^{n} =", normal_form(weyl, f"y*x^{n}"))

# %%
# Elements support the usual ring operations.
x, y = NcPolynomial.generator(weyl, "x"), NcPolynomial.generator(weyl, "y")
print((x * y) ** 2)
print(y * x - x * y)

# %%
# The same word in characteristic 2 loses the even terms.
weyl2 = corpus.load("weyl_gf2")
print(normal_form(weyl2, "y*x^3"))

# %%
# ``validate`` checks overlaps, compares two rewriting strategies on random
# words and tests the degree axiom, all up to a bound.
report = validate(corpus.load("3dim"), 6)
print(report.ok, report.confluent_to_degree, report.sg_axiom_verified_to_degree)

# %%
# A broken system is caught at the overlap ``z*y*x``.
bad = parse_presentation("field Q; gen x 1; gen y 1; gen z 1; rel y*x = x*y + z; rel z*x = 2*x*z; rel z*y = y*z")
print(validate(bad, 4).violations[0])
