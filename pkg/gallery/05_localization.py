"""
Fractions over a central monomial
=================================

Inverting the powers of a central monomial ``c`` gives fractions ``f/c^k``
with a canonical reduced form and a grading that allows negative degrees.
"""

# %%
from semigraded import central_denominator, corpus, frac_decompose, parse_fraction

three_dim = corpus.load("3dim")
z = central_denominator(three_dim, "z")
a = parse_fraction(z, "(x)/z")
b = parse_fraction(z, "(x)/z^2")
print(a + b)
print(a * b)

# %%
# Common factors of ``z`` cancel.
print(parse_fraction(z, "(z^3)/z^2"), parse_fraction(z, "(x*z)/z"))

# %%
# Homogeneous components, keyed by degree.
for degree, part in frac_decompose(a + b).items():
    print(degree, part)

# %%
# In characteristic 2 the square of ``x`` is central in the Weyl algebra and
# can serve as a denominator.
weyl2 = corpus.load("weyl_gf2")
x2 = central_denominator(weyl2, "x^2")
f = parse_fraction(x2, "(y)/x^2")
print(f * parse_fraction(x2, "x^2*y"))
