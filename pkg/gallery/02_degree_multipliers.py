"""
Elements with additive degree
=============================

``R''_n`` collects the degree ``n`` elements whose products on both sides
with homogeneous elements never drop in degree.  The computation tests
products against all monomials up to a bound and returns an interval.
"""

# %%
from semigraded import corpus, r_double_prime

three_dim = corpus.load("3dim")
print(three_dim.render())

# %%
# Only powers of the central generator survive.  The lower end of the
# interval comes from a proof that works at every degree, so equal ends mean
# the answer is exact.
for n in range(1, 5):
    print(r_double_prime(three_dim, n, 8).render(three_dim))

# %%
# In the Weyl algebra over Q nothing of positive degree qualifies.
weyl = corpus.load("weyl_q")
for n in range(1, 4):
    print(r_double_prime(weyl, n, 6).render(weyl))

# %%
# The quantum plane is graded, so every product is degree additive.  Mixed
# monomials are not generator powers, so the lower end stays smaller.
qp = corpus.load("quantum_plane")
for n in (1, 2):
    print(r_double_prime(qp, n, 6).render(qp))
