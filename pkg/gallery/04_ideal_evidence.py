"""
Bounded containment evidence
============================

Ideals are represented by their parts of degree at most ``D``.  Comparing
two such slices degree by degree either confirms containment up to ``D`` or
returns an explicit element that is missing.
"""

# %%
from semigraded import bounded_schematic_evidence, check_containment, corpus, left_ideal_slice, ore_set_spec, r_geq_slice
from semigraded.ideals import homogeneous_pieces
from semigraded.ncpoly import NcPolynomial

weyl2 = corpus.load("weyl_gf2")
lhs = r_geq_slice(weyl2, 4, 8)
rhs = left_ideal_slice(weyl2, [NcPolynomial.parse(weyl2, "x^2"), NcPolynomial.parse(weyl2, "y^2")], 8)
print({d: s.dim for d, s in homogeneous_pieces(lhs).items()})
print(check_containment(lhs, rhs).render())

# %%
# In the 3-dimensional algebra the central generator ``z`` cannot cover
# anything: ``x^t`` is always left over.
three_dim = corpus.load("3dim")
for t in range(1, 7):
    v = bounded_schematic_evidence(three_dim, ore_set_spec(three_dim, ["z"]), t, 1, 6)
    print(t, v.status, v.certificate.evidence.witness)

# %%
# Bounded results never claim a proof.
v = bounded_schematic_evidence(weyl2, ore_set_spec(weyl2, ["x^2", "y^2"]), 4, 1, 8)
print(v.status, v.is_proof)
