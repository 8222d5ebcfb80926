"""
Central powers in positive characteristic
=========================================

When every generator has a central power the algebra is covered by the
left ideal those powers generate, which gives a proof-grade verdict.
"""

# %%
from semigraded import central_powers_criterion, central_powers_search, corpus

for name in ("weyl_gf2", "weyl_gf3", "jordan_gf3", "jordan_gf5", "weyl_q"):
    found = central_powers_search(corpus.load(name), 6)
    print(f"{name:12s}", [w.render() if w else None for w in found])

# %%
# The criterion also attaches a truncated containment check for audit.
verdict = central_powers_criterion(corpus.load("weyl_gf2"), 4, 8)
print(verdict.status, verdict.certificate.t)
print(verdict.narrative)
print(verdict.certificate.evidence.render())

# %%
# Over Q no power of ``x`` is central, so the criterion stays silent.
print(central_powers_criterion(corpus.load("weyl_q"), 6, 6).status)
