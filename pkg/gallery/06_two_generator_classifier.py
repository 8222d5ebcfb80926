"""
Classifying two-generator algebras
==================================

For ``yx = dxy + ex + fy + g`` the verdict depends only on the parameters.
The interesting input is whether ``1 + d + ... + d^(n-1)`` vanishes for
some ``n``.
"""

# %%
from semigraded import GF, QQ, TwoGenParams, classify_two_gen, condition_u

for field in (QQ, GF(2), GF(5)):
    for d, e, f, g in [(2, 0, 0, 0), (1, 0, 0, 1), (-1, 0, 0, 1), (2, 0, 0, 1), (1, 1, 0, 0), (0, 0, 0, 1)]:
        v = classify_two_gen(TwoGenParams.of(d, e, f, g, field=field))
        print(f"{field.field_id:6s} d={d:2d} e={e} f={f} g={g}: {v.status:13s} {v.certificate.case}")

# %%
# Over GF(p) every nonzero ``d`` satisfies the condition, over Q only -1 does.
print([condition_u(QQ(d)) for d in (-1, 1, 2, -2)])
print([condition_u(GF(7)(d)) for d in range(1, 7)])

# %%
# Each verdict carries its reasoning.
print(classify_two_gen(TwoGenParams.of(-1, 0, 0, 1)).narrative)
