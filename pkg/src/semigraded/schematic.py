"""Schematicness verdicts.

Three routes, kept apart by the certificate they produce:

``CLOSED_FORM``
    the classification of two-generator algebras ``yx = dxy + ex + fy + g``;
``CENTRAL_POWERS``
    every generator (all of degree 1) has a central power;
``BOUNDED``
    a degree-truncated containment ``(R_>=t)^m  <=  sum R x_S`` for chosen
    denominators.  Only ever evidence: it never yields SCHEMATIC or
    NOT_SCHEMATIC.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Sequence

from .errors import AlgebraError, MixedFieldsError, ZeroInputError
from .exact import QQ, Field, FieldScalar, multiplicative_order
from .grading import CentralPowerWitness, central_powers_search
from .ideals import EvidenceResult, check_containment, left_ideal_slice, power_slice, r_geq_slice
from .localization import CentralDenominator, central_denominator
from .ncpoly import NcPolynomial
from .presentation import Presentation, render_terms, two_gen_presentation

SCHEMATIC = "SCHEMATIC"
NOT_SCHEMATIC = "NOT_SCHEMATIC"
EVIDENCE_SCHEMATIC = "EVIDENCE_SCHEMATIC"
REFUTED_AT_BOUND = "REFUTED_AT_BOUND"
INCONCLUSIVE = "INCONCLUSIVE"

CLOSED_FORM = "CLOSED_FORM"
CENTRAL_POWERS = "CENTRAL_POWERS"
BOUNDED = "BOUNDED"

PROOF_STATUSES = (SCHEMATIC, NOT_SCHEMATIC)


@dataclass(frozen=True)
class TwoGenParams:
    d: FieldScalar
    e: FieldScalar
    f: FieldScalar
    g: FieldScalar

    def __post_init__(self):
        fields = {s.field for s in (self.d, self.e, self.f, self.g)}
        if len(fields) != 1:
            raise MixedFieldsError("parameters live in different fields")

    @classmethod
    def of(cls, d, e, f, g, field: Field = QQ) -> "TwoGenParams":
        return cls(*(s if isinstance(s, FieldScalar) else field(s) for s in (d, e, f, g)))

    @property
    def field(self) -> Field:
        return self.d.field

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def presentation(self) -> Presentation:
        return two_gen_presentation(self.d, self.e, self.f, self.g, self.field)

    def __str__(self):
        return f"d={self.d}, e={self.e}, f={self.f}, g={self.g} over {self.field}"


@dataclass(frozen=True)
class Certificate:
    kind: str
    case: str | None = None
    witnesses: tuple = ()
    t: int | None = None
    m: int | None = None
    bound: int | None = None
    evidence: EvidenceResult | None = None


@dataclass(frozen=True)
class SchematicVerdict:
    status: str
    certificate: Certificate
    narrative: str
    warnings: tuple = dc_field(default=())

    def __post_init__(self):
        if self.certificate.kind == BOUNDED and self.status in PROOF_STATUSES:
            raise AlgebraError("bounded evidence cannot certify a proof status", code="INTERNAL")

    @property
    def is_proof(self) -> bool:
        return self.status in PROOF_STATUSES


def delta_n(d: FieldScalar, n: int) -> FieldScalar:
    """``1 + d + ... + d^(n-1)``."""
    if n < 1:
        raise ValueError("n must be positive")
    field = d.field
    total, acc = field.zero, field.one
    for _ in range(n):
        total = field.add(total, acc)
        acc = field.mul(acc, d.value)
    return FieldScalar(field, total)


def condition_u(d: FieldScalar, characteristic: int | None = None) -> bool:
    """Whether some ``delta_n(d, n)`` vanishes, decided in closed form.

    True iff ``d == 1`` in positive characteristic, or ``d != 1`` has finite
    multiplicative order (over Q: ``d == -1``; over GF(p): always).
    """
    if not d:
        raise ZeroInputError("Condition U is undefined for d = 0")
    char = d.field.characteristic if characteristic is None else characteristic
    if d == 1:
        return char > 0
    limit = 2 if char == 0 else char - 1
    return multiplicative_order(d, limit) is not None


def classify_two_gen(params: TwoGenParams) -> SchematicVerdict:
    """Closed-form schematicness of ``yx = dxy + ex + fy + g``."""
    d, e, f, g = params.d, params.e, params.f, params.g
    pres = params.presentation()
    rel = "y*x = " + render_terms(pres, pres.rule(1, 0))

    def negative(branch, why, warnings=()):
        return SchematicVerdict(NOT_SCHEMATIC, Certificate(CLOSED_FORM, case=branch), why, tuple(warnings))

    if not d:
        return negative(
            "d = 0",
            "d = 0: Condition U fails, so the only elements with two-sided additive degree are scalars and no non-trivial good Ore set exists",
            ["d = 0: the algebra is not a bijective skew PBW extension"],
        )
    if e or f:
        which = " and ".join(n for n, v in (("e", e), ("f", f)) if v)
        return negative(
            f"{which} != 0",
            f"{which} != 0: no good Ore sets survive beyond powers of a single generator, which cannot satisfy the covering condition",
        )
    if not g:
        return SchematicVerdict(
            SCHEMATIC,
            Certificate(CLOSED_FORM, case="1"),
            f"case (1): {rel} is a quantum plane (graded), schematic",
        )
    if not condition_u(d, params.characteristic):
        return negative(
            "g != 0 without Condition U",
            f"g != 0 and Condition U fails for d = {d} over {params.field}: the only elements of R'' are scalars",
        )
    if d == 1:
        return SchematicVerdict(
            SCHEMATIC,
            Certificate(CLOSED_FORM, case="2"),
            f"case (2): {rel} in characteristic {params.characteristic}; x^{params.characteristic} and y^{params.characteristic} are central",
        )
    order = multiplicative_order(d, 2 if params.characteristic == 0 else params.characteristic - 1)
    return SchematicVerdict(
        SCHEMATIC,
        Certificate(CLOSED_FORM, case="3"),
        f"case (3): {rel} with d = {d} of multiplicative order {order}; x^{order} and y^{order} are central",
    )


def central_powers_criterion(p: Presentation, max_exp: int, D: int) -> SchematicVerdict:
    """Schematic if every generator has a central power.

    Requires all generator degrees to be 1.  The covering ideal is generated
    by the central powers ``g_i^(m_i)`` and contains every standard monomial
    of degree ``>= t = sum m_i``; a truncated containment check at ``D`` is
    attached for audit.
    """
    if any(deg != 1 for deg in p.degrees):
        raise AlgebraError("central powers criterion needs all generators in degree 1", code="WRONG_SHAPE")
    found = central_powers_search(p, max_exp)
    missing = [p.generators[i] for i, w in enumerate(found) if w is None]
    if missing:
        return SchematicVerdict(
            INCONCLUSIVE,
            Certificate(CENTRAL_POWERS, witnesses=tuple(w for w in found if w)),
            f"no central power up to exponent {max_exp} for {', '.join(missing)}; the criterion does not apply",
        )
    witnesses: tuple[CentralPowerWitness, ...] = tuple(found)
    t = sum(w.exponent for w in witnesses)
    evidence = None
    notes = ["left noetherianity is assumed (it holds for skew PBW extensions over a field), not checked"]
    if t <= D:
        gens = [NcPolynomial.generator(p, w.generator) ** w.exponent for w in witnesses]
        evidence = check_containment(r_geq_slice(p, t, D), left_ideal_slice(p, gens, D))
    else:
        notes.append(f"audit containment skipped: t = {t} exceeds bound {D}")
    cert = Certificate(CENTRAL_POWERS, witnesses=witnesses, t=t, m=1, bound=D, evidence=evidence)
    powers = ", ".join(w.render() for w in witnesses)
    if evidence is not None and (not evidence.contained or evidence.capped):
        return SchematicVerdict(
            INCONCLUSIVE,
            cert,
            f"central powers {powers} found but the audit containment at bound {D} failed ({evidence.render()})",
            tuple(notes),
        )
    return SchematicVerdict(
        SCHEMATIC,
        cert,
        f"central powers criterion: {powers} central; R_>={t} lies in the left ideal they generate",
        tuple(notes),
    )


@dataclass(frozen=True)
class OreSetSpec:
    """One central denominator per Ore set ``{c^k}``."""

    denominators: tuple

    def elements(self) -> list:
        return [den.c for den in self.denominators]

    def __str__(self):
        return ", ".join(str(d) for d in self.denominators)


def ore_set_spec(p: Presentation, elements: Sequence) -> OreSetSpec:
    """Validate each element as a central denominator of positive degree."""
    dens: list[CentralDenominator] = [e if isinstance(e, CentralDenominator) else central_denominator(p, e) for e in elements]
    return OreSetSpec(tuple(dens))


def bounded_schematic_evidence(p: Presentation, ore: OreSetSpec, t: int, m: int, D: int) -> SchematicVerdict:
    """Check ``(R_>=t)^m <= sum R c`` inside degree ``<= D``."""
    if not ore.denominators:
        raise AlgebraError("no Ore sets given", code="EMPTY_ORE_SPEC")
    if m < 1:
        raise ValueError("m must be at least 1")
    lhs = power_slice(r_geq_slice(p, t, D), m)
    rhs = left_ideal_slice(p, ore.elements(), D)
    ev = check_containment(lhs, rhs)
    cert = Certificate(BOUNDED, t=t, m=m, bound=D, evidence=ev)
    target = f"(R_>={t})^{m}" if m > 1 else f"R_>={t}"
    if ev.capped:
        return SchematicVerdict(INCONCLUSIVE, cert, f"closure iteration capped at bound {D}; no verdict")
    if ev.contained:
        return SchematicVerdict(EVIDENCE_SCHEMATIC, cert, f"{target} lies in the left ideal of {ore} up to degree {D} (evidence, not proof)")
    return SchematicVerdict(
        REFUTED_AT_BOUND,
        cert,
        f"{target} is not in the left ideal of {ore} at bound {D}: witness {ev.witness} of degree {ev.fail_degree}",
    )


# ---------------------------------------------------------------------------
# closed-form commutation identities


def _upoly_mul(field, a, b):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


def _upoly_add(field, a, b):
    n = max(len(a), len(b))
    a = list(a) + [field.zero] * (n - len(a))
    b = list(b) + [field.zero] * (n - len(b))
    return [field.add(x, y) for x, y in zip(a, b)]


def _binomial_power(field, lead, const, i):
    """``(lead*t + const)^i`` expanded with binomial coefficients, as coefficients of ``t``."""
    out = [field.zero] * (i + 1)
    for k in range(i + 1):
        c = field.mul(field.coerce(comb(i, k)), field.mul(field.power(lead, i - k), field.power(const, k)))
        out[i - k] = field.add(out[i - k], c)
    return out


def two_gen_commutation_oracle(params: TwoGenParams, n: int):
    """Closed forms of ``y*x^n`` and ``y^n*x`` built without any rewriting.

    With ``P = dx + f``, ``Q = ex + g``, ``Pb = dy + e`` and ``Qb = fy + g``::

        y x^n = P^n y + sum_{i<n} P^(n-1-i) x^i Q
        y^n x = x Pb^n + sum_{i<n} Pb^(n-1-i) y^i Qb

    All factors on each side are polynomials in one variable, so both right
    hand sides are already in PBW normal form.
    """
    if n < 1:
        raise ValueError("n must be positive")
    field = params.field
    p = params.presentation()
    d, e, f, g = (s.value for s in (params.d, params.e, params.f, params.g))

    def shifted(poly, k):
        return [field.zero] * k + list(poly)

    # y * x^n
    head = _binomial_power(field, d, f, n)
    tail = [field.zero]
    for i in range(n):
        tail = _upoly_add(field, tail, _upoly_mul(field, shifted(_binomial_power(field, d, f, n - 1 - i), i), [g, e]))
    yxn = {(k, 1): c for k, c in enumerate(head) if c != 0}
    for k, c in enumerate(tail):
        if c != 0:
            yxn[(k, 0)] = c
    # y^n * x
    head = _binomial_power(field, d, e, n)
    tail = [field.zero]
    for i in range(n):
        tail = _upoly_add(field, tail, _upoly_mul(field, shifted(_binomial_power(field, d, e, n - 1 - i), i), [g, f]))
    ynx = {(1, k): c for k, c in enumerate(head) if c != 0}
    for k, c in enumerate(tail):
        if c != 0:
            ynx[(0, k)] = c
    return NcPolynomial(p, yxn), NcPolynomial(p, ynx)


def two_gen_params_from(p: Presentation) -> TwoGenParams:
    """Read ``d, e, f, g`` off a two-generator presentation with both generators in degree 1."""
    if p.ngens != 2 or p.degrees != (1, 1):
        raise AlgebraError("classification needs two generators of degree 1", code="WRONG_SHAPE")
    rhs = dict(p.rule(1, 0))
    allowed = {(1, 1), (1, 0), (0, 1), (0, 0)}
    if set(rhs) - allowed:
        raise AlgebraError("relation is not of the form yx = dxy + ex + fy + g", code="WRONG_SHAPE")
    field = p.field
    pick = lambda m: FieldScalar(field, rhs.get(m, field.zero))
    return TwoGenParams(pick((1, 1)), pick((1, 0)), pick((0, 1)), pick((0, 0)))
