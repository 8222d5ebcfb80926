"""Localization at the powers of a central, degree-additive monomial ``c``.

Because ``c`` is central every fraction can be written ``f / c**k`` and the
Ore data are explicit: ``(f/c^k) + (g/c^l) = (c^(K-k) f + c^(K-l) g) / c^K``
and ``(f/c^k)(g/c^l) = fg / c^(k+l)``.  A homogeneous ``f`` of degree ``j``
gives a fraction of degree ``j - k*deg(c)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import AlgebraError
from .exact import Field, rref_rows
from .grading import is_central, monomials_of_degree, normalizing_scalars
from .ncpoly import NcPolynomial, decompose, normal_form, rewriter
from .presentation import Presentation, render_monomial


@dataclass(frozen=True)
class CentralDenominator:
    """Monic central standard monomial whose powers form the denominator set."""

    presentation: Presentation
    c: NcPolynomial

    @property
    def degree(self) -> int:
        return self.c.degree()

    @property
    def exponents(self) -> tuple:
        return next(iter(self.c.terms))

    def power(self, k: int) -> NcPolynomial:
        return NcPolynomial.monomial(self.presentation, tuple(e * k for e in self.exponents))

    def __str__(self):
        return str(self.c)


def central_denominator(p: Presentation, c) -> CentralDenominator:
    """Check that ``c`` (text or polynomial) can serve as a denominator.

    ``c`` must be a central standard monomial of positive degree all of whose
    generator-power factors are normal up to scalars; the latter gives the
    unbounded proof that ``c`` lies in R''.  Scalar multiples are normalized
    away.
    """
    if isinstance(c, str):
        c = normal_form(p, c)
    if c.is_zero():
        raise AlgebraError("denominator must be nonzero", code="BAD_DENOMINATOR")
    if len(c.terms) != 1:
        raise AlgebraError(f"denominator {c} is not a single monomial", code="BAD_DENOMINATOR")
    (mon, _), = c.terms.items()
    c = NcPolynomial.monomial(p, mon)
    if c.degree() < 1:
        raise AlgebraError("denominator must have positive degree", code="BAD_DENOMINATOR")
    if not is_central(p, c):
        raise AlgebraError(f"denominator {c} is not central", code="NOT_CENTRAL")
    for i, e in enumerate(mon):
        if e and normalizing_scalars(p, NcPolynomial.monomial(p, p.unit(i)) ** e) is None:
            raise AlgebraError(f"no degree additivity proof for {c}", code="NOT_DEGREE_ADDITIVE")
    return CentralDenominator(p, c)


@dataclass(frozen=True)
class Fraction:
    numerator: NcPolynomial
    denom_exp: int
    denominator: CentralDenominator

    @property
    def presentation(self) -> Presentation:
        return self.numerator.presentation

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def degree(self) -> int:
        """Largest component degree (may be negative); meaningless for zero."""
        return self.numerator.degree() - self.denom_exp * self.denominator.degree

    def is_homogeneous(self) -> bool:
        return self.numerator.is_homogeneous()

    def __add__(self, other):
        return frac_add(self, other)

    def __sub__(self, other):
        return frac_add(self, -other)

    def __neg__(self):
        return Fraction(-self.numerator, self.denom_exp, self.denominator)

    def __mul__(self, other):
        return frac_mul(self, other)

    def __str__(self):
        if self.denom_exp == 0:
            return str(self.numerator)
        den = render_monomial(self.presentation, tuple(e * self.denom_exp for e in self.denominator.exponents))
        return f"({self.numerator})/{den}"


def fraction(numerator: NcPolynomial, k: int, den: CentralDenominator) -> Fraction:
    """Canonical fraction ``numerator / c**k``."""
    if k < 0:
        raise ValueError("negative denominator exponent")
    if numerator.presentation != den.presentation:
        raise AlgebraError("numerator and denominator from different presentations", code="PRESENTATION_MISMATCH")
    return frac_canonicalize(Fraction(numerator, k, den))


def embed(r: NcPolynomial, den: CentralDenominator) -> Fraction:
    return Fraction(r, 0, den)


def _solve(field: Field, columns: list, target: list):
    """A solution ``x`` of ``sum x_i columns[i] == target`` or ``None``."""
    ncols = len(columns)
    n = len(target)
    rows = [[columns[i][r] for i in range(ncols)] + [target[r]] for r in range(n)]
    red, pivots = rref_rows(field, rows, ncols + 1)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return x


def divide_by_denominator(f: NcPolynomial, den: CentralDenominator) -> NcPolynomial | None:
    """``g`` with ``c*g == f``, solved degree by degree, or ``None``."""
    p = f.presentation
    eng = rewriter(p)
    cmon = den.exponents
    dc = den.degree
    quotient: dict = {}
    for j, comp in decompose(f).items():
        if j < dc:
            return None
        src = monomials_of_degree(p, j - dc)
        dst = monomials_of_degree(p, j)
        idx = {m: k for k, m in enumerate(dst)}
        columns = []
        for h in src:
            col = [p.field.zero] * len(dst)
            for m, c in eng.mon_mul(cmon, h).items():
                col[idx[m]] = c
            columns.append(col)
        target = [p.field.zero] * len(dst)
        for m, c in comp.terms.items():
            target[idx[m]] = c
        x = _solve(p.field, columns, target)
        if x is None:
            return None
        for h, v in zip(src, x):
            if v != 0:
                quotient[h] = v
    return NcPolynomial(p, quotient)


def frac_canonicalize(a: Fraction) -> Fraction:
    """Cancel ``c`` from the numerator as long as it divides exactly."""
    num, k = a.numerator, a.denom_exp
    if num.is_zero():
        return Fraction(num, 0, a.denominator)
    while k > 0:
        q = divide_by_denominator(num, a.denominator)
        if q is None:
            break
        num, k = q, k - 1
    return Fraction(num, k, a.denominator)


def _check(a: Fraction, b: Fraction) -> None:
    if a.denominator.c != b.denominator.c:
        raise AlgebraError("fractions over different denominator sets", code="DENOMINATOR_MISMATCH")


def frac_add(a: Fraction, b: Fraction) -> Fraction:
    _check(a, b)
    K = max(a.denom_exp, b.denom_exp)
    den = a.denominator
    num = den.power(K - a.denom_exp) * a.numerator + den.power(K - b.denom_exp) * b.numerator
    return frac_canonicalize(Fraction(num, K, den))


def frac_mul(a: Fraction, b: Fraction) -> Fraction:
    _check(a, b)
    return frac_canonicalize(Fraction(a.numerator * b.numerator, a.denom_exp + b.denom_exp, a.denominator))


def frac_decompose(a: Fraction) -> dict:
    """``{fraction degree: homogeneous Fraction}``, increasing in degree."""
    shift = a.denom_exp * a.denominator.degree
    return {j - shift: frac_canonicalize(Fraction(comp, a.denom_exp, a.denominator)) for j, comp in decompose(a.numerator).items()}


def frac_reassemble(parts: dict, den: CentralDenominator) -> Fraction:
    total = embed(NcPolynomial.zero(den.presentation), den)
    for part in parts.values():
        total = frac_add(total, part)
    return total


_FRACTION = re.compile(r"^\s*\((?P<num>.*)\)\s*/\s*(?P<den>[A-Za-z_][A-Za-z_0-9]*(?:\s*\^\s*\d+)?(?:\s*\*\s*[A-Za-z_][A-Za-z_0-9]*(?:\s*\^\s*\d+)?)*)\s*$")


def parse_fraction(den: CentralDenominator, text: str) -> Fraction:
    """Parse ``(<poly>)/<monomial>`` (the monomial a power of ``c``) or a bare ``<poly>``."""
    p = den.presentation
    m = _FRACTION.match(text)
    if not m:
        return fraction(normal_form(p, text), 0, den)
    num = normal_form(p, m.group("num"))
    dpoly = normal_form(p, m.group("den"))
    if len(dpoly.terms) != 1:
        raise AlgebraError("denominator must be a monomial", code="BAD_DENOMINATOR")
    (mon, coeff), = dpoly.terms.items()
    cexp = den.exponents
    ratios = {mi // ci for mi, ci in zip(mon, cexp) if ci}
    if len(ratios) != 1 or tuple(ci * next(iter(ratios)) for ci in cexp) != mon:
        raise AlgebraError(f"{m.group('den')} is not a power of {den}", code="DENOMINATOR_MISMATCH")
    k = ratios.pop()
    return fraction(num.scale(p.field.inv(coeff)), k, den)
