"""Degree-truncated slices of ideals and containment checks between them.

Everything here lives inside the coordinate space spanned by the standard
monomials of degree at most ``D``.  Each slice only ever collects genuine
ideal elements (products of members, and homogeneous components of members
for SG-closed ideals), so a slice is always contained in the degree ``<= D``
part of the true ideal.  It may be smaller when an element can only be
reached through intermediates of degree above ``D``; containment verdicts
are therefore evidence at the stated bound, not proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import AlgebraError
from .exact import Echelon, Subspace
from .grading import monomials_up_to, poly_to_vector, vector_to_poly
from .ncpoly import NcPolynomial, decompose
from .presentation import Presentation

FIXPOINT_REACHED = "FIXPOINT_REACHED"
ITERATION_CAPPED = "ITERATION_CAPPED"
CONTAINED = "CONTAINED_UP_TO_D"
FAILS_AT = "FAILS_AT"


@dataclass(frozen=True)
class IdealSlice:
    presentation: Presentation
    kind: str  # "LEFT", "R_GEQ" or "POWER"
    bound: int
    space: Subspace
    closure_status: str
    passes: int
    t: int | None = None
    m: int | None = None
    generators: tuple = dc_field(default=(), repr=False)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def capped(self) -> bool:
        return self.closure_status == ITERATION_CAPPED

    def basis(self) -> list:
        return [vector_to_poly(self.presentation, self.space.ambient, r) for r in self.space.rows]

    def vector(self, poly: NcPolynomial) -> list:
        return poly_to_vector(self.presentation, self.space.ambient, poly, _index(self.presentation, self.bound))

    def contains_poly(self, poly: NcPolynomial) -> bool:
        """Membership of an element of degree ``<= bound``."""
        return self.space.member(self.vector(poly))

    def describe(self) -> str:
        if self.kind == "LEFT":
            return "sum of R*(" + "), R*(".join(str(g) for g in self.generators) + ")"
        if self.kind == "R_GEQ":
            return f"R_>={self.t}"
        return f"(R_>={self.t})^{self.m}"


_INDEX_CACHE: dict = {}


def _index(p: Presentation, D: int) -> dict:
    key = (p, D)
    if key not in _INDEX_CACHE:
        _INDEX_CACHE[key] = {m: k for k, m in enumerate(monomials_up_to(p, D))}
    return _INDEX_CACHE[key]


def _truncate(p: Presentation, poly: NcPolynomial, D: int) -> NcPolynomial:
    return NcPolynomial(p, {m: c for m, c in poly.terms.items() if p.monomial_degree(m) <= D})


class _Closure:
    """Grows a span inside degree <= D until it is closed under the requested operations."""

    def __init__(self, p: Presentation, D: int, left: bool, right: bool, components: bool):
        self.p, self.D = p, D
        self.left, self.right, self.components = left, right, components
        self.ambient = monomials_up_to(p, D)
        self.index = _index(p, D)
        self.ech = Echelon(p.field, self.ambient)
        self.frontier: list = []
        self.gens = [NcPolynomial.generator(p, j) for j in range(p.ngens)]

    def offer(self, poly: NcPolynomial) -> None:
        poly = _truncate(self.p, poly, self.D)
        if poly.is_zero():
            return
        if self.ech.add(poly_to_vector(self.p, self.ambient, poly, self.index)):
            self.frontier.append(poly)

    def offer_with_components(self, poly: NcPolynomial) -> None:
        if self.components:
            for comp in decompose(_truncate(self.p, poly, self.D)).values():
                self.offer(comp)
        else:
            self.offer(poly)

    def run(self, cap: int):
        passes = 0
        while self.frontier:
            if passes >= cap:
                return ITERATION_CAPPED, passes
            passes += 1
            batch, self.frontier = self.frontier, []
            for v in batch:
                if self.components and not v.is_homogeneous():
                    for comp in decompose(v).values():
                        self.offer(comp)
                for g in self.gens:
                    if self.left:
                        self.offer_with_components(g * v)
                    if self.right:
                        self.offer_with_components(v * g)
        return FIXPOINT_REACHED, passes

    def freeze(self) -> Subspace:
        return self.ech.freeze()


def left_ideal_slice(p: Presentation, gens: Sequence[NcPolynomial], D: int) -> IdealSlice:
    """Degree <= D part of ``sum R*g`` for ``g`` in ``gens``, closed under components and left multiplication."""
    gens = tuple(gens)
    if not gens:
        raise AlgebraError("no generators given", code="EMPTY_GENERATORS")
    if any(g.is_zero() for g in gens):
        raise AlgebraError("generators must be nonzero", code="EMPTY_GENERATORS")
    if max(g.degree() for g in gens) > D:
        raise AlgebraError("bound below the degree of a generator", code="BOUND_TOO_SMALL")
    work = _Closure(p, D, left=True, right=False, components=True)
    for h in monomials_up_to(p, D):
        hp = NcPolynomial.monomial(p, h)
        for g in gens:
            work.offer_with_components(hp * g)
    status, passes = work.run(10 * D)
    return IdealSlice(p, "LEFT", D, work.freeze(), status, passes, generators=gens)


def r_geq_slice(p: Presentation, t: int, D: int) -> IdealSlice:
    """Closure of all monomials of degree in ``[t, D]`` under two-sided generator products and components."""
    if not 1 <= t <= D:
        raise AlgebraError(f"need 1 <= t <= D, got t={t}, D={D}", code="BOUND_TOO_SMALL")
    work = _Closure(p, D, left=True, right=True, components=True)
    for mon in monomials_up_to(p, D):
        if p.monomial_degree(mon) >= t:
            work.offer(NcPolynomial.monomial(p, mon))
    status, passes = work.run(10 * D)
    return IdealSlice(p, "R_GEQ", D, work.freeze(), status, passes, t=t, m=1)


def power_slice(base: IdealSlice, m: int) -> IdealSlice:
    """Degree <= D components of ``m``-fold products of ``base`` elements.

    Intermediate products are kept untruncated, since in a semi-graded algebra
    a high-degree factor can still contribute below ``D``.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    if m == 1:
        return base
    p, D = base.presentation, base.bound
    elems = base.basis()
    current = list(elems)
    for _ in range(m - 1):
        top = max((a.degree() for a in current), default=0) + D
        ech = Echelon(p.field, monomials_up_to(p, top))
        idx = _index(p, top)
        nxt = []
        for a in current:
            for b in elems:
                prod = a * b
                if not prod.is_zero() and ech.add(poly_to_vector(p, ech.ambient, prod, idx)):
                    nxt.append(prod)
        current = nxt
    work = _Closure(p, D, left=False, right=False, components=True)
    for prod in current:
        work.offer_with_components(prod)
    status, passes = work.run(10 * D)
    if base.capped:
        status = ITERATION_CAPPED
    return IdealSlice(p, "POWER", D, work.freeze(), status, passes, t=base.t, m=(base.m or 1) * m)


@dataclass(frozen=True)
class EvidenceResult:
    t: int | None
    m: int | None
    D: int
    verdict: str
    fail_degree: int | None = None
    witness: NcPolynomial | None = None
    multiplier_degree_used: int = 0
    capped: bool = False

    @property
    def contained(self) -> bool:
        return self.verdict == CONTAINED

    def render(self) -> str:
        if self.contained:
            return f"contained up to degree {self.D}"
        return f"fails at degree {self.fail_degree}: witness {self.witness}"


def homogeneous_pieces(sl: IdealSlice) -> dict:
    """``{degree: Subspace}`` spanned by the degree-k components of the slice's basis."""
    p = sl.presentation
    ambient = sl.space.ambient
    idx = _index(p, sl.bound)
    pieces: dict = {}
    for vec in sl.space.rows:
        for d, comp in decompose(vector_to_poly(p, ambient, vec)).items():
            pieces.setdefault(d, []).append(poly_to_vector(p, ambient, comp, idx))
    return {d: Subspace.span(p.field, ambient, vs) for d, vs in sorted(pieces.items())}


def check_containment(lhs: IdealSlice, rhs: IdealSlice) -> EvidenceResult:
    """Reduce the LHS slice against the RHS slice, lowest degree first."""
    if lhs.bound != rhs.bound:
        raise AlgebraError("slices computed at different bounds", code="BOUND_MISMATCH")
    if lhs.presentation != rhs.presentation:
        raise AlgebraError("slices of different presentations", code="PRESENTATION_MISMATCH")
    p = lhs.presentation
    capped = lhs.capped or rhs.capped
    common = dict(t=lhs.t, m=lhs.m, D=lhs.bound, multiplier_degree_used=rhs.bound, capped=capped)
    for d, piece in homogeneous_pieces(lhs).items():
        for row in piece.rows:
            if not rhs.space.member(row):
                return EvidenceResult(verdict=FAILS_AT, fail_degree=d, witness=vector_to_poly(p, piece.ambient, row), **common)
    for row in lhs.space.rows:
        if not rhs.space.member(row):
            w = vector_to_poly(p, lhs.space.ambient, row)
            return EvidenceResult(verdict=FAILS_AT, fail_degree=w.degree(), witness=w, **common)
    return EvidenceResult(verdict=CONTAINED, **common)
