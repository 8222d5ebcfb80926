"""Degree slices, the degree-multiplier spaces R'_n / R''_n, and centrality checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import AlgebraError
from .exact import Echelon, Subspace, kernel
from .ncpoly import NcPolynomial, commutator, rewriter
from .presentation import Presentation, render_monomial


@lru_cache(maxsize=512)
def monomials_of_degree(p: Presentation, n: int) -> tuple:
    """All exponent vectors of weighted degree ``n``, lexicographically largest first."""
    out = []
    degs = p.degrees

    def rec(i, remaining, prefix):
        if i == len(degs) - 1:
            if remaining % degs[i] == 0:
                out.append(prefix + (remaining // degs[i],))
            return
        for e in range(remaining // degs[i], -1, -1):
            rec(i + 1, remaining - e * degs[i], prefix + (e,))

    if n >= 0:
        rec(0, n, ())
    return tuple(out)


@lru_cache(maxsize=128)
def monomials_up_to(p: Presentation, D: int) -> tuple:
    """Ambient basis of the truncated space: degree ascending, lex-largest first within a degree."""
    return tuple(m for n in range(D + 1) for m in monomials_of_degree(p, n))


@dataclass(frozen=True)
class GradedSlice:
    degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def basis_of_degree(p: Presentation, n: int) -> GradedSlice:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return GradedSlice(n, monomials_of_degree(p, n))


@dataclass(frozen=True)
class MultiplierReport:
    """Certified interval ``lower_bound <= R''_n (or R'_n) <= upper_bound``.

    ``upper_bound`` keeps the elements that passed every product test with
    monomials of degree up to ``bound - degree``; ``lower_bound`` is spanned by
    generator powers with an unbounded proof of degree additivity.
    """

    degree: int
    bound: int
    upper_bound: Subspace
    lower_bound: Subspace
    exact: bool
    side: str = "two-sided"

    def render(self, p: Presentation) -> str:
        name = "R''" if self.side == "two-sided" else "R'"
        span = render_span(p, self.upper_bound)
        if self.exact:
            return f"{name}_{self.degree} = {span} (exact)"
        lower = render_span(p, self.lower_bound)
        return f"{lower} <= {name}_{self.degree} <= {span} (bound {self.bound})"


def vector_to_poly(p: Presentation, ambient, vec) -> NcPolynomial:
    return NcPolynomial(p, {m: c for m, c in zip(ambient, vec) if c != 0})


def poly_to_vector(p: Presentation, ambient, poly: NcPolynomial, index=None) -> list:
    index = index or {m: k for k, m in enumerate(ambient)}
    v = [p.field.zero] * len(ambient)
    for m, c in poly.terms.items():
        if m not in index:
            raise AlgebraError("polynomial has terms outside the coordinate space", code="OUT_OF_RANGE")
        v[index[m]] = c
    return v


def render_span(p: Presentation, space: Subspace) -> str:
    if not space.rows:
        return "{0}"
    parts = [str(vector_to_poly(p, space.ambient, r)) for r in space.rows]
    return "span{ " + ", ".join(parts) + " }"


def r_double_prime(p: Presentation, n: int, D: int, left_only: bool = False) -> MultiplierReport:
    """Bounds on R''_n (or R'_n with ``left_only``) from products with all monomials of degree <= D - n."""
    if D < n:
        raise AlgebraError(f"bound {D} is below the degree {n}", code="BOUND_TOO_SMALL")
    field = p.field
    basis = monomials_of_degree(p, n)
    s = len(basis)
    eng = rewriter(p)
    constraints = Echelon(field, range(s))
    for h in monomials_up_to(p, D - n):
        if len(constraints) == s:
            break
        target = n + p.monomial_degree(h)
        products = [lambda b: eng.mon_mul(b, h)]
        if not left_only:
            products.append(lambda b: eng.mon_mul(h, b))
        for prod in products:
            rows: dict = {}
            for i, b in enumerate(basis):
                for m, c in prod(b).items():
                    if p.monomial_degree(m) != target:
                        rows.setdefault(m, [field.zero] * s)[i] = c
            for row in rows.values():
                constraints.add(row)
    upper = Subspace.span(field, basis, kernel(field, list(constraints.rows.values()), s))
    lower_vecs = []
    for i, b in enumerate(basis):
        if sum(1 for e in b if e) == 1 and is_exact_degree_additive(p, NcPolynomial.monomial(p, b)):
            lower_vecs.append([field.one if k == i else field.zero for k in range(s)])
    lower = Subspace.span(field, basis, lower_vecs)
    if not upper.contains(lower):
        raise AlgebraError("proved elements failed a product test; the presentation is inconsistent", code="INTERNAL")
    return MultiplierReport(n, D, upper, lower, upper == lower, "left" if left_only else "two-sided")


def r_prime(p: Presentation, n: int, D: int) -> MultiplierReport:
    return r_double_prime(p, n, D, left_only=True)


def is_central(p: Presentation, a: NcPolynomial) -> bool:
    """Exact test: ``a`` commutes with every generator."""
    return all(commutator(a, NcPolynomial.generator(p, j)).is_zero() for j in range(p.ngens))


def _generator_power(p: Presentation, c: NcPolynomial):
    if len(c.terms) != 1:
        raise AlgebraError("expected a power of a single generator", code="NOT_A_GENERATOR_POWER")
    (mon, _), = c.terms.items()
    support = [k for k, e in enumerate(mon) if e]
    if len(support) != 1:
        raise AlgebraError("expected a power of a single generator", code="NOT_A_GENERATOR_POWER")
    return support[0], mon[support[0]]


def normalizing_scalars(p: Presentation, c: NcPolynomial):
    """Scalars ``lam_j`` with ``g_j * c == lam_j * c * g_j`` for every generator, or ``None``."""
    field = p.field
    lams = []
    for j in range(p.ngens):
        g = NcPolynomial.generator(p, j)
        left, right = g * c, c * g
        if left.is_zero() or right.is_zero():
            return None
        m, rc = next(iter(right.terms.items()))
        lam = field.div(left.coefficient(m), rc)
        if lam == 0 or left != right.scale(lam):
            return None
        lams.append(lam)
    return lams


def is_exact_degree_additive(p: Presentation, c: NcPolynomial) -> bool:
    """Unbounded proof that the generator power ``c`` lies in R''.

    If ``g_j c = lam_j c g_j`` with ``lam_j != 0`` for every generator, then
    ``c`` can be moved through any standard monomial ``h`` at the cost of a
    scalar, so ``c h`` and ``h c`` are scalar multiples of the standard
    monomial with the exponents added.  Central powers are the case
    ``lam_j = 1``.
    """
    _generator_power(p, c)
    return normalizing_scalars(p, c) is not None


@dataclass(frozen=True)
class CentralPowerWitness:
    generator: int
    name: str
    exponent: int
    commutators: tuple  # (other generator, rendered commutator) pairs, all "0"

    def render(self) -> str:
        return f"{self.name}^{self.exponent}" if self.exponent > 1 else self.name


def central_powers_search(p: Presentation, max_exp: int) -> list:
    """For each generator the least exponent ``<= max_exp`` giving a central power, else ``None``."""
    if max_exp < 1:
        raise ValueError("max_exp must be at least 1")
    out = []
    for i in range(p.ngens):
        g = NcPolynomial.generator(p, i)
        found = None
        acc = NcPolynomial.one(p)
        for m in range(1, max_exp + 1):
            acc = acc * g
            comms = [(p.generators[j], commutator(acc, NcPolynomial.generator(p, j))) for j in range(p.ngens)]
            if all(c.is_zero() for _, c in comms):
                found = CentralPowerWitness(i, p.generators[i], m, tuple((name, str(c)) for name, c in comms))
                break
        out.append(found)
    return out


def monomial_text(p: Presentation, mon) -> str:
    return render_monomial(p, mon) or "1"
