"""Elements of a presented algebra in PBW normal form.

Two independent rewriting routes live here:

* :func:`rewrite_word_terms` rewrites linear combinations of arbitrary words
  one redex at a time (leftmost or rightmost choice of redex).  It backs
  :func:`normal_form` for expressions and the confluence checks.
* :class:`Rewriter` multiplies standard monomials by repeated left
  multiplication with a generator, memoizing ``(generator, monomial)``
  results.  It backs :func:`multiply` and everything built on it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import AlgebraError
from .presentation import Presentation, is_standard_word, parse_expression, render_terms, word_to_monomial

MAX_REWRITE_STEPS = 2_000_000


class Rewriter:
    """Memoized multiplication of standard monomials for one presentation."""

    def __init__(self, presentation: Presentation, use_cache: bool = True):
        self.p = presentation
        self.field = presentation.field
        self.use_cache = use_cache
        self._left: dict = {}
        self._mul: dict = {}
        self._depth = 0

    def left_gen(self, j: int, mon: tuple) -> dict:
        """``g_j * mon`` for a standard monomial ``mon``."""
        key = (j, mon)
        if self.use_cache:
            hit = self._left.get(key)
            if hit is not None:
                return hit
        i = next((k for k, e in enumerate(mon) if e), None)
        if i is None or j <= i:
            out = {mon[:j] + (mon[j] + 1,) + mon[j + 1 :]: self.field.one}
        else:
            rest = mon[:i] + (mon[i] - 1,) + mon[i + 1 :]
            self._depth += 1
            if self._depth > 400:
                self._depth = 0
                raise AlgebraError("rewriting does not terminate", code="NON_TERMINATING")
            try:
                out = {}
                for t, c in self.p.rule(j, i).items():
                    _accumulate(self.field, out, self.mon_mul(t, rest), c)
            finally:
                self._depth -= 1
        if self.use_cache:
            self._left[key] = out
        return out

    def mon_mul(self, u: tuple, v: tuple) -> dict:
        """Normal form of the product of two standard monomials."""
        if not any(u):
            return {v: self.field.one}
        key = (u, v)
        if self.use_cache:
            hit = self._mul.get(key)
            if hit is not None:
                return hit
        # peel the last letter of u and multiply it onto v first
        last = max(k for k, e in enumerate(u) if e)
        head = u[:last] + (u[last] - 1,) + u[last + 1 :]
        out: dict = {}
        for m, c in self.left_gen(last, v).items():
            _accumulate(self.field, out, self.mon_mul(head, m), c)
        if self.use_cache:
            self._mul[key] = out
        return out


@lru_cache(maxsize=64)
def rewriter(p: Presentation) -> Rewriter:
    return Rewriter(p)


def _accumulate(field, acc: dict, terms: dict, scale) -> None:
    if scale == 0:
        return
    one = scale == 1
    for m, c in terms.items():
        val = field.add(acc.get(m, field.zero), c if one else field.mul(c, scale))
        if val == 0:
            acc.pop(m, None)
        else:
            acc[m] = val


class NcPolynomial:
    """Immutable element of the algebra, stored as ``{standard monomial: coefficient}``.

    Equality is structural; arithmetic operators dispatch to :func:`multiply`
    and friends.
    """

    __slots__ = ("presentation", "terms", "_hash")

    def __init__(self, presentation: Presentation, terms: dict | None = None):
        self.presentation = presentation
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}
        self._hash = None

    # -- constructors
    @classmethod
    def zero(cls, p: Presentation) -> "NcPolynomial":
        return cls(p)

    @classmethod
    def scalar(cls, p: Presentation, c) -> "NcPolynomial":
        return cls(p, {(0,) * p.ngens: p.field.coerce(c)})

    @classmethod
    def one(cls, p: Presentation) -> "NcPolynomial":
        return cls.scalar(p, 1)

    @classmethod
    def monomial(cls, p: Presentation, exponents, coeff=1) -> "NcPolynomial":
        return cls(p, {tuple(exponents): p.field.coerce(coeff)})

    @classmethod
    def generator(cls, p: Presentation, name) -> "NcPolynomial":
        i = name if isinstance(name, int) else p.index(name)
        return cls.monomial(p, p.unit(i))

    @classmethod
    def parse(cls, p: Presentation, text: str) -> "NcPolynomial":
        return normal_form(p, text)

    # -- inspection
    @property
    def field(self):
        return self.presentation.field

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Largest component degree; ``-1`` for zero."""
        if not self.terms:
            return -1
        return max(self.presentation.monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.presentation.monomial_degree(m) for m in self.terms}) <= 1

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), self.field.zero)

    def sorted_terms(self):
        key = lambda mc: (-self.presentation.monomial_degree(mc[0]), tuple(-e for e in mc[0]))
        return sorted(self.terms.items(), key=key)

    # -- arithmetic
    def _coerce(self, other):
        if isinstance(other, NcPolynomial):
            _same(self, other)
            return other
        return NcPolynomial.scalar(self.presentation, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        _accumulate(self.field, acc, other.terms, self.field.one)
        return NcPolynomial(self.presentation, acc)

    __radd__ = __add__

    def __neg__(self):
        return NcPolynomial(self.presentation, {m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "NcPolynomial":
        c = self.field.coerce(c)
        return NcPolynomial(self.presentation, {m: self.field.mul(v, c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPolynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, NcPolynomial):
            return self.presentation == other.presentation and self.terms == other.terms
        try:
            return self == NcPolynomial.scalar(self.presentation, other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.presentation, frozenset(self.terms.items())))
        return self._hash

    def __str__(self):
        return render_terms(self.presentation, self.terms)

    def __repr__(self):
        return f"NcPolynomial({self})"


def _same(a: NcPolynomial, b: NcPolynomial) -> None:
    if a.presentation is not b.presentation and a.presentation != b.presentation:
        raise AlgebraError("operands belong to different presentations", code="PRESENTATION_MISMATCH")


# ---------------------------------------------------------------------------
# word rewriting


def rewrite_word_terms(p: Presentation, words: dict, strategy: str = "leftmost") -> dict:
    """Rewrite ``{word: coeff}`` to ``{standard monomial: coeff}`` one redex at a time.

    ``strategy`` picks which inversion ``g_j g_i`` (``j > i``) is replaced at
    each step: the ``"leftmost"`` or the ``"rightmost"`` one.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    field = p.field
    n = p.ngens
    rhs_words = {
        pair: [(tuple(k for k, e in enumerate(m) for _ in range(e)), c) for m, c in terms.items()]
        for pair, terms in p.rule_map.items()
    }
    pending = {w: c for w, c in words.items() if c != 0}
    result: dict = {}
    steps = 0
    while pending:
        # shortest words first keeps merging effective
        w = min(pending, key=lambda x: (len(x), x))
        c = pending.pop(w)
        redexes = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
        if not redexes:
            _accumulate(field, result, {word_to_monomial(n, w): c}, field.one)
            continue
        steps += 1
        if steps > MAX_REWRITE_STEPS:
            raise AlgebraError("rewriting does not terminate", code="NON_TERMINATING")
        pos = redexes[0] if strategy == "leftmost" else redexes[-1]
        pre, post = w[:pos], w[pos + 2 :]
        for t, tc in rhs_words[(w[pos], w[pos + 1])]:
            _accumulate(field, pending, {pre + t + post: tc}, c)
    return result


def normal_form(p: Presentation, expr, strategy: str = "leftmost") -> NcPolynomial:
    """Normal form of an expression.

    ``expr`` is either text in the presentation ``poly`` grammar (words need
    not be standard, e.g. ``"y*x^3"``) or a sequence of ``(coeff, word)``
    pairs with words given as tuples of generator indices.
    """
    if isinstance(expr, str):
        pairs = parse_expression(p, expr)
    else:
        pairs = [(p.field.coerce(c), tuple(w)) for c, w in expr]
        if any(not 0 <= g < p.ngens for _, w in pairs for g in w):
            raise ValueError("word uses a generator index out of range")
    words: dict = {}
    for c, w in pairs:
        _accumulate(p.field, words, {w: c}, p.field.one)
    return NcPolynomial(p, rewrite_word_terms(p, words, strategy))


def word_product(p: Presentation, word) -> NcPolynomial:
    """Product of the letters of ``word`` computed with the memoized engine."""
    acc = NcPolynomial.one(p)
    for g in word:
        acc = acc * NcPolynomial.generator(p, g)
    return acc


# ---------------------------------------------------------------------------
# ring operations


def multiply(a: NcPolynomial, b: NcPolynomial, cache: bool = True) -> NcPolynomial:
    _same(a, b)
    p = a.presentation
    eng = rewriter(p) if cache else Rewriter(p, use_cache=False)
    field = p.field
    acc: dict = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            _accumulate(field, acc, eng.mon_mul(u, v), field.mul(cu, cv))
    return NcPolynomial(p, acc)


def power(a: NcPolynomial, k: int) -> NcPolynomial:
    if k < 0:
        raise ValueError("negative exponent")
    result = NcPolynomial.one(a.presentation)
    for _ in range(k):
        result = multiply(result, a)
    return result


def commutator(a: NcPolynomial, b: NcPolynomial) -> NcPolynomial:
    return multiply(a, b) - multiply(b, a)


def decompose(a: NcPolynomial) -> dict:
    """Homogeneous components ``{degree: NcPolynomial}`` in increasing degree."""
    p = a.presentation
    parts: dict = {}
    for m, c in a.terms.items():
        parts.setdefault(p.monomial_degree(m), {})[m] = c
    return {d: NcPolynomial(p, parts[d]) for d in sorted(parts)}


def reassemble(components: dict, p: Presentation) -> NcPolynomial:
    total = NcPolynomial.zero(p)
    for comp in components.values():
        total = total + comp
    return total


def from_words(p: Presentation, words: Iterable) -> NcPolynomial:
    """Convenience: sum of standard words given as index tuples."""
    acc: dict = {}
    for w in words:
        if not is_standard_word(w):
            raise ValueError("word is not standard")
        _accumulate(p.field, acc, {word_to_monomial(p.ngens, w): p.field.one}, p.field.one)
    return NcPolynomial(p, acc)
