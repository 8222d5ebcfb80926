"""Algebra presentations: generators with degrees plus one rewrite rule per generator pair.

A presentation file looks like::

    # first Weyl algebra in characteristic 2
    field GF(2)
    gen x 1
    gen y 1
    rel y*x = x*y + 1

Statements may also be separated by ``;``.  The declaration order of the
generators is the PBW order, so the standard monomials are
``g1^a1 * ... * gn^an`` and every rule rewrites ``gj*gi`` (``j > i``) into a
combination of standard monomials of degree at most ``deg(gj) + deg(gi)``.
"""

from __future__ import annotations

import hashlib
import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .errors import MixedFieldsError, PresentationError
from .exact import QQ, Field, FieldScalar, field_from_id

Monomial = tuple  # exponent vector


@dataclass(frozen=True)
class Presentation:
    """Finitely presented semi-graded algebra of quadratic type.

    ``rules`` is a tuple of ``((j, i), terms)`` with ``j > i`` and ``terms`` a
    sorted tuple of ``(exponents, raw_coefficient)`` pairs.
    """

    field: Field
    generators: tuple
    degrees: tuple
    rules: tuple = field(repr=False)

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("generator names must be unique", code="DUPLICATE_GENERATOR")
        if any(d < 1 for d in self.degrees):
            raise PresentationError("generator degrees must be positive", code="DEGREE_VIOLATION")

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @cached_property
    def rule_map(self) -> dict:
        return {pair: dict(terms) for pair, terms in self.rules}

    def rule(self, j: int, i: int) -> dict:
        """Right hand side of ``g_j * g_i`` (``j > i``) as ``{exponents: coeff}``."""
        return self.rule_map[(j, i)]

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name!r}", code="UNKNOWN_GENERATOR") from None

    def monomial_degree(self, mon: Monomial) -> int:
        return sum(e * d for e, d in zip(mon, self.degrees))

    def unit(self, i: int) -> Monomial:
        return tuple(1 if k == i else 0 for k in range(self.ngens))

    @cached_property
    def is_graded(self) -> bool:
        """True when no rule drops degree (every right hand side is homogeneous of full degree)."""
        for (j, i), terms in self.rules:
            top = self.degrees[j] + self.degrees[i]
            if any(self.monomial_degree(m) != top for m, _ in terms):
                return False
        return True

    def render(self) -> str:
        return render_presentation(self)

    def digest(self) -> str:
        return presentation_digest(self)

    def __str__(self):
        return self.render()


# ---------------------------------------------------------------------------
# rendering


def render_monomial(p: Presentation, mon: Monomial) -> str:
    parts = []
    for name, e in zip(p.generators, mon):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def display_key(p: Presentation):
    """Sort key putting higher degree first, then lexicographically larger exponents."""
    return lambda mon: (-p.monomial_degree(mon), tuple(-e for e in mon))


def render_terms(p: Presentation, terms: dict) -> str:
    items = [(m, c) for m, c in terms.items() if c != 0]
    if not items:
        return "0"
    items.sort(key=lambda mc: display_key(p)(mc[0]))
    out = []
    for k, (mon, c) in enumerate(items):
        neg = p.field.characteristic == 0 and c < 0
        mag = -c if neg else c
        mtext = render_monomial(p, mon)
        if not mtext:
            body = p.field.render(mag)
        elif mag == 1:
            body = mtext
        else:
            body = f"{p.field.render(mag)}*{mtext}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def render_presentation(p: Presentation) -> str:
    lines = [f"field {p.field.field_id}"]
    lines += [f"gen {g} {d}" for g, d in zip(p.generators, p.degrees)]
    for (j, i), terms in p.rules:
        lhs = f"{p.generators[j]}*{p.generators[i]}"
        lines.append(f"rel {lhs} = {render_terms(p, dict(terms))}")
    return "\n".join(lines) + "\n"


def presentation_digest(p: Presentation) -> str:
    """SHA-256 of the canonical rendering; whitespace and term order in the source do not matter."""
    return hashlib.sha256(render_presentation(p).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^=()]))")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


class _Tokens:
    def __init__(self, text: str, line: int, col0: int):
        self.toks = []
        pos = 0
        text = text.rstrip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise PresentationError(f"unexpected character {text[pos]!r}", line=line, col=col0 + pos + 1)
            kind = m.lastgroup
            start = m.start(kind)
            self.toks.append((kind, m.group(kind), col0 + start + 1))
            pos = m.end()
        self.i = 0
        self.line = line
        self.end_col = col0 + len(text) + 1

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        k, v, col = self.next()
        if k != kind or (value is not None and v != value):
            want = value or kind
            got = v if v is not None else "end of statement"
            raise PresentationError(f"expected {want}, got {got!r}", line=self.line, col=col)
        return v, col

    def at_end(self):
        return self.i >= len(self.toks)


def _parse_coeff(toks: _Tokens):
    from fractions import Fraction

    num, _ = toks.expect("num")
    if toks.peek()[1] == "/":
        toks.next()
        den, col = toks.expect("num")
        if int(den) == 0:
            raise PresentationError("zero denominator", line=toks.line, col=col)
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def _parse_word(toks: _Tokens, lookup):
    """factor ("*" factor)*, returned as a tuple of generator indices."""
    word = []
    while True:
        name, col = toks.expect("ident")
        idx = lookup(name, col)
        exp = 1
        if toks.peek()[1] == "^":
            toks.next()
            e, _ = toks.expect("num")
            exp = int(e)
        word.extend([idx] * exp)
        if toks.peek()[1] == "*" and toks.toks[toks.i + 1 : toks.i + 2] and toks.toks[toks.i + 1][0] == "ident":
            toks.next()
            continue
        return tuple(word)


def _parse_poly(toks: _Tokens, lookup):
    """Returns a list of ``(Fraction, word, col)``; an optional leading sign is accepted."""
    terms = []
    sign = 1
    kind, val, _ = toks.peek()
    if val in ("+", "-"):
        toks.next()
        sign = -1 if val == "-" else 1
    while True:
        kind, val, col = toks.peek()
        if kind == "num":
            c = _parse_coeff(toks)
            word = ()
            if toks.peek()[1] == "*":
                toks.next()
                word = _parse_word(toks, lookup)
        elif kind == "ident":
            c = 1
            word = _parse_word(toks, lookup)
        else:
            got = val if val is not None else "end of statement"
            raise PresentationError(f"expected a term, got {got!r}", line=toks.line, col=col)
        terms.append((sign * c, word, col))
        kind, val, col = toks.peek()
        if val in ("+", "-"):
            toks.next()
            sign = -1 if val == "-" else 1
            continue
        return terms


def _statements(text: str):
    """Yield ``(line_no, col_offset, statement)`` with comments stripped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        offset = 0
        for piece in line.split(";"):
            stripped = piece.strip()
            if stripped:
                lead = len(piece) - len(piece.lstrip())
                yield lineno, offset + lead, stripped
            offset += len(piece) + 1


def word_to_monomial(n: int, word: Sequence[int]) -> Monomial:
    exps = [0] * n
    for g in word:
        exps[g] += 1
    return tuple(exps)


def is_standard_word(word: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(word, word[1:]))


def parse_presentation(text: str) -> Presentation:
    """Parse presentation text into a validated-shape :class:`Presentation`."""
    field_obj = None
    names: list[str] = []
    degrees: list[int] = []
    raw_rules: dict = {}
    for line, col0, stmt in _statements(text):
        keyword = stmt.split(None, 1)[0]
        rest = stmt[len(keyword):]
        rest_col = col0 + len(keyword)
        if keyword == "field":
            if field_obj is not None:
                raise PresentationError("more than one field statement", line=line, col=col0 + 1)
            spec = rest.strip().replace(" ", "")
            try:
                field_obj = field_from_id(spec)
            except Exception as exc:
                raise PresentationError(f"bad field {spec!r}: {exc}", line=line, col=rest_col + 2) from None
        elif keyword == "gen":
            if raw_rules:
                raise PresentationError("gen statements must precede rel statements", line=line, col=col0 + 1)
            toks = _Tokens(rest, line, rest_col)
            name, ncol = toks.expect("ident")
            deg, _ = toks.expect("num")
            if not toks.at_end():
                raise PresentationError("trailing input after gen", line=line, col=toks.peek()[2])
            if name in names:
                raise PresentationError(f"generator {name!r} declared twice", code="DUPLICATE_GENERATOR", line=line, col=ncol)
            if int(deg) < 1:
                raise PresentationError("generator degree must be at least 1", code="DEGREE_VIOLATION", line=line)
            names.append(name)
            degrees.append(int(deg))
        elif keyword == "rel":
            if field_obj is None:
                raise PresentationError("field statement must precede rel statements", line=line, col=col0 + 1)
            if not names:
                raise PresentationError("rel before any gen statement", line=line, col=col0 + 1)
            toks = _Tokens(rest, line, rest_col)

            def lookup(name, col, _line=line):
                if name not in names:
                    raise PresentationError(f"unknown generator {name!r}", code="UNKNOWN_GENERATOR", line=_line, col=col)
                return names.index(name)

            a, acol = toks.expect("ident")
            if toks.peek()[1] != "*":
                raise PresentationError("left side must be a product of two generators", code="NON_PBW_LHS", line=line, col=toks.peek()[2])
            toks.next()
            b, _ = toks.expect("ident")
            j, i = lookup(a, acol), lookup(b, acol)
            if j <= i:
                raise PresentationError(
                    f"left side {a}*{b} must be g_j*g_i with g_j declared after g_i", code="NON_PBW_LHS", line=line, col=acol
                )
            if toks.peek()[1] != "=":
                raise PresentationError("left side must be a product of two generators", code="NON_PBW_LHS", line=line, col=toks.peek()[2])
            toks.next()
            if (j, i) in raw_rules:
                raise PresentationError(f"second rule for {a}*{b}", code="DUPLICATE_RULE", line=line, col=acol)
            terms = _parse_poly(toks, lookup)
            if not toks.at_end():
                raise PresentationError("unexpected input", line=line, col=toks.peek()[2])
            raw_rules[(j, i)] = (terms, line)
        else:
            raise PresentationError(f"unknown statement {keyword!r}", line=line, col=col0 + 1)
    if field_obj is None:
        raise PresentationError("missing field statement", line=1, col=1)
    if not names:
        raise PresentationError("no generators declared", line=1, col=1)

    n = len(names)
    rules = []
    for j in range(n):
        for i in range(j):
            if (j, i) not in raw_rules:
                raise PresentationError(f"missing rule for {names[j]}*{names[i]}", code="MISSING_RULE")
            terms, line = raw_rules[(j, i)]
            top = degrees[j] + degrees[i]
            acc: dict = {}
            for c, word, col in terms:
                if not is_standard_word(word):
                    raise PresentationError(
                        "right hand side terms must be standard monomials", code="NON_STANDARD_RHS", line=line, col=col
                    )
                mon = word_to_monomial(n, word)
                if sum(e * d for e, d in zip(mon, degrees)) > top:
                    raise PresentationError(
                        f"term of degree above {top} in rule {names[j]}*{names[i]}", code="DEGREE_VIOLATION", line=line, col=col
                    )
                acc[mon] = field_obj.add(acc.get(mon, field_obj.zero), field_obj.coerce(c))
            rules.append(((j, i), _canonical_terms(acc)))
    return Presentation(field_obj, tuple(names), tuple(degrees), tuple(rules))


def _canonical_terms(terms: dict) -> tuple:
    return tuple(sorted((m, c) for m, c in terms.items() if c != 0))


def make_presentation(field_obj: Field, generators: Sequence[tuple], rules: dict) -> Presentation:
    """Build a presentation programmatically.

    ``generators`` is a list of ``(name, degree)``; ``rules`` maps ``(j, i)``
    to ``{exponents: coefficient}``.  The result is checked exactly as a
    parsed file would be, by rendering and re-parsing it.
    """
    names = tuple(g for g, _ in generators)
    degrees = tuple(d for _, d in generators)
    coerced = []
    for j in range(len(names)):
        for i in range(j):
            terms = rules.get((j, i), {})
            coerced.append(((j, i), _canonical_terms({m: field_obj.coerce(c) for m, c in terms.items()})))
    p = Presentation(field_obj, names, degrees, tuple(coerced))
    return parse_presentation(render_presentation(p))


def two_gen_presentation(d, e, f, g, field_obj: Field | None = None) -> Presentation:
    """``x, y`` of degree 1 with ``y*x = d*x*y + e*x + f*y + g``."""
    scalars = [s for s in (d, e, f, g) if isinstance(s, FieldScalar)]
    if field_obj is None:
        field_obj = scalars[0].field if scalars else QQ
    for s in scalars:
        if s.field != field_obj:
            raise MixedFieldsError(f"parameter in {s.field}, presentation over {field_obj}")
    rhs = {(1, 1): d, (1, 0): e, (0, 1): f, (0, 0): g}
    return make_presentation(field_obj, [("x", 1), ("y", 1)], {(1, 0): rhs})


def parse_expression(p: Presentation, text: str) -> list:
    """Parse a ``poly`` expression into ``[(raw_coeff, word)]``; words need not be standard."""
    toks = _Tokens(text, 1, 0)

    def lookup(name, col):
        if name not in p.generators:
            raise PresentationError(f"unknown generator {name!r}", code="UNKNOWN_GENERATOR", line=1, col=col)
        return p.generators.index(name)

    terms = _parse_poly(toks, lookup)
    if not toks.at_end():
        raise PresentationError("unexpected input", line=1, col=toks.peek()[2])
    return [(p.field.coerce(c), w) for c, w, _ in terms]


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class ValidationReport:
    confluent_to_degree: int
    sg_axiom_verified_to_degree: int
    violations: tuple  # of (witness word text, discrepancy polynomial text, kind)

    @property
    def ok(self) -> bool:
        return not self.violations


def _random_word(p: Presentation, rng: random.Random, max_degree: int) -> tuple:
    target = rng.randint(1, max_degree)
    word: list[int] = []
    total = 0
    while True:
        choices = [g for g in range(p.ngens) if total + p.degrees[g] <= target]
        if not choices:
            return tuple(word)
        g = rng.choice(choices)
        word.append(g)
        total += p.degrees[g]


def word_text(p: Presentation, word: Sequence[int]) -> str:
    return "*".join(p.generators[g] for g in word) or "1"


def validate(p: Presentation, bound: int, samples: int = 500, seed: int = 0) -> ValidationReport:
    """Check confluence and the semi-graded degree axiom up to ``bound``.

    * every overlap ``gk*gj*gi`` with ``k > j > i`` is rewritten starting from
      both redexes and the two normal forms are compared;
    * ``samples`` random words of degree at most ``bound`` are normalized with
      the leftmost and the rightmost strategy and compared; the memoized
      multiplication of their letters is compared as well;
    * for standard monomials ``u, v`` with ``deg u + deg v <= bound`` every
      component of ``u*v`` has degree at most ``deg u + deg v``.
    """
    from . import ncpoly

    if bound < 2:
        raise ValueError("bound must be at least 2")
    violations = []
    confluent = True
    n = p.ngens
    for k in range(n):
        for j in range(k):
            for i in range(j):
                word = (k, j, i)
                left = ncpoly.rewrite_word_terms(p, {word: p.field.one}, strategy="leftmost")
                right = ncpoly.rewrite_word_terms(p, {word: p.field.one}, strategy="rightmost")
                if left != right:
                    diff = ncpoly.NcPolynomial(p, left) - ncpoly.NcPolynomial(p, right)
                    violations.append((word_text(p, word), str(diff), "overlap"))
                    confluent = False
    rng = random.Random(seed)
    for _ in range(samples):
        word = _random_word(p, rng, bound)
        a = ncpoly.rewrite_word_terms(p, {word: p.field.one}, strategy="leftmost")
        b = ncpoly.rewrite_word_terms(p, {word: p.field.one}, strategy="rightmost")
        c = ncpoly.word_product(p, word).terms
        if not (a == b == c):
            diff = ncpoly.NcPolynomial(p, a) - ncpoly.NcPolynomial(p, b)
            if not diff.terms:
                diff = ncpoly.NcPolynomial(p, a) - ncpoly.NcPolynomial(p, c)
            violations.append((word_text(p, word), str(diff), "strategy"))
            confluent = False
    sg_ok = True
    if confluent:
        from .grading import monomials_up_to

        mons = monomials_up_to(p, bound)
        for u in mons:
            du = p.monomial_degree(u)
            for v in mons:
                dv = p.monomial_degree(v)
                if du + dv > bound:
                    continue
                prod = ncpoly.NcPolynomial.monomial(p, u) * ncpoly.NcPolynomial.monomial(p, v)
                if prod.degree() > du + dv:
                    violations.append((f"({render_monomial(p, u) or '1'})*({render_monomial(p, v) or '1'})", str(prod), "degree"))
                    sg_ok = False
    return ValidationReport(
        confluent_to_degree=bound if confluent else 0,
        sg_axiom_verified_to_degree=bound if (confluent and sg_ok) else 0,
        violations=tuple(violations),
    )
