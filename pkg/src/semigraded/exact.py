"""Exact scalars over Q and GF(p), and dense exact linear algebra.

Coefficients are stored *raw* inside polynomials and vectors (``Fraction``
for the rationals, ``int`` in ``[0, p)`` for prime fields); the owning
:class:`Field` object performs the arithmetic.  :class:`FieldScalar` is the
user facing wrapper that remembers its field and refuses to mix fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import isprime

from .errors import AmbientMismatchError, FieldDivisionError, MixedFieldsError, SemigradedError, ZeroInputError


class Field:
    """Base class for the two supported coefficient fields."""

    characteristic: int
    field_id: str

    def __repr__(self):
        return self.field_id

    def __eq__(self, other):
        return isinstance(other, Field) and self.field_id == other.field_id

    def __hash__(self):
        return hash(self.field_id)

    def __call__(self, value) -> "FieldScalar":
        return FieldScalar(self, self.coerce(value))

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def is_zero(self, a) -> bool:
        return a == 0

    def neg(self, a):
        return self.sub(self.zero, a)

    def inv(self, a):
        return self.div(self.one, a)

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result


class RationalField(Field):
    characteristic = 0
    field_id = "Q"

    def coerce(self, value):
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise MixedFieldsError(f"cannot use an element of {value.field} in {self}")
            return value.value
        if isinstance(value, float):
            raise TypeError("floating point coefficients are not exact")
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        if b == 0:
            raise FieldDivisionError("division by zero in Q")
        return a / b

    def neg(self, a):
        return -a

    def render(self, a) -> str:
        return str(a)


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise SemigradedError(f"GF({p}) requested but {p} is not prime", code="NOT_PRIME")
        self.p = p
        self.characteristic = p
        self.field_id = f"GF({p})"

    def coerce(self, value):
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise MixedFieldsError(f"cannot use an element of {value.field} in {self}")
            return value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise FieldDivisionError(f"denominator of {value} vanishes in {self}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, int):
            return value % self.p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if b == 0:
            raise FieldDivisionError(f"division by zero in {self}")
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def render(self, a) -> str:
        return str(a)


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_id(field_id: str) -> Field:
    """Inverse of ``Field.field_id``: ``"Q"`` or ``"GF(p)"``."""
    text = field_id.replace(" ", "")
    if text in ("Q", "QQ"):
        return QQ
    if text.startswith("GF(") and text.endswith(")") and text[3:-1].isdigit():
        return GF(int(text[3:-1]))
    raise SemigradedError(f"unknown field {field_id!r}", code="UNKNOWN_FIELD")


@dataclass(frozen=True)
class FieldScalar:
    """An exact element of a given field."""

    field: Field
    value: object

    def _other(self, other):
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise MixedFieldsError(f"{self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldScalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldScalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldScalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldScalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldScalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldScalar(self.field, self.field.power(self.value, n))

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, SemigradedError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def __str__(self):
        return self.field.render(self.value)

    def __repr__(self):
        return f"{self.field.render(self.value)} in {self.field}"


def scalar_arith(a: FieldScalar, b: FieldScalar, op: str) -> FieldScalar:
    """Apply ``op`` in ``{"add", "sub", "mul", "div"}`` to two scalars of one field."""
    if a.field != b.field:
        raise MixedFieldsError(f"{a.field} and {b.field}")
    ops = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}
    if op not in ops:
        raise ValueError(f"unknown operation {op!r}")
    return FieldScalar(a.field, ops[op](a.value, b.value))


def multiplicative_order(d: FieldScalar, limit: int) -> int | None:
    """Smallest ``n >= 1`` with ``d**n == 1``, or ``None`` if there is none up to ``limit``.

    Over Q only 1 and -1 have finite order, which is decided without search.
    """
    field = d.field
    if field.is_zero(d.value):
        raise ZeroInputError("the zero element has no multiplicative order")
    if field.characteristic == 0:
        if d.value == 1:
            n = 1
        elif d.value == -1:
            n = 2
        else:
            return None
        return n if n <= limit else None
    acc = d.value
    for n in range(1, limit + 1):
        if acc == 1:
            return n
        acc = field.mul(acc, d.value)
    return None


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    """Dense matrix of raw coefficients of ``field``."""

    field: Field
    rows: tuple
    ncols: int

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        data = tuple(tuple(field.coerce(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        return cls(field, data, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def is_rref(self) -> bool:
        last = -1
        seen_zero = False
        for r in self.rows:
            lead = next((j for j, v in enumerate(r) if v != 0), None)
            if lead is None:
                seen_zero = True
                continue
            if seen_zero or lead <= last or r[lead] != self.field.one:
                return False
            if any(other[lead] != 0 for other in self.rows if other is not r):
                return False
            last = lead
        return True


def rref_rows(field: Field, rows: Sequence[Sequence], ncols: int):
    """Gauss-Jordan elimination.  Returns ``(nonzero_rows, pivot_columns)``."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    zero = field.zero
    for c in range(ncols):
        if r == len(work):
            break
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = field.inv(work[r][c])
        row = [field.mul(v, inv) for v in work[r]]
        work[r] = row
        for i in range(len(work)):
            if i != r:
                f = work[i][c]
                if f != zero:
                    other = work[i]
                    for j in range(c, ncols):
                        if row[j] != zero:
                            other[j] = field.sub(other[j], field.mul(f, row[j]))
        pivots.append(c)
        r += 1
    return [tuple(w) for w in work[:r]], tuple(pivots)


def rref(m: Matrix) -> Matrix:
    """Reduced row echelon form; zero rows are kept at the bottom so the shape is preserved."""
    rows, _ = rref_rows(m.field, m.rows, m.ncols)
    zero_row = tuple([m.field.zero] * m.ncols)
    rows = rows + [zero_row] * (m.nrows - len(rows))
    return Matrix(m.field, tuple(rows), m.ncols)


def kernel(field: Field, rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of ``{v : A v = 0}`` for the matrix with the given rows."""
    red, pivots = rref_rows(field, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = field.neg(row[fcol])
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# subspaces


class Echelon:
    """Mutable workspace: a set of independent vectors kept reduced against each other's pivots.

    Used while growing a span (ideal closures); call :meth:`freeze` to get
    the canonical :class:`Subspace`.
    """

    def __init__(self, field: Field, ambient: Sequence):
        self.field = field
        self.ambient = tuple(ambient)
        self.rows: dict[int, list] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Sequence) -> list:
        field = self.field
        v = list(vec)
        for c in sorted(self.rows):
            f = v[c]
            if f != 0:
                row = self.rows[c]
                for j in range(c, len(v)):
                    if row[j] != 0:
                        v[j] = field.sub(v[j], field.mul(f, row[j]))
        return v

    def add(self, vec: Sequence) -> bool:
        """Insert ``vec``; return True when it enlarged the span."""
        field = self.field
        v = self.reduce(vec)
        lead = next((j for j, x in enumerate(v) if x != 0), None)
        if lead is None:
            return False
        inv = field.inv(v[lead])
        v = [field.mul(x, inv) for x in v]
        for c, row in self.rows.items():
            f = row[lead]
            if f != 0:
                for j in range(lead, len(v)):
                    if v[j] != 0:
                        row[j] = field.sub(row[j], field.mul(f, v[j]))
        self.rows[lead] = v
        return True

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def freeze(self) -> "Subspace":
        order = sorted(self.rows)
        return Subspace(self.ambient, self.field, tuple(tuple(self.rows[c]) for c in order), tuple(order))


@dataclass(frozen=True)
class Subspace:
    """Span of vectors in coordinates ``ambient`` (an ordered basis), stored in reduced row-echelon form."""

    ambient: tuple
    field: Field
    rows: tuple
    pivots: tuple

    @classmethod
    def span(cls, field: Field, ambient: Sequence, vectors: Iterable[Sequence]) -> "Subspace":
        ambient = tuple(ambient)
        rows, pivots = rref_rows(field, [tuple(field.coerce(x) for x in v) for v in vectors], len(ambient))
        return cls(ambient, field, tuple(rows), pivots)

    @classmethod
    def zero(cls, field: Field, ambient: Sequence) -> "Subspace":
        return cls(tuple(ambient), field, (), ())

    @classmethod
    def full(cls, field: Field, ambient: Sequence) -> "Subspace":
        n = len(ambient)
        rows = tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))
        return cls(tuple(ambient), field, rows, tuple(range(n)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.field, self.rows, len(self.ambient))

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatchError("subspaces live in different coordinate spaces")

    def reduce(self, vec: Sequence) -> list:
        field = self.field
        v = [field.coerce(x) for x in vec]
        if len(v) != len(self.ambient):
            raise AmbientMismatchError("vector length does not match the ambient basis")
        for row, c in zip(self.rows, self.pivots):
            f = v[c]
            if f != 0:
                for j in range(c, len(v)):
                    if row[j] != 0:
                        v[j] = field.sub(v[j], field.mul(f, row[j]))
        return v

    def member(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.member(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row reduce ``[a | a]`` stacked on ``[b | 0]``."""
        self._check(other)
        n = len(self.ambient)
        zero = [self.field.zero] * n
        block = [list(r) + list(r) for r in self.rows] + [list(r) + zero for r in other.rows]
        rows, pivots = rref_rows(self.field, block, 2 * n)
        inter = [r[n:] for r, p in zip(rows, pivots) if p >= n]
        return Subspace.span(self.field, self.ambient, inter)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def vectors(self):
        return [list(r) for r in self.rows]


def subspace_ops(a: Subspace, b, op: str):
    """Dispatch helper: ``contains``, ``sum``, ``intersect`` take a subspace, ``member`` a vector."""
    if op == "contains":
        return a.contains(b)
    if op == "sum":
        return a.sum(b)
    if op == "intersect":
        return a.intersect(b)
    if op == "member":
        return a.member(b)
    raise ValueError(f"unknown subspace operation {op!r}")
