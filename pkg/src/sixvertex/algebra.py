"""Exact sparse multivariate polynomials over the rationals.

Every weight, amplitude and identity in this package is a :class:`Polynomial`
over a shared :class:`VarTable`.  Coefficients are Python ints where possible
and :class:`fractions.Fraction` otherwise; nothing is ever rounded.

Monomials are packed into a single integer: a total-degree field on top,
followed by one 16-bit exponent field per variable in table order.  Integer
comparison of packed keys is then exactly graded-lexicographic order, and
monomial multiplication is integer addition.
"""

from __future__ import annotations

import heapq
import re
from contextlib import contextmanager
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Union[int, Fraction]

_FIELD = 16
_FIELD_MASK = (1 << _FIELD) - 1
# Exponents must stay below 2**15 so the top bit of every field is a guard bit.
MAX_DEGREE = (1 << (_FIELD - 1)) - 1

_term_limit = 10**6


class AlgebraError(Exception):
    """Base class for polynomial errors."""


class StructuralError(AlgebraError, ValueError):
    """Mismatched variable tables, unknown variables, malformed shapes."""


class TermLimitExceeded(AlgebraError):
    """An operation would produce more terms than the configured cap."""


class DivisionNotExact(AlgebraError, ArithmeticError):
    """Raised by :func:`exact_div` when the divisor leaves a remainder."""

    def __init__(self, numerator, denominator, quotient, remainder):
        self.numerator = numerator
        self.denominator = denominator
        self.quotient = quotient
        self.remainder = remainder
        super().__init__(f"division not exact; remainder {remainder}")


def get_term_limit() -> int:
    return _term_limit


def set_term_limit(limit: int) -> None:
    """Set the global cap on the number of terms any single result may hold."""
    global _term_limit
    if limit < 1:
        raise ValueError("term limit must be positive")
    _term_limit = int(limit)


@contextmanager
def term_limit(limit: int):
    """Temporarily override the term cap."""
    old = _term_limit
    set_term_limit(limit)
    try:
        yield
    finally:
        set_term_limit(old)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _cdiv(a: Rational, b: Rational) -> Rational:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    return _norm(Fraction(a) / b)


def as_rational(value) -> Rational:
    """Coerce ints, Fractions and ``"p/q"`` strings to an exact rational."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _norm(value)
    if isinstance(value, str):
        return _norm(Fraction(value.strip()))
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")



def exact_fraction(value) -> Fraction:
    """Like :func:`as_rational` but always a ``Fraction``, so ``1 / x`` stays exact."""
    return Fraction(as_rational(value))

class VarTable:
    """Ordered set of variable names shared by a family of polynomials.

    The order fixes the monomial ordering: earlier names are lexicographically
    heavier.  Tables compare equal when their name sequences are equal.
    """

    __slots__ = ("names", "_index", "_low_mask", "_guard", "_shifts", "_deg_shift")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate variable names in {names}")
        for name in names:
            if not isinstance(name, str) or not name:
                raise StructuralError(f"invalid variable name {name!r}")
        n = len(names)
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        self._shifts = tuple(_FIELD * (n - 1 - i) for i in range(n))
        self._deg_shift = _FIELD * n
        self._low_mask = (1 << self._deg_shift) - 1
        self._guard = sum(1 << (s + _FIELD - 1) for s in self._shifts)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarTable({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"unknown variable {name!r} (table has {list(self.names)})") from None

    def extend(self, *names: str) -> "VarTable":
        """Return a new table with ``names`` appended (existing names skipped)."""
        extra = [n for n in names if n not in self._index]
        return VarTable(self.names + tuple(extra))

    # -- monomial packing -------------------------------------------------

    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) > len(self.names):
            raise StructuralError("exponent vector longer than the variable table")
        key = 0
        deg = 0
        for e, s in zip(exps, self._shifts):
            if e < 0:
                raise StructuralError("negative exponent")
            key |= e << s
            deg += e
        if deg > MAX_DEGREE:
            raise TermLimitExceeded(f"total degree {deg} exceeds {MAX_DEGREE}")
        return key | (deg << self._deg_shift)

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> s) & _FIELD_MASK for s in self._shifts)

    def degree_of(self, key: int) -> int:
        return key >> self._deg_shift

    def divides(self, small: int, big: int) -> bool:
        if (small >> self._deg_shift) > (big >> self._deg_shift):
            return False
        lo_s = small & self._low_mask
        lo_b = big & self._low_mask
        g = self._guard
        return ((lo_b | g) - lo_s) & g == g

    # -- constructors -------------------------------------------------------

    def var(self, name: str) -> "Polynomial":
        i = self.index(name)
        exps = [0] * len(self.names)
        exps[i] = 1
        return Polynomial._make(self, {self.pack(exps): 1})

    def vars(self, *names: str) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in names)

    def const(self, c) -> "Polynomial":
        c = as_rational(c)
        return Polynomial._make(self, {0: c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial._make(self, {})

    def one(self) -> "Polynomial":
        return Polynomial._make(self, {0: 1})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients.

    ``Polynomial(table, {(2, 1): 3})`` is ``3*x^2*y`` over ``VarTable("xy")``.
    Arithmetic accepts other polynomials on the same table and plain
    ints/Fractions.
    """

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[Sequence[int], object] | None = None):
        self.table = table
        packed: dict[int, Rational] = {}
        for exps, c in (terms or {}).items():
            c = as_rational(c)
            if c:
                k = table.pack(tuple(exps))
                packed[k] = _norm(packed.get(k, 0) + c)
                if not packed[k]:
                    del packed[k]
        self._terms = packed
        self._hash = None

    @classmethod
    def _make(cls, table: VarTable, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.table = table
        p._terms = terms
        p._hash = None
        return p

    # -- inspection -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def constant_value(self) -> Rational:
        if not self.is_constant():
            raise StructuralError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def terms(self) -> list[tuple[tuple[int, ...], Rational]]:
        """Terms as ``(exponents, coefficient)`` in descending graded-lex order."""
        unpack = self.table.unpack
        return [(unpack(k), self._terms[k]) for k in sorted(self._terms, reverse=True)]

    def coefficient(self, exps: Sequence[int]) -> Rational:
        return self._terms.get(self.table.pack(tuple(exps)), 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(self._terms) >> self.table._deg_shift

    def degree(self, name: str) -> int:
        """Degree in one variable; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        s = self.table._shifts[self.table.index(name)]
        return max((k >> s) & _FIELD_MASK for k in self._terms)

    def variables(self) -> tuple[str, ...]:
        """Names of the variables that actually occur."""
        present = [False] * len(self.table)
        for k in self._terms:
            for i, e in enumerate(self.table.unpack(k)):
                if e:
                    present[i] = True
        return tuple(n for n, flag in zip(self.table.names, present) if flag)

    def leading_term(self) -> tuple[tuple[int, ...], Rational]:
        if not self._terms:
            raise StructuralError("zero polynomial has no leading term")
        k = max(self._terms)
        return self.table.unpack(k), self._terms[k]

    # -- equality / hashing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.table == other.table and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self._terms.get(0, 0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise StructuralError("polynomials live on different variable tables")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.table.const(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _norm(s)
            else:
                out.pop(k, None)
        _check_size(len(out))
        return Polynomial._make(self.table, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._make(self.table, {k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "Polynomial":
        return self

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c0 = _norm(other)
            if not c0:
                return self.table.zero()
            return Polynomial._make(self.table, {k: _norm(c * c0) for k, c in self._terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return self.table.zero()
        if len(a) < len(b):
            a, b = b, a
        if self.total_degree() + other.total_degree() > MAX_DEGREE:
            raise TermLimitExceeded("product degree exceeds the packing limit")
        limit = _term_limit
        out: dict[int, Rational] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
            if len(out) > limit:
                raise TermLimitExceeded(f"product exceeds {limit} terms")
        out = {k: _norm(c) for k, c in out.items() if c}
        return Polynomial._make(self.table, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = self.table.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.is_constant() and other:
                other = other.constant_value()
            else:
                return exact_div(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            return Polynomial._make(self.table, {k: _cdiv(c, other) for k, c in self._terms.items()})
        return NotImplemented

    # -- substitution -------------------------------------------------------------

    def evaluate(self, bindings: Mapping[str, object]) -> "Polynomial":
        return evaluate(self, bindings)

    def subs(self, mapping: Mapping[str, "Polynomial | Rational"]) -> "Polynomial":
        """Substitute polynomials (or rationals) for variables simultaneously."""
        table = self.table
        idx = {}
        for name, val in mapping.items():
            idx[table.index(name)] = val if isinstance(val, Polynomial) else table.const(val)
        for val in idx.values():
            if val.table != table:
                raise StructuralError("substituted polynomial lives on a different table")
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = idx[i] ** e
            return powers[key]

        out = table.zero()
        pending: dict[int, Rational] = {}
        for k, c in self._terms.items():
            exps = list(table.unpack(k))
            if not any(exps[i] for i in idx):
                pending[k] = c
                continue
            factor = table.one()
            for i in idx:
                if exps[i]:
                    factor = factor * power(i, exps[i])
                    exps[i] = 0
            rest = Polynomial._make(table, {table.pack(exps): c})
            out = out + factor * rest
        return out + Polynomial._make(table, pending)

    def embed(self, table: VarTable) -> "Polynomial":
        """Re-express this polynomial over a superset table."""
        if table == self.table:
            return self
        pos = [table.index(n) for n in self.table.names]
        out = {}
        for k, c in self._terms.items():
            exps = [0] * len(table)
            for i, e in zip(pos, self.table.unpack(k)):
                exps[i] = e
            out[table.pack(exps)] = c
        return Polynomial._make(table, out)

    # -- text ---------------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def _check_size(n: int) -> None:
    if n > _term_limit:
        raise TermLimitExceeded(f"result exceeds {_term_limit} terms")


def _same_table(a: Polynomial, b: Polynomial) -> None:
    if a.table != b.table:
        raise StructuralError("polynomials live on different variable tables")


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Apply ``op`` in ``{"add", "sub", "mul"}`` to two polynomials."""
    _same_table(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def divmod_poly(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Multivariate division of ``num`` by the single polynomial ``den``.

    Returns ``(q, r)`` with ``num = q*den + r`` and no term of ``r`` divisible
    by the graded-lex leading term of ``den``.  For one divisor the remainder is
    zero exactly when ``den`` divides ``num``.
    """
    _same_table(num, den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    table = num.table
    if den.is_constant():
        return num / den.constant_value(), table.zero()
    dterms = den._terms
    lk = max(dterms)
    lc = dterms[lk]
    tail = [(k, c) for k, c in dterms.items() if k != lk]
    rem = dict(num._terms)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot: dict[int, Rational] = {}
    remainder: dict[int, Rational] = {}
    divides = table.divides
    limit = _term_limit
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, None)
        if c is None:
            continue
        if divides(lk, k):
            qk = k - lk
            qc = _cdiv(c, lc)
            quot[qk] = qc
            for dk, dc in tail:
                key = qk + dk
                old = rem.get(key)
                if old is None:
                    rem[key] = _norm(-qc * dc)
                    heapq.heappush(heap, -key)
                else:
                    s = old - qc * dc
                    if s:
                        rem[key] = _norm(s)
                    else:
                        del rem[key]
            if len(quot) > limit:
                raise TermLimitExceeded(f"quotient exceeds {limit} terms")
        else:
            remainder[k] = c
    return Polynomial._make(table, quot), Polynomial._make(table, remainder)


def exact_div(num: Polynomial, den: Polynomial) -> Polynomial:
    """Return ``q`` with ``q*den == num``; raise :class:`DivisionNotExact` otherwise."""
    q, r = divmod_poly(num, den)
    if r:
        raise DivisionNotExact(num, den, q, r)
    return q


def evaluate(p: Polynomial, bindings: Mapping[str, object]) -> Polynomial:
    """Bind some variables to rationals; unbound variables stay formal."""
    table = p.table
    idx = {table.index(name): as_rational(val) for name, val in bindings.items()}
    if not idx:
        return p
    out: dict[int, Rational] = {}
    powcache: dict[tuple[int, int], Rational] = {}
    for k, c in p._terms.items():
        exps = list(table.unpack(k))
        for i, val in idx.items():
            e = exps[i]
            if e:
                key = (i, e)
                if key not in powcache:
                    powcache[key] = val**e
                c = c * powcache[key]
                exps[i] = 0
        if c:
            nk = table.pack(exps)
            s = out.get(nk, 0) + c
            if s:
                out[nk] = _norm(s)
            else:
                out.pop(nk, None)
    return Polynomial._make(table, out)


# -- canonical text ------------------------------------------------------------


def _format_coeff(c: Rational) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_polynomial(p: Polynomial) -> str:
    """Canonical text: descending graded-lex terms, e.g. ``2*z1^2*z2 + 1/3*z2``."""
    if p.is_zero():
        return "0"
    parts = []
    for exps, c in p.terms():
        factors = []
        for name, e in zip(p.table.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = -c if c < 0 else c
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = _format_coeff(mag) + "*" + "*".join(factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def parse_polynomial(text: str, table: VarTable) -> Polynomial:
    """Parse the canonical text form (and sums/products of the same shape)."""
    tokens = []
    for num, name, sym in _TOKEN.findall(text):
        if num:
            tokens.append(("num", int(num)))
        elif name:
            tokens.append(("var", name))
        elif sym.strip():
            if sym not in "+-*/^":
                raise StructuralError(f"unexpected character {sym!r} in {text!r}")
            tokens.append(("op", sym))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take(kind=None, value=None):
        nonlocal pos
        tok = peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise StructuralError(f"malformed polynomial text {text!r}")
        pos += 1
        return tok[1]

    def factor():
        kind, value = peek()
        if kind == "num":
            take()
            c = Fraction(value)
            if peek() == ("op", "/"):
                take()
                c /= take("num")
            return table.const(c)
        if kind == "var":
            take()
            base = table.var(value)
            if peek() == ("op", "^"):
                take()
                base = base ** take("num")
            return base
        raise StructuralError(f"malformed polynomial text {text!r}")

    def term():
        p = factor()
        while peek() == ("op", "*"):
            take()
            p = p * factor()
        return p

    if not tokens:
        raise StructuralError("empty polynomial text")
    sign = 1
    if peek() in (("op", "-"), ("op", "+")):
        sign = -1 if take() == "-" else 1
    result = term() * sign
    while pos < len(tokens):
        op = take("op")
        if op not in "+-":
            raise StructuralError(f"malformed polynomial text {text!r}")
        t = term()
        result = result + t if op == "+" else result - t
    return result


# -- matrices ------------------------------------------------------------------


class PolyMatrix:
    """Dense rectangular grid of polynomials over one table."""

    __slots__ = ("rows", "cols", "entries", "table")

    def __init__(self, entries: Sequence[Sequence[Polynomial]], table: VarTable | None = None):
        rows = [list(r) for r in entries]
        if not rows:
            if table is None:
                raise StructuralError("an empty matrix needs an explicit table")
            self.table = table
            self.rows = self.cols = 0
            self.entries: list[list[Polynomial]] = []
            return
        cols = len(rows[0])
        if cols == 0 or any(len(r) != cols for r in rows):
            raise StructuralError("matrix rows must be non-empty and of equal length")
        if table is None:
            table = next((e.table for r in rows for e in r if isinstance(e, Polynomial)), None)
            if table is None:
                raise StructuralError("cannot infer the variable table")
        for r in rows:
            for j, e in enumerate(r):
                if not isinstance(e, Polynomial):
                    r[j] = table.const(e)
                elif e.table != table:
                    raise StructuralError("matrix entries live on different tables")
        self.table = table
        self.rows = len(rows)
        self.cols = cols
        self.entries = rows

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def __repr__(self) -> str:
        return f"PolyMatrix({self.rows}x{self.cols})"

    def det(self) -> Polynomial:
        return det_bareiss(self)


def det_bareiss(m: PolyMatrix) -> Polynomial:
    """Determinant by fraction-free (Bareiss) elimination.

    Every interior division is exact by Sylvester's identity; a nonzero
    remainder means a bug and surfaces as :class:`DivisionNotExact`.
    """
    if m.rows != m.cols:
        raise StructuralError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    table = m.table
    if n == 0:
        return table.one()
    a = [list(r) for r in m.entries]
    sign = 1
    prev = table.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return table.zero()
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                val = pivot * a[i][j] - aik * a[k][j]
                a[i][j] = exact_div(val, prev) if k else val
            a[i][k] = table.zero()
        prev = pivot
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def det_leibniz(m: PolyMatrix) -> Polynomial:
    """Determinant by the permutation expansion; O(n!) reference path."""
    if m.rows != m.cols:
        raise StructuralError("determinant of a non-square matrix")
    n = m.rows
    total = m.table.zero()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = m.table.one()
        for i, j in enumerate(perm):
            term = term * m.entries[i][j]
            if term.is_zero():
                break
        total = total - term if inv % 2 else total + term
    return total


def product(factors: Iterable[Polynomial], table: VarTable) -> Polynomial:
    """Product of an iterable of polynomials (``1`` when empty)."""
    out = table.one()
    for f in factors:
        out = out * f
    return out
