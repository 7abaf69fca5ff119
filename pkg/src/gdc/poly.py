"""Multivariate polynomials with rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
:class:`~fractions.Fraction` coefficients, tied to a :class:`RingContext`
(the ordered variable names).  Terms are stored in descending grevlex order;
leading-term queries under other orders rescan the terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Sequence

from .errors import (ContextMismatchError, DimensionMismatchError, ParseError,
                     SingularMatrixError, ZeroPolynomialError)
from .ring import GREVLEX, Exponent, MonomialOrder, OrderLike, as_order, dot, weight_vector


@dataclass(frozen=True)
class RingContext:
    """Ordered variable names.  When ``homogenizing`` is set the last variable
    is the homogenizing variable ``t`` of P[t]."""

    names: tuple
    homogenizing: bool = False

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if not names:
            raise ValueError("a ring needs at least one variable")

    @classmethod
    def of(cls, names) -> "RingContext":
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def fresh_name(self, base: str) -> str:
        if base not in self.names:
            return base
        i = 0
        while f"{base}{i}" in self.names:
            i += 1
        return f"{base}{i}"

    def with_t(self) -> "RingContext":
        if self.homogenizing:
            raise ValueError("ring already has a homogenizing variable")
        return RingContext(self.names + (self.fresh_name("t"),), homogenizing=True)

    def without_t(self) -> "RingContext":
        if not self.homogenizing:
            raise ValueError("ring has no homogenizing variable")
        return RingContext(self.names[:-1])

    def with_prefix(self, name: str) -> "RingContext":
        """A ring with one extra variable in front (used for elimination tricks)."""
        return RingContext((self.fresh_name(name),) + self.names)

    def plain(self) -> "RingContext":
        return RingContext(self.names) if self.homogenizing else self

    # constructors
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.n: c})

    def var(self, which) -> "Polynomial":
        i = self.index(which) if isinstance(which, str) else which
        return self.monomial(tuple(int(j == i) for j in range(self.n)))

    def gens(self) -> list:
        return [self.var(i) for i in range(self.n)]

    def monomial(self, a: Exponent, c=1) -> "Polynomial":
        if len(a) != self.n:
            raise DimensionMismatchError(f"exponent {a} does not fit {self.n} variables")
        return Polynomial(self, {tuple(a): c})

    def parse(self, text: str) -> "Polynomial":
        return parse(text, self)


class Term(NamedTuple):
    coefficient: Fraction
    monomial: Exponent


_grevlex_key = GREVLEX.key(0)


def _normalize(n: int, items: Iterable) -> Dict[Exponent, Fraction]:
    acc: Dict[Exponent, Fraction] = {}
    for a, c in items:
        a = tuple(a)
        if len(a) != n:
            raise DimensionMismatchError(f"exponent {a} does not fit {n} variables")
        acc[a] = acc.get(a, 0) + Fraction(c)
    return {a: acc[a] for a in sorted((a for a in acc if acc[a]), key=_grevlex_key, reverse=True)}


class Polynomial:
    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.ctx = ctx
        self._terms = _normalize(ctx.n, items)
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        """Trusted constructor: ``terms`` has Fraction values, no zeros."""
        p = cls.__new__(cls)
        p.ctx = ctx
        p._terms = {a: terms[a] for a in sorted(terms, key=_grevlex_key, reverse=True)}
        p._hash = None
        return p

    # inspection
    @property
    def terms(self) -> tuple:
        return tuple(Term(c, a) for a, c in self._terms.items())

    def as_dict(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def monomials(self) -> Iterator[Exponent]:
        return iter(self._terms)

    def coefficient(self, a: Exponent) -> Fraction:
        return self._terms.get(tuple(a), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(a) for a in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def total_degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return max(sum(a) for a in self._terms)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or (1,) * self.ctx.n
        return len({dot(w, a) for a in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0,) * self.ctx.n: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._terms.items())))
        return self._hash

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatchError(f"{self.ctx.names} vs {other.ctx.names}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.constant(other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._terms)
        for a, c in other._terms.items():
            v = acc.get(a, 0) + c
            if v:
                acc[a] = v
            else:
                acc.pop(a, None)
        return Polynomial._raw(self.ctx, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ctx, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        other = self._coerce(other)
        acc: Dict[Exponent, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                m = tuple(x + y for x, y in zip(a, b))
                acc[m] = acc.get(m, 0) + c * d
        return Polynomial._raw(self.ctx, {a: c for a, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = self.ctx.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # order-dependent queries
    def leading_term(self, order: OrderLike = GREVLEX) -> Term:
        return leading_term(self, order)

    def leading_monomial(self, order: OrderLike = GREVLEX) -> Exponent:
        return leading_term(self, order).monomial

    def monic(self, order: OrderLike = GREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        return scale(1 / self.leading_term(order).coefficient, self)

    def initial_form(self, omega) -> "Polynomial":
        return initial_form(self, omega)

    def omega_homogenize(self, omega) -> "Polynomial":
        return omega_homogenize(self, omega)

    def dehomogenize(self) -> "Polynomial":
        return dehomogenize(self)

    def substitute_linear(self, matrix) -> "Polynomial":
        return substitute_linear(self, matrix)

    def embed(self, ctx: RingContext, positions: Sequence[int]) -> "Polynomial":
        """Re-express in ``ctx``, sending variable i to variable ``positions[i]``."""
        if len(positions) != self.ctx.n:
            raise DimensionMismatchError("one target position per variable required")
        out = {}
        for a, c in self._terms.items():
            b = [0] * ctx.n
            for i, e in zip(positions, a):
                b[i] += e
            out[tuple(b)] = c
        return Polynomial(ctx, out.items())

    def format(self, order: OrderLike = GREVLEX) -> str:
        return format_poly(self, order)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r}, vars={list(self.ctx.names)})"


# ----------------------------------------------------------------------------
# functional surface


def _same_ctx(f: Polynomial, g: Polynomial):
    if f.ctx != g.ctx:
        raise ContextMismatchError(f"{f.ctx.names} vs {g.ctx.names}")


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ctx(f, g)
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ctx(f, g)
    return f * g


def scale(c, f: Polynomial) -> Polynomial:
    c = Fraction(c)
    if not c:
        return f.ctx.zero()
    return Polynomial._raw(f.ctx, {a: c * v for a, v in f._terms.items()})


def power(f: Polynomial, k: int) -> Polynomial:
    return f ** k


def leading_term(f: Polynomial, order: OrderLike = GREVLEX) -> Term:
    if f.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    order = as_order(order)
    key = order.key(f.ctx.n)
    a = max(f._terms, key=key)
    return Term(f._terms[a], a)


def initial_form(f: Polynomial, omega) -> Polynomial:
    """Sum of the terms of ``f`` of maximal omega-degree."""
    if f.is_zero():
        raise ZeroPolynomialError("initial form of the zero polynomial is undefined")
    omega = weight_vector(omega, f.ctx.n)
    top = max(dot(omega, a) for a in f._terms)
    return Polynomial._raw(f.ctx, {a: c for a, c in f._terms.items() if dot(omega, a) == top})


def omega_homogenize(f: Polynomial, omega) -> Polynomial:
    """``f(x_1/t^w_1, ..., x_n/t^w_n) * t^deg_w(f)`` in P[t]."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot homogenize the zero polynomial")
    if f.ctx.homogenizing:
        raise ValueError("polynomial already lives in P[t]")
    omega = weight_vector(omega, f.ctx.n)
    top = max(dot(omega, a) for a in f._terms)
    ctx = f.ctx.with_t()
    return Polynomial._raw(ctx, {a + (top - dot(omega, a),): c for a, c in f._terms.items()})


def dehomogenize(F: Polynomial) -> Polynomial:
    """Substitute t = 1."""
    if not F.ctx.homogenizing:
        raise ValueError("polynomial has no homogenizing variable t")
    ctx = F.ctx.without_t()
    return Polynomial(ctx, ((a[:-1], c) for a, c in F._terms.items()))


def _as_matrix(matrix, n: int) -> list:
    rows = [[Fraction(v) for v in row] for row in matrix]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatchError(f"need a {n}x{n} matrix")
    return rows


def determinant(matrix) -> Fraction:
    rows = [[Fraction(v) for v in row] for row in matrix]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for r in range(col + 1, n):
            f = rows[r][col] / p
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return det


def inverse(matrix) -> list:
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def substitute_linear(f: Polynomial, matrix) -> Polynomial:
    """Return ``f(M x)``: variable i is replaced by ``sum_j M[i][j] x_j``."""
    n = f.ctx.n
    rows = _as_matrix(matrix, n)
    if determinant(rows) == 0:
        raise SingularMatrixError("coordinate change matrix is singular")
    ctx = f.ctx
    forms = [Polynomial(ctx, ((tuple(int(k == j) for k in range(n)), rows[i][j])
                              for j in range(n))) for i in range(n)]
    powers: Dict[tuple, Polynomial] = {}

    def pw(i, e):
        if (i, e) not in powers:
            powers[(i, e)] = forms[i] ** e
        return powers[(i, e)]

    total = ctx.zero()
    for a, c in f._terms.items():
        t = ctx.constant(c)
        for i, e in enumerate(a):
            if e:
                t = t * pw(i, e)
        total = total + t
    return total


# ----------------------------------------------------------------------------
# grammar:  poly := term (('+'|'-') term)*
#           term := coeff ('*' factor)* | factor ('*' factor)*
#           factor := ident ('^' uint)?      coeff := int ('/' uint)?
# A single leading sign is accepted so that printed output always re-parses.


def _tokenize(text: str):
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield "int", text[i:j], i + 1
            i = j
        elif ch.isascii() and ch.isalpha():
            j = i
            while j < n and (text[j].isascii() and (text[j].isalnum() or text[j] == "_")):
                j += 1
            yield "ident", text[i:j], i + 1
            i = j
        elif ch in "+-*/^":
            yield ch, ch, i + 1
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", column=i + 1)
    yield "end", "", n + 1


def parse(text: str, ctx: RingContext) -> Polynomial:
    tokens = list(_tokenize(text))
    pos = 0

    def peek():
        return tokens[pos][0]

    def take(kind):
        nonlocal pos
        k, v, col = tokens[pos]
        if k != kind:
            what = repr(v) if v else "end of input"
            raise ParseError(f"expected {kind}, found {what}", column=col)
        pos += 1
        return v, col

    def factor(exps):
        name, col = take("ident")
        if name not in ctx.names:
            raise ParseError(f"unknown variable {name!r}", column=col)
        e = 1
        if peek() == "^":
            take("^")
            e = int(take("int")[0])
        exps[ctx.names.index(name)] += e

    def term(sign):
        exps = [0] * ctx.n
        coeff = Fraction(sign)
        if peek() == "int":
            num, _ = take("int")
            den = 1
            if peek() == "/":
                take("/")
                d, col = take("int")
                den = int(d)
                if den == 0:
                    raise ParseError("zero denominator", column=col)
            coeff *= Fraction(int(num), den)
        else:
            factor(exps)
        while peek() == "*":
            take("*")
            factor(exps)
        return tuple(exps), coeff

    if peek() == "end":
        raise ParseError("empty polynomial", column=1)
    sign = 1
    if peek() in "+-":
        sign = -1 if take(peek())[0] == "-" else 1
    items = [term(sign)]
    while peek() in ("+", "-"):
        sign = -1 if take(peek())[0] == "-" else 1
        items.append(term(sign))
    if peek() != "end":
        k, v, col = tokens[pos]
        raise ParseError(f"unexpected {v!r}", column=col)
    return Polynomial(ctx, items)


def _format_monomial(names, a) -> str:
    parts = []
    for name, e in zip(names, a):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, order: OrderLike = GREVLEX) -> str:
    """Render ``f`` with terms in descending ``order``."""
    if f.is_zero():
        return "0"
    key = as_order(order).key(f.ctx.n)
    out = []
    for a in sorted(f._terms, key=key, reverse=True):
        c = f._terms[a]
        mono = _format_monomial(f.ctx.names, a)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)
