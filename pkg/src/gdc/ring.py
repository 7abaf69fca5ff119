"""Coefficients, exponent vectors, weight vectors and monomial orders.

Coefficients are exact rationals (:class:`fractions.Fraction`, always kept in
lowest terms).  Exponent vectors are plain tuples of non-negative ints.

Every monomial order exposes ``key(n)``, a function mapping an exponent
vector to a tuple of ints such that ``a > b`` in the order iff
``key(a) > key(b)`` as Python tuples.  All keys are linear in the exponent
vector, which is what makes the orders compatible with multiplication.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Tuple, Union

from .errors import DimensionMismatchError, ParseError

Rational = Fraction
Exponent = Tuple[int, ...]
Key = Tuple[int, ...]

LESS, EQUAL, GREATER = -1, 0, 1


def exponent(values: Sequence[int], n: int | None = None) -> Exponent:
    a = tuple(int(v) for v in values)
    if n is not None and len(a) != n:
        raise DimensionMismatchError(f"expected {n} exponents, got {len(a)}")
    if any(v < 0 for v in a):
        raise ValueError(f"negative exponent in {a}")
    return a


def weight_vector(values: Sequence[int], n: int | None = None,
                  positive: bool = False) -> Exponent:
    """Validate a weight vector: entries in N, or in Z_+ when ``positive``."""
    w = tuple(int(v) for v in values)
    if n is not None and len(w) != n:
        raise DimensionMismatchError(f"weight vector has length {len(w)}, ring has {n} variables")
    if any(v < 0 for v in w):
        raise ValueError(f"weight vector {w} has negative entries")
    if positive and any(v == 0 for v in w):
        raise ValueError(f"weight vector {w} must be strictly positive")
    return w


def dot(w: Sequence[int], a: Sequence[int]) -> int:
    if len(w) != len(a):
        raise DimensionMismatchError(f"length {len(w)} vs {len(a)}")
    return sum(x * y for x, y in zip(w, a))


class MonomialOrder:
    """Base class; subclasses are frozen dataclasses and therefore hashable."""

    def key(self, n: int) -> Callable[[Exponent], Key]:
        raise NotImplementedError

    def compare(self, a: Exponent, b: Exponent) -> int:
        return compare(self, a, b)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    def key(self, n):
        return tuple

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class GrLex(MonomialOrder):
    def key(self, n):
        return lambda a: (sum(a),) + tuple(a)

    def __str__(self):
        return "grlex"


@dataclass(frozen=True)
class GrevLex(MonomialOrder):
    # a > b iff deg a > deg b, or equal degree and the last nonzero entry of a - b is negative
    def key(self, n):
        return lambda a: (sum(a),) + tuple(-v for v in reversed(a))

    def __str__(self):
        return "grevlex"


@dataclass(frozen=True)
class Weight(MonomialOrder):
    """Compare by ``omega . a`` first, break ties with ``tiebreak``."""

    omega: Exponent
    tiebreak: MonomialOrder = GrevLex()

    def __post_init__(self):
        object.__setattr__(self, "omega", weight_vector(self.omega))

    def key(self, n):
        if len(self.omega) != n:
            raise DimensionMismatchError(
                f"weight vector has length {len(self.omega)}, ring has {n} variables")
        omega = self.omega
        tb = self.tiebreak.key(n)
        return lambda a: (sum(w * v for w, v in zip(omega, a)),) + tuple(tb(a))

    def __str__(self):
        return "weight(%s;%s)" % (",".join(map(str, self.omega)), self.tiebreak)


@dataclass(frozen=True)
class Block(MonomialOrder):
    """Product order: the first ``split`` variables under ``left``, the rest under ``right``."""

    split: int
    left: MonomialOrder = GrevLex()
    right: MonomialOrder = GrevLex()

    def key(self, n):
        if not 1 <= self.split <= n - 1:
            raise DimensionMismatchError(f"block split {self.split} outside [1, {n - 1}]")
        k = self.split
        lk, rk = self.left.key(k), self.right.key(n - k)
        return lambda a: tuple(lk(a[:k])) + tuple(rk(a[k:]))

    def __str__(self):
        return f"block({self.split};{self.left};{self.right})"


LEX, GRLEX, GREVLEX = Lex(), GrLex(), GrevLex()


def compare(order: MonomialOrder, a: Exponent, b: Exponent) -> int:
    """Return LESS, EQUAL or GREATER (-1, 0, 1) for ``a`` against ``b``."""
    if len(a) != len(b):
        raise DimensionMismatchError(f"exponent lengths {len(a)} and {len(b)} differ")
    key = order.key(len(a))
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


def omega_degree(omega: Sequence[int], f) -> int:
    """``max(omega . a)`` over the terms of ``f``; ``f`` may also be a bare exponent vector."""
    if isinstance(f, tuple) and all(isinstance(v, int) for v in f):
        return dot(omega, f)
    monomials = list(f.monomials())
    if not monomials:
        from .errors import ZeroPolynomialError
        raise ZeroPolynomialError("omega-degree of the zero polynomial is undefined")
    return max(dot(omega, a) for a in monomials)


_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<name>[a-z]+)|(?P<sym>[(),;]))")


def parse_order(text: str) -> MonomialOrder:
    """Parse ``lex``, ``grlex``, ``grevlex``, ``weight(w1,...,wn[;tiebreak])``
    or ``block(k[;left[;right]])``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in order spec", column=pos + 1)
        tokens.append((m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup) + 1))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    tokens.append(("end", "", len(text) + 1))
    i = 0

    def expect(kind, value=None):
        nonlocal i
        k, v, col = tokens[i]
        if k != kind or (value is not None and v != value):
            raise ParseError(f"expected {value or kind}, found {v or 'end of input'!r}", column=col)
        i += 1
        return v

    def peek(value):
        return tokens[i][1] == value

    def order():
        name = expect("name")
        col = tokens[i - 1][2]
        if name == "lex":
            return LEX
        if name == "grlex":
            return GRLEX
        if name == "grevlex":
            return GREVLEX
        if name == "weight":
            expect("sym", "(")
            w = [int(expect("num"))]
            while peek(","):
                expect("sym", ",")
                w.append(int(expect("num")))
            tb = GREVLEX
            if peek(";"):
                expect("sym", ";")
                tb = order()
            expect("sym", ")")
            try:
                return Weight(tuple(w), tb)
            except ValueError as exc:
                raise ParseError(str(exc), column=col) from None
        if name == "block":
            expect("sym", "(")
            k = int(expect("num"))
            left = right = GREVLEX
            if peek(";"):
                expect("sym", ";")
                left = order()
                if peek(";"):
                    expect("sym", ";")
                    right = order()
            expect("sym", ")")
            return Block(k, left, right)
        raise ParseError(f"unknown order {name!r}", column=col)

    result = order()
    expect("end")
    return result


OrderLike = Union[MonomialOrder, str]


def as_order(order: OrderLike) -> MonomialOrder:
    return parse_order(order) if isinstance(order, str) else order
