from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gdc.errors import DimensionMismatchError, ParseError, ZeroPolynomialError
from gdc.poly import RingContext
from gdc.ring import (GREATER, GREVLEX, GRLEX, LEX, LESS, EQUAL, Block, Weight, compare,
                      omega_degree, parse_order)

from conftest import exponents, rationals, weights

ORDERS = [LEX, GRLEX, GREVLEX, Weight((1, 2, 3)), Weight((0, 1, 0), LEX), Block(1), Block(2, LEX, GRLEX)]


def test_lex_compares_first_coordinate():
    assert compare(LEX, (2, 0), (1, 5)) == GREATER


def test_grevlex_prefers_smaller_last_exponent():
    # y^2 vs x*z in k[x,y,z]
    assert compare(GREVLEX, (0, 2, 0), (1, 0, 1)) == GREATER
    assert compare(GRLEX, (0, 2, 0), (1, 0, 1)) == LESS


def test_equal_and_mismatch():
    assert compare(GREVLEX, (1, 1), (1, 1)) == EQUAL
    with pytest.raises(DimensionMismatchError):
        compare(LEX, (1, 0), (1, 0, 0))


def test_weight_then_tiebreak():
    w = Weight((1, 1, 0), LEX)
    assert compare(w, (0, 0, 9), (0, 1, 0)) == LESS
    assert compare(w, (1, 0, 0), (0, 1, 0)) == GREATER


def test_omega_degree():
    ctx = RingContext.of("x y")
    assert omega_degree((2, 3), ctx.parse("x^2*y + y^3")) == 9
    with pytest.raises(ZeroPolynomialError):
        omega_degree((1, 1), ctx.zero())


@pytest.mark.parametrize("text", ["lex", "grlex", "grevlex", "weight(1,2,3;grevlex)",
                                  "block(2;lex;grevlex)", "weight(3,0,1;block(1;lex;grlex))"])
def test_order_syntax_round_trip(text):
    assert str(parse_order(text)) == text


@pytest.mark.parametrize("text", ["lexx", "weight(1,-2;lex)", "block(0;lex;lex)", "weight(1,2"])
def test_order_syntax_rejects(text):
    with pytest.raises((ParseError, ValueError)):
        o = parse_order(text)
        o.key(2)((1, 1))


@pytest.mark.parametrize("order", ORDERS, ids=str)
@given(a=exponents(), b=exponents(), c=exponents())
def test_order_axioms(order, a, b, c):
    ab, ba = compare(order, a, b), compare(order, b, a)
    assert ab == -ba
    assert (ab == EQUAL) == (a == b)
    shift = lambda u: tuple(x + y for x, y in zip(u, c))
    assert compare(order, shift(a), shift(b)) == ab
    assert compare(order, a, (0, 0, 0)) >= 0
    if ab >= 0 and compare(order, b, c) >= 0:
        assert compare(order, a, c) >= 0


@given(w=weights(), a=exponents(), b=exponents())
def test_weight_order_refines_weight(w, a, b):
    wa, wb = sum(x * y for x, y in zip(w, a)), sum(x * y for x, y in zip(w, b))
    if wa > wb:
        assert compare(Weight(w), a, b) == GREATER


@given(a=rationals(), b=rationals(), c=rationals())
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1
    assert isinstance(a * b, Fraction)
