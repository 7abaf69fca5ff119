from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from gdc.errors import ContextMismatchError, ParseError, SingularMatrixError
from gdc.poly import Polynomial, RingContext, format_poly, inverse, parse
from gdc.ring import GREVLEX, LEX, Weight

from conftest import XYZ, nonzero_polynomials, polynomials, weights

P = XYZ.parse


def test_parse_examples():
    f = P("3/2*x^2*y - y + 1")
    assert f.coefficient((2, 1, 0)) == Fraction(3, 2)
    assert f.coefficient((0, 1, 0)) == -1 and f.coefficient((0, 0, 0)) == 1
    assert str(f) == "3/2*x^2*y - y + 1"
    assert P("0").is_zero()
    assert P("-x") == -P("x")
    ctx = RingContext.of("x1 x2 x3 x4 x5 x6")
    g = ctx.parse("x4^2 + x1*x5 + x2*x6")
    assert len(g) == 3 and g.is_homogeneous()


@pytest.mark.parametrize("text,column,message", [
    ("x + ", 5, "end of input"),
    ("x*w", 3, "unknown variable"),
    ("1/0", 3, "zero denominator"),
    ("", 1, "empty"),
])
def test_parse_errors_report_position(text, column, message):
    with pytest.raises(ParseError) as info:
        P(text)
    assert info.value.column == column
    assert message in str(info.value)


def test_arithmetic_examples():
    x, y, z = XYZ.gens()
    assert (x + y) * (x - y) == P("x^2 - y^2")
    assert (x + 1) ** 3 == P("x^3 + 3*x^2 + 3*x + 1")
    assert (x + y) - (x + y) == 0
    assert Fraction(1, 2) * (2 * x) == x
    other = RingContext.of("a b c")
    with pytest.raises(ContextMismatchError):
        x + other.var(0)


def test_leading_terms_depend_on_order():
    f = P("x*z + y^2 + x")
    assert f.leading_term(GREVLEX) == (1, (0, 2, 0))
    assert f.leading_term(LEX) == (1, (1, 0, 1))
    assert f.leading_term(Weight((0, 0, 1))) == (1, (1, 0, 1))


def test_initial_form_examples():
    f = P("x^2 + x*y^3 + z")
    assert f.initial_form((2, 1, 1)) == P("x*y^3")
    assert f.initial_form((0, 0, 0)) == f
    assert P("x - y + z^2").initial_form((1, 1, 0)) == P("x - y")


def test_homogenize_examples():
    F = P("x^2 - y").omega_homogenize((1, 1, 0))
    assert F.ctx.names == ("x", "y", "z", "t")
    assert F == F.ctx.parse("x^2 - y*t")
    assert F.dehomogenize() == P("x^2 - y")
    assert P("x^2 - y").omega_homogenize((1, 2, 0)) == P("x^2 - y").embed(F.ctx, [0, 1, 2])


def test_substitute_linear_examples():
    swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
    assert P("x + 2*y").substitute_linear(swap) == P("2*x + y")
    eye = [[int(i == j) for j in range(3)] for i in range(3)]
    f = P("x^2*y - z + 3")
    assert f.substitute_linear(eye) == f
    with pytest.raises(SingularMatrixError):
        f.substitute_linear([[1, 1, 0], [1, 1, 0], [0, 0, 1]])


@given(f=polynomials())
def test_format_parse_round_trip(f):
    assert parse(str(f), XYZ) == f
    assert parse(format_poly(f, LEX), XYZ) == f


@given(f=polynomials(), g=polynomials(), h=polynomials())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(f=nonzero_polynomials(), g=nonzero_polynomials(), w=weights())
def test_initial_form_multiplicative(f, g, w):
    assert (f * g).initial_form(w) == f.initial_form(w) * g.initial_form(w)


@given(f=nonzero_polynomials(), g=nonzero_polynomials(), w=weights())
def test_homogenize_multiplicative_and_inverse(f, g, w):
    F, G = f.omega_homogenize(w), g.omega_homogenize(w)
    assert (f * g).omega_homogenize(w) == F * G
    assert F.dehomogenize() == f
    assert F.is_homogeneous(tuple(w) + (1,))


@given(f=nonzero_polynomials(), g=nonzero_polynomials())
def test_leading_term_multiplicative(f, g):
    for order in (LEX, GREVLEX):
        (c, a), (d, b) = f.leading_term(order), g.leading_term(order)
        assert (f * g).leading_term(order) == (c * d, tuple(x + y for x, y in zip(a, b)))


@given(f=polynomials(), entries=st.lists(st.integers(-2, 2), min_size=9, max_size=9))
def test_substitution_inverse(f, entries):
    M = [entries[0:3], entries[3:6], entries[6:9]]
    try:
        Minv = inverse(M)
    except SingularMatrixError:
        assume(False)
    assert f.substitute_linear(M).substitute_linear(Minv) == f
