import pytest
from hypothesis import given

from gdc.errors import ParseError
from gdc.groebner import Ideal, ideal_equal
from gdc.idealfile import bundled, bundled_path, format_ideal_file, parse_ideal_file
from gdc.poly import RingContext

from conftest import XYZ, nonzero_polynomials


@pytest.mark.parametrize("name,n,gens", [("patty", 4, 4), ("es", 5, 5), ("conca", 6, 3),
                                         ("twisted-cubic", 4, 3), ("minors-2x3", 6, 3)])
def test_bundled_files(name, n, gens):
    I = bundled(name)
    assert I.n == n and len(I.generators) == gens
    text = bundled_path(name).read_text()
    assert text.startswith("ring: ") and "\r" not in text


def test_conca_generators():
    I = bundled("conca")
    ctx = I.ctx
    assert ideal_equal(I, Ideal(ctx, ["x1*x5 + x2*x6 + x4^2", "x1*x4 + x3^2 - x4*x5", "x1^2 + x1*x2"]))


@pytest.mark.parametrize("text,line,column", [
    ("ring x y\nchar: 0\ngens:\nx\n", 1, 1),
    ("ring: x y\nchar: 2\ngens:\nx\n", 2, None),
    ("ring: x y\nchar: 0\ngens:\nx + y\nx^2 - 1/0\n", 5, 9),
    ("ring: x y\nchar: 0\ngens:\nx*z\n", 4, 3),
    ("ring: x 1y\nchar: 0\ngens:\n", 1, 9),
    ("ring: x y\nchar: 0\n", 3, None),
])
def test_rejects_with_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_ideal_file(text)
    assert info.value.line == line
    if column is not None:
        assert info.value.column == column
    assert f"line {line}" in str(info.value)


def test_blank_lines_are_skipped():
    I = parse_ideal_file("ring: x y\nchar: 0\ngens:\n\nx^2\n\n y \n")
    assert len(I.generators) == 2


@given(f=nonzero_polynomials(), g=nonzero_polynomials())
def test_round_trip(f, g):
    I = Ideal(XYZ, [f, g])
    J = parse_ideal_file(format_ideal_file(I))
    assert J.ctx == XYZ and J.generators == I.generators
