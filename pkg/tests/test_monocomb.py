import pytest
from hypothesis import given, strategies as st

from gdc.errors import UnitIdealError
from gdc.groebner import Ideal, ideal_equal, intersect_all, lt_ideal
from gdc.idealfile import bundled
from gdc.monocomb import (MonomialIdeal, VariablePrime, dimension_monomial, height_monomial,
                          intersect_primes, minimal_primes_monomial, minimal_transversals,
                          radical_monomial)
from gdc.oracles import minimal_primes_bruteforce
from gdc.poly import RingContext
from gdc.randgen import ring
from gdc.ring import LEX


def M(ctx, *gens):
    return MonomialIdeal.from_polynomials(ctx, [ctx.parse(g) for g in gens])


XY = RingContext.of("x y")
PATTY = RingContext.of("x y u v")


def fmt(primes, ctx):
    return [p.format(ctx) for p in primes]


def test_radical_examples():
    assert radical_monomial(M(XY, "x^2*y", "y^3")) == M(XY, "y")
    B = M(PATTY, "x*u", "y*v")
    assert radical_monomial(B) == B
    R6 = ring(6)
    assert radical_monomial(M(R6, "x1^2*x5", "x4^2")) == M(R6, "x1*x5", "x4")


def test_minimal_primes_examples():
    assert fmt(minimal_primes_monomial(M(PATTY, "x*u", "x*v", "y*u", "y*v")), PATTY) == ["(x,y)", "(u,v)"]
    ES = RingContext.of("x y z v w")
    assert set(fmt(minimal_primes_monomial(M(ES, "x*z", "x*v", "y*z", "y*v")), ES)) == {"(x,y)", "(z,v)"}
    conca = lt_ideal(bundled("conca"), LEX)
    assert set(fmt(minimal_primes_monomial(radical_monomial(conca)), conca.ctx)) == {
        "(x1,x2,x3)", "(x1,x3,x6)", "(x1,x2,x5)", "(x1,x4,x5)"}


def test_height_and_dimension():
    R4 = ring(4)
    assert height_monomial(M(R4, "x1", "x2")) == 2
    assert dimension_monomial(M(R4, "x1", "x2")) == 2
    B = M(PATTY, "x*u", "x*v", "y*u", "y*v")
    assert (height_monomial(B), dimension_monomial(B)) == (2, 2)
    R6 = ring(6)
    for p in minimal_primes_monomial(radical_monomial(lt_ideal(bundled("conca"), LEX))):
        assert p.height == 3 and p.dimension(6) == 3
    assert minimal_primes_monomial(MonomialIdeal(XY, [])) == [VariablePrime(())]
    assert dimension_monomial(MonomialIdeal(XY, [(0, 0)])) == -1
    with pytest.raises(UnitIdealError):
        minimal_primes_monomial(MonomialIdeal(XY, [(0, 0)]))


def test_transversals_of_triangle():
    edges = [frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})]
    assert sorted(map(sorted, minimal_transversals(edges))) == [[0, 1], [0, 2], [1, 2]]


monomial_ideals = st.integers(2, 6).flatmap(lambda n: st.lists(
    st.tuples(*[st.integers(0, 2)] * n).filter(any), min_size=1, max_size=6).map(
        lambda gens: MonomialIdeal(ring(n), gens)))


@given(B=monomial_ideals)
def test_minimal_primes_match_bruteforce(B):
    assert minimal_primes_monomial(B) == minimal_primes_bruteforce(B)


@given(B=monomial_ideals)
def test_radical_is_intersection_of_primes(B):
    primes = minimal_primes_monomial(B)
    R = radical_monomial(B)
    assert intersect_primes(B.ctx, primes) == R
    assert radical_monomial(R) == R and R.is_squarefree()
    assert height_monomial(B) == min(p.height for p in primes)


@given(B=monomial_ideals.filter(lambda B: B.ctx.n <= 4 and len(B.generators) <= 4))
def test_prime_intersection_agrees_with_elimination(B):
    primes = minimal_primes_monomial(B)
    J = intersect_all([Ideal.from_monomial(MonomialIdeal.from_prime(B.ctx, p)) for p in primes])
    assert ideal_equal(J, Ideal.from_monomial(radical_monomial(B)))
