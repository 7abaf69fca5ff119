import random
import time

import pytest
from hypothesis import given, strategies as st

from gdc.deform import (dehomogenize_ideal, generic_initial_sample, initial_ideal_weight,
                        omega_homogenize_by_saturation, omega_homogenize_ideal, represents,
                        weight_for_order)
from gdc.errors import NotHomogeneousError, UnitIdealError
from gdc.groebner import Ideal, ideal_equal, lt_ideal
from gdc.idealfile import bundled
from gdc.monocomb import MonomialIdeal, radical_monomial
from gdc.poly import RingContext
from gdc.randgen import random_ideal, random_weight
from gdc.ring import GREVLEX, GRLEX, LEX

XY = RingContext.of("x y")
XYZ = RingContext.of("x y z")


def test_initial_ideal_examples():
    I = Ideal(XY, ["x^2 - y"])
    assert ideal_equal(initial_ideal_weight(I, (1, 1)), Ideal(XY, ["x^2"]))
    assert ideal_equal(initial_ideal_weight(I, (1, 2)), I)
    assert ideal_equal(initial_ideal_weight(I, (1, 3)), Ideal(XY, ["y"]))


def test_homogenize_examples():
    H = omega_homogenize_ideal(Ideal(XY, ["x^2 - y"]), (1, 1))
    assert ideal_equal(H, Ideal(H.ctx, ["x^2 - y*t"]))
    assert ideal_equal(dehomogenize_ideal(H), Ideal(XY, ["x^2 - y"]))


def test_weight_for_order_examples():
    w = weight_for_order(Ideal(XY, ["x^2 - y"]), LEX)
    assert 2 * w[0] > w[1] and min(w) >= 1
    assert weight_for_order(Ideal(XY, ["x*y", "y^3"]), LEX) == (1, 1)
    conca = bundled("conca")
    w = weight_for_order(conca, LEX)
    assert len(w) == 6 and min(w) >= 1
    assert initial_ideal_weight(conca, w).groebner_basis().lt_ideal() == lt_ideal(conca, LEX)
    with pytest.raises(UnitIdealError):
        weight_for_order(Ideal(XY, ["x", "x + 1"]), LEX)


def test_gin_examples():
    sample = generic_initial_sample(Ideal(XY, ["x^2"]))
    assert sample.stable and sample.ideal == MonomialIdeal(XY, [(2, 0)])
    start = time.perf_counter()
    sample = generic_initial_sample(bundled("conca"), GREVLEX, seed=1)
    assert sample.stable
    assert radical_monomial(sample.ideal) == MonomialIdeal(sample.ideal.ctx, [
        (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)])
    assert time.perf_counter() - start < 60
    with pytest.raises(NotHomogeneousError):
        generic_initial_sample(Ideal(XY, ["x^2 - y"]))


ideals = st.integers(0, 10**6).map(lambda s: random_ideal(XYZ, random.Random(s), max_gens=3, max_degree=2))
ws = st.tuples(*[st.integers(0, 4)] * 3)


@given(I=ideals, w=ws)
def test_dehomogenize_recovers_ideal(I, w):
    H = omega_homogenize_ideal(I, w)
    assert ideal_equal(dehomogenize_ideal(H), I)
    assert all(g.is_homogeneous(tuple(w) + (1,)) for g in H.generators)


@given(I=ideals, w=ws)
def test_special_fibre_is_initial_ideal(I, w):
    H = omega_homogenize_ideal(I, w)
    t = H.ctx.var(H.ctx.n - 1)
    lifted = Ideal(H.ctx, [g.embed(H.ctx, range(3)) for g in initial_ideal_weight(I, w).generators])
    assert ideal_equal(H + Ideal(H.ctx, [t]), lifted + Ideal(H.ctx, [t]))


@given(I=ideals, w=ws)
def test_homogenization_matches_saturation(I, w):
    assert ideal_equal(omega_homogenize_ideal(I, w), omega_homogenize_by_saturation(I, w))


@pytest.mark.parametrize("order", [LEX, GRLEX, GREVLEX], ids=str)
@given(seed=st.integers(0, 10**6))
def test_weight_for_order_represents(order, seed):
    I = random_ideal(XYZ, random.Random(seed), max_gens=3, max_degree=3)
    w = weight_for_order(I, order)
    assert min(w) >= 1 and represents(I, w, order)


@given(I=ideals, w=st.tuples(*[st.integers(1, 5)] * 3))
def test_weight_preserves_dimension(I, w):
    from gdc.groebner import dimension
    assert dimension(initial_ideal_weight(I, w)) == dimension(I)
