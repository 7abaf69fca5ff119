"""Weight-vector initial ideals, omega-homogenization and representing weights.

Both ``in_w(I)`` and the homogenized ideal are read off a Groebner basis
for ``weight(w; grevlex)``: the initial forms (resp. homogenizations) of
such a basis generate the target ideal, which is not true for an arbitrary
generating set of I.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import InternalError, NotHomogeneousError, UnitIdealError
from .groebner import Ideal, ideal_equal, lt_ideal, saturate
from .monocomb import MonomialIdeal
from .poly import determinant
from .ring import GREVLEX, MonomialOrder, OrderLike, Weight, as_order, dot, weight_vector


def refining_order(omega: Sequence[int], tiebreak: MonomialOrder = GREVLEX) -> Weight:
    return Weight(tuple(omega), tiebreak)


def initial_ideal_weight(I: Ideal, omega: Sequence[int]) -> Ideal:
    """``in_w(I)``, generated by the initial forms of a ``weight(w; grevlex)`` basis."""
    omega = weight_vector(omega, I.n)
    G = I.groebner_basis(refining_order(omega))
    return Ideal(I.ctx, [g.initial_form(omega) for g in G])


def is_monomial_ideal(I: Ideal) -> bool:
    return all(g.is_monomial() for g in I.groebner_basis())


def as_monomial_ideal(I: Ideal) -> MonomialIdeal:
    """The MonomialIdeal equal to ``I``; raises ValueError if ``I`` is not monomial."""
    G = I.groebner_basis()
    if not all(g.is_monomial() for g in G):
        raise ValueError("ideal is not generated by monomials")
    return G.lt_ideal()


def omega_homogenize_ideal(I: Ideal, omega: Sequence[int]) -> Ideal:
    """The omega-homogenization of ``I`` as an ideal of P[t]."""
    omega = weight_vector(omega, I.n)
    G = I.groebner_basis(refining_order(omega))
    return Ideal(I.ctx.with_t(), [g.omega_homogenize(omega) for g in G])


def omega_homogenize_by_saturation(I: Ideal, omega: Sequence[int]) -> Ideal:
    """Same ideal, computed as ``(w-homogenized generators) : t^infinity``."""
    omega = weight_vector(omega, I.n)
    ctx = I.ctx.with_t()
    H = Ideal(ctx, [g.omega_homogenize(omega) for g in I.generators])
    return saturate(H, ctx.var(ctx.n - 1))


def dehomogenize_ideal(H: Ideal) -> Ideal:
    return Ideal(H.ctx.without_t(), [g.dehomogenize() for g in H.generators])


def _difference_vectors(I: Ideal, order: MonomialOrder) -> List[tuple]:
    G = I.groebner_basis(order)
    out = set()
    for lm, g in zip(G.leading_monomials, G.elements):
        for a in g.monomials():
            if a != lm:
                out.add(tuple(x - y for x, y in zip(lm, a)))
    return sorted(out)


def _integral_point(diffs: List[tuple], n: int) -> tuple:
    """Integer w >= 1 with w.d >= 1 for every d, from an LP vertex.

    The LP is solved in floating point; the candidate is rationalized,
    scaled to integers and then checked exactly.
    """
    ones = tuple([1] * n)
    if all(dot(ones, d) > 0 for d in diffs):
        return ones
    res = linprog(c=np.ones(n), A_ub=-np.array(diffs, dtype=float),
                  b_ub=-np.ones(len(diffs)), bounds=[(1, None)] * n, method="highs")
    if res.status != 0:
        raise InternalError(f"weight LP failed: {res.message}")

    def ok(w):
        return all(v >= 1 for v in w) and all(dot(w, d) > 0 for d in diffs)

    fracs = [Fraction(float(v)).limit_denominator(10 ** 6) for v in res.x]
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    w = tuple(int(f * den) for f in fracs)
    g = 0
    for v in w:
        g = math.gcd(g, v)
    w = tuple(v // g for v in w)
    if ok(w):
        return w
    scale = 1
    while scale < 2 ** 40:
        w = tuple(max(1, math.ceil(v * scale)) for v in res.x)
        if ok(w):
            return w
        scale *= 2
    raise InternalError("could not round the weight LP solution to an integer point")


def weight_for_order(I: Ideal, order: OrderLike) -> tuple:
    """A strictly positive integer weight vector w with ``in_w(I) = LT_order(I)``.

    The result is checked by exact ideal equality before it is returned.
    """
    order = as_order(order)
    if I.is_zero():
        return tuple([1] * I.n)
    if I.groebner_basis(order).is_unit():
        raise UnitIdealError("the unit ideal has no proper initial ideal to represent")
    w = _integral_point(_difference_vectors(I, order), I.n)
    target = Ideal.from_monomial(lt_ideal(I, order))
    if not ideal_equal(initial_ideal_weight(I, w), target):
        raise InternalError(f"weight {w} does not represent {order} for {I}")
    return w


def represents(I: Ideal, omega: Sequence[int], order: OrderLike) -> bool:
    """Whether ``in_w(I)`` equals ``LT_order(I)``."""
    target = Ideal.from_monomial(lt_ideal(I, as_order(order)))
    return ideal_equal(initial_ideal_weight(I, omega), target)


@dataclass(frozen=True)
class GinSample:
    ideal: MonomialIdeal
    stable: bool
    matrices: tuple


def random_invertible(n: int, rng: random.Random, bound: int) -> tuple:
    while True:
        m = tuple(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(n))
        if determinant(m) != 0:
            return m


def generic_initial_sample(I: Ideal, order: OrderLike = GREVLEX, seed: int = 0,
                           bound: int = 10 ** 4) -> GinSample:
    """Leading-term ideal after a random change of coordinates.

    Two independent coordinate changes are drawn; ``stable`` reports whether
    they gave the same monomial ideal.  Agreement is evidence of genericity,
    not a certificate.
    """
    if not I.is_homogeneous():
        raise NotHomogeneousError("generic initial ideals are defined for graded ideals only")
    order = as_order(order)
    rng = random.Random(seed)
    g1 = random_invertible(I.n, rng, bound)
    g2 = random_invertible(I.n, rng, bound)
    J1 = lt_ideal(I.substitute_linear(g1), order)
    J2 = lt_ideal(I.substitute_linear(g2), order)
    return GinSample(J1, J1 == J2, (g1, g2))
