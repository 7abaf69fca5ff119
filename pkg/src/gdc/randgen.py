"""Seeded random inputs for the property and reproduction suites."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List

from .connect import ComponentSet, connectivity_dimension
from .deform import random_invertible
from .groebner import Ideal
from .monocomb import MonomialIdeal, VariablePrime, intersect_primes
from .poly import Polynomial, RingContext


def ring(n: int, prefix: str = "x") -> RingContext:
    return RingContext(tuple(f"{prefix}{i + 1}" for i in range(n)))


def random_polynomial(ctx: RingContext, rng: random.Random, max_degree: int = 3,
                      max_terms: int = 3, coeff_bound: int = 3, homogeneous: bool = False) -> Polynomial:
    while True:
        terms = []
        deg = rng.randint(1, max_degree)
        for _ in range(rng.randint(1, max_terms)):
            d = deg if homogeneous else rng.choice([deg, deg, deg - 1, rng.randint(0, deg)])
            a = [0] * ctx.n
            for _ in range(d):
                a[rng.randrange(ctx.n)] += 1
            c = 0
            while c == 0:
                c = rng.randint(-coeff_bound, coeff_bound)
            terms.append((tuple(a), c))
        f = Polynomial(ctx, terms)
        if not f.is_zero() and not f.is_constant():
            return f


def random_ideal(ctx: RingContext, rng: random.Random, max_gens: int = 3, **kw) -> Ideal:
    """A random proper nonzero ideal."""
    while True:
        I = Ideal(ctx, [random_polynomial(ctx, rng, **kw) for _ in range(rng.randint(1, max_gens))])
        if not I.is_unit():
            return I


def random_weight(n: int, rng: random.Random, low: int = 1, high: int = 9) -> tuple:
    return tuple(rng.randint(low, high) for _ in range(n))


def random_antichain(n: int, r: int, rng: random.Random) -> List[VariablePrime]:
    """r pairwise incomparable nonempty proper variable subsets."""
    while True:
        subs = {frozenset(rng.sample(range(n), rng.randint(1, n - 1))) for _ in range(r)}
        if len(subs) == r and not any(a < b for a in subs for b in subs):
            return sorted((VariablePrime(tuple(s)) for s in subs), key=lambda p: p.variables)


@dataclass
class KnownComponents:
    """I = g(B) for a squarefree monomial B with a linear coordinate change g.

    The minimal primes of I are the images of those of B, and since g is a
    linear automorphism the intersection pattern, hence c(P/I), is the one
    read off the variable subsets.
    """

    ideal: Ideal
    components: List[Ideal]
    variable_primes: List[VariablePrime]
    matrix: tuple
    c_known: int

    def component_set(self, threads: int = 1) -> ComponentSet:
        return ComponentSet(self.ideal.ctx, self.components, target=self.ideal, threads=threads)


def known_components(n: int, r: int, rng: random.Random, bound: int = 2) -> KnownComponents:
    ctx = ring(n)
    primes = random_antichain(n, r, rng)
    c_known = connectivity_dimension(ComponentSet(ctx, primes)).c
    g = random_invertible(n, rng, bound)
    I = Ideal.from_monomial(intersect_primes(ctx, primes)).substitute_linear(g)
    comps = [Ideal.from_monomial(MonomialIdeal.from_prime(ctx, p)).substitute_linear(g)
             for p in primes]
    return KnownComponents(I, comps, primes, g, c_known)
