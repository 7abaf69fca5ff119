"""Brute-force cross-checks that share no code path with the fast routines.

These work on :class:`~gdc.poly.Polynomial` values with plain arithmetic
and exhaustive enumeration.  They are slow by design and used only by the
test and reproduction suites.
"""
from __future__ import annotations

from itertools import combinations
from typing import List

from .monocomb import MonomialIdeal, VariablePrime
from .poly import Polynomial
from .ring import MonomialOrder


def naive_divide(f: Polynomial, divisors: List[Polynomial], order: MonomialOrder) -> Polynomial:
    """Textbook multivariate division; returns the remainder."""
    ctx = f.ctx
    leads = [(g.leading_term(order), g) for g in divisors]
    p, rem = f, ctx.zero()
    while not p.is_zero():
        c, a = p.leading_term(order)
        for (d, b), g in leads:
            if all(x >= y for x, y in zip(a, b)):
                q = ctx.monomial(tuple(x - y for x, y in zip(a, b)), c / d)
                p = p - q * g
                break
        else:
            t = ctx.monomial(a, c)
            rem, p = rem + t, p - t
    return rem


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    c, a = f.leading_term(order)
    d, b = g.leading_term(order)
    l = tuple(max(x, y) for x, y in zip(a, b))
    ctx = f.ctx
    return (ctx.monomial(tuple(x - y for x, y in zip(l, a)), 1 / c) * f
            - ctx.monomial(tuple(x - y for x, y in zip(l, b)), 1 / d) * g)


def is_groebner(G, order: MonomialOrder | None = None) -> bool:
    """Buchberger's criterion checked pair by pair with naive division."""
    order = order or G.order
    elems = list(G.elements if hasattr(G, "elements") else G)
    for f, g in combinations(elems, 2):
        if not naive_divide(s_polynomial(f, g, order), elems, order).is_zero():
            return False
    return True


def generates_same(G, generators: List[Polynomial], order: MonomialOrder) -> bool:
    """Every generator reduces to zero modulo G (G lies in the ideal by construction)."""
    elems = list(G.elements)
    return all(naive_divide(f, elems, order).is_zero() for f in generators)


def minimal_primes_bruteforce(B: MonomialIdeal) -> List[VariablePrime]:
    """Enumerate all variable subsets, keep the inclusion-minimal ones containing B."""
    n = B.ctx.n
    containing = []
    for mask in range(1 << n):
        S = [i for i in range(n) if mask >> i & 1]
        if all(any(g[i] for i in S) for g in B.generators):
            containing.append(frozenset(S))
    minimal = [s for s in containing if not any(t < s for t in containing)]
    return sorted((VariablePrime(tuple(s)) for s in minimal),
                  key=lambda p: (p.height, p.variables))
