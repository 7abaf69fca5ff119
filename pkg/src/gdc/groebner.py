"""Buchberger's algorithm and the ideal toolkit built on it.

Reduced Groebner bases are computed with the normal selection strategy
(smallest lcm first) and Buchberger's coprime and chain criteria.  The
elimination-based operations (``intersect``, ``saturate``,
``radical_membership``) adjoin one auxiliary variable in front of the ring
and eliminate it with ``block(1; lex; grevlex)``.
"""
from __future__ import annotations

import heapq
import os
import random
import threading
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import BudgetExceededError, ContextMismatchError, ZeroPolynomialError
from .monocomb import MonomialIdeal, dimension_monomial, divides
from .poly import Polynomial, RingContext
from .ring import GREVLEX, LEX, Block, Exponent, MonomialOrder, OrderLike, as_order

DEFAULT_STEP_BUDGET = 10 ** 7

Dense = Dict[Exponent, Fraction]


_budget_override: Optional[int] = None
_trackers: List[list] = []
_tracker_lock = threading.Lock()


def set_default_budget(steps: Optional[int]):
    """Override the reduction-step budget for every later computation (None resets)."""
    global _budget_override
    _budget_override = steps


def default_budget() -> int:
    if _budget_override is not None:
        return _budget_override
    env = os.environ.get("GDC_STEP_BUDGET")
    return int(env) if env else DEFAULT_STEP_BUDGET


@contextmanager
def track_bases():
    """Collect every Groebner basis computed inside the block."""
    seen: list = []
    with _tracker_lock:
        _trackers.append(seen)
    try:
        yield seen
    finally:
        with _tracker_lock:
            _trackers.remove(seen)


class _Engine:
    """Per-computation state: the order key cache and the step counter."""

    def __init__(self, order: MonomialOrder, n: int, budget: Optional[int]):
        self.key = order.key(n)
        self.budget = default_budget() if budget is None else budget
        self.steps = 0
        self._neg: Dict[Exponent, tuple] = {}

    def negkey(self, a: Exponent) -> tuple:
        k = self._neg.get(a)
        if k is None:
            k = tuple(-v for v in self.key(a))
            self._neg[a] = k
        return k

    def lead(self, p: Dense) -> Exponent:
        return min(p, key=self.negkey)

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise BudgetExceededError(
                f"reduction-step budget of {self.budget} exhausted "
                "(raise it with --budget or GDC_STEP_BUDGET)")

    def reduce(self, p: Dense, basis: Sequence[Tuple[Exponent, Dense]]) -> Dense:
        """Full reduction of ``p`` (consumed) modulo monic ``basis``."""
        heap = [(self.negkey(a), a) for a in p]
        heapq.heapify(heap)
        rem: Dense = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = p.get(m)
            if c is None:
                continue
            del p[m]
            for lm, g in basis:
                if divides(lm, m):
                    break
            else:
                rem[m] = c
                continue
            self.tick()
            q = tuple(x - y for x, y in zip(m, lm))
            for e, a in g.items():
                if e == lm:
                    continue
                e2 = tuple(x + y for x, y in zip(e, q))
                v = p.get(e2)
                if v is None:
                    p[e2] = -c * a
                    heapq.heappush(heap, (self.negkey(e2), e2))
                else:
                    v -= c * a
                    if v:
                        p[e2] = v
                    else:
                        del p[e2]
        return rem

    def monic(self, p: Dense) -> Tuple[Exponent, Dense]:
        lm = self.lead(p)
        c = p[lm]
        if c != 1:
            p = {a: v / c for a, v in p.items()}
        return lm, p


def _spoly(f: Tuple[Exponent, Dense], g: Tuple[Exponent, Dense]) -> Dense:
    (a, fp), (b, gp) = f, g
    l = tuple(max(x, y) for x, y in zip(a, b))
    qa = tuple(x - y for x, y in zip(l, a))
    qb = tuple(x - y for x, y in zip(l, b))
    out: Dense = {}
    for e, c in fp.items():
        out[tuple(x + y for x, y in zip(e, qa))] = c
    for e, c in gp.items():
        m = tuple(x + y for x, y in zip(e, qb))
        v = out.get(m, 0) - c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis sorted by leading monomial, descending."""

    ctx: RingContext
    order: MonomialOrder
    elements: tuple
    leading_monomials: tuple = field(compare=False, repr=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def lt_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ctx, self.leading_monomials)

    def format(self) -> List[str]:
        return [g.format(self.order) for g in self.elements]


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``G``; no term is divisible by a leading monomial."""
    if f.ctx != G.ctx:
        raise ContextMismatchError(f"{f.ctx.names} vs {G.ctx.names}")
    eng = _Engine(G.order, G.ctx.n, None)
    basis = [(lm, g.as_dict()) for lm, g in zip(G.leading_monomials, G.elements)]
    return Polynomial._raw(f.ctx, eng.reduce(f.as_dict(), basis))


def _groebner(ctx: RingContext, gens: Iterable[Polynomial], order: MonomialOrder,
              budget: Optional[int] = None, seed: Optional[int] = None) -> GroebnerBasis:
    eng = _Engine(order, ctx.n, budget)
    rng = random.Random(seed) if seed is not None else None
    G: List[Tuple[Exponent, Dense]] = []
    pending: set = set()
    queue: list = []

    def add(p: Dense):
        lm, p = eng.monic(p)
        k = len(G)
        G.append((lm, p))
        for i in range(k):
            a = G[i][0]
            if not any(x and y for x, y in zip(a, lm)):
                continue  # coprime leading monomials: S-pair reduces to zero
            l = tuple(max(x, y) for x, y in zip(a, lm))
            prio = rng.random() if rng else (sum(l), eng.negkey(l))
            heapq.heappush(queue, (prio, i, k))
            pending.add((i, k))

    for f in gens:
        if f.ctx != ctx:
            raise ContextMismatchError(f"{f.ctx.names} vs {ctx.names}")
        if f.is_zero():
            continue
        h = eng.reduce(f.as_dict(), G)
        if h:
            add(h)

    while queue:
        _, i, j = heapq.heappop(queue)
        pending.discard((i, j))
        l = tuple(max(x, y) for x, y in zip(G[i][0], G[j][0]))
        chain = False
        for k, (c, _) in enumerate(G):
            if k in (i, j) or not divides(c, l):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue
        h = eng.reduce(_spoly(G[i], G[j]), G)
        if h:
            add(h)

    # minimal basis, then tail-reduce each element by the others
    G.sort(key=lambda g: eng.negkey(g[0]))
    minimal: List[Tuple[Exponent, Dense]] = []
    for lm, p in reversed(G):  # ascending: smaller leading monomials first
        if not any(divides(m, lm) for m, _ in minimal):
            minimal.append((lm, p))
    reduced = []
    for idx, (lm, p) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        tail = dict(p)
        del tail[lm]
        r = eng.reduce(tail, others)
        r[lm] = Fraction(1)
        reduced.append((lm, r))
    reduced.sort(key=lambda g: eng.negkey(g[0]))
    gb = GroebnerBasis(ctx, order, tuple(Polynomial._raw(ctx, p) for _, p in reduced),
                       tuple(lm for lm, _ in reduced))
    if _trackers:
        with _tracker_lock:
            for seen in _trackers:
                seen.append(gb)
    return gb


class Ideal:
    """An ideal of a polynomial ring, given by generators.

    Groebner bases are cached per monomial order; the cache is guarded by a
    lock so an Ideal may be shared between threads.
    """

    def __init__(self, ctx: RingContext, generators: Iterable = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ctx.parse(g)
            if g.ctx != ctx:
                raise ContextMismatchError(f"generator in {g.ctx.names}, ideal in {ctx.names}")
            if not g.is_zero():
                gens.append(g)
        self.ctx = ctx
        self.generators = tuple(gens)
        self._cache: Dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_monomial(cls, B: MonomialIdeal) -> "Ideal":
        return cls(B.ctx, B.polynomials())

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(str(g) for g in self.generators)

    def format(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")" if self.generators else "(0)"

    @property
    def n(self) -> int:
        return self.ctx.n

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self, weights=None) -> bool:
        return all(g.is_homogeneous(weights) for g in self.generators)

    def groebner_basis(self, order: OrderLike = GREVLEX, budget: Optional[int] = None,
                       seed: Optional[int] = None) -> GroebnerBasis:
        order = as_order(order)
        if seed is not None:
            return _groebner(self.ctx, self.generators, order, budget, seed)
        with self._lock:
            gb = self._cache.get(order)
        if gb is None:
            gb = _groebner(self.ctx, self.generators, order, budget)
            with self._lock:
                gb = self._cache.setdefault(order, gb)
        return gb

    def is_unit(self) -> bool:
        return self.groebner_basis().is_unit()

    def contains(self, f) -> bool:
        if isinstance(f, str):
            f = self.ctx.parse(f)
        return ideal_membership(f, self)

    def equals(self, other: "Ideal") -> bool:
        return ideal_equal(self, other)

    def __add__(self, other: "Ideal") -> "Ideal":
        _check(self, other)
        return Ideal(self.ctx, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _check(self, other)
        return Ideal(self.ctx, [f * g for f in self.generators for g in other.generators])

    def map(self, fn) -> "Ideal":
        """Apply a ring map to every generator (the image ring is taken from the results)."""
        images = [fn(g) for g in self.generators]
        ctx = images[0].ctx if images else self.ctx
        return Ideal(ctx, images)

    def substitute_linear(self, matrix) -> "Ideal":
        return Ideal(self.ctx, [g.substitute_linear(matrix) for g in self.generators])


def _check(I: Ideal, J: Ideal):
    if I.ctx != J.ctx:
        raise ContextMismatchError(f"{I.ctx.names} vs {J.ctx.names}")


def buchberger(I: Ideal, order: OrderLike = GREVLEX, budget: Optional[int] = None,
               seed: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I``.

    ``seed`` switches to a random S-pair selection; the reduced basis does not
    depend on it.
    """
    return I.groebner_basis(order, budget=budget, seed=seed)


def lt_ideal(I: Ideal, order: OrderLike = GREVLEX) -> MonomialIdeal:
    return I.groebner_basis(order).lt_ideal()


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    if f.ctx != I.ctx:
        raise ContextMismatchError(f"{f.ctx.names} vs {I.ctx.names}")
    if f.is_zero():
        return True
    return I.groebner_basis().contains(f)


def is_subset(I: Ideal, J: Ideal) -> bool:
    """Whether I is contained in J."""
    _check(I, J)
    G = J.groebner_basis()
    return all(G.contains(g) for g in I.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check(I, J)
    return I.groebner_basis().elements == J.groebner_basis().elements


def eliminate(I: Ideal, k: int) -> Ideal:
    """Generators of ``I`` intersected with the subring of the last ``n - k`` variables."""
    n = I.ctx.n
    if k == 0:
        return I
    if not 0 < k < n:
        raise ValueError(f"can only eliminate between 0 and {n - 1} variables")
    G = I.groebner_basis(Block(k, GREVLEX, GREVLEX))
    sub = RingContext(I.ctx.names[k:], homogenizing=I.ctx.homogenizing)
    keep = [Polynomial._raw(sub, {a[k:]: c for a, c in g.as_dict().items()})
            for lm, g in zip(G.leading_monomials, G.elements) if not any(lm[:k])]
    return Ideal(sub, keep)


def _with_aux(ctx: RingContext) -> Tuple[RingContext, callable]:
    big = RingContext((ctx.fresh_name("u"),) + ctx.names)
    positions = list(range(1, ctx.n + 1))
    return big, lambda f: f.embed(big, positions)


def _drop_aux(I: Ideal, ctx: RingContext) -> Ideal:
    G = I.groebner_basis(Block(1, LEX, GREVLEX))
    keep = [Polynomial._raw(ctx, {a[1:]: c for a, c in g.as_dict().items()})
            for lm, g in zip(G.leading_monomials, G.elements) if lm[0] == 0]
    return Ideal(ctx, keep)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``(u*I + (1-u)*J)`` with ``u`` eliminated."""
    _check(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ctx)
    big, up = _with_aux(I.ctx)
    u = big.var(0)
    gens = [u * up(f) for f in I.generators] + [(1 - u) * up(g) for g in J.generators]
    return _drop_aux(Ideal(big, gens), I.ctx)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    result = ideals[0]
    for J in ideals[1:]:
        result = intersect(result, J)
    return result


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """``I : f^infinity`` computed as ``(I, 1 - u*f)`` with ``u`` eliminated."""
    if f.is_zero():
        raise ZeroPolynomialError("cannot saturate by zero")
    big, up = _with_aux(I.ctx)
    u = big.var(0)
    return _drop_aux(Ideal(big, [up(g) for g in I.generators] + [1 - u * up(f)]), I.ctx)


def radical_membership(I: Ideal, f: Polynomial) -> bool:
    """Whether ``f`` lies in the radical of ``I`` (Rabinowitsch trick)."""
    if f.ctx != I.ctx:
        raise ContextMismatchError(f"{f.ctx.names} vs {I.ctx.names}")
    if f.is_zero() or ideal_membership(f, I):
        return True
    big, up = _with_aux(I.ctx)
    u = big.var(0)
    return Ideal(big, [up(g) for g in I.generators] + [1 - u * up(f)]).is_unit()


def radical_contained(I: Ideal, J: Ideal) -> bool:
    """Whether every generator of I lies in the radical of J."""
    return all(radical_membership(J, g) for g in I.generators)


def dimension(I: Ideal) -> int:
    """Krull dimension of P/I: ``n - ht(LT(I))``; -1 for the unit ideal."""
    if I.is_zero():
        return I.ctx.n
    G = I.groebner_basis()
    if G.is_unit():
        return -1
    return dimension_monomial(G.lt_ideal())


def s_pairs_reduce_to_zero(G: GroebnerBasis) -> bool:
    """Independent Buchberger-criterion check: every S-polynomial of ``G`` reduces to 0."""
    eng = _Engine(G.order, G.ctx.n, None)
    basis = [(lm, g.as_dict()) for lm, g in zip(G.leading_monomials, G.elements)]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if eng.reduce(_spoly(basis[i], basis[j]), basis):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    for g, lm in zip(G.elements, G.leading_monomials):
        if g.leading_term(G.order).monomial != lm or g.leading_term(G.order).coefficient != 1:
            return False
        for other in G.leading_monomials:
            if other != lm and any(divides(other, a) for a in g.monomials()):
                return False
    return True
