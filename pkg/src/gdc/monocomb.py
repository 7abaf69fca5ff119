"""Monomial ideals and their minimal primes.

The minimal primes of a monomial ideal are generated by variables: they are
the minimal vertex covers (transversals) of the hypergraph whose edges are
the supports of the squarefree generators of the radical.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, Sequence

from .errors import DimensionMismatchError, UnitIdealError
from .poly import Polynomial, RingContext
from .ring import Exponent


def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def minimalize(exps: Iterable[Exponent]) -> List[Exponent]:
    """Drop every exponent divisible by another one; return sorted lexicographically."""
    uniq = sorted(set(map(tuple, exps)), key=lambda a: (sum(a), a))
    keep: List[Exponent] = []
    for a in uniq:
        if not any(divides(b, a) for b in keep):
            keep.append(a)
    return sorted(keep)


@dataclass(frozen=True)
class VariablePrime:
    """The prime ideal generated by the variables with the given (0-based) indices."""

    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(sorted(set(self.variables))))

    @property
    def height(self) -> int:
        return len(self.variables)

    def dimension(self, n: int) -> int:
        return n - len(self.variables)

    def contains_monomial(self, a: Exponent) -> bool:
        return any(a[i] for i in self.variables)

    def __le__(self, other: "VariablePrime") -> bool:
        return set(self.variables) <= set(other.variables)

    def __lt__(self, other: "VariablePrime") -> bool:
        return set(self.variables) < set(other.variables)

    def format(self, ctx: RingContext) -> str:
        return "(" + ",".join(ctx.names[i] for i in self.variables) + ")"


class MonomialIdeal:
    """A monomial ideal given by its minimal generators (an antichain under divisibility)."""

    __slots__ = ("ctx", "generators")

    def __init__(self, ctx: RingContext, generators: Iterable[Sequence[int]] = ()):
        gens = [tuple(int(v) for v in g) for g in generators]
        for g in gens:
            if len(g) != ctx.n:
                raise DimensionMismatchError(f"generator {g} does not fit {ctx.n} variables")
        self.ctx = ctx
        self.generators = tuple(minimalize(gens))

    @classmethod
    def from_polynomials(cls, ctx: RingContext, polys: Iterable[Polynomial]) -> "MonomialIdeal":
        exps = []
        for f in polys:
            if f.is_zero():
                continue
            if not f.is_monomial():
                raise ValueError(f"{f} is not a monomial")
            exps.extend(f.monomials())
        return cls(ctx, exps)

    @classmethod
    def from_prime(cls, ctx: RingContext, prime: VariablePrime) -> "MonomialIdeal":
        return cls(ctx, [tuple(int(j == i) for j in range(ctx.n)) for i in prime.variables])

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ctx == other.ctx
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.ctx, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({self.format()})"

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)

    def is_squarefree(self) -> bool:
        return all(v <= 1 for g in self.generators for v in g)

    def contains(self, a: Exponent) -> bool:
        return any(divides(g, a) for g in self.generators)

    def polynomials(self) -> List[Polynomial]:
        return [self.ctx.monomial(g) for g in self.generators]

    def format(self) -> str:
        return "(" + ", ".join(str(p) for p in self.polynomials()) + ")"

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ctx, self.generators + other.generators)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ctx, (lcm(a, b) for a, b in product(self.generators, other.generators)))


def radical_monomial(B: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(B.ctx, (tuple(min(v, 1) for v in g) for g in B.generators))


def minimal_transversals(edges: Sequence[frozenset]) -> List[frozenset]:
    """All inclusion-minimal vertex sets meeting every edge.

    Branches on the vertices of the first edge not yet hit.  A branch is cut
    as soon as a chosen vertex has no private edge left (it could never be
    part of a minimal cover), and partial sets already explored are memoized.
    """
    edges = sorted({frozenset(e) for e in edges}, key=lambda e: (len(e), sorted(e)))
    if any(not e for e in edges):
        raise UnitIdealError("an empty edge cannot be covered")
    # an edge containing another edge is implied by it
    edges = [e for e in edges if not any(f < e for f in edges)]
    found: set = set()
    seen: set = set()

    def has_private(chosen: frozenset) -> bool:
        for u in chosen:
            if not any(e & chosen == {u} for e in edges if u in e):
                return False
        return True

    def search(chosen: frozenset):
        if chosen in seen:
            return
        seen.add(chosen)
        if any(t <= chosen for t in found):
            return
        open_edge = next((e for e in edges if not (e & chosen)), None)
        if open_edge is None:
            found.add(chosen)
            return
        for v in sorted(open_edge):
            nxt = chosen | {v}
            if has_private(nxt):
                search(nxt)

    search(frozenset())
    minimal = [t for t in found if not any(s < t for s in found)]
    return sorted(minimal, key=lambda t: (len(t), sorted(t)))


def minimal_primes_monomial(B: MonomialIdeal) -> List[VariablePrime]:
    """Minimal primes of B, sorted by height then variable indices.

    The zero ideal has the single minimal prime (0), returned as the empty
    VariablePrime.
    """
    if B.is_unit():
        raise UnitIdealError("the unit ideal has no minimal primes")
    rad = radical_monomial(B)
    edges = [frozenset(i for i, v in enumerate(g) if v) for g in rad.generators]
    if not edges:
        return [VariablePrime(())]
    return [VariablePrime(tuple(t)) for t in minimal_transversals(edges)]


def height_monomial(B: MonomialIdeal) -> int:
    if B.is_unit():
        raise UnitIdealError("height of the unit ideal is undefined")
    return min(p.height for p in minimal_primes_monomial(B))


def dimension_monomial(B: MonomialIdeal) -> int:
    """Krull dimension of P/B; -1 for the unit ideal."""
    if B.is_unit():
        return -1
    return B.ctx.n - height_monomial(B)


def intersect_primes(ctx: RingContext, primes: Iterable[VariablePrime]) -> MonomialIdeal:
    """The squarefree monomial ideal cut out by a union of coordinate subspaces."""
    result = None
    for p in primes:
        q = MonomialIdeal.from_prime(ctx, p)
        result = q if result is None else result.intersect(q)
    if result is None:
        raise ValueError("need at least one prime")
    return result
