"""Connectivity dimension of unions of irreducible components.

For components T_1..T_r the connectivity dimension is the minimum over
covering pairs (A, B) of ``dim((U_A T_i) cap (U_B T_j))``.  Since the
dimension of a union is the max over its pieces, this is the bottleneck
connectivity of the complete graph on the components weighted by
``dim(T_i cap T_j)``: the largest d at which the edges of weight >= d still
connect everything.  The production path computes it with a descending
union-find sweep; ``connectivity_via_partitions`` enumerates the pairs.
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .deform import as_monomial_ideal, initial_ideal_weight, is_monomial_ideal, refining_order
from .errors import VerificationRefused
from .groebner import (Ideal, dimension, ideal_equal, intersect_all, is_subset, lt_ideal,
                       radical_membership)
from .monocomb import (MonomialIdeal, VariablePrime, intersect_primes, minimal_primes_monomial,
                       radical_monomial)
from .poly import RingContext
from .ring import GREVLEX, LEX, weight_vector

Prime = Union[VariablePrime, Ideal]


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.count = n

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)
            self.count -= 1

    def groups(self) -> List[List[int]]:
        out: Dict[int, List[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values())


@dataclass(frozen=True)
class ChainCertificate:
    """A chain of components with consecutive intersections of dimension >= threshold."""

    chain: tuple
    threshold: int

    def validate(self, graph: "IntersectionGraph") -> bool:
        return all(graph.weight(a, b) >= self.threshold
                   for a, b in zip(self.chain, self.chain[1:]))


@dataclass
class IntersectionGraph:
    """Component dimensions and pairwise intersection dimensions (-1 = empty)."""

    dims: List[int]
    weights: List[List[int]]

    @property
    def size(self) -> int:
        return len(self.dims)

    def weight(self, i: int, j: int) -> int:
        return self.dims[i] if i == j else self.weights[i][j]

    def bottleneck(self) -> Tuple[int, Optional[Tuple[tuple, tuple]]]:
        """Largest d whose threshold graph is connected, plus the split at d + 1."""
        r = self.size
        if r == 0:
            return -1, None
        if r == 1:
            return self.dims[0], None
        edges = sorted(((self.weights[i][j], i, j) for i, j in combinations(range(r), 2)),
                       key=lambda e: (-e[0], e[1], e[2]))
        uf = _UnionFind(r)
        k = 0
        while k < len(edges):
            level = edges[k][0]
            before = uf.groups()
            while k < len(edges) and edges[k][0] == level:
                uf.union(edges[k][1], edges[k][2])
                k += 1
            if uf.count == 1:
                side = tuple(before[0])
                rest = tuple(i for i in range(r) if i not in side)
                return level, (side, rest)
        raise AssertionError("complete graph must end connected")

    def chain(self, i: int, j: int, threshold: int) -> Optional[ChainCertificate]:
        """Shortest chain from i to j through edges of weight >= threshold (BFS)."""
        prev = {i: None}
        frontier = [i]
        while frontier:
            nxt = []
            for a in frontier:
                for b in range(self.size):
                    if b not in prev and b != a and self.weights[a][b] >= threshold:
                        prev[b] = a
                        nxt.append(b)
            frontier = nxt
        if j not in prev:
            return None
        path = [j]
        while prev[path[-1]] is not None:
            path.append(prev[path[-1]])
        return ChainCertificate(tuple(reversed(path)), threshold)


def _as_ideal(ctx: RingContext, p: Prime) -> Ideal:
    if isinstance(p, VariablePrime):
        return Ideal.from_monomial(MonomialIdeal.from_prime(ctx, p))
    return p


def _poly_in_variable_prime(f, p: VariablePrime) -> bool:
    return all(p.contains_monomial(a) for a in f.monomials())


class ComponentSet:
    """Irreducible components of V(I), given by their (minimal) prime ideals.

    Variable primes are handled combinatorially.  General primes are accepted
    as trusted input: containment and incomparability are checked, and when a
    ``target`` ideal is given the set is verified to cut out exactly the
    radical of the target; primality itself is not checked and the
    ``caveats`` list records that.
    """

    def __init__(self, ctx: RingContext, primes: Sequence[Prime], target: Optional[Ideal] = None,
                 threads: int = 1):
        self.ctx = ctx
        self.primes = list(primes)
        self.target = target
        self.threads = max(1, int(threads))
        self.caveats: List[str] = []
        for p in self.primes:
            if isinstance(p, Ideal) and p.ctx != ctx:
                raise VerificationRefused("component lives in a different ring")
        self.combinatorial = all(isinstance(p, VariablePrime) for p in self.primes)
        if not self.combinatorial:
            self.caveats.append("primes trusted: primality of general components is not verified")
        self._check_incomparable()
        self.dims = [self._dim(p) for p in self.primes]
        if target is not None:
            self._verify_against(target)
        self._graph: Optional[IntersectionGraph] = None

    @classmethod
    def from_monomial_ideal(cls, B: MonomialIdeal) -> "ComponentSet":
        if B.is_unit():
            return cls(B.ctx, [])
        return cls(B.ctx, minimal_primes_monomial(B))

    def __len__(self):
        return len(self.primes)

    def _dim(self, p: Prime) -> int:
        if isinstance(p, VariablePrime):
            return p.dimension(self.ctx.n)
        return dimension(p)

    def _contains(self, big: Prime, small: Prime) -> bool:
        if isinstance(big, VariablePrime) and isinstance(small, VariablePrime):
            return small <= big
        if isinstance(big, VariablePrime):
            return all(_poly_in_variable_prime(g, big) for g in _as_ideal(self.ctx, small).generators)
        return is_subset(_as_ideal(self.ctx, small), big)

    def _check_incomparable(self):
        for i, j in combinations(range(len(self.primes)), 2):
            if self._contains(self.primes[i], self.primes[j]) or \
                    self._contains(self.primes[j], self.primes[i]):
                raise VerificationRefused(f"components {i} and {j} are comparable")

    def _verify_against(self, I: Ideal):
        if I.ctx != self.ctx:
            raise VerificationRefused("target ideal lives in a different ring")
        if not self.primes:
            if not I.is_unit():
                raise VerificationRefused("empty component set for a proper ideal")
            return
        for k, p in enumerate(self.primes):
            if isinstance(p, VariablePrime):
                ok = all(_poly_in_variable_prime(g, p) for g in I.generators)
            else:
                ok = is_subset(I, p)
            if not ok:
                raise VerificationRefused(f"component {k} does not contain the ideal")
        if self.combinatorial:
            meet = Ideal.from_monomial(intersect_primes(self.ctx, self.primes))
        else:
            meet = intersect_all([_as_ideal(self.ctx, p) for p in self.primes])
        for g in meet.generators:
            if not radical_membership(I, g):
                raise VerificationRefused("intersection of the components is larger than the radical")

    def _edge(self, pair) -> int:
        i, j = pair
        p, q = self.primes[i], self.primes[j]
        if isinstance(p, VariablePrime) and isinstance(q, VariablePrime):
            return self.ctx.n - len(set(p.variables) | set(q.variables))
        return dimension(_as_ideal(self.ctx, p) + _as_ideal(self.ctx, q))

    def graph(self) -> IntersectionGraph:
        if self._graph is None:
            r = len(self.primes)
            pairs = list(combinations(range(r), 2))
            if self.threads > 1 and not self.combinatorial:
                with ThreadPoolExecutor(self.threads) as pool:
                    values = list(pool.map(self._edge, pairs))
            else:
                values = [self._edge(p) for p in pairs]
            w = [[0] * r for _ in range(r)]
            for i in range(r):
                w[i][i] = self.dims[i]
            for (i, j), v in zip(pairs, values):
                w[i][j] = w[j][i] = v
            self._graph = IntersectionGraph(list(self.dims), w)
        return self._graph

    def format_prime(self, k: int) -> str:
        p = self.primes[k]
        return p.format(self.ctx) if isinstance(p, VariablePrime) else p.format()


@dataclass
class ConnectivityReport:
    c: int
    sdim: int
    dim: int
    certificates: List[ChainCertificate] = field(default_factory=list)
    partition: Optional[Tuple[tuple, tuple]] = None
    caveats: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "c": self.c, "sdim": self.sdim, "dim": self.dim,
            "partition": [list(s) for s in self.partition] if self.partition else None,
            "certificates": [{"chain": list(cert.chain), "threshold": cert.threshold}
                             for cert in self.certificates],
            "caveats": list(self.caveats),
        }


def connectivity_dimension(S: ComponentSet) -> ConnectivityReport:
    if len(S) == 0:
        return ConnectivityReport(-1, -1, -1, caveats=list(S.caveats))
    G = S.graph()
    c, partition = G.bottleneck()
    certs = []
    for i, j in combinations(range(G.size), 2):
        cert = G.chain(i, j, c)
        if cert is None:
            raise AssertionError("threshold graph at c must be connected")
        certs.append(cert)
    return ConnectivityReport(c, min(S.dims), max(S.dims), certs, partition, list(S.caveats))


def connectivity_via_partitions(S_or_graph) -> int:
    """Minimum over covering pairs (A, B) of max weight between A and B (brute force)."""
    G = S_or_graph.graph() if isinstance(S_or_graph, ComponentSet) else S_or_graph
    r = G.size
    if r == 0:
        return -1
    if r > 16:
        raise ValueError("partition oracle limited to 16 components")
    full = (1 << r) - 1
    # row[A][j] = max_{i in A} w(i, j)
    row = [[-2] * r for _ in range(full + 1)]
    for A in range(1, full + 1):
        low = (A & -A).bit_length() - 1
        prev = row[A & (A - 1)]
        row[A] = [max(prev[j], G.weight(low, j)) for j in range(r)]
    best = None
    for A in range(1, full + 1):
        rest = full & ~A
        # B = rest | X for every X subset of A, B nonempty
        X = A
        while True:
            B = rest | X
            if B:
                v = max(row[A][j] for j in range(r) if B >> j & 1)
                if best is None or v < best:
                    best = v
            if X == 0:
                break
            X = (X - 1) & A
    return best


def projective_connectivity(S: ComponentSet) -> int:
    """Connectivity dimension of the projective scheme of a cone: affine value minus one."""
    for p in S.primes:
        if isinstance(p, Ideal) and not p.is_homogeneous():
            raise VerificationRefused("components must be cones (homogeneous primes)")
    return connectivity_dimension(S).c - 1


# ---------------------------------------------------------------------------
# theorem checks


@dataclass
class VerificationRecord:
    theorem: str
    inputs: dict
    lhs: int
    rhs: int
    strict_expected: bool
    passed: bool
    certificates: list = field(default_factory=list)
    caveats: list = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def components_of(I: Ideal, threads: int = 1) -> ComponentSet:
    """Certified components of V(I) when they are coordinate subspaces.

    Monomial ideals are handled exactly.  Otherwise the minimal primes of
    the radical of LT(I) under grevlex and then lex are tried as candidates
    and accepted only if they verify against I; failing that the caller must
    supply components.
    """
    if is_monomial_ideal(I):
        S = ComponentSet.from_monomial_ideal(as_monomial_ideal(I))
        S.target = I  # exact: the minimal primes of a monomial ideal are known
        return S
    for order in (GREVLEX, LEX):
        B = lt_ideal(I, order)
        if B.is_unit():
            return ComponentSet(I.ctx, [], target=I)
        try:
            return ComponentSet(I.ctx, minimal_primes_monomial(B), target=I, threads=threads)
        except VerificationRefused:
            continue
    raise VerificationRefused(
        "components of V(I) are not coordinate subspaces; supply them explicitly")


def initial_components(I: Ideal, omega) -> Tuple[ComponentSet, MonomialIdeal, List[str]]:
    """Components of V(in_w(I)) together with a monomial ideal having them.

    If in_w(I) is not monomial its components are still exact when they
    verify as coordinate subspaces; otherwise LT of the refined order is
    used instead, which is itself a positive-weight initial ideal of I.
    """
    J = initial_ideal_weight(I, omega)
    if is_monomial_ideal(J):
        B = as_monomial_ideal(J)
        return ComponentSet.from_monomial_ideal(radical_monomial(B)), B, []
    B = lt_ideal(I, refining_order(omega))
    try:
        return components_of(J), B, ["in_w(I) is not monomial; its components were "
                                     "verified as coordinate subspaces"]
    except VerificationRefused:
        pass
    return ComponentSet.from_monomial_ideal(radical_monomial(B)), B, [
        "in_w(I) is not monomial; used LT of weight(w;grevlex), itself a "
        "positive-weight initial ideal of I"]


def _certs(report: ConnectivityReport) -> list:
    return [{"chain": list(c.chain), "threshold": c.threshold} for c in report.certificates]


def check_martina(I: Ideal, omega, components: ComponentSet) -> VerificationRecord:
    """c(P/in_w(I)) >= c(P/I) - 1, strictly when I has several minimal primes."""
    omega = weight_vector(omega, I.n, positive=True)
    if components.target is None or not (components.target is I or ideal_equal(components.target, I)):
        raise VerificationRefused("component set was not verified against this ideal")
    cI = connectivity_dimension(components)
    S_in, _, caveats = initial_components(I, omega)
    cL = connectivity_dimension(S_in)
    strict = len(components) > 1
    lhs, rhs = cL.c, cI.c - 1
    return VerificationRecord(
        "martina", {"ideal": I.format(), "omega": list(omega), "c_ideal": cI.c},
        lhs, rhs, strict, lhs > rhs if strict else lhs >= rhs, _certs(cL),
        caveats + list(components.caveats))


def check_ks_corollary(I: Ideal, omega) -> VerificationRecord:
    """For a (trusted) prime I: c(P/in_w(I)) >= dim(P/I) - 1."""
    omega = weight_vector(omega, I.n, positive=True)
    d = dimension(I)
    S_in, _, caveats = initial_components(I, omega)
    cL = connectivity_dimension(S_in)
    return VerificationRecord(
        "kalkbrener-sturmfels", {"ideal": I.format(), "omega": list(omega), "dim": d},
        cL.c, d - 1, False, cL.c >= d - 1, _certs(cL),
        caveats + ["primes trusted: I is assumed prime"])


def is_complete_intersection(I: Ideal) -> bool:
    return dimension(I) == I.n - len(I.generators)


def check_skinner(I: Ideal, omega) -> VerificationRecord:
    """For a graded complete intersection: c(P/in_w(I)) >= depth(P/I) - 1 = dim(P/I) - 1."""
    omega = weight_vector(omega, I.n, positive=True)
    if not I.is_homogeneous():
        raise VerificationRefused("ideal is not graded")
    if not is_complete_intersection(I):
        raise VerificationRefused("not a complete intersection; depth is not computable here")
    d = dimension(I)
    S_in, _, caveats = initial_components(I, omega)
    cL = connectivity_dimension(S_in)
    return VerificationRecord(
        "skinner", {"ideal": I.format(), "omega": list(omega), "depth": d},
        cL.c, d - 1, False, cL.c >= d - 1, _certs(cL), caveats)


@dataclass(frozen=True)
class ObstructionWitness:
    """A prime Q at which the localization of P/B is not connected in codimension 1."""

    prime: VariablePrime
    components: tuple
    partition: tuple
    local_c: int
    local_dim: int

    def to_dict(self, ctx: RingContext) -> dict:
        name = lambda p: p.format(ctx)
        return {
            "Q": name(self.prime),
            "components": [name(p) for p in self.components],
            "partition": [[name(self.components[i]) for i in side] for side in self.partition],
            "local_c": self.local_c, "local_dim": self.local_dim,
        }


def cm_obstruction(B: MonomialIdeal) -> List[ObstructionWitness]:
    """Variable primes Q where (P/B)_Q is not connected in codimension 1.

    A nonempty result certifies that P/B is not Cohen-Macaulay.  Candidate Q
    are the unions of at least two component supports.
    """
    primes = minimal_primes_monomial(B)
    supports = [frozenset(p.variables) for p in primes]
    candidates = set()
    frontier = {a | b for a, b in combinations(supports, 2)}
    while frontier:
        candidates |= frontier
        frontier = {q | s for q in frontier for s in supports} - candidates
    out = []
    for Q in sorted(candidates, key=lambda q: (len(q), sorted(q))):
        inside = [k for k, s in enumerate(supports) if s <= Q]
        if len(inside) < 2:
            continue
        h = len(Q)
        dims = [h - len(supports[k]) for k in inside]
        w = [[h - len(supports[a] | supports[b]) if a != b else h - len(supports[a])
              for b in inside] for a in inside]
        c, partition = IntersectionGraph(dims, w).bottleneck()
        local_dim = max(dims)
        if c < local_dim - 1:
            comps = tuple(primes[k] for k in inside)
            out.append(ObstructionWitness(VariablePrime(tuple(Q)), comps, partition, c, local_dim))
    return out
