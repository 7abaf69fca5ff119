"""Acceptance checks: the worked examples and the randomized property suites.

Each ``criterion_*`` function runs one check end to end and returns a
:class:`CriterionResult`; ``run_all`` drives them for ``gdc reproduce-paper``
and the test suite.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from .connect import (ComponentSet, check_ks_corollary, check_martina, check_skinner,
                      cm_obstruction, components_of, connectivity_dimension,
                      connectivity_via_partitions, projective_connectivity)
from .deform import (dehomogenize_ideal, initial_ideal_weight, omega_homogenize_ideal,
                     weight_for_order)
from .groebner import (Ideal, dimension, ideal_equal, ideal_membership, intersect, lt_ideal,
                       track_bases)
from .idealfile import bundled
from .monocomb import (MonomialIdeal, VariablePrime, intersect_primes, minimal_primes_monomial,
                       radical_monomial)
from .oracles import is_groebner, minimal_primes_bruteforce
from .poly import Polynomial, RingContext
from .randgen import (known_components, random_antichain, random_ideal, random_polynomial,
                      random_weight, ring)
from .ring import GREVLEX, GRLEX, LEX


@dataclass
class CriterionResult:
    number: int
    title: str
    limit: float
    passed: bool = True
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)
    records: list = field(default_factory=list)

    def expect(self, ok: bool, what: str):
        if not ok:
            self.passed = False
            self.failures.append(what)

    @property
    def within_time(self) -> bool:
        return self.elapsed < self.limit

    def line(self) -> str:
        status = "PASS" if self.passed and self.within_time else "FAIL"
        extra = "" if self.within_time else f" (over the {self.limit:.0f}s limit)"
        msg = f"[{status}] criterion {self.number}: {self.title} ({self.elapsed:.2f}s){extra}"
        if self.failures:
            msg += "\n    " + "\n    ".join(self.failures[:10])
        return msg

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "pass": self.passed and self.within_time,
                "elapsed": round(self.elapsed, 3), "limit": self.limit, "details": self.details,
                "failures": self.failures, "records": self.records}


def _timed(number: int, title: str, limit: float):
    def wrap(fn: Callable[..., None]):
        def run(*args, **kwargs) -> CriterionResult:
            res = CriterionResult(number, title, limit)
            start = time.perf_counter()
            fn(res, *args, **kwargs)
            res.elapsed = time.perf_counter() - start
            return res
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


def _primes(ctx: RingContext, groups) -> List[VariablePrime]:
    return sorted((VariablePrime(tuple(ctx.index(v) for v in g.split())) for g in groups),
                  key=lambda p: (p.height, p.variables))


@_timed(1, "Conca example end to end", 60.0)
def criterion_conca(res: CriterionResult):
    I = bundled("conca")
    ctx = I.ctx
    G = I.groebner_basis(LEX)
    res.expect(is_groebner(G), "lex basis fails the S-pair oracle")
    res.expect(all(G.contains(f) for f in I.generators), "generators do not reduce to 0")
    expected = _primes(ctx, ["x1 x2 x3", "x1 x3 x6", "x1 x2 x5", "x1 x4 x5"])
    primes = minimal_primes_monomial(radical_monomial(G.lt_ideal()))
    res.details["sqrt_lt_primes"] = [p.format(ctx) for p in primes]
    res.expect(primes == expected, f"minimal primes of sqrt LT: {res.details['sqrt_lt_primes']}")
    d = dimension(I)
    res.details["dim"] = d
    res.expect(d == 3, f"dim P/I = {d}, expected 3")
    c = connectivity_dimension(ComponentSet(ctx, primes)).c
    res.details["c_sqrt_lt"] = c
    res.expect(c == 2, f"c(P/sqrt LT) = {c}, expected 2")
    witnesses = cm_obstruction(G.lt_ideal())
    res.details["cm_witnesses"] = [w.to_dict(ctx) for w in witnesses]
    target = VariablePrime(tuple(ctx.index(v) for v in "x1 x3 x4 x5 x6".split()))
    pair = set(_primes(ctx, ["x1 x3 x6", "x1 x4 x5"]))
    res.expect(any(w.prime == target and set(w.components) == pair for w in witnesses),
               "no CM obstruction witness at Q = (x1,x3,x4,x5,x6)")
    omega = weight_for_order(I, LEX)
    res.details["omega_lex"] = list(omega)
    for rec in (check_martina(I, omega, ComponentSet(ctx, [I], target=I)), check_skinner(I, omega)):
        res.records.append(rec.to_dict())
        res.expect(rec.passed and rec.lhs == 2 and rec.rhs == 2,
                   f"{rec.theorem}: lhs={rec.lhs} rhs={rec.rhs} pass={rec.passed}")


@_timed(2, "patty analog (xu,xv,yu,yv)", 1.0)
def criterion_patty(res: CriterionResult):
    I = bundled("patty")
    S = components_of(I)
    names = [S.format_prime(k) for k in range(len(S))]
    res.details["components"] = names
    res.expect(sorted(names) == ["(u,v)", "(x,y)"], f"minimal primes {names}")
    c = connectivity_dimension(S).c
    d = dimension(I)
    res.details.update(c=c, dim=d)
    res.expect(c == 0, f"c = {c}, expected 0")
    res.expect(d == 2, f"dim = {d}, expected 2")


@_timed(3, "Example es on k[x,y,z,v,w]/(xyw - zvw)", 10.0)
def criterion_es(res: CriterionResult):
    I = bundled("es")
    ctx = I.ctx
    S = components_of(I)  # verified against I by radical membership
    res.details["components"] = [S.format_prime(k) for k in range(len(S))]
    expected = _primes(ctx, ["x y z", "x y v", "x y w", "z v x", "z v y", "z v w"])
    res.expect(sorted(S.primes, key=lambda p: (p.height, p.variables)) == expected,
               f"components {res.details['components']}")
    c = connectivity_dimension(S).c
    pc = projective_connectivity(S)
    res.details.update(affine_c=c, projective_c=pc)
    res.expect(c == 1, f"affine c = {c}, expected 1")
    res.expect(pc == 0, f"projective c(Z) = {pc}, expected 0")
    hyper = Ideal(ctx, [ctx.parse("x*y*w - z*v*w")])
    dim_r = dimension(hyper)
    heights = {}
    for gens in (["x", "y"], ["z", "v"]):
        p = Ideal(ctx, [ctx.parse(v) for v in gens])
        heights["(" + ",".join(gens) + ")"] = dim_r - dimension(p + hyper)
    res.details["heights_in_hypersurface"] = heights
    for name, h in heights.items():
        res.expect(h == 1, f"ht of {name} in the hypersurface ring is {h}, expected 1")


@_timed(4, "connectedness inequality on known-component ideals", 300.0)
def criterion_connectedness_random(res: CriterionResult, count: int = 50, weights: int = 3, seed: int = 4):
    rng = random.Random(seed)
    checked = 0
    for k in range(count):
        n = rng.choice([4, 5, 5, 6])
        known = known_components(n, rng.randint(2, 4), rng)
        S = known.component_set()
        c = connectivity_dimension(S).c
        res.expect(c == known.c_known, f"ideal {k}: computed c(P/I) = {c}, construction gives {known.c_known}")
        for _ in range(weights):
            rec = check_martina(known.ideal, random_weight(n, rng, 1, 20), S)
            checked += 1
            if not rec.passed:
                res.records.append(rec.to_dict())
            res.expect(rec.passed and rec.strict_expected,
                       f"ideal {k}: lhs={rec.lhs} rhs={rec.rhs} strict={rec.strict_expected}")
    res.details["checks"] = checked


@_timed(5, "Kalkbrener-Sturmfels on twisted cubic and 2x2 minors", 120.0)
def criterion_ks(res: CriterionResult, random_weights: int = 5, seed: int = 5):
    rng = random.Random(seed)
    rows = []
    for name in ("twisted-cubic", "minors-2x3"):
        I = bundled(name)
        d = dimension(I)
        for order in (LEX, GREVLEX):
            B = lt_ideal(I, order)
            c = connectivity_dimension(ComponentSet.from_monomial_ideal(B)).c
            res.expect(c >= d - 1, f"{name} {order}: c(P/LT) = {c} < dim - 1 = {d - 1}")
            omega = weight_for_order(I, order)
            rec = check_ks_corollary(I, omega)
            res.expect(rec.passed, f"{name} weight for {order}: lhs={rec.lhs} rhs={rec.rhs}")
            rows.append([name, str(order), c, rec.lhs, rec.rhs])
        for _ in range(random_weights):
            rec = check_ks_corollary(I, random_weight(I.n, rng, 1, 20))
            res.expect(rec.passed, f"{name} w={rec.inputs['omega']}: lhs={rec.lhs} rhs={rec.rhs}")
            rows.append([name, rec.inputs["omega"], rec.lhs, rec.rhs])
    res.details["rows"] = rows


def _t_of(ctx: RingContext) -> Polynomial:
    return ctx.var(ctx.n - 1)


@_timed(6, "deformation identities", 120.0)
def criterion_deformation(res: CriterionResult, trials: int = 200, seed: int = 6):
    rng = random.Random(seed)
    counts = dict.fromkeys(["dehom_of_hom", "hom_of_dehom", "dehom_ideal", "special_fibre",
                            "hom_of_sum", "hom_detects_equality", "dim_plus_one",
                            "hom_connectivity"], 0)

    def small_ideal(ctx):
        return random_ideal(ctx, rng, max_gens=2, max_degree=2, max_terms=3, coeff_bound=2)

    for k in range(trials):
        n = rng.choice([2, 3])
        ctx = ring(n)
        omega = random_weight(n, rng, 0, 3)

        f = random_polynomial(ctx, rng)
        res.expect(f.omega_homogenize(omega).dehomogenize() == f, f"pi(hom f) = f fails for {f}")
        counts["dehom_of_hom"] += 1

        F = random_polynomial(ctx, rng).omega_homogenize(omega)
        ok = F.dehomogenize().omega_homogenize(omega) == F
        l = rng.randint(0, 3)
        tl = _t_of(F.ctx) ** l
        ok = ok and (F * tl).dehomogenize().omega_homogenize(omega) * tl == F * tl
        res.expect(ok, f"hom(pi F) = F fails for {F}")
        counts["hom_of_dehom"] += 1

        I = small_ideal(ctx)
        H = omega_homogenize_ideal(I, omega)
        combo = H.ctx.zero()
        for h in H.generators:
            combo = combo + random_polynomial(H.ctx, rng, max_degree=2, max_terms=2) * h
        ok = ideal_membership(combo.dehomogenize(), I) and ideal_equal(dehomogenize_ideal(H), I)
        res.expect(ok, f"pi(hom I) = I fails for {I.format()} w={omega}")
        counts["dehom_ideal"] += 1

        t = Ideal(H.ctx, [_t_of(H.ctx)])
        lifted = Ideal(H.ctx, [g.embed(H.ctx, range(n)) for g in initial_ideal_weight(I, omega).generators])
        res.expect(ideal_equal(H + t, lifted + t), f"hom I + (t) = in_w(I)[t] + (t) fails for {I.format()} w={omega}")
        counts["special_fibre"] += 1

        d = dimension(I)
        dh = dimension(H)
        res.expect(d + 1 == dh, f"dim hom I = dim I + 1: dim {d} + 1 != {dh} for {I.format()} w={omega}")
        counts["dim_plus_one"] += 1

        J = small_ideal(ctx)
        lhs = omega_homogenize_ideal(intersect(I, J), omega)
        rhs = intersect(H, omega_homogenize_ideal(J, omega))
        res.expect(ideal_equal(lhs, rhs), f"hom(I + J) fails for {I.format()} and {J.format()} w={omega}")
        counts["hom_of_sum"] += 1

        if k % 2:
            gens = list(I.generators)
            mixed = gens[0] + random_polynomial(ctx, rng, max_degree=1, max_terms=1) * gens[-1]
            J2 = Ideal(ctx, [mixed] + gens[1:] + [gens[0]])
        else:
            J2 = J
        same = ideal_equal(I, J2)
        hsame = ideal_equal(H, omega_homogenize_ideal(J2, omega))
        res.expect(same == hsame, f"hom detects equality fails for {I.format()} and {J2.format()} w={omega}")
        counts["hom_detects_equality"] += 1

        if k % 4 == 0:
            known = known_components(3, rng.randint(2, 3), rng, bound=1)
            S = known.component_set()
            cI = connectivity_dimension(S).c
            w3 = random_weight(3, rng, 0, 3)
            Hk = omega_homogenize_ideal(known.ideal, w3)
            comps = [omega_homogenize_ideal(p, w3) for p in known.components]
            cH = connectivity_dimension(ComponentSet(Hk.ctx, comps, target=Hk)).c
        else:
            n2 = rng.choice([3, 4])
            ctx2 = ring(n2)
            primes = random_antichain(n2, rng.randint(2, 3), rng)
            S = ComponentSet(ctx2, primes)
            cI = connectivity_dimension(S).c
            B = Ideal.from_monomial(intersect_primes(ctx2, primes))
            Hk = omega_homogenize_ideal(B, random_weight(n2, rng, 0, 3))
            comps = [VariablePrime(p.variables) for p in primes]
            cH = connectivity_dimension(ComponentSet(Hk.ctx, comps, target=Hk)).c
        res.expect(cH >= cI + 1, f"homogenized connectivity: c(P[t]/H) = {cH} < c(P/I) + 1 = {cI + 1}")
        counts["hom_connectivity"] += 1
    res.details["trials"] = counts


@_timed(7, "oracle equivalences", 120.0)
def criterion_oracles(res: CriterionResult, sets: int = 500, ideals: int = 200,
                      bases: Optional[list] = None, seed: int = 7):
    rng = random.Random(seed)
    for k in range(sets):
        n = rng.randint(3, 12)
        r = rng.randint(1, min(10, n))
        ctx = ring(n)
        try:
            primes = random_antichain(n, r, rng)
        except RecursionError:
            continue
        S = ComponentSet(ctx, primes)
        fast, slow = connectivity_dimension(S).c, connectivity_via_partitions(S)
        res.expect(fast == slow, f"set {k}: bottleneck {fast} != partitions {slow}")
    for k in range(ideals):
        n = rng.randint(2, 12)
        ctx = ring(n)
        gens = []
        for _ in range(rng.randint(1, 8)):
            support = rng.sample(range(n), rng.randint(1, min(4, n)))
            gens.append(tuple(int(i in support) for i in range(n)))
        B = MonomialIdeal(ctx, gens)
        res.expect(minimal_primes_monomial(B) == minimal_primes_bruteforce(B),
                   f"ideal {k}: minimal primes disagree for {B.format()}")
    res.details["component_sets"] = sets
    res.details["squarefree_ideals"] = ideals
    if bases is not None:
        unique = {(G.ctx, G.order, G.elements): G for G in bases}
        bad = [G for G in unique.values() if not is_groebner(G)]
        res.details["groebner_bases_checked"] = len(unique)
        res.expect(not bad, f"{len(bad)} computed bases fail the S-pair oracle")


@_timed(8, "weight vectors representing lex/grlex/grevlex", 60.0)
def criterion_weights(res: CriterionResult, count: int = 20, seed: int = 8):
    rng = random.Random(seed)
    rows = []
    for k in range(count):
        ctx = ring(rng.choice([3, 4]))
        I = random_ideal(ctx, rng, max_gens=3, max_degree=3, max_terms=4, coeff_bound=3)
        for order in (LEX, GRLEX, GREVLEX):
            omega = weight_for_order(I, order)
            ok = all(v > 0 for v in omega) and ideal_equal(
                initial_ideal_weight(I, omega), Ideal.from_monomial(lt_ideal(I, order)))
            res.expect(ok, f"ideal {k} {order}: w={omega} does not represent the order")
            rows.append([I.format(), str(order), list(omega)])
    res.details["rows"] = rows


CRITERIA = [criterion_conca, criterion_patty, criterion_es, criterion_connectedness_random,
            criterion_ks, criterion_deformation, criterion_oracles, criterion_weights]


def run_all(quick: bool = False, report: Optional[Callable[[CriterionResult], None]] = None
            ) -> List[CriterionResult]:
    """Run every criterion; the S-pair oracle covers every basis computed along the way."""
    results = []
    with track_bases() as seen:
        for crit in CRITERIA:
            if crit is criterion_oracles:
                continue
            kwargs = {}
            if quick and crit is criterion_connectedness_random:
                kwargs = {"count": 10}
            if quick and crit is criterion_deformation:
                kwargs = {"trials": 20}
            r = crit(**kwargs)
            results.append(r)
            if report:
                report(r)
    kwargs = {"sets": 100, "ideals": 40} if quick else {}
    r = criterion_oracles(bases=seen, **kwargs)
    results.append(r)
    if report:
        report(r)
    return sorted(results, key=lambda r: r.number)
