import os
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from gdc.poly import Polynomial, RingContext

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

XYZ = RingContext.of("x y z")


def exponents(n=3, max_exp=4):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def rationals(bound=5):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 4))


def polynomials(ctx=XYZ, max_terms=4, max_exp=3):
    return st.lists(st.tuples(exponents(ctx.n, max_exp), rationals()), max_size=max_terms).map(
        lambda terms: Polynomial(ctx, terms))


def nonzero_polynomials(ctx=XYZ, **kw):
    return polynomials(ctx, **kw).filter(lambda f: not f.is_zero())


def weights(n=3, low=0, high=6):
    return st.tuples(*[st.integers(low, high)] * n)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in sorted(RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(r.line())
