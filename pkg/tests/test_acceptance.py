"""Acceptance criteria 1-8, each at its stated time limit.

Every Groebner basis computed while this module runs is collected and handed
to criterion 7, which re-checks each one with the S-pair oracle; it therefore
runs last.
"""
import pytest

from gdc import suites
from gdc.groebner import track_bases

RESULTS = []


@pytest.fixture(scope="module")
def seen_bases():
    with track_bases() as seen:
        yield seen


def _check(result):
    RESULTS.append(result)
    print(result.line())
    assert result.passed, "; ".join(result.failures[:5])
    assert result.within_time, f"took {result.elapsed:.1f}s, limit {result.limit:.0f}s"


@pytest.mark.parametrize("criterion", [suites.criterion_conca, suites.criterion_patty,
                                       suites.criterion_es, suites.criterion_connectedness_random,
                                       suites.criterion_ks, suites.criterion_deformation,
                                       suites.criterion_weights],
                         ids=lambda c: c.__name__.replace("criterion_", ""))
def test_criterion(criterion, seen_bases):
    _check(criterion())


def test_criterion_oracles_on_all_bases(seen_bases):
    assert seen_bases, "no bases were tracked"
    _check(suites.criterion_oracles(bases=list(seen_bases)))
