import pytest

from unitsep.catalog import ORDER_18, catalog, find_entry
from unitsep.suite import (
    Claim,
    SuiteResult,
    division_claims,
    entry_claims,
    evaluate_catalog,
    evaluate_entry,
    presentation_claims,
    reciprocity_claim,
    run_suite,
)

THEOREM_CORE = [
    "D6", "D8", "Q12", "sdp(4,4,3)", "DD", "D16+", "Q16", "Q8 x C3", "Q8 x C4", "D8YQ8",
    "Q8", "Q8 x C2^5", "Q8 x C7",
]
AUXILIARY = [ORDER_18, "sdp(3,8,2)", "D16", "D16-", "Hn(1)", "Q8 x C5", "sdp(4,4,3) / <a^2 b^2>"]


def failures(claims):
    return [(c.name, c.computed, c.expected) for c in claims if c.passed is False]


@pytest.mark.parametrize("spec", THEOREM_CORE + AUXILIARY)
def test_catalog_entry_claims(settings, spec):
    outcome = evaluate_entry(find_entry(spec), settings)
    assert outcome.error is None
    assert failures(entry_claims(outcome)) == []


def test_division_claims(settings):
    claims = division_claims(settings)
    assert failures(claims) == []
    reported = [c for c in claims if c.passed is None]
    assert len(reported) == 1
    assert "73" in reported[0].name


def test_presentation_claims(settings):
    assert failures(presentation_claims(settings)) == []


def test_reciprocity(settings):
    claim = reciprocity_claim(settings, pairs=100)
    assert claim.passed, claim.computed


def test_suite_result_counts_only_mismatches():
    result = SuiteResult(
        [Claim("a", "x", "1", "1", True), Claim("b", "x", "?", "reported", None)]
    )
    assert result.ok
    result = SuiteResult([Claim("c", "x", "1", "2", False)])
    assert not result.ok
    assert len(result.mismatches) == 1


def test_parallel_evaluation_keeps_order(settings):
    entries = [find_entry(s) for s in ("C2", "D8", "Q8")]
    outcomes = evaluate_catalog(settings.model_copy(update={"workers": 2}), entries)
    assert [o.entry.spec for o in outcomes] == ["C2", "D8", "Q8"]


@pytest.mark.slow
def test_whole_catalog(settings):
    outcomes = evaluate_catalog(settings, catalog())
    claims = [claim for o in outcomes for claim in entry_claims(o)]
    assert failures(claims) == []


@pytest.mark.slow
def test_run_suite(settings):
    result = run_suite(settings)
    assert result.ok, failures(result.claims)
