from collections import Counter

import pytest

from unitsep import config
from unitsep.catalog import decomposition_counts
from unitsep.classify import DivisionCriterion, VerdictValue
from unitsep.errors import GroupTooLarge
from unitsep.presentations import Atom, parse_presentation_file, parse_spec
from unitsep.report import AnalysisReport, analyze, factorize


def test_trivial_group(settings):
    report = analyze("C1", settings)
    assert report.group.order == 1
    assert report.decomposition == "Q"
    assert report.verdict.value is VerdictValue.subgroup_separable
    assert report.theorem_membership is None
    assert report.schema_version == "1"


def test_dihedral_group_of_order_eight(settings):
    report = analyze("D8", settings)
    assert report.group.route == "materialized"
    assert report.group.abelian_invariants == [2, 2]
    assert report.group.center_order == 2
    assert decomposition_counts(report.decomposition) == Counter({"Q": 4, "M2(Q)": 1})
    assert report.verdict.value is VerdictValue.subgroup_separable
    assert report.verdict.order == "M2(Z)"
    assert report.verdict.non_vc == ["M2(Q)"]
    assert report.theorem_membership == "D8"
    assert report.oracle.ran
    assert report.oracle.components == 5


def test_extraspecial_group_is_open(settings):
    report = analyze("D8YQ8", settings)
    assert report.group.order == 32
    assert decomposition_counts(report.decomposition) == Counter({"Q": 16, "M2(H(Q))": 1})
    assert report.verdict.value is VerdictValue.open_case
    assert report.verdict.order == "M2(H(Z))"
    assert report.theorem_membership == "D8YQ8"


def test_component_fields(settings):
    report = analyze("Q8", settings)
    hamilton = next(c for c in report.components if c.division_kind == "quaternion")
    assert hamilton.name == "H(Q)"
    assert hamilton.pretty == "ℍ(ℚ)"
    assert hamilton.status == "division"
    assert hamilton.tier == "totally definite"
    assert hamilton.vc is True
    assert hamilton.q_dimension == 4
    assert hamilton.classes == ["TotallyDefiniteQuaternion"]


def test_factorized_route(settings):
    report = analyze("Q8 x C7", settings)
    assert report.group.route == "factorized"
    assert report.group.core == "Q8"
    assert report.group.abelian_factor == [7]
    assert report.group.order == 56
    assert decomposition_counts(report.decomposition) == Counter(
        {"Q": 4, "H(Q)": 1, "Q(zeta7)": 4, "H(Q(zeta7))": 1}
    )
    assert report.verdict.value is VerdictValue.open_case
    assert report.oracle.factorized
    assert report.oracle.components == 10


def test_large_elementary_factor_is_never_materialised(settings):
    report = analyze("Q8 x C2^10", settings)
    assert report.group.order == 8192
    assert report.verdict.value is VerdictValue.subgroup_separable
    assert decomposition_counts(report.decomposition) == Counter({"Q": 4096, "H(Q)": 1024})
    assert report.theorem_membership == "Q8×C2^n"


def test_group_above_max_order_without_abelian_factor(settings):
    with pytest.raises(GroupTooLarge):
        analyze("Q8 x Q8 x Q8", settings)


def test_factorize():
    assert factorize(parse_spec("Q8 x C7"), 32) == (parse_spec("Q8"), [7])
    assert factorize(parse_spec("Q8 x C7"), 64) is None
    assert factorize(parse_spec("D8"), 1) is None
    assert factorize(parse_spec("C2^6"), 32) == (Atom("C", 1), [2] * 6)


def test_criteria_change_the_verdict_at_73(settings):
    local = analyze("Q8 x C73", settings)
    assert local.verdict.value is VerdictValue.open_case
    assert local.criterion_disagreements == ["H(Q(zeta73)): division (other criterion: split)"]
    paper = analyze("Q8 x C73", config.override(settings, division_criterion=DivisionCriterion.paper))
    assert paper.verdict.value is VerdictValue.not_subgroup_separable
    assert paper.flags["division_criterion"] == "paper"


def test_two_non_vc_components(settings):
    report = analyze("sdp(3,8,2)", settings)
    assert report.verdict.value is VerdictValue.not_subgroup_separable
    assert len(report.verdict.non_vc) == 2
    assert "M2(Q)" in report.verdict.non_vc
    assert decomposition_counts(report.decomposition)["(i,-3/Q(i))"] == 1


def test_derived_placement_flag(settings):
    assert analyze("Q12", settings).derived_placement
    assert not analyze("D6", settings).derived_placement


def test_oracle_can_be_switched_off(settings):
    report = analyze("Q16", config.override(settings, oracle=False))
    assert not report.oracle.ran
    assert report.flags["oracle"] is False


def test_bianchi_flag_is_recorded(settings):
    report = analyze("D8", config.override(settings, bianchi_extension=True))
    assert report.flags["bianchi_extension"] is True


def test_presentation_file_input(settings):
    text = "gens: a b\na^4 = 1, a^2 = b^2\nb^-1 a b = a^-1\n"
    report = analyze(parse_presentation_file(text), settings)
    assert report.group.order == 8
    assert report.theorem_membership == "Q8×C2^n"


def test_json_round_trip_and_determinism(settings):
    first = analyze("Q12", settings)
    restored = AnalysisReport.model_validate_json(first.model_dump_json())
    assert restored == first
    assert analyze("Q12", settings).model_dump_json() == first.model_dump_json()
