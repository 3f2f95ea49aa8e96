from collections import Counter

import pytest

from unitsep.catalog import (
    Family,
    Provenance,
    catalog,
    cyclic_decomposition,
    decomposition_counts,
    dihedral_decomposition,
    find_entry,
    format_decomposition,
    generalized_quaternion_decomposition,
)
from unitsep.classify import VerdictValue
from unitsep.presentations import parse_spec, print_spec


def test_format_decomposition():
    assert format_decomposition(["Q", "Q", "Q", "Q", "M2(Q)"]) == "4Q + M2(Q)"
    assert format_decomposition(["H(Q)", "Q", "H(Q)"]) == "2H(Q) + Q"
    assert format_decomposition([]) == ""


def test_decomposition_counts():
    assert decomposition_counts("16Q + M2(H(Q))") == Counter({"Q": 16, "M2(H(Q))": 1})
    assert decomposition_counts("2M2(Q) + Q(zeta7)") == Counter({"M2(Q)": 2, "Q(zeta7)": 1})


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, "Q"),
        (4, "2Q + Q(i)"),
        (6, "2Q + 2Q(sqrt-3)"),
        (7, "Q + Q(zeta7)"),
    ],
)
def test_cyclic_formula(n, expected):
    assert cyclic_decomposition(n) == expected


@pytest.mark.parametrize(
    "m, expected",
    [
        (2, "2Q"),
        (6, "2Q + M2(Q)"),
        (8, "4Q + M2(Q)"),
        (10, "2Q + M2(Q(sqrt5))"),
        (12, "4Q + 2M2(Q)"),
        (16, "4Q + M2(Q) + M2(Q(sqrt2))"),
    ],
)
def test_dihedral_formula(m, expected):
    assert dihedral_decomposition(m) == expected


def test_generalized_quaternion_formula():
    assert generalized_quaternion_decomposition(8) == "4Q + H(Q)"
    assert generalized_quaternion_decomposition(16) == "4Q + M2(Q) + H(Q(sqrt2))"
    assert generalized_quaternion_decomposition(32) == (
        "4Q + M2(Q) + M2(Q(sqrt2)) + H(Q(zeta16+zeta16^-1))"
    )


def test_catalog_size_and_uniqueness():
    entries = catalog()
    specs = [e.spec for e in entries]
    assert len(entries) >= 85
    assert len(specs) == len(set(specs))


def test_first_entry_wins():
    entry = find_entry("D8")
    assert entry.family is Family.theorem
    assert Provenance.theorem in entry.provenance
    assert find_entry("Q8 x C7").expected_verdict is VerdictValue.open_case
    assert find_entry("no such group") is None


def test_elementary_family():
    entry = find_entry("Q8 x C2^10")
    assert entry.expected_verdict is VerdictValue.subgroup_separable
    assert decomposition_counts(entry.expected_decomposition) == Counter({"Q": 4096, "H(Q)": 1024})


def test_sweep_verdicts():
    assert find_entry("D10").expected_verdict is VerdictValue.not_subgroup_separable
    assert find_entry("C30").expected_verdict is VerdictValue.subgroup_separable
    assert find_entry("Q8 x C5").family is Family.auxiliary
    assert find_entry("Q8 x C13").expected_verdict is VerdictValue.not_subgroup_separable


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.spec)
def test_every_entry_parses(entry):
    node = parse_spec(entry.spec)
    assert parse_spec(print_spec(node)) == node


def test_expected_dimensions_are_consistent():
    # Q-dimension of each name: n^2 times the center degree, times 4 for quaternion parts
    dims = {"Q": 1, "Q(i)": 2, "M2(Q)": 4, "H(Q)": 4, "M2(Q(i))": 8, "M2(H(Q))": 16}
    for spec, order in (("D8", 8), ("DD", 16), ("D16+", 16), ("D8YQ8", 32)):
        counts = decomposition_counts(find_entry(spec).expected_decomposition)
        assert sum(dims[name] * n for name, n in counts.items()) == order
