import pytest

from unitsep import groups
from unitsep.classify import (
    HAMILTONIAN_2,
    HAMILTONIAN_P,
    ComponentClass,
    DivisionCriterion,
    VerdictValue,
    classify_component,
    criterion_disagreements,
    decide,
    division_status,
    is_hamiltonian,
    possibilities,
    theorem_membership,
    theorem_membership_factorized,
    verdict,
)
from unitsep.fields import AbelianFieldDescriptor, Cyclotomic, DivisionStatus, QuaternionSymbol
from unitsep.wedderburn import (
    CrossedProductDescriptor,
    QuaternionPart,
    SimpleComponent,
    TrivialField,
    UnresolvedCrossedProduct,
)

Q = AbelianFieldDescriptor.rationals()
QUADRATIC = AbelianFieldDescriptor.quadratic_field


def symbol(F, u=-1, c=-1):
    return QuaternionSymbol(F, Cyclotomic.coerce(u), Cyclotomic.coerce(c))


def field(F=Q):
    return SimpleComponent(1, F, TrivialField(), F.degree)


def matrix(F=Q, n=2):
    return SimpleComponent(n, F, TrivialField(), n * n * F.degree)


def quaternion(F=Q, n=1, status=DivisionStatus.division, u=-1, c=-1):
    return SimpleComponent(n, F, QuaternionPart(symbol(F, u, c), status), 4 * n * n * F.degree)


def unresolved():
    table = tuple(tuple((a + b) % 4 for b in range(4)) for a in range(4))
    cp = CrossedProductDescriptor(5, (1, 2, 4, 3), table, ((0,) * 4,) * 4)
    return SimpleComponent(1, Q, UnresolvedCrossedProduct(cp), 16)


# division and split


def test_hamilton_quaternions_over_q_are_totally_definite():
    assert division_status(symbol(Q)) == (DivisionStatus.division, "totally definite", None)


def test_square_entry_splits():
    status, tier, _ = division_status(symbol(AbelianFieldDescriptor.cyclotomic(4)))
    assert (status, tier) == (DivisionStatus.split, "square entry")


@pytest.mark.parametrize(
    "u, c, status",
    [(2, 3, DivisionStatus.division), (-1, 2, DivisionStatus.split), (-1, 3, DivisionStatus.division)],
)
def test_hilbert_symbols_decide_over_q(u, c, status):
    result, tier, _ = division_status(symbol(Q, u, c))
    assert result is status
    assert tier == "hilbert symbols over Q"


@pytest.mark.parametrize("p, status", [(3, "split"), (5, "split"), (7, "division"), (23, "division"), (17, "split")])
def test_hamilton_over_cyclotomic_fields(p, status):
    result, tier, alternative = division_status(symbol(AbelianFieldDescriptor.cyclotomic(p)))
    assert result.value == status
    assert tier == "residue degree of 2"
    assert alternative is None


def test_criteria_disagree_at_73():
    F = AbelianFieldDescriptor.cyclotomic(73)
    assert division_status(symbol(F)) == (
        DivisionStatus.division, "residue degree of 2", DivisionStatus.split,
    )
    assert division_status(symbol(F), DivisionCriterion.paper) == (
        DivisionStatus.split, "n = -1 mod 8 criterion", DivisionStatus.division,
    )


def test_real_center_is_totally_definite():
    F = AbelianFieldDescriptor.real_cyclotomic(5)
    assert division_status(symbol(F))[:2] == (DivisionStatus.division, "totally definite")


def test_undecided_symbols_stay_unknown():
    assert division_status(symbol(QUADRATIC(-2))) == (DivisionStatus.unknown, "undecided", None)


def test_decide_fills_in_quaternion_parts():
    c = decide(quaternion(status=DivisionStatus.unknown))
    assert c.division_part.status is DivisionStatus.division
    assert decide(field()) == field()


def test_criterion_disagreements():
    c = decide(quaternion(AbelianFieldDescriptor.cyclotomic(73), status=DivisionStatus.unknown))
    assert criterion_disagreements([c, field()]) == [
        "H(Q(zeta73)): division (other criterion: split)"
    ]


# classification


@pytest.mark.parametrize(
    "component, cls",
    [
        (field(), ComponentClass.field),
        (field(AbelianFieldDescriptor.cyclotomic(7)), ComponentClass.field),
        (matrix(), ComponentClass.matrix_over_field),
        (quaternion(), ComponentClass.totally_definite_quaternion),
        (quaternion(u=-1, c=-3), ComponentClass.totally_definite_quaternion),
        (quaternion(n=2), ComponentClass.matrix_over_quaternion),
        (quaternion(AbelianFieldDescriptor.cyclotomic(7)), ComponentClass.division_quaternion_not_td),
        (quaternion(status=DivisionStatus.split), ComponentClass.matrix_over_field),
        (unresolved(), ComponentClass.unresolved),
    ],
)
def test_component_classes(component, cls):
    assert classify_component(component) is cls


def test_split_quaternion_reads_as_matrix_algebra():
    c = quaternion(QUADRATIC(-3), status=DivisionStatus.split)
    assert c.effective_degree == 2
    assert c.name == "M2(Q(sqrt-3))"


def test_unknown_status_has_two_possibilities():
    options = possibilities(quaternion(status=DivisionStatus.unknown))
    assert [cls for _, cls in options] == [
        ComponentClass.matrix_over_field, ComponentClass.totally_definite_quaternion,
    ]


# verdicts


def test_only_vc_components_are_separable():
    v = verdict([field(), field(QUADRATIC(-3)), quaternion()])
    assert v.value is VerdictValue.subgroup_separable
    assert v.non_vc == ()


def test_two_non_vc_components_are_not_separable():
    v = verdict([field(), matrix(), matrix(AbelianFieldDescriptor.cyclotomic(4))])
    assert v.value is VerdictValue.not_subgroup_separable
    assert len(v.non_vc) == 2


@pytest.mark.parametrize(
    "component, value, order",
    [
        (matrix(), VerdictValue.subgroup_separable, "M2(Z)"),
        (matrix(QUADRATIC(-3)), VerdictValue.subgroup_separable, "M2(Z[sqrt-3])"),
        (matrix(QUADRATIC(-1)), VerdictValue.subgroup_separable, "M2(Z[i])"),
        (quaternion(n=2), VerdictValue.open_case, "M2(H(Z))"),
        (quaternion(AbelianFieldDescriptor.cyclotomic(7)), VerdictValue.open_case, "H(Z[zeta_p])"),
    ],
)
def test_single_non_vc_component_with_known_order(component, value, order):
    v = verdict([field(), component])
    assert v.value is value
    assert v.known_order.order == order


@pytest.mark.parametrize(
    "component",
    [matrix(n=3), matrix(QUADRATIC(2)), quaternion(QUADRATIC(-3), n=2)],
)
def test_wrong_shape_is_not_separable(component):
    assert verdict([field(), component]).value is VerdictValue.not_subgroup_separable


@pytest.mark.parametrize("d", [-2, -7])
def test_other_imaginary_quadratic_fields_need_bianchi(d):
    components = [field(), matrix(QUADRATIC(d))]
    assert verdict(components).value is VerdictValue.undetermined
    v = verdict(components, bianchi=True)
    assert v.value is VerdictValue.subgroup_separable
    assert v.known_order.order == "M2(O_d)"


def test_unresolved_non_vc_component_is_undetermined():
    assert verdict([field(), unresolved()]).value is VerdictValue.undetermined


def test_unknown_statuses_that_change_the_verdict():
    c = quaternion(AbelianFieldDescriptor.cyclotomic(7), status=DivisionStatus.unknown)
    v = verdict([field(), c])
    assert v.value is VerdictValue.undetermined
    assert "OpenCase" in v.reasons[0]


def test_unknown_statuses_that_agree():
    # split gives a second M2 component, division a non-TD one: NotSS either way
    c = quaternion(QUADRATIC(-2), status=DivisionStatus.unknown)
    v = verdict([matrix(), c])
    assert v.value is VerdictValue.not_subgroup_separable


# theorem membership


def test_membership_by_isomorphism():
    assert theorem_membership(groups.dihedral(8)) == "D8"
    assert theorem_membership(groups.dihedral(6)) == "D6"
    assert theorem_membership(groups.dicyclic(16)) == "Q16"
    assert theorem_membership(groups.dihedral(16)) is None
    assert theorem_membership(groups.cyclic(8)) is None


def test_hamiltonian_groups():
    Q8 = groups.dicyclic(8)
    assert is_hamiltonian(Q8)
    assert not is_hamiltonian(groups.dihedral(8))
    assert theorem_membership(Q8) == HAMILTONIAN_2
    assert theorem_membership(groups.direct_product(Q8, groups.cyclic(2))) == HAMILTONIAN_2


def test_membership_from_factors():
    Q8 = groups.dicyclic(8)
    assert theorem_membership_factorized(Q8, [2, 2, 2]) == HAMILTONIAN_2
    assert theorem_membership_factorized(Q8, [7]) == HAMILTONIAN_P
    assert theorem_membership_factorized(Q8, [3]) == "Q8×C3"
    assert theorem_membership_factorized(Q8, [5]) is None
    assert theorem_membership_factorized(groups.dihedral(8), [2]) is None
