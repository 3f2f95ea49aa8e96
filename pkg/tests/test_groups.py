import numpy as np
import pytest

from unitsep import groups
from unitsep.errors import BadAction, BadParameter, GroupTooLarge, NoInverse, NotASubgroup, NotNormal


def test_cyclic_basics():
    G = groups.cyclic(6)
    assert G.order == 6
    assert G.is_abelian
    assert groups.exponent(G) == 6
    assert sorted(G.orders.tolist()) == [1, 2, 3, 3, 6, 6]


def test_identity_is_moved_to_zero():
    # identity stored at index 1
    G = groups.FiniteGroup([[1, 0], [0, 1]])
    assert G.order == 2
    assert G.mul[0].tolist() == [0, 1]


def test_table_without_inverses_is_rejected():
    with pytest.raises(NoInverse):
        groups.FiniteGroup([[0, 1], [1, 1]])


def test_bad_constructor_parameters():
    with pytest.raises(BadParameter):
        groups.dihedral(7)
    with pytest.raises(BadParameter):
        groups.dicyclic(6)
    with pytest.raises(BadAction):
        groups.semidirect_cyclic(4, 2, 2)


def test_semidirect_relation():
    G = groups.semidirect_cyclic(3, 8, 2)
    assert G.order == 24
    a = G.generators["a"]
    conjugated = G.evaluate((("b", 1), ("a", 1), ("b", -1)))
    assert conjugated == G.power(a, 2)


def test_dihedral_structure():
    G = groups.dihedral(8)
    assert len(groups.conjugacy_classes(G)) == 5
    assert groups.center(G).order == 2
    assert groups.derived_subgroup(G).order == 2
    assert groups.abelian_invariants(G) == (2, 2)
    assert len(groups.subgroups(G)) == 10
    assert len(groups.normal_subgroups(G)) == 6


def test_quaternion_structure():
    Q8 = groups.dicyclic(8)
    assert sorted(Q8.orders.tolist()) == [1, 2, 4, 4, 4, 4, 4, 4]
    assert len(groups.subgroups(Q8)) == 6
    assert len(groups.normal_subgroups(Q8)) == 6
    assert Q8.orders[groups.central_involution(Q8)] == 2


def test_isomorphism_witness():
    assert groups.is_isomorphic(groups.dihedral(8), groups.dicyclic(8)) is None
    phi = groups.is_isomorphic(groups.dicyclic(4), groups.cyclic(4))
    assert phi is not None
    assert sorted(phi.tolist()) == [0, 1, 2, 3]
    assert groups.is_isomorphic(groups.semidirect_cyclic(3, 2, -1), groups.dihedral(6)) is not None


def test_quotient_by_center():
    G = groups.dihedral(8)
    Q = groups.quotient(G, groups.center(G))
    klein = groups.direct_product(groups.cyclic(2), groups.cyclic(2))
    assert groups.is_isomorphic(Q, klein) is not None


def test_quotient_needs_normal_subgroup():
    G = groups.dihedral(6)
    S = groups.generated(G, [G.generators["b"]])
    with pytest.raises(NotNormal):
        groups.quotient(G, S)


def test_central_product_order():
    D8, Q8 = groups.dihedral(8), groups.dicyclic(8)
    P = groups.central_product(D8, groups.central_involution(D8), Q8, groups.central_involution(Q8))
    assert P.order == 32
    assert groups.center(P).order == 2


def test_from_members_checks_closure():
    G = groups.cyclic(6)
    assert groups.from_members(G, [0, 2, 4]).order == 3
    with pytest.raises(NotASubgroup):
        groups.from_members(G, [0, 1])


def test_subgroup_lattice_limit():
    with pytest.raises(GroupTooLarge):
        groups.subgroups(groups.cyclic(12), max_order=8)


@pytest.mark.parametrize("n", [1, 6, 8, 12, 30])
def test_cyclotomic_classes_of_cyclic_groups(n):
    from sympy import divisor_count

    assert len(groups.cyclotomic_classes(groups.cyclic(n))) == divisor_count(n)


def test_from_permutations_builds_s3():
    S3 = groups.from_permutations([(1, 0, 2), (1, 2, 0)], "S3")
    assert S3.order == 6
    assert groups.is_isomorphic(S3, groups.dihedral(6)) is not None


def test_conjugation_convention():
    G = groups.dihedral(8)
    g, x = G.generators["b"], G.generators["a"]
    assert G.conjugation[g, x] == G.mul[G.mul[G.inv[g], x], g]
    assert np.array_equal(G.conjugation[0], np.arange(G.order))
