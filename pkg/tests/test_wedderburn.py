from collections import Counter
from functools import reduce

import pytest

from unitsep import groups
from unitsep.classify import decide
from unitsep.errors import NonFaithfulAction, NotACocycle, NotNormal
from unitsep.fields import AbelianFieldDescriptor
from unitsep.wedderburn import (
    CrossedProductDescriptor,
    GroupAlgebraElement,
    TrivialField,
    abelian_decomposition,
    crossed_product,
    decomposition,
    elements_of_order,
    epsilon,
    identify,
    is_strong_shoda_pair,
    simple_component,
    strong_shoda_pair,
    strong_shoda_pairs,
    tensor_with_abelian,
)


def names(components):
    return Counter(decide(c).name for c in components)


def test_cyclic_group_algebra():
    assert names(decomposition(groups.cyclic(6))) == Counter({"Q": 2, "Q(sqrt-3)": 2})


def test_dihedral_components():
    assert names(decomposition(groups.dihedral(8))) == Counter({"Q": 4, "M2(Q)": 1})
    assert names(decomposition(groups.dihedral(6))) == Counter({"Q": 2, "M2(Q)": 1})


def test_quaternion_components():
    components = [decide(c) for c in decomposition(groups.dicyclic(8))]
    assert Counter(c.name for c in components) == Counter({"Q": 4, "H(Q)": 1})
    hamilton = next(c for c in components if c.name == "H(Q)")
    assert hamilton.division_part.status.value == "division"
    assert hamilton.division_part.tier == "totally definite"
    assert hamilton.q_dimension == 4


@pytest.mark.parametrize("G", [groups.dihedral(8), groups.dicyclic(8), groups.semidirect_cyclic(3, 8, 2)])
def test_idempotents_are_complete_and_central(G):
    pairs = strong_shoda_pairs(G)
    total = reduce(lambda a, b: a + b, (p.idempotent for p in pairs))
    assert total == GroupAlgebraElement.one(G)
    for p in pairs:
        assert p.idempotent.is_idempotent()
        assert p.idempotent.is_central()
    assert sum(p.dimension for p in pairs) == G.order


def test_twists_are_cocycles():
    for p in strong_shoda_pairs(groups.dicyclic(16)):
        cp = crossed_product(p)
        assert cp.is_cocycle()
        assert len(set(cp.action)) == cp.order


def test_epsilon_needs_normal_kernel():
    G = groups.dihedral(6)
    reflection = next(g for g in range(G.order) if G.orders[g] == 2)
    K = groups.generated(G, [reflection])
    with pytest.raises(NotNormal):
        epsilon(groups.whole(G), K)


def test_component_dimensions_sum_to_order():
    G = groups.semidirect_cyclic(3, 8, 2)
    components = decomposition(G)
    assert sum(c.q_dimension for c in components) == 24
    assert len(components) == len(groups.cyclotomic_classes(G))


def test_elements_of_order():
    assert elements_of_order([4, 2], 2) == 3
    assert elements_of_order([4, 2], 4) == 4
    assert elements_of_order([7], 7) == 6


def test_abelian_decomposition():
    assert abelian_decomposition([2, 2]) == {1: 1, 2: 3}
    assert abelian_decomposition([7]) == {1: 1, 7: 1}
    assert abelian_decomposition([]) == {1: 1}
    assert abelian_decomposition([4]) == {1: 1, 2: 1, 4: 1}


def test_tensor_with_abelian_factor():
    core = decomposition(groups.dicyclic(8))
    components = [decide(c) for c in tensor_with_abelian(core, [7])]
    assert len(components) == 10
    counts = Counter(c.name for c in components)
    assert counts["Q"] == 4
    assert counts["Q(zeta7)"] == 4
    assert counts["H(Q(zeta7))"] == 1
    assert sum(c.q_dimension for c in components) == 56


def test_tensor_splits_over_larger_center():
    core = decomposition(groups.dicyclic(8))
    components = [decide(c) for c in tensor_with_abelian(core, [3])]
    counts = Counter(c.name for c in components)
    assert counts["M2(Q(sqrt-3))"] == 1
    assert counts["Q(sqrt-3)"] == 4
    hamilton = [c for c in components if c.center == AbelianFieldDescriptor.rationals() and c.q_dimension == 4]
    assert len(hamilton) == 1


def test_strong_shoda_pair_check():
    G = groups.dihedral(8)
    rotations = next(
        S for S in groups.subgroups(G) if S.order == 4 and groups.exponent(S.as_group()) == 4
    )
    trivial = groups.trivial_subgroup(G)
    assert is_strong_shoda_pair(G, rotations, trivial)
    assert not is_strong_shoda_pair(G, groups.whole(G), trivial)


Z2 = ((0, 1), (1, 0))


def test_cocycle_check():
    assert CrossedProductDescriptor(1, (1,), ((0,),), ((0,),)).is_cocycle()
    # u^2 = zeta4^2 = -1 over Q(i) with u i u^-1 = -i: the hamilton quaternions
    assert CrossedProductDescriptor(4, (1, 3), Z2, ((0, 0), (0, 2))).is_cocycle()
    assert not CrossedProductDescriptor(4, (1, 3), Z2, ((0, 1), (0, 0))).is_cocycle()


def test_identify_rejects_a_twist_that_is_not_a_cocycle():
    with pytest.raises(NotACocycle):
        identify(CrossedProductDescriptor(4, (1, 3), Z2, ((0, 1), (0, 0))))


def test_non_faithful_action_is_rejected():
    with pytest.raises(NonFaithfulAction):
        CrossedProductDescriptor(4, (1, 1), Z2, ((0, 0), (0, 0)))
    with pytest.raises(NonFaithfulAction):
        CrossedProductDescriptor(1, (1, 1), Z2, ((0, 0), (0, 0)))


def test_trivial_pair_gives_the_rationals():
    G = groups.cyclic(1)
    pair = strong_shoda_pair(G, groups.whole(G), groups.trivial_subgroup(G))
    cp = crossed_product(pair)
    assert (cp.k, cp.order) == (1, 1)
    assert cp.is_cocycle()
    assert identify(cp) == (1, TrivialField())
    assert cp.center.degree == 1
    assert decide(simple_component(G, pair)).name == "Q"


def test_kernel_pairs_of_every_group_are_cocycles():
    G = groups.dihedral(6)
    for p in strong_shoda_pairs(G):
        assert crossed_product(p).is_cocycle()
    assert any(p.index == 1 for p in strong_shoda_pairs(G))
