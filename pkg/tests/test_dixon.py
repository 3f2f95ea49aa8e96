import pytest

from unitsep import groups
from unitsep.dixon import (
    dixon_character_table,
    dixon_prime,
    oracle_crosscheck,
    oracle_crosscheck_factorized,
)
from unitsep.errors import OracleMismatch
from unitsep.wedderburn import decomposition, tensor_with_abelian


@pytest.mark.parametrize("order, exponent, prime", [(8, 4, 13), (6, 6, 7), (1, 1, 3), (16, 8, 17)])
def test_dixon_prime(order, exponent, prime):
    assert dixon_prime(order, exponent) == prime


def test_character_degrees():
    assert dixon_character_table(groups.dihedral(8)).degrees == (1, 1, 1, 1, 2)
    assert dixon_character_table(groups.dihedral(6)).degrees == (1, 1, 2)
    assert dixon_character_table(groups.cyclic(5)).degrees == (1,) * 5


def test_rational_orbits():
    # the four faithful characters of C5 form one orbit
    table = dixon_character_table(groups.cyclic(5))
    assert sorted(len(m) for m in table.orbit_members.values()) == [1, 4]


def test_crosscheck_agrees_with_decomposition():
    G = groups.dicyclic(8)
    result = oracle_crosscheck(G, decomposition(G))
    assert result.components == result.rational_orbits == result.cyclotomic_classes == 5
    assert result.dimensions == (1, 1, 1, 1, 4)
    assert not result.factorized


def test_crosscheck_of_product_without_building_it():
    core = groups.dicyclic(8)
    components = tensor_with_abelian(decomposition(core), [7])
    result = oracle_crosscheck_factorized(core, [7], components)
    assert result.factorized
    assert result.components == result.rational_orbits == 10
    assert sum(result.dimensions) == 56


def test_crosscheck_catches_missing_component():
    G = groups.dihedral(8)
    with pytest.raises(OracleMismatch):
        oracle_crosscheck(G, decomposition(G)[:-1])
