"""
character table oracle by Dixon's modular method.

class matrices are diagonalised simultaneously over F_q for a prime
q = 1 mod exponent(G), q > 2 sqrt|G|. the rows recover the irreducible
characters modulo q; rational classes are the orbits of the power maps.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import gcd, isqrt, lcm

import numpy as np
from sympy import FiniteField, Poly, Symbol, nextprime, sqrt_mod
from sympy.polys.matrices import DomainMatrix

from . import groups
from .errors import OracleMismatch
from .fields import units
from .groups import FiniteGroup
from .wedderburn import SimpleComponent, abelian_decomposition, elements_of_order

logger = logging.getLogger(__name__)


def dixon_prime(order: int, exponent: int) -> int:
    """the smallest prime q > 2 sqrt|G| with q = 1 mod exponent"""
    if order == 1:
        return 3
    # isqrt(4n) < q forces q > 2 sqrt(n)
    q = isqrt(4 * order)
    while True:
        q = nextprime(q)
        if q % exponent == 1:
            return q


def class_matrix(G: FiniteGroup, r: int) -> list[list[int]]:
    """M[s][t] = #{x in C_r : x^-1 g_s in C_t}, g_s the class representatives"""
    classes = groups.conjugacy_classes(G)
    members = np.array(classes[r].members)
    rows = []
    for cls in classes:
        hits = G.class_index[G.mul[G.inv[members], cls.representative]]
        rows.append(np.bincount(hits, minlength=len(classes)).tolist())
    return rows


def eigenspace_decomposition(A: DomainMatrix) -> list[DomainMatrix]:
    """left eigenspaces of A over its ground field, as row bases"""
    A = A.transpose()
    Fq = A.domain
    charpoly = Poly(A.charpoly(), Symbol("x"), domain=Fq)
    spaces = []
    for z in charpoly.ground_roots():
        z = Fq(z)
        B = A - A.diag([z] * A.shape[0], Fq)
        basis, _ = B.nullspace().rref()
        spaces.append(basis)
    return spaces


def refine_spaces(spaces: list[DomainMatrix], M: DomainMatrix) -> list[DomainMatrix]:
    refined = []
    for S in spaces:
        if S.shape[0] <= 1:
            refined.append(S)
            continue
        _, pivots = S.rref()
        restricted = M.extract(range(S.shape[1]), pivots)
        for sub in eigenspace_decomposition(S * restricted):
            refined.append(sub * S)
    return refined


def common_eigenvectors(G: FiniteGroup, Fq) -> DomainMatrix:
    n = len(groups.conjugacy_classes(G))
    matrices = (DomainMatrix.from_list(class_matrix(G, r), Fq) for r in range(n))
    spaces = [DomainMatrix.eye(n, Fq)]
    for M in matrices:
        if len(spaces) == n:
            break
        spaces = refine_spaces(spaces, M)
    if len(spaces) != n:
        raise OracleMismatch(G.label, f"class matrices split into {len(spaces)} of {n} eigenspaces")
    return DomainMatrix.vstack(*spaces)


@dataclass(frozen=True)
class CharacterTable:
    """irreducible characters of G modulo a prime, with their rational orbits"""

    group: FiniteGroup
    prime: int
    degrees: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]

    @property
    def characters(self) -> list[tuple[int, int]]:
        """(degree, rational orbit id) per irreducible character"""
        return list(zip(self.degrees, self.orbits, strict=True))

    @cached_property
    def orbit_members(self) -> dict[int, list[int]]:
        members: dict[int, list[int]] = {}
        for i, orbit in enumerate(self.orbits):
            members.setdefault(orbit, []).append(i)
        return members

    def power_permutation(self, t: int) -> list[int]:
        """the character index of chi o (g -> g^t) for every chi"""
        G = self.group
        classes = groups.conjugacy_classes(G)
        image = [int(G.class_index[G.power(c.representative, t)]) for c in classes]
        position = {row: i for i, row in enumerate(self.values)}
        return [position[tuple(row[s] for s in image)] for row in self.values]

    def orbit_idempotent(self, orbit: int) -> list[int]:
        """e_O(g_s) mod q on the class representatives"""
        G = self.group
        q = self.prime
        classes = groups.conjugacy_classes(G)
        inverse = [int(G.class_index[G.inv[c.representative]]) for c in classes]
        scale = pow(G.order, -1, q)
        return [
            sum(self.degrees[i] * self.values[i][inverse[s]] for i in self.orbit_members[orbit])
            * scale % q
            for s in range(len(classes))
        ]


def dixon_character_table(G: FiniteGroup) -> CharacterTable:
    classes = groups.conjugacy_classes(G)
    n = len(classes)
    exponent = groups.exponent(G)
    q = dixon_prime(G.order, exponent)
    Fq = FiniteField(q)
    logger.debug("character table of %s over F_%d", G.label, q)
    rows = common_eigenvectors(G, Fq).to_list()
    sizes = [c.size for c in classes]
    inverse = [int(G.class_index[G.inv[c.representative]]) for c in classes]

    degrees, values = [], []
    for row in rows:
        omega = [Fq.to_int(x) % q for x in row]
        head = pow(omega[0], -1, q)
        # central character omega_s = |C_s| chi(g_s) / chi(1)
        theta = [w * head * pow(sizes[s], -1, q) % q for s, w in enumerate(omega)]
        dot = sum(sizes[s] * theta[s] * theta[inverse[s]] for s in range(n)) % q
        square = G.order * pow(dot, -1, q) % q
        root = sqrt_mod(square, q)
        if root is None:
            raise OracleMismatch(G.label, f"{square} has no square root modulo {q}")
        d = min(root, q - root)
        degrees.append(d)
        values.append(tuple(t * d % q for t in theta))

    order = sorted(range(n), key=lambda i: (degrees[i], values[i]))
    table = CharacterTable(
        G, q, tuple(degrees[i] for i in order), tuple(values[i] for i in order), tuple(range(n))
    )
    if sum(d * d for d in table.degrees) != G.order:
        raise OracleMismatch(G.label, "squared degrees do not sum to the group order")

    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for t in units(exponent):
        for i, j in enumerate(table.power_permutation(t)):
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return CharacterTable(G, q, table.degrees, table.values, tuple(find(i) for i in range(n)))


@dataclass(frozen=True)
class CrosscheckResult:
    components: int
    rational_orbits: int
    cyclotomic_classes: int
    prime: int
    dimensions: tuple[int, ...]
    factorized: bool = False


def _class_values_mod(component: SimpleComponent, G: FiniteGroup, q: int) -> list[int] | None:
    pair = component.provenance
    if pair is None:
        return None
    e = pair.idempotent
    scale = pow(e.den, -1, q)
    return [int(e.num[c.representative]) * scale % q for c in groups.conjugacy_classes(G)]


def oracle_crosscheck(G: FiniteGroup, components: list[SimpleComponent]) -> CrosscheckResult:
    """matches every component to a rational character orbit of the same dimension"""
    table = dixon_character_table(G)
    cyclotomic = len(groups.cyclotomic_classes(G))
    orbits = table.orbit_members
    if not len(components) == len(orbits) == cyclotomic:
        raise OracleMismatch(
            G.label,
            f"{len(components)} components, {len(orbits)} rational orbits, "
            f"{cyclotomic} cyclotomic classes",
        )
    idempotents = {o: table.orbit_idempotent(o) for o in orbits}
    unmatched = set(orbits)
    for c in components:
        values = _class_values_mod(c, G, table.prime)
        match = next((o for o in unmatched if idempotents[o] == values), None)
        if match is None:
            raise OracleMismatch(c.name, "no rational character orbit has the same idempotent")
        unmatched.discard(match)
        members = orbits[match]
        expected = len(members) * table.degrees[members[0]] ** 2
        if c.q_dimension != expected:
            raise OracleMismatch(
                c.name, f"dimension {c.q_dimension}, orbit size x degree^2 = {expected}"
            )
    if sum(c.q_dimension for c in components) != G.order:
        raise OracleMismatch(G.label, "component dimensions do not sum to the group order")
    return CrosscheckResult(
        len(components), len(orbits), cyclotomic, table.prime,
        tuple(sorted(c.q_dimension for c in components)),
    )


def _fixes(perm: list[int]) -> int:
    return sum(1 for i, j in enumerate(perm) if i == j)


def oracle_crosscheck_factorized(
    core: FiniteGroup, invariants: list[int], components: list[SimpleComponent]
) -> CrosscheckResult:
    """the same checks for core x A with A abelian, without building the product"""
    table = dixon_character_table(core)
    exp_core = groups.exponent(core)
    exp_abelian = lcm(*invariants) if invariants else 1
    m = lcm(exp_core, exp_abelian)
    gamma = units(m)
    perms = {t: table.power_permutation(t % exp_core) for t in gamma}

    # rational classes of core x A by counting fixed characters
    fixed = 0
    for t in gamma:
        count = 1
        for n in invariants:
            count *= gcd(t - 1, n)
        fixed += _fixes(perms[t]) * count
    rational = fixed // len(gamma)

    expected: list[int] = []
    for orbit in table.orbit_members.values():
        chi = orbit[0]
        stabilizer = [t for t in gamma if perms[t][chi] == chi]
        for d in abelian_decomposition(invariants):
            pairs = len(orbit) * elements_of_order(invariants, d)
            joint = sum(1 for t in stabilizer if (t - 1) % d == 0)
            size = len(gamma) // joint
            expected += [size * table.degrees[chi] ** 2] * (pairs // size)

    order = core.order
    for n in invariants:
        order *= n
    dims = sorted(c.q_dimension for c in components)
    if not len(components) == rational == len(expected):
        raise OracleMismatch(
            f"{core.label} x A",
            f"{len(components)} components, {rational} rational classes, {len(expected)} orbits",
        )
    if dims != sorted(expected):
        diff = Counter(dims) - Counter(expected)
        raise OracleMismatch(f"{core.label} x A", f"unexpected component dimensions {sorted(diff)}")
    if sum(dims) != order:
        raise OracleMismatch(f"{core.label} x A", "component dimensions do not sum to the group order")
    return CrosscheckResult(len(components), rational, rational, table.prime, tuple(dims), True)
