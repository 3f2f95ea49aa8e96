"""
wedderburn decomposition of QG through strong shoda pairs.

a strong shoda pair (H, K) gives the primitive central idempotent e(G, H, K)
and the simple component QGe = M_[G:N](Q(zeta_k) * N/H), a crossed product of
the cyclotomic field Q(zeta_k), k = [H:K], by the faithful action of N/H where
N = N_G(K). components of degree one or two over their center are identified
exactly; larger crossed products are split when the twist is a coboundary.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property, reduce
from itertools import product
from math import gcd, lcm

import numpy as np
from sympy import divisors, mobius, primefactors, totient

from . import groups
from .errors import (
    BadParameter,
    InconsistentDecomposition,
    NonFaithfulAction,
    NotACocycle,
    NotNormal,
    NotStronglyMonomial,
)
from .fields import (
    AbelianFieldDescriptor,
    Cyclotomic,
    DivisionStatus,
    QuaternionSymbol,
)
from .groups import FiniteGroup, Subgroup

logger = logging.getLogger(__name__)

COBOUNDARY_SEARCH_LIMIT = 200_000


class GroupAlgebraElement:
    """an element of QG stored as integer numerators over a common denominator"""

    __slots__ = ("group", "num", "den")

    def __init__(self, group: FiniteGroup, num: Sequence[int] | np.ndarray, den: int = 1):
        num = np.array([int(v) for v in num], dtype=object)
        if len(num) != group.order:
            raise ValueError(f"coefficient vector has length {len(num)}, expected {group.order}")
        if den == 0:
            raise ZeroDivisionError("denominator is zero")
        if den < 0:
            num, den = -num, -den
        common = reduce(gcd, num.tolist(), den)
        if common > 1:
            num = num // common
            den //= common
        self.group = group
        self.num = num
        self.den = den

    @classmethod
    def zero(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        return cls(group, [0] * group.order)

    @classmethod
    def one(cls, group: FiniteGroup) -> "GroupAlgebraElement":
        return cls.basis(group, 0)

    @classmethod
    def basis(cls, group: FiniteGroup, g: int) -> "GroupAlgebraElement":
        num = [0] * group.order
        num[g] = 1
        return cls(group, num)

    def coefficient(self, g: int) -> Fraction:
        return Fraction(int(self.num[g]), self.den)

    @property
    def support(self) -> list[int]:
        return [g for g, c in enumerate(self.num) if c]

    @property
    def is_zero(self) -> bool:
        return not any(self.num)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if other.group is not self.group:
            raise ValueError("elements live in different group algebras")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        den = lcm(self.den, other.den)
        return GroupAlgebraElement(
            self.group, self.num * (den // self.den) + other.num * (den // other.den), den
        )

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, -self.num, self.den)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + (-other)

    def __mul__(self, other: "GroupAlgebraElement | Fraction | int") -> "GroupAlgebraElement":
        if isinstance(other, int | Fraction):
            q = Fraction(other)
            return GroupAlgebraElement(self.group, self.num * q.numerator, self.den * q.denominator)
        self._check(other)
        G = self.group
        result = np.zeros(G.order, dtype=object)
        for h in self.support:
            # (h * y)[g] = y[h^-1 g]
            result += self.num[h] * other.num[G.mul[G.inv[h]]]
        return GroupAlgebraElement(G, result, self.den * other.den)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (
            self.group is other.group
            and self.den == other.den
            and self.num.tolist() == other.num.tolist()
        )

    def __hash__(self) -> int:
        return hash((self.den, tuple(self.num.tolist())))

    def __repr__(self) -> str:
        terms = [f"{self.coefficient(g)}*g{g}" for g in self.support]
        return " + ".join(terms) or "0"

    def conjugate(self, g: int) -> "GroupAlgebraElement":
        """g^-1 x g"""
        num = np.zeros(self.group.order, dtype=object)
        num[self.group.conjugation[g]] = self.num
        return GroupAlgebraElement(self.group, num, self.den)

    def is_central(self) -> bool:
        gens = tuple(self.group.generators.values()) or self.group.generating_set
        return all(self.conjugate(g) == self for g in gens)

    def is_idempotent(self) -> bool:
        return self * self == self


def hat(S: Subgroup) -> GroupAlgebraElement:
    """(1/|S|) sum of the members of S"""
    return GroupAlgebraElement(S.group, S.mask.astype(int).tolist(), S.order)


def _normal_in(H: Subgroup, K: Subgroup) -> bool:
    G = H.group
    return K.issubset(H) and all(
        K.mask[G.conjugation[h][list(K.members)]].all() for h in H.generators
    )


def _minimal_normal_over(H: Subgroup, K: Subgroup) -> list[Subgroup]:
    """subgroups M with K < M <= H, M normal in H and M/K minimal normal in H/K"""
    G = H.group
    candidates = [
        S for S in groups.subgroups(G, max_order=G.order)
        if S.issubset(H) and K.issubset(S) and S != K and _normal_in(H, S)
    ]
    return [
        M for M in candidates
        if not any(S != M and S.issubset(M) for S in candidates)
    ]


def _order_mod(G: FiniteGroup, y: int, K: Subgroup) -> int:
    j, z = 1, y
    while z not in K:
        z = int(G.mul[z, y])
        j += 1
    return j


def cyclic_generator(H: Subgroup, K: Subgroup) -> int | None:
    """an element y of H with H/K = <yK>, None when H/K is not cyclic"""
    k = H.order // K.order
    if k == 1:
        return 0
    G = H.group
    for y in H.members:
        if y not in K and _order_mod(G, y, K) == k:
            return y
    return None


def epsilon(H: Subgroup, K: Subgroup) -> GroupAlgebraElement:
    """K^ times the product of (1 - M^) over the minimal normal subgroups M/K of H/K"""
    if not _normal_in(H, K):
        raise NotNormal(f"subgroup of order {K.order} is not normal in the subgroup of order {H.order}")
    if H == K:
        return hat(H)
    G = H.group
    y = cyclic_generator(H, K)
    if y is not None:
        k = H.order // K.order
        minimal = [
            groups.generated(G, [*K.generators, G.power(y, k // p)]) for p in primefactors(k)
        ]
    else:
        minimal = _minimal_normal_over(H, K)
    one = GroupAlgebraElement.one(G)
    result = hat(K)
    for M in minimal:
        result = result * (one - hat(M))
    return result


def right_transversal(G: FiniteGroup, N: Subgroup) -> list[int]:
    """the smallest element of each right coset Ng, identity first"""
    reps = G.mul[list(N.members), :].min(axis=0)
    return sorted(set(reps.tolist()))


def left_transversal(G: FiniteGroup, N: Subgroup, S: Subgroup) -> tuple[list[int], dict[int, int]]:
    """the smallest element of each coset nS inside N, and the coset of every member of N"""
    members = list(N.members)
    reps_of = G.mul[np.ix_(members, list(S.members))].min(axis=1)
    reps = sorted(set(reps_of.tolist()))
    position = {r: i for i, r in enumerate(reps)}
    return reps, {x: position[int(r)] for x, r in zip(members, reps_of, strict=True)}


@dataclass(frozen=True, eq=False)
class StrongShodaPair:
    group: FiniteGroup
    H: Subgroup
    K: Subgroup
    N: Subgroup
    generator: int

    @property
    def index(self) -> int:
        """k = [H:K]"""
        return self.H.order // self.K.order

    @cached_property
    def epsilon(self) -> GroupAlgebraElement:
        return epsilon(self.H, self.K)

    @cached_property
    def transversal(self) -> list[int]:
        return right_transversal(self.group, self.N)

    @cached_property
    def idempotent(self) -> GroupAlgebraElement:
        """e(G, H, K), the sum of the distinct conjugates of epsilon"""
        eps = self.epsilon
        return reduce(
            lambda a, b: a + b, (eps.conjugate(g) for g in self.transversal)
        )

    @property
    def dimension(self) -> int:
        e0 = self.idempotent.coefficient(0) * self.group.order
        return int(e0)

    def __repr__(self) -> str:
        return (
            f"StrongShodaPair(H={list(self.H.generators)}, K={list(self.K.generators)}, "
            f"k={self.index}, [G:N]={self.N.index})"
        )


def strong_shoda_pair(
    G: FiniteGroup, H: Subgroup, K: Subgroup, normalizers: dict[int, Subgroup] | None = None
) -> StrongShodaPair | None:
    """the pair with its cached data when (H, K) is a strong shoda pair of G"""
    if not _normal_in(H, K):
        return None
    y = cyclic_generator(H, K)
    if y is None:
        return None
    if normalizers is not None and K.bits in normalizers:
        N = normalizers[K.bits]
    else:
        N = groups.normalizer(G, K)
        if normalizers is not None:
            normalizers[K.bits] = N
    if not H.issubset(N) or not _normal_in(N, H):
        return None
    # H/K maximal abelian in N/K: the centralizer of yK in N/K is H/K
    for n in N.members:
        if n in H:
            continue
        commutator = int(G.mul[G.mul[G.inv[n], G.inv[y]], G.mul[n, y]])
        if commutator in K:
            return None
    pair = StrongShodaPair(G, H, K, N, y)
    eps = pair.epsilon
    for g in pair.transversal[1:]:
        if not (eps * eps.conjugate(g)).is_zero:
            return None
    return pair


def is_strong_shoda_pair(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    return strong_shoda_pair(G, H, K) is not None


def strong_shoda_pairs(G: FiniteGroup, max_order: int = groups.DEFAULT_MAX_ORDER) -> list[StrongShodaPair]:
    """pairs with pairwise distinct idempotents, stopping once they cover QG"""
    lattice = groups.subgroups(G, max_order)
    classes = groups.subgroup_classes(G, max_order)
    reps = sorted((cls[0] for cls in classes), key=lambda S: (-S.order, S.members))
    normalizers: dict[int, Subgroup] = {}
    found: list[StrongShodaPair] = []
    seen: set[GroupAlgebraElement] = set()
    covered = 0
    for H in reps:
        kernels = sorted(
            (K for K in lattice if H.order % K.order == 0 and _normal_in(H, K)),
            key=lambda S: (-S.order, S.members),
        )
        for K in kernels:
            pair = strong_shoda_pair(G, H, K, normalizers)
            if pair is None or pair.idempotent in seen:
                continue
            seen.add(pair.idempotent)
            found.append(pair)
            covered += pair.dimension
            logger.debug("%s: %r covers %d of %d", G.label, pair, covered, G.order)
            if covered == G.order:
                return found
    return found


# crossed products


@dataclass(frozen=True)
class CrossedProductDescriptor:
    """Q(zeta_k) * A with u_a zeta u_a^-1 = zeta^action[a] and u_a u_b = zeta^twist[a][b] u_ab"""

    k: int
    action: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    twist: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.action)
        if len(self.table) != n or len(self.twist) != n:
            raise BadParameter(f"crossed product tables must be {n} x {n}")
        if self.k > 1 and any(gcd(i, self.k) != 1 for i in self.action):
            raise BadParameter(f"action {list(self.action)} is not by units modulo {self.k}")
        reduced = {i % self.k for i in self.action} if self.k > 1 else {1}
        if len(reduced) != n:
            raise NonFaithfulAction(self.k, self.action)

    @property
    def order(self) -> int:
        return len(self.action)

    @cached_property
    def center(self) -> AbelianFieldDescriptor:
        return AbelianFieldDescriptor(self.k, self.action)

    def is_cocycle(self) -> bool:
        k, act, mul, t = self.k, self.action, self.table, self.twist
        n = self.order
        for a, b in product(range(n), repeat=2):
            if (act[mul[a][b]] - act[a] * act[b]) % k:
                return False
        for a, b, c in product(range(n), repeat=3):
            lhs = t[a][b] + t[mul[a][b]][c]
            rhs = act[a] * t[b][c] + t[a][mul[b][c]]
            if (lhs - rhs) % k:
                return False
        return True

    def coboundary(self) -> tuple[int, ...] | None:
        """f with twist(a,b) = f(a) + action(a) f(b) - f(ab) mod k, by bounded search"""
        n, k = self.order, self.k
        if k ** (n - 1) > COBOUNDARY_SEARCH_LIMIT:
            return None
        act, mul, t = self.action, self.table, self.twist
        for rest in product(range(k), repeat=n - 1):
            f = (0, *rest)
            if all(
                (f[a] + act[a] * f[b] - f[mul[a][b]] - t[a][b]) % k == 0
                for a, b in product(range(n), repeat=2)
            ):
                return f
        return None


def crossed_product(pair: StrongShodaPair) -> CrossedProductDescriptor:
    G, H, K, N, y = pair.group, pair.H, pair.K, pair.N, pair.generator
    k = pair.index
    exponent_of: dict[int, int] = {}
    z = 0
    for i in range(k):
        for x in K.members:
            exponent_of[int(G.mul[z, x])] = i
        z = int(G.mul[z, y])
    reps, coset_of = left_transversal(G, N, H)
    n = len(reps)
    action = []
    for r in reps:
        # r y r^-1 in y^i K
        image = int(G.mul[G.mul[r, y], G.inv[r]])
        action.append(exponent_of[image] if k > 1 else 0)
    table = [[coset_of[int(G.mul[reps[a], reps[b]])] for b in range(n)] for a in range(n)]
    twist = [
        [
            exponent_of[int(G.mul[G.mul[reps[a], reps[b]], G.inv[reps[table[a][b]]]])] if k > 1 else 0
            for b in range(n)
        ]
        for a in range(n)
    ]
    cp = CrossedProductDescriptor(
        k,
        tuple(i % k if k > 1 else 1 for i in action),
        tuple(map(tuple, table)),
        tuple(map(tuple, twist)),
    )
    if not cp.is_cocycle():
        raise NotACocycle(repr(pair))
    return cp


# components


@dataclass(frozen=True)
class TrivialField:
    """the division part is the center itself"""


@dataclass(frozen=True)
class QuaternionPart:
    symbol: QuaternionSymbol
    status: DivisionStatus = DivisionStatus.unknown
    tier: str | None = None
    alternative: DivisionStatus | None = None


@dataclass(frozen=True)
class UnresolvedCrossedProduct:
    descriptor: CrossedProductDescriptor


DivisionPart = TrivialField | QuaternionPart | UnresolvedCrossedProduct


@dataclass(frozen=True)
class SimpleComponent:
    matrix_degree: int
    center: AbelianFieldDescriptor
    division_part: DivisionPart
    q_dimension: int
    provenance: StrongShodaPair | None = field(default=None, compare=False)
    cyclotomic_factor: int = field(default=1, compare=False)

    @property
    def effective_degree(self) -> int:
        """matrix degree after absorbing a split quaternion part"""
        part = self.division_part
        if isinstance(part, QuaternionPart) and part.status is DivisionStatus.split:
            return 2 * self.matrix_degree
        return self.matrix_degree

    @property
    def division_name(self) -> str:
        part = self.division_part
        if isinstance(part, QuaternionPart) and part.status is not DivisionStatus.split:
            return part.symbol.name
        if isinstance(part, UnresolvedCrossedProduct):
            return f"Unresolved({self.center.name}*{part.descriptor.order})"
        return self.center.name

    @property
    def name(self) -> str:
        n = self.effective_degree
        inner = self.division_name
        return inner if n == 1 else f"M{n}({inner})"

    @property
    def pretty(self) -> str:
        part = self.division_part
        if isinstance(part, QuaternionPart) and part.status is not DivisionStatus.split:
            inner = part.symbol.pretty
        elif isinstance(part, UnresolvedCrossedProduct):
            inner = f"({self.center.pretty} * C{part.descriptor.order})"
        else:
            inner = self.center.pretty
        n = self.effective_degree
        return inner if n == 1 else f"M{n}({inner})"


def identify(cp: CrossedProductDescriptor) -> tuple[int, DivisionPart]:
    """extra matrix degree and division part of the crossed product"""
    if not cp.is_cocycle():
        raise NotACocycle(f"crossed product over Q(zeta{cp.k}) of order {cp.order}")
    F = cp.center
    if cp.order == 1:
        return 1, TrivialField()
    if cp.order == 2:
        return 1, QuaternionPart(_quaternion_symbol(cp))
    if cp.coboundary() is not None:
        return cp.order, TrivialField()
    logger.info("crossed product of order %d over %s left unresolved", cp.order, F.name)
    return 1, UnresolvedCrossedProduct(cp)


def _quaternion_symbol(cp: CrossedProductDescriptor) -> QuaternionSymbol:
    k = cp.k
    i = cp.action[1]
    c = Cyclotomic.zeta(k, cp.twist[1][1])
    F = cp.center
    u = None
    if k % 2 == 0:
        for j in range(1, k):
            if j * (i - 1) % k == k // 2:
                u = Cyclotomic.zeta(k, 2 * j) * 4
                break
    if u is None:
        for j in range(1, k):
            w = Cyclotomic.zeta(k, j) - Cyclotomic.zeta(k, i * j)
            if not w.is_zero and (w * w).as_root_multiple() is not None:
                u = w * w
                break
    if u is None:
        w = Cyclotomic.zeta(k) - Cyclotomic.zeta(k, i)
        u = w * w
    return QuaternionSymbol(F, u, c).normalized()


def simple_component(G: FiniteGroup, pair: StrongShodaPair) -> SimpleComponent:
    cp = crossed_product(pair)
    extra, part = identify(cp)
    n = pair.N.index * extra
    F = cp.center
    dimension = pair.N.index**2 * cp.order * int(totient(cp.k))
    if dimension != pair.dimension:
        raise InconsistentDecomposition(
            f"dimension {dimension} of {pair!r} disagrees with the idempotent trace {pair.dimension}"
        )
    return SimpleComponent(n, F, part, dimension, provenance=pair)


def component_sort_key(c: SimpleComponent) -> tuple:
    return (c.q_dimension, c.center.conductor, c.effective_degree, c.name)


def decomposition(G: FiniteGroup, max_order: int = groups.DEFAULT_MAX_ORDER) -> list[SimpleComponent]:
    """the simple components of QG, with the idempotents checked to be complete and orthogonal"""
    pairs = strong_shoda_pairs(G, max_order)
    idempotents = [p.idempotent for p in pairs]
    total = reduce(lambda a, b: a + b, idempotents, GroupAlgebraElement.zero(G))
    if total != GroupAlgebraElement.one(G):
        missing = G.order - sum(p.dimension for p in pairs)
        raise NotStronglyMonomial(G.label, missing)
    for i, e in enumerate(idempotents):
        for f in idempotents[i + 1 :]:
            if not (e * f).is_zero:
                raise InconsistentDecomposition(f"idempotents of {G.label} are not orthogonal")
    components = [simple_component(G, p) for p in pairs]
    return sorted(components, key=component_sort_key)


# abelian direct factors


def elements_of_order(invariants: Iterable[int], d: int) -> int:
    """number of elements of order d in the abelian group with the given cyclic factors"""
    invariants = list(invariants)
    total = 0
    for e in divisors(d):
        count = 1
        for n in invariants:
            count *= gcd(e, n)
        total += int(mobius(d // e)) * count
    return total


def abelian_decomposition(invariants: Iterable[int]) -> dict[int, int]:
    """QA as multiplicities of Q(zeta_d)"""
    invariants = list(invariants)
    exponent = lcm(*invariants) if invariants else 1
    result = {}
    for d in divisors(exponent):
        count = elements_of_order(invariants, d)
        if count:
            result[d] = count // int(totient(d))
    return result


def tensor_with_abelian(
    components: Iterable[SimpleComponent], invariants: Iterable[int]
) -> list[SimpleComponent]:
    """the components of Q(C x A) from those of QC, for A abelian"""
    factors = abelian_decomposition(invariants)
    result = []
    for c in components:
        F = c.center
        for d, multiplicity in factors.items():
            cyclo = AbelianFieldDescriptor.cyclotomic(d)
            compositum = F.compositum(cyclo)
            copies = multiplicity * F.intersection(cyclo).degree
            dimension = c.q_dimension * compositum.degree // F.degree
            part = c.division_part
            if isinstance(part, QuaternionPart):
                symbol = part.symbol.over(compositum).normalized()
                part = QuaternionPart(symbol)
            tensored = replace(
                c, center=compositum, division_part=part, q_dimension=dimension,
                cyclotomic_factor=d,
            )
            result += [tensored] * copies
    return sorted(result, key=component_sort_key)
