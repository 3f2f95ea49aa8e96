import logging
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm

import numpy as np
from sympy import primefactors

from .errors import (
    BadAction,
    BadParameter,
    GroupTooLarge,
    NoIdentity,
    NoInverse,
    NotASubgroup,
    NotAssociative,
    NotCentral,
    NotNormal,
    WrongOrder,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 256
ISOMORPHISM_LIMIT = 128

Word = tuple[tuple[str, int], ...]


def _validated(
    table: np.ndarray, generators: dict[str, int] | None
) -> tuple[np.ndarray, dict[str, int]]:
    """checks the group axioms and moves the identity to index 0"""
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise BadParameter("cayley table must be a non-empty square table")
    n = table.shape[0]
    if table.min() < 0 or table.max() >= n:
        raise BadParameter(f"cayley table entries must lie in 0..{n - 1}")

    for a in range(n):
        left = table[table[a]]
        right = table[a][table]
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            raise NotAssociative(a, int(b), int(c))

    idx = np.arange(n)
    candidates = np.flatnonzero((table == idx).all(axis=1) & (table.T == idx).all(axis=1))
    if candidates.size == 0:
        raise NoIdentity()
    e = int(candidates[0])

    for g in range(n):
        right_inverses = np.flatnonzero(table[g] == e)
        if not any(table[h, g] == e for h in right_inverses):
            raise NoInverse(g)

    generators = dict(generators or {})
    if e != 0:
        swap = idx.copy()
        swap[0], swap[e] = e, 0
        table = swap[table[np.ix_(swap, swap)]]
        generators = {name: int(swap[g]) for name, g in generators.items()}
    return table, generators


class FiniteGroup:
    """a finite group stored as a full cayley table, element 0 is the identity"""

    identity = 0

    def __init__(
        self,
        mul: Sequence[Sequence[int]] | np.ndarray,
        label: str = "G",
        generators: dict[str, int] | None = None,
        validate: bool = True,
    ):
        table = np.array(mul, dtype=np.int64)
        if validate:
            table, generators = _validated(table, generators)
        table.setflags(write=False)
        self.mul = table
        self.order = int(table.shape[0])
        self.label = label
        self.generators = dict(generators or {})
        inv = np.argmax(table == 0, axis=1)
        inv.setflags(write=False)
        self.inv = inv

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    @cached_property
    def orders(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        power = idx.copy()
        orders[power == 0] = 1
        k = 1
        while not orders.all():
            power = self.mul[power, idx]
            k += 1
            orders[(power == 0) & (orders == 0)] = k
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @cached_property
    def conjugation(self) -> np.ndarray:
        """conjugation[g, x] = g^-1 x g"""
        idx = np.arange(self.order)
        return self.mul[self.mul[self.inv], idx[:, None]]

    @cached_property
    def generating_set(self) -> tuple[int, ...]:
        """a greedy small generating set, largest orders first"""
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        gens: list[int] = []
        by_order = sorted(range(self.order), key=lambda g: (-self.orders[g], g))
        while not mask.all():
            best, best_mask = -1, mask
            for g in by_order:
                if mask[g]:
                    continue
                grown = closure(self, [*gens, g], start=mask)
                if grown.sum() > best_mask.sum():
                    best, best_mask = g, grown
            gens.append(best)
            mask = best_mask
        return tuple(gens)

    @cached_property
    def class_index(self) -> np.ndarray:
        index = np.full(self.order, -1, dtype=np.int64)
        for i, cls in enumerate(conjugacy_classes(self)):
            index[list(cls.members)] = i
        return index

    def element_order(self, g: int) -> int:
        return int(self.orders[g])

    def power(self, g: int, k: int) -> int:
        k %= self.element_order(g)
        result = 0
        for _ in range(k):
            result = int(self.mul[result, g])
        return result

    def evaluate(self, word: Word) -> int:
        """evaluates a word over the named generators"""
        result = 0
        for name, exponent in word:
            if name not in self.generators:
                raise BadParameter(f"unknown generator {name!r} in {self.label}")
            result = int(self.mul[result, self.power(self.generators[name], exponent)])
        return result


def closure(
    group: FiniteGroup, gens: Iterable[int], start: np.ndarray | None = None
) -> np.ndarray:
    """boolean mask of the subgroup generated by gens (and the start set)"""
    mask = np.zeros(group.order, dtype=bool) if start is None else start.copy()
    mask[0] = True
    gens = np.unique(np.fromiter(gens, dtype=np.int64))
    if gens.size == 0:
        return mask
    frontier = np.flatnonzero(mask)
    while frontier.size:
        products = np.unique(group.mul[np.ix_(frontier, gens)])
        fresh = products[~mask[products]]
        mask[fresh] = True
        frontier = fresh
    return mask


def _bits(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: FiniteGroup
    members: tuple[int, ...]
    generators: tuple[int, ...]
    bits: int

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group is other.group
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash(self.bits)

    def __contains__(self, g: int) -> bool:
        return bool(self.bits >> g & 1)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, generators={list(self.generators)})"

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.group.order, dtype=bool)
        mask[list(self.members)] = True
        return mask

    def issubset(self, other: "Subgroup") -> bool:
        return self.bits & ~other.bits == 0

    def conjugate(self, g: int) -> "Subgroup":
        """the subgroup g^-1 S g"""
        G = self.group
        conj = G.conjugation[g]
        mask = np.zeros(G.order, dtype=bool)
        mask[conj[list(self.members)]] = True
        return Subgroup(
            G,
            tuple(np.flatnonzero(mask).tolist()),
            tuple(int(conj[h]) for h in self.generators),
            _bits(mask),
        )

    def as_group(self, label: str | None = None) -> FiniteGroup:
        members = np.array(self.members, dtype=np.int64)
        position = np.full(self.group.order, -1, dtype=np.int64)
        position[members] = np.arange(len(members))
        table = position[self.group.mul[np.ix_(members, members)]]
        gens = {f"g{i}": int(position[g]) for i, g in enumerate(self.generators)}
        return FiniteGroup(table, label or f"subgroup of {self.group.label}", gens)


def _from_mask(group: FiniteGroup, mask: np.ndarray) -> Subgroup:
    """a subgroup given by a closed member mask, with a small generating set"""
    members = np.flatnonzero(mask)
    gens: list[int] = []
    span = np.zeros(group.order, dtype=bool)
    span[0] = True
    for g in members.tolist():
        if not span[g]:
            gens.append(g)
            span = closure(group, gens, start=span)
    return Subgroup(group, tuple(members.tolist()), tuple(gens), _bits(mask))


def generated(group: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = tuple(int(g) for g in gens if g != 0)
    mask = closure(group, gens)
    return Subgroup(group, tuple(np.flatnonzero(mask).tolist()), gens, _bits(mask))


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return generated(group, ())


def from_members(group: FiniteGroup, members: Iterable[int]) -> Subgroup:
    """builds a subgroup from an explicit member set, checking closure"""
    m = np.unique(np.fromiter(members, dtype=np.int64))
    mask = np.zeros(group.order, dtype=bool)
    mask[m] = True
    if not mask[0] or not mask[group.mul[np.ix_(m, m)]].all():
        raise NotASubgroup("member set is not closed under multiplication")
    if not mask[group.inv[m]].all():
        raise NotASubgroup("member set is not closed under inverses")
    if group.order % len(m):
        raise NotASubgroup(f"|S| = {len(m)} does not divide {group.order}")
    return _from_mask(group, mask)


def whole(group: FiniteGroup) -> Subgroup:
    gens = tuple(group.generators.values()) or group.generating_set
    return generated(group, gens)


# constructors


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise BadParameter(f"cyclic group needs n >= 1, got {n}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, f"C{n}", {"a": 1} if n > 1 else {})


def semidirect_cyclic(n: int, m: int, r: int) -> FiniteGroup:
    """C_n x| C_m where the generator b acts by b a b^-1 = a^r"""
    if n < 1 or m < 1:
        raise BadParameter(f"semidirect product needs n, m >= 1, got {n}, {m}")
    if pow(r, m, n) != 1 % n or gcd(r, n) != 1:
        raise BadAction(
            f"a -> a^{r} does not define an action of C{m} on C{n}",
            f"choose r with r^{m} = 1 mod {n}",
        )
    idx = np.arange(n * m)
    i, j = idx % n, idx // n
    twist = np.array([pow(r, int(t), n) for t in range(m)], dtype=np.int64)
    a_part = (i[:, None] + i[None, :] * twist[j][:, None]) % n
    b_part = (j[:, None] + j[None, :]) % m
    gens = {}
    if n > 1:
        gens["a"] = 1
    if m > 1:
        gens["b"] = n
    return FiniteGroup(a_part + n * b_part, f"sdp({n},{m},{r % n if n > 1 else r})", gens)


def dihedral(m: int) -> FiniteGroup:
    """dihedral group of order m"""
    if m < 2 or m % 2:
        raise BadParameter(f"dihedral group needs an even order >= 2, got {m}")
    G = semidirect_cyclic(m // 2, 2, -1)
    return FiniteGroup(G.mul, f"D{m}", G.generators, validate=False)


def dicyclic(m: int) -> FiniteGroup:
    """the quaternion group <a, b | a^(m/2), b^2 = a^(m/4), a^b = a^-1> of order m"""
    if m < 4 or m % 4:
        raise BadParameter(f"dicyclic group needs an order divisible by 4, got {m}")
    n = m // 2
    idx = np.arange(m)
    i, j = idx % n, idx // n
    sign = np.where(j == 1, -1, 1)
    exponent = i[:, None] + sign[:, None] * i[None, :]
    wraps = (j[:, None] + j[None, :]) == 2
    exponent = (exponent + np.where(wraps, n // 2, 0)) % n
    b_part = (j[:, None] + j[None, :]) % 2
    return FiniteGroup(exponent + n * b_part, f"Q{m}", {"a": 1, "b": n})


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    n, m = G.order, H.order
    gi = np.repeat(np.arange(n), m)
    hi = np.tile(np.arange(m), n)
    table = G.mul[np.ix_(gi, gi)] * m + H.mul[np.ix_(hi, hi)]
    gens = {f"{k}_1": g * m for k, g in G.generators.items()}
    gens |= {f"{k}_2": h for k, h in H.generators.items()}
    return FiniteGroup(table, f"{G.label} x {H.label}", gens)


def direct_power(G: FiniteGroup, k: int) -> FiniteGroup:
    if k < 1:
        raise BadParameter(f"direct power needs k >= 1, got {k}")
    result = G
    for _ in range(k - 1):
        result = direct_product(result, G)
    return FiniteGroup(result.mul, f"{G.label}^{k}", result.generators, validate=False)


def central_involution(G: FiniteGroup) -> int:
    """the unique central element of order 2"""
    found = [z for z in center(G).members if G.orders[z] == 2]
    if len(found) != 1:
        raise NotCentral(
            f"{G.label} has {len(found)} central involutions, expected exactly one",
            "use central_product with explicit central elements",
        )
    return found[0]


def central_product(G: FiniteGroup, zG: int, H: FiniteGroup, zH: int) -> FiniteGroup:
    """(G x H) / <(zG, zH)>"""
    for group, z in ((G, zG), (H, zH)):
        if z not in center(group):
            raise NotCentral(f"element {z} is not central in {group.label}")
        if group.orders[z] != 2:
            raise WrongOrder(f"element {z} of {group.label} does not have order 2")
    P = direct_product(G, H)
    Q = quotient(P, generated(P, [zG * H.order + zH]))
    return FiniteGroup(Q.mul, f"{G.label}Y{H.label}", Q.generators, validate=False)


def from_permutations(perms: Sequence[Sequence[int]], label: str = "G") -> FiniteGroup:
    """closes permutation generators into a cayley table"""
    if not perms:
        return cyclic(1)
    degree = len(perms[0])
    identity = tuple(range(degree))
    gens = [tuple(p) for p in perms]
    for p in gens:
        if sorted(p) != list(identity):
            raise BadParameter(f"{p} is not a permutation of 0..{degree - 1}")
    elements = [identity]
    position = {identity: 0}
    for x in elements:
        for p in gens:
            y = tuple(p[x[i]] for i in range(degree))
            if y not in position:
                position[y] = len(elements)
                elements.append(y)
    arr = np.array(elements, dtype=np.int64)
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        # a*b applies a first, then b
        composed = arr[:, arr[a]]
        table[a] = [position[tuple(row)] for row in composed.tolist()]
    names = {f"p{i}": position[p] for i, p in enumerate(gens)}
    return FiniteGroup(table, label, names)


# structure


def subgroups(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Subgroup]:
    """all subgroups, by cyclic extension, sorted by order"""
    if G.order > max_order:
        raise GroupTooLarge(G.order, max_order)
    return list(_lattice(G))


def _lattice(G: FiniteGroup) -> tuple[Subgroup, ...]:
    cached = G.__dict__.get("_lattice")
    if cached is not None:
        return cached
    cyclics: dict[int, Subgroup] = {}
    for g in range(1, G.order):
        S = generated(G, [g])
        cyclics.setdefault(S.bits, S)
    start = trivial_subgroup(G)
    found = {start.bits: start}
    layer = [start]
    while layer:
        nxt = []
        for S in layer:
            for Z in cyclics.values():
                if Z.issubset(S):
                    continue
                gens = (*S.generators, Z.generators[0])
                mask = closure(G, gens, start=S.mask)
                bits = _bits(mask)
                if bits not in found:
                    T = Subgroup(G, tuple(np.flatnonzero(mask).tolist()), gens, bits)
                    found[bits] = T
                    nxt.append(T)
        layer = nxt
    lattice = tuple(sorted(found.values(), key=lambda s: (s.order, s.members)))
    logger.debug("%s has %d subgroups", G.label, len(lattice))
    G.__dict__["_lattice"] = lattice
    return lattice


def is_normal(G: FiniteGroup, S: Subgroup) -> bool:
    gens = tuple(G.generators.values()) or G.generating_set
    return all(S.mask[G.conjugation[g][list(S.members)]].all() for g in gens)


def subgroup_classes(
    G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER
) -> list[list[Subgroup]]:
    """subgroups grouped into conjugacy classes"""
    subs = subgroups(G, max_order)
    by_bits = {S.bits: S for S in subs}
    gens = tuple(G.generators.values()) or G.generating_set
    seen: set[int] = set()
    classes = []
    for S in subs:
        if S.bits in seen:
            continue
        orbit = [S]
        seen.add(S.bits)
        for T in orbit:
            for g in gens:
                U = T.conjugate(g)
                if U.bits not in seen:
                    seen.add(U.bits)
                    orbit.append(by_bits[U.bits])
        classes.append(sorted(orbit, key=lambda s: s.members))
    return classes


def normal_subgroups(G: FiniteGroup, max_order: int = DEFAULT_MAX_ORDER) -> list[Subgroup]:
    return [S for S in subgroups(G, max_order) if is_normal(G, S)]


def center(G: FiniteGroup) -> Subgroup:
    mask = (G.mul == G.mul.T).all(axis=1)
    return _from_mask(G, mask)


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    swapped = G.mul[np.ix_(G.inv, G.inv)]
    commutators = np.unique(G.mul[swapped, G.mul])
    return generated(G, commutators.tolist())


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    conj = G.conjugation[:, list(S.members)]
    mask = S.mask[conj].all(axis=1)
    return _from_mask(G, mask)


def centralizer(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    elements = list(elements)
    mask = (G.mul[:, elements] == G.mul[elements, :].T).all(axis=1)
    return _from_mask(G, mask)


def normal_closure(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    conj = np.unique(G.conjugation[:, list(elements)])
    return generated(G, conj.tolist())


def quotient_map(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """the quotient G/N and the coset index of every element of G"""
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.label}")
    reps_of = G.mul[:, list(N.members)].min(axis=1)
    reps = np.unique(reps_of)
    index = np.searchsorted(reps, reps_of)
    table = index[G.mul[np.ix_(reps, reps)]]
    if not (index[G.mul] == table[index[:, None], index[None, :]]).all():
        raise NotNormal("canonical projection is not a homomorphism")
    gens = {name: int(index[g]) for name, g in G.generators.items() if index[g] != 0}
    Q = FiniteGroup(table, f"{G.label}/N{N.order}", gens, validate=False)
    return Q, index


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    return quotient_map(G, N)[0]


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CyclotomicClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    cached = G.__dict__.get("_classes")
    if cached is not None:
        return list(cached)
    seen = np.zeros(G.order, dtype=bool)
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        members = np.unique(G.conjugation[:, x])
        seen[members] = True
        classes.append(ConjugacyClass(x, tuple(members.tolist())))
    G.__dict__["_classes"] = tuple(classes)
    return classes


def cyclotomic_classes(G: FiniteGroup) -> list[CyclotomicClass]:
    """conjugacy classes merged under the coprime power maps"""
    classes = conjugacy_classes(G)
    parent = list(range(len(classes)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, cls in enumerate(classes):
        x = cls.representative
        o = G.element_order(x)
        power = x
        for t in range(2, o):
            power = int(G.mul[power, x])
            if gcd(t, o) == 1:
                a, b = find(i), find(int(G.class_index[power]))
                if a != b:
                    parent[max(a, b)] = min(a, b)

    merged: dict[int, list[int]] = {}
    for i, cls in enumerate(classes):
        merged.setdefault(find(i), []).extend(cls.members)
    result = [CyclotomicClass(min(m), tuple(sorted(m))) for m in merged.values()]
    return sorted(result, key=lambda c: c.representative)


def exponent(G: FiniteGroup) -> int:
    return lcm(*G.orders.tolist())


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """prime-power invariants of G/G'"""
    A = quotient(G, derived_subgroup(G))
    counts = Counter(A.orders.tolist())
    invariants = []
    for p in primefactors(A.order):
        # ranks[k] = log_p #{x : x^(p^k) = 1}
        ranks = [0]
        full = _log(A.order, p, exact=False)
        while ranks[-1] < full:
            k = len(ranks)
            killed = sum(c for o, c in counts.items() if p**k % o == 0)
            ranks.append(_log(killed, p))
        at_least = [ranks[k] - ranks[k - 1] for k in range(1, len(ranks))] + [0]
        for k in range(1, len(ranks)):
            invariants += [p**k] * (at_least[k - 1] - at_least[k])
    return tuple(sorted(invariants))


def _log(n: int, p: int, exact: bool = True) -> int:
    """multiplicity of p in n"""
    if not exact:
        k = 0
        while n % p == 0:
            n //= p
            k += 1
        return k
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


# isomorphism


def _element_fingerprints(G: FiniteGroup) -> np.ndarray:
    sizes = np.zeros(G.order, dtype=np.int64)
    for cls in conjugacy_classes(G):
        sizes[list(cls.members)] = cls.size
    return G.orders * (G.order + 1) + sizes


def _group_fingerprint(G: FiniteGroup) -> tuple:
    return (
        G.order,
        tuple(sorted(Counter(_element_fingerprints(G).tolist()).items())),
        center(G).order,
        derived_subgroup(G).order,
    )


def _extend(
    G: FiniteGroup, H: FiniteGroup, gens: Sequence[int], images: Sequence[int]
) -> np.ndarray | None:
    """extends gens -> images along the cayley graph, None when inconsistent"""
    phi = np.full(G.order, -1, dtype=np.int64)
    phi[0] = 0
    queue = [0]
    for x in queue:
        for g, h in zip(gens, images, strict=True):
            y = int(G.mul[x, g])
            image = int(H.mul[phi[x], h])
            if phi[y] == -1:
                phi[y] = image
                queue.append(y)
            elif phi[y] != image:
                return None
    if len(set(phi[queue].tolist())) != len(queue):
        return None
    return phi


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> np.ndarray | None:
    """a verified isomorphism G -> H as an image array, or None"""
    if G.order != H.order or _group_fingerprint(G) != _group_fingerprint(H):
        return None
    gens = G.generating_set
    fp_G, fp_H = _element_fingerprints(G), _element_fingerprints(H)
    candidates = [np.flatnonzero(fp_H == fp_G[g]).tolist() for g in gens]
    images: list[int] = []

    def search(level: int) -> np.ndarray | None:
        if level == len(gens):
            phi = _extend(G, H, gens, images)
            if phi is not None and (phi >= 0).all():
                return phi
            return None
        for h in candidates[level]:
            images.append(h)
            if _extend(G, H, gens[: level + 1], images) is not None:
                found = search(level + 1)
                if found is not None:
                    return found
            images.pop()
        return None

    phi = search(0)
    if phi is None:
        return None
    if not (H.mul[phi[:, None], phi[None, :]] == phi[G.mul]).all():
        raise AssertionError("isomorphism witness failed the table check")
    return phi
