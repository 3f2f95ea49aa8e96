"""
VC classification of simple components, division/split decisions for
quaternion parts and the subgroup separability verdict.

a simple algebra is VC when it is a field or a totally definite quaternion
algebra. ZG^* can only be subgroup separable when QG has at most one non-VC
component, and that component must be a division algebra or M2(D) with D one
of Q, an imaginary quadratic field or a totally definite quaternion algebra
over Q.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from functools import cache
from itertools import product

from sympy import isprime

from . import groups
from .fields import (
    AbelianFieldDescriptor,
    DivisionStatus,
    QuaternionSymbol,
    embedding_signs,
    frobenius_order_at_2,
    hilbert_places,
    hilbert_symbol_Q,
    is_square_in_field,
    quadratic_identity,
)
from .groups import FiniteGroup
from .presentations import resolve
from .wedderburn import QuaternionPart, SimpleComponent, UnresolvedCrossedProduct

logger = logging.getLogger(__name__)

POSSIBILITY_LIMIT = 1024


class DivisionCriterion(str, Enum):
    local = "local"
    paper = "paper"


class ComponentClass(str, Enum):
    field = "Field"
    totally_definite_quaternion = "TotallyDefiniteQuaternion"
    matrix_over_field = "MatrixOverField"
    matrix_over_quaternion = "MatrixOverQuaternion"
    division_quaternion_not_td = "DivisionQuaternionNotTD"
    unresolved = "Unresolved"


class VerdictValue(str, Enum):
    subgroup_separable = "SubgroupSeparable"
    not_subgroup_separable = "NotSubgroupSeparable"
    open_case = "OpenCase"
    undetermined = "Undetermined"


def is_vc(cls: ComponentClass) -> bool:
    return cls in (ComponentClass.field, ComponentClass.totally_definite_quaternion)


# division and split


def is_totally_definite(q: QuaternionSymbol, precision: int = 64, cap: int = 1024) -> bool:
    """totally real center with u and c negative at every real embedding"""
    F = q.field
    if not F.is_totally_real():
        return False
    signs_u = embedding_signs(q.u, F, precision, cap)
    signs_c = embedding_signs(q.c, F, precision, cap)
    return all(s < 0 for s in signs_u) and all(s < 0 for s in signs_c)


def paper_hamilton_split(F: AbelianFieldDescriptor) -> DivisionStatus | None:
    """H(Q(zeta_n)), n odd, splits unless n = -1 mod 8; None outside that family"""
    n = F.conductor
    if not F.is_full_cyclotomic or n % 2 == 0 or n == 1:
        return None
    return DivisionStatus.division if n % 8 == 7 else DivisionStatus.split


def division_status(
    q: QuaternionSymbol,
    criterion: DivisionCriterion = DivisionCriterion.local,
    precision: int = 64,
    cap: int = 1024,
) -> tuple[DivisionStatus, str, DivisionStatus | None]:
    """(status, deciding tier, the other criterion's answer when it differs)"""
    F = q.field
    if q.u == 1 or q.c == 1 or is_square_in_field(q.u, F) or is_square_in_field(q.c, F):
        return DivisionStatus.split, "square entry", None

    if F.is_totally_real():
        signs_u = embedding_signs(q.u, F, precision, cap)
        signs_c = embedding_signs(q.c, F, precision, cap)
        if all(s < 0 for s in signs_u + signs_c):
            return DivisionStatus.division, "totally definite", None
        if any(a < 0 and b < 0 for a, b in zip(signs_u, signs_c, strict=True)):
            return DivisionStatus.division, "ramified real place", None

    if F.is_rational:
        a, b = q.u.value, q.c.value
        ramified = [v for v in hilbert_places(a, b) if hilbert_symbol_Q(a, b, v) == -1]
        if ramified:
            return DivisionStatus.division, "hilbert symbols over Q", None
        return DivisionStatus.split, "hilbert symbols over Q", None

    if q.is_hamiltonian and F.conductor % 2:
        f = frobenius_order_at_2(F)
        local = DivisionStatus.division if f % 2 else DivisionStatus.split
        paper = paper_hamilton_split(F)
        if paper is None or paper is local:
            return local, "residue degree of 2", None
        if criterion is DivisionCriterion.paper:
            return paper, "n = -1 mod 8 criterion", local
        return local, "residue degree of 2", paper

    return DivisionStatus.unknown, "undecided", None


def decide(
    component: SimpleComponent,
    criterion: DivisionCriterion = DivisionCriterion.local,
    precision: int = 64,
    cap: int = 1024,
) -> SimpleComponent:
    """fills in the division status of a quaternion part"""
    part = component.division_part
    if not isinstance(part, QuaternionPart):
        return component
    status, tier, alternative = division_status(part.symbol, criterion, precision, cap)
    return replace(
        component, division_part=QuaternionPart(part.symbol, status, tier, alternative)
    )


def _with_status(component: SimpleComponent, status: DivisionStatus) -> SimpleComponent:
    part = component.division_part
    assert isinstance(part, QuaternionPart)
    return replace(component, division_part=replace(part, status=status))


def classify_component(
    c: SimpleComponent, precision: int = 64, cap: int = 1024
) -> ComponentClass:
    """the class of a component whose division status is settled"""
    part = c.division_part
    if isinstance(part, UnresolvedCrossedProduct):
        return ComponentClass.unresolved
    if not isinstance(part, QuaternionPart) or part.status is DivisionStatus.split:
        return ComponentClass.field if c.effective_degree == 1 else ComponentClass.matrix_over_field
    if c.matrix_degree >= 2:
        return ComponentClass.matrix_over_quaternion
    if is_totally_definite(part.symbol, precision, cap):
        return ComponentClass.totally_definite_quaternion
    return ComponentClass.division_quaternion_not_td


def possibilities(
    c: SimpleComponent, precision: int = 64, cap: int = 1024
) -> list[tuple[SimpleComponent, ComponentClass]]:
    """the component under every division status still open"""
    part = c.division_part
    if isinstance(part, QuaternionPart) and part.status is DivisionStatus.unknown:
        options = [_with_status(c, s) for s in (DivisionStatus.split, DivisionStatus.division)]
    else:
        options = [c]
    return [(o, classify_component(o, precision, cap)) for o in options]


def _imaginary_quadratic(F: AbelianFieldDescriptor) -> int | None:
    if F.degree != 2 or F.is_totally_real():
        return None
    return quadratic_identity(F)


def lemma_shape_ok(c: SimpleComponent, cls: ComponentClass, precision: int = 64, cap: int = 1024) -> bool | None:
    """division algebra, or M2 over Q, an imaginary quadratic field or a definite quaternion algebra over Q"""
    if cls is ComponentClass.unresolved:
        return None
    if cls is ComponentClass.division_quaternion_not_td:
        return True
    if c.effective_degree != 2:
        return False
    if cls is ComponentClass.matrix_over_field:
        return c.center.is_rational or _imaginary_quadratic(c.center) is not None
    if cls is ComponentClass.matrix_over_quaternion:
        part = c.division_part
        return c.center.is_rational and is_totally_definite(part.symbol, precision, cap)
    return False


# known orders


@dataclass(frozen=True)
class KnownOrderStatus:
    shape: str
    order: str
    status: VerdictValue
    citation: str
    groups: str


KNOWN_ORDERS = (
    KnownOrderStatus(
        "M2(Q)", "M2(Z)", VerdictValue.subgroup_separable,
        "GL2(Z) has a free subgroup of finite index", "D6, D8, C4⋊C4, Q16",
    ),
    KnownOrderStatus(
        "M2(Q(sqrt-3))", "M2(Z[sqrt-3])", VerdictValue.subgroup_separable,
        "GL2(Z[sqrt-3]) is subgroup separable", "Q8×C3",
    ),
    KnownOrderStatus(
        "M2(Q(i))", "M2(Z[i])", VerdictValue.subgroup_separable,
        "GL2(Z[i]) is subgroup separable", "Q8×C4, DD, D16+",
    ),
    KnownOrderStatus(
        "M2(H(Q))", "M2(H(Z))", VerdictValue.open_case,
        "separability of the units of M2(H(Z)) is open", "D8YQ8",
    ),
    KnownOrderStatus(
        "H(Q(zeta_p))", "H(Z[zeta_p])", VerdictValue.open_case,
        "separability of the units of H(Z[zeta_p]) is open", "Q8×Cp, p = -1 mod 8",
    ),
)

BIANCHI_ORDER = KnownOrderStatus(
    "M2(Q(sqrt-d))", "M2(O_d)", VerdictValue.subgroup_separable,
    "Bianchi groups are subgroup separable", "",
)


@dataclass(frozen=True)
class Verdict:
    value: VerdictValue
    reasons: tuple[str, ...]
    non_vc: tuple[str, ...] = ()
    known_order: KnownOrderStatus | None = None


def _single_non_vc(
    c: SimpleComponent, cls: ComponentClass, bianchi: bool, precision: int, cap: int
) -> Verdict:
    names = (c.name,)
    if cls is ComponentClass.unresolved:
        return Verdict(VerdictValue.undetermined, ("the only non-VC component is unresolved",), names)
    if c.effective_degree >= 3:
        return Verdict(
            VerdictValue.not_subgroup_separable,
            ("a non-VC component M_n(D) needs n <= 2",), names,
        )
    if not lemma_shape_ok(c, cls, precision, cap):
        return Verdict(
            VerdictValue.not_subgroup_separable,
            ("the non-VC component is neither a division algebra nor M2 of an allowed D",),
            names,
        )
    if cls is ComponentClass.matrix_over_field:
        F = c.center
        if F.is_rational:
            return _known(KNOWN_ORDERS[0], names)
        d = _imaginary_quadratic(F)
        if d == -3:
            return _known(KNOWN_ORDERS[1], names)
        if d == -1:
            return _known(KNOWN_ORDERS[2], names)
        if bianchi:
            return _known(BIANCHI_ORDER, names)
        return Verdict(
            VerdictValue.undetermined,
            (f"M2 over {F.name} needs the Bianchi widening",), names,
        )
    if cls is ComponentClass.matrix_over_quaternion:
        return _known(KNOWN_ORDERS[3], names)
    part = c.division_part
    F = c.center
    if (
        isinstance(part, QuaternionPart)
        and part.symbol.is_hamiltonian
        and F.is_full_cyclotomic
        and not F.is_totally_real()
    ):
        return _known(KNOWN_ORDERS[4], names)
    return Verdict(
        VerdictValue.undetermined,
        ("the non-VC division algebra is not in the known-order table",), names,
    )


def _known(row: KnownOrderStatus, names: tuple[str, ...]) -> Verdict:
    reason = f"single non-VC component {row.shape} with order {row.order}: {row.citation}"
    return Verdict(row.status, (reason,), names, row)


def _decide(
    classified: list[tuple[SimpleComponent, ComponentClass]], bianchi: bool, precision: int, cap: int
) -> Verdict:
    non_vc = [(c, cls) for c, cls in classified if not is_vc(cls)]
    if not non_vc:
        return Verdict(
            VerdictValue.subgroup_separable,
            ("every component is a field or a totally definite quaternion algebra",),
        )
    if len(non_vc) >= 2:
        return Verdict(
            VerdictValue.not_subgroup_separable,
            (f"{len(non_vc)} non-VC components, at most one is allowed",),
            tuple(c.name for c, _ in non_vc),
        )
    return _single_non_vc(*non_vc[0], bianchi, precision, cap)


def verdict(
    components: list[SimpleComponent],
    bianchi: bool = False,
    precision: int = 64,
    cap: int = 1024,
) -> Verdict:
    """the verdict, Undetermined when open division statuses change it"""
    options = [possibilities(c, precision, cap) for c in components]
    combinations = 1
    for o in options:
        combinations *= len(o)
    if combinations > POSSIBILITY_LIMIT:
        return Verdict(VerdictValue.undetermined, ("too many undecided quaternion components",))
    outcomes = [_decide(list(choice), bianchi, precision, cap) for choice in product(*options)]
    values = {v.value for v in outcomes}
    if len(values) == 1:
        return outcomes[0]
    return Verdict(
        VerdictValue.undetermined,
        ("undecided division statuses change the verdict: "
         + ", ".join(sorted(v.value for v in values)),),
        outcomes[0].non_vc,
    )


# theorem membership


THEOREM_SPECS = {
    "D6": "D6",
    "D8": "D8",
    "Q12": "Q12",
    "C4⋊C4": "sdp(4,4,3)",
    "DD": "DD",
    "D16+": "D16+",
    "Q16": "Q16",
    "Q8×C3": "Q8 x C3",
    "Q8×C4": "Q8 x C4",
    "D8YQ8": "D8YQ8",
}
HAMILTONIAN_2 = "Q8×C2^n"
HAMILTONIAN_P = "Q8×Cp, p≡−1(8)"
OPEN_TAGS = ("D8YQ8", HAMILTONIAN_P)


@cache
def _theorem_group(tag: str) -> FiniteGroup:
    return resolve(THEOREM_SPECS[tag])


def is_hamiltonian(G: FiniteGroup) -> bool:
    """nonabelian with every cyclic subgroup normal"""
    if G.is_abelian:
        return False
    for g in range(G.order):
        S = groups.generated(G, [g])
        if not groups.is_normal(G, S):
            return False
    return True


def _hamiltonian_tag(order: int, odd_part: int) -> str | None:
    if odd_part == 1:
        return HAMILTONIAN_2
    if order == 8 * odd_part and isprime(odd_part) and odd_part % 8 == 7:
        return HAMILTONIAN_P
    return None


def theorem_membership(G: FiniteGroup, limit: int = groups.ISOMORPHISM_LIMIT) -> str | None:
    """the entry of the separability theorem's list that G is isomorphic to"""
    if G.is_abelian:
        return None
    if G.order <= limit:
        for tag in THEOREM_SPECS:
            reference = _theorem_group(tag)
            if reference.order == G.order and groups.is_isomorphic(G, reference) is not None:
                return tag
    if is_hamiltonian(G):
        odd = int((G.orders % 2 == 1).sum())
        return _hamiltonian_tag(G.order, odd)
    return None


def theorem_membership_factorized(core: FiniteGroup, invariants: list[int]) -> str | None:
    """membership of core x A read off the core and the cyclic factors of A"""
    if not is_hamiltonian(core) or core.order != 8:
        return None
    if all(n == 2 for n in invariants):
        return HAMILTONIAN_2
    if invariants == [3]:
        return "Q8×C3"
    if invariants == [4]:
        return "Q8×C4"
    if len(invariants) == 1:
        return _hamiltonian_tag(8 * invariants[0], invariants[0])
    return None


def criterion_disagreements(components: list[SimpleComponent]) -> list[str]:
    """components whose division status depends on the chosen criterion"""
    result = []
    for c in components:
        part = c.division_part
        if isinstance(part, QuaternionPart) and part.alternative is not None:
            result.append(f"{c.name}: {part.status.value} (other criterion: {part.alternative.value})")
    return result


