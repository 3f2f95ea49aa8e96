"""
the analysis pipeline and its report model.

resolve (or split off an abelian direct factor) -> decomposition -> division
decisions -> classification -> verdict -> character table cross-check.
"""

import logging
from functools import reduce
from typing import Literal

from pydantic import BaseModel, Field

from . import groups
from .catalog import format_decomposition
from .classify import (
    ComponentClass,
    Verdict,
    VerdictValue,
    criterion_disagreements,
    decide,
    possibilities,
    theorem_membership,
    theorem_membership_factorized,
    verdict,
)
from .config import Settings
from .dixon import CrosscheckResult, oracle_crosscheck, oracle_crosscheck_factorized
from .errors import UnitsepError
from .groups import FiniteGroup
from .presentations import (
    Atom,
    GroupSpec,
    Power,
    Product,
    parse_spec,
    predicted_order,
    print_spec,
    resolve,
)
from .wedderburn import (
    QuaternionPart,
    SimpleComponent,
    UnresolvedCrossedProduct,
    component_sort_key,
    decomposition,
    tensor_with_abelian,
)

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


class GroupReport(BaseModel):
    label: str
    order: int
    abelian_invariants: list[int]
    center_order: int
    route: Literal["materialized", "factorized"]
    core: str | None = None
    abelian_factor: list[int] = Field(default_factory=list)


class ComponentReport(BaseModel):
    name: str
    pretty: str
    matrix_degree: int
    center: str
    center_pretty: str
    conductor: int
    center_generators: list[int]
    division_kind: Literal["field", "quaternion", "unresolved"]
    symbol: str | None = None
    status: str | None = None
    tier: str | None = None
    alternative: str | None = None
    q_dimension: int
    classes: list[ComponentClass]
    vc: bool | None


class VerdictReport(BaseModel):
    value: VerdictValue
    reasons: list[str]
    non_vc: list[str]
    order: str | None = None
    citation: str | None = None


class OracleReport(BaseModel):
    ran: bool
    factorized: bool = False
    prime: int | None = None
    components: int | None = None
    rational_orbits: int | None = None
    cyclotomic_classes: int | None = None


class AnalysisReport(BaseModel):
    """everything analyze prints, in the order it prints it"""

    schema_version: Literal["1"] = SCHEMA_VERSION
    spec: str
    group: GroupReport
    components: list[ComponentReport]
    decomposition: str
    verdict: VerdictReport
    theorem_membership: str | None
    derived_placement: bool = False
    criterion_disagreements: list[str] = Field(default_factory=list)
    oracle: OracleReport
    flags: dict[str, str | int | bool]


class ErrorReport(BaseModel):
    """what analyze --json prints instead of a report when the pipeline fails"""

    schema_version: Literal["1"] = SCHEMA_VERSION
    error: str
    kind: str
    hint: str | None = None

    @classmethod
    def from_error(cls, error: UnitsepError) -> "ErrorReport":
        return cls(error=str(error), kind=type(error).__name__, hint=error.hint)


# abelian direct factors


def _factors(node: GroupSpec) -> list[GroupSpec]:
    if isinstance(node, Product):
        return _factors(node.left) + _factors(node.right)
    return [node]


def _cyclic_factors(node: GroupSpec) -> list[int] | None:
    match node:
        case Atom("C", n):
            return [n]
        case Power(Atom("C", n), k):
            return [n] * k
    return None


def factorize(node: GroupSpec, threshold: int) -> tuple[GroupSpec, list[int]] | None:
    """(core, cyclic factors) when the spec is core x A above the threshold, A abelian"""
    order = predicted_order(node)
    if order is None or order <= threshold:
        return None
    core, invariants = [], []
    for factor in _factors(node):
        cyclic = _cyclic_factors(factor)
        if cyclic is None:
            core.append(factor)
        else:
            invariants += cyclic
    invariants = [n for n in invariants if n > 1]
    if not invariants:
        return None
    if not core:
        return Atom("C", 1), invariants
    return reduce(Product, core), invariants


# report assembly


def component_report(c: SimpleComponent, settings: Settings) -> ComponentReport:
    part = c.division_part
    options = possibilities(c, settings.sign_precision, settings.sign_precision_cap)
    classes = list(dict.fromkeys(cls for _, cls in options))
    vc_flags = {cls in (ComponentClass.field, ComponentClass.totally_definite_quaternion) for cls in classes}
    report = ComponentReport(
        name=c.name,
        pretty=c.pretty,
        matrix_degree=c.effective_degree,
        center=c.center.name,
        center_pretty=c.center.pretty,
        conductor=c.center.conductor,
        center_generators=c.center.generators,
        division_kind="field",
        q_dimension=c.q_dimension,
        classes=classes,
        vc=vc_flags.pop() if len(vc_flags) == 1 else None,
    )
    if isinstance(part, QuaternionPart):
        report.division_kind = "quaternion"
        report.symbol = part.symbol.name
        report.status = part.status.value
        report.tier = part.tier
        report.alternative = part.alternative.value if part.alternative else None
    elif isinstance(part, UnresolvedCrossedProduct):
        report.division_kind = "unresolved"
    return report


def verdict_report(v: Verdict) -> VerdictReport:
    row = v.known_order
    return VerdictReport(
        value=v.value,
        reasons=list(v.reasons),
        non_vc=list(v.non_vc),
        order=row.order if row else None,
        citation=row.citation if row else None,
    )


def _oracle_report(result: CrosscheckResult | None) -> OracleReport:
    if result is None:
        return OracleReport(ran=False)
    return OracleReport(
        ran=True,
        factorized=result.factorized,
        prime=result.prime,
        components=result.components,
        rational_orbits=result.rational_orbits,
        cyclotomic_classes=result.cyclotomic_classes,
    )


def _flags(settings: Settings) -> dict[str, str | int | bool]:
    return {
        "max_order": settings.max_order,
        "factor_threshold": settings.factor_threshold,
        "bianchi_extension": settings.bianchi_extension,
        "division_criterion": settings.division_criterion.value,
        "oracle": settings.oracle,
    }


def _finish(components: list[SimpleComponent], settings: Settings) -> list[SimpleComponent]:
    decided = [
        decide(
            c, settings.division_criterion, settings.sign_precision, settings.sign_precision_cap
        )
        for c in components
    ]
    return sorted(decided, key=component_sort_key)


def analyze_group(G: FiniteGroup, settings: Settings, spec: str | None = None) -> AnalysisReport:
    """the report for a materialised group"""
    logger.info("analysing %s of order %d", G.label, G.order)
    components = _finish(decomposition(G, settings.max_order), settings)
    oracle = oracle_crosscheck(G, components) if settings.oracle else None
    membership = theorem_membership(G, settings.isomorphism_limit)
    group = GroupReport(
        label=G.label,
        order=G.order,
        abelian_invariants=list(groups.abelian_invariants(G)),
        center_order=groups.center(G).order,
        route="materialized",
    )
    return _assemble(spec or G.label, group, components, membership, oracle, settings)


def analyze_factorized(
    label: str, core_node: GroupSpec, invariants: list[int], settings: Settings
) -> AnalysisReport:
    """the report for core x A, computed from the core and the cyclic factors of A"""
    core = resolve(core_node, settings.max_order, settings.max_cosets)
    logger.info("analysing %s as %s tensored with %s", label, core.label, invariants)
    components = _finish(
        tensor_with_abelian(decomposition(core, settings.max_order), invariants), settings
    )
    oracle = oracle_crosscheck_factorized(core, invariants, components) if settings.oracle else None
    order = core.order
    for n in invariants:
        order *= n
    group = GroupReport(
        label=label,
        order=order,
        abelian_invariants=sorted(groups.abelian_invariants(core) + tuple(invariants)),
        center_order=groups.center(core).order * order // core.order,
        route="factorized",
        core=core.label,
        abelian_factor=invariants,
    )
    membership = theorem_membership_factorized(core, invariants)
    return _assemble(label, group, components, membership, oracle, settings)


def _assemble(
    spec: str,
    group: GroupReport,
    components: list[SimpleComponent],
    membership: str | None,
    oracle: CrosscheckResult | None,
    settings: Settings,
) -> AnalysisReport:
    v = verdict(
        components, settings.bianchi_extension, settings.sign_precision, settings.sign_precision_cap
    )
    return AnalysisReport(
        spec=spec,
        group=group,
        components=[component_report(c, settings) for c in components],
        decomposition=format_decomposition([c.name for c in components]),
        verdict=verdict_report(v),
        theorem_membership=membership,
        derived_placement=membership == "Q12",
        criterion_disagreements=criterion_disagreements(components),
        oracle=_oracle_report(oracle),
        flags=_flags(settings),
    )


def analyze(spec: str | GroupSpec, settings: Settings) -> AnalysisReport:
    """the full pipeline for a group spec"""
    node = parse_spec(spec) if isinstance(spec, str) else spec
    label = print_spec(node)
    split = factorize(node, settings.factor_threshold)
    if split is not None:
        return analyze_factorized(label, *split, settings)
    G = resolve(node, settings.max_order, settings.max_cosets)
    return analyze_group(G, settings, label)
