"""
reproduction suite: decompositions, verdicts, division checks, presentations and
structural properties, checked on the bundled catalog.
"""

import logging
import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool

from . import groups
from .catalog import CatalogEntry, catalog, decomposition_counts
from .classify import (
    OPEN_TAGS,
    DivisionCriterion,
    VerdictValue,
    division_status,
    is_totally_definite,
)
from .config import Settings
from .errors import UnitsepError
from .fields import (
    AbelianFieldDescriptor,
    Cyclotomic,
    DivisionStatus,
    QuaternionSymbol,
    hilbert_places,
    hilbert_product,
    hilbert_symbol_Q,
)
from .groups import FiniteGroup
from .presentations import parse_spec, resolve
from .report import AnalysisReport, analyze_factorized, analyze_group, factorize
from .wedderburn import GroupAlgebraElement, strong_shoda_pairs

logger = logging.getLogger(__name__)

RECIPROCITY_PAIRS = 500
RECIPROCITY_SEED = 20120501


@dataclass(frozen=True)
class Claim:
    """one checked statement; passed is None for results that are only reported"""

    name: str
    anchor: str
    computed: str
    expected: str
    passed: bool | None


@dataclass(frozen=True)
class EntryOutcome:
    entry: CatalogEntry
    report: AnalysisReport | None
    idempotents_ok: bool | None
    error: str | None = None


@dataclass(frozen=True)
class SuiteResult:
    claims: list[Claim]

    @property
    def mismatches(self) -> list[Claim]:
        return [c for c in self.claims if c.passed is False]

    @property
    def ok(self) -> bool:
        return not self.mismatches


# idempotents


def idempotent_laws(G: FiniteGroup, max_order: int) -> bool:
    """e^2 = e, central, pairwise orthogonal and summing to 1"""
    idempotents = [p.idempotent for p in strong_shoda_pairs(G, max_order)]
    total = GroupAlgebraElement.zero(G)
    for i, e in enumerate(idempotents):
        if not e.is_idempotent() or not e.is_central():
            return False
        for f in idempotents[i + 1 :]:
            if not (e * f).is_zero:
                return False
        total = total + e
    return total == GroupAlgebraElement.one(G)


# catalog evaluation


def evaluate_entry(entry: CatalogEntry, settings: Settings) -> EntryOutcome:
    try:
        node = parse_spec(entry.spec)
        split = factorize(node, settings.factor_threshold)
        if split is not None:
            report = analyze_factorized(entry.spec, *split, settings)
            return EntryOutcome(entry, report, None)
        G = resolve(node, settings.max_order, settings.max_cosets)
        report = analyze_group(G, settings, entry.spec)
        return EntryOutcome(entry, report, idempotent_laws(G, settings.max_order))
    except (UnitsepError, AssertionError) as e:
        return EntryOutcome(entry, None, None, str(e))


def _evaluate(args: tuple[CatalogEntry, Settings]) -> EntryOutcome:
    return evaluate_entry(*args)


def evaluate_catalog(
    settings: Settings, entries: Iterable[CatalogEntry] | None = None
) -> list[EntryOutcome]:
    """outcomes in catalog order whatever order the workers finish in"""
    jobs = [(e, settings) for e in (entries if entries is not None else catalog())]
    if settings.workers > 1:
        with Pool(settings.workers) as pool:
            return pool.map(_evaluate, jobs)
    return [_evaluate(job) for job in jobs]


def _is_abelian(report: AnalysisReport) -> bool:
    size = 1
    for n in report.group.abelian_invariants:
        size *= n
    return size == report.group.order


def entry_claims(outcome: EntryOutcome) -> list[Claim]:
    entry = outcome.entry
    anchor = ", ".join(p.value for p in entry.provenance) or "catalog"
    if outcome.report is None:
        return [Claim(f"{entry.spec}: analysis", anchor, outcome.error or "", "no error", False)]
    report = outcome.report
    claims = []
    if entry.expected_decomposition is not None:
        matches = decomposition_counts(report.decomposition) == decomposition_counts(
            entry.expected_decomposition
        )
        claims.append(
            Claim(
                f"{entry.spec}: decomposition", anchor, report.decomposition,
                entry.expected_decomposition, matches,
            )
        )
    if entry.expected_verdict is not None:
        claims.append(
            Claim(
                f"{entry.spec}: verdict", anchor, report.verdict.value.value,
                entry.expected_verdict.value, report.verdict.value is entry.expected_verdict,
            )
        )

    tag = report.theorem_membership
    if _is_abelian(report):
        expected = VerdictValue.subgroup_separable
    elif tag is None:
        expected = None
    elif tag in OPEN_TAGS:
        expected = VerdictValue.open_case
    else:
        expected = VerdictValue.subgroup_separable
    value = report.verdict.value
    consistent = value is expected if expected is not None else value is not VerdictValue.subgroup_separable
    claims.append(
        Claim(
            f"{entry.spec}: verdict agrees with the theorem list", "theorem list",
            f"{value.value} ({tag or 'not listed'})",
            expected.value if expected else "not SubgroupSeparable", consistent,
        )
    )

    oracle = report.oracle
    if oracle.ran:
        counts = (oracle.components, oracle.rational_orbits, oracle.cyclotomic_classes)
        claims.append(
            Claim(
                f"{entry.spec}: character table", "derived",
                "/".join(map(str, counts)), "components = orbits = classes",
                len(set(counts)) == 1,
            )
        )
    total = sum(c.q_dimension for c in report.components)
    claims.append(
        Claim(
            f"{entry.spec}: dimensions", "derived", str(total), str(report.group.order),
            total == report.group.order,
        )
    )
    if outcome.idempotents_ok is not None:
        claims.append(
            Claim(
                f"{entry.spec}: idempotent laws", "derived",
                "hold" if outcome.idempotents_ok else "fail", "hold", outcome.idempotents_ok,
            )
        )
    return claims


# division checks


def hamiltonian(F: AbelianFieldDescriptor) -> QuaternionSymbol:
    return QuaternionSymbol(F, Cyclotomic.rational(-1), Cyclotomic.rational(-1))


def _status_claim(
    name: str, q: QuaternionSymbol, expected: DivisionStatus, settings: Settings
) -> list[Claim]:
    claims = []
    for criterion in DivisionCriterion:
        status, tier, _ = division_status(
            q, criterion, settings.sign_precision, settings.sign_precision_cap
        )
        claims.append(
            Claim(
                f"{name} ({criterion.value})", "proof of the theorem",
                f"{status.value} by {tier}", expected.value, status is expected,
            )
        )
    return claims


def division_claims(settings: Settings) -> list[Claim]:
    claims = []
    for p in (7, 23, 31):
        claims += _status_claim(
            f"H(Q(zeta{p}))", hamiltonian(AbelianFieldDescriptor.cyclotomic(p)),
            DivisionStatus.division, settings,
        )
    for p in (3, 5, 13, 17):
        claims += _status_claim(
            f"H(Q(zeta{p}))", hamiltonian(AbelianFieldDescriptor.cyclotomic(p)),
            DivisionStatus.split, settings,
        )
    for d in (-1, -3):
        F = AbelianFieldDescriptor.quadratic_field(d)
        claims += _status_claim(f"H({F.name})", hamiltonian(F), DivisionStatus.split, settings)

    Q = AbelianFieldDescriptor.rationals()
    definite = QuaternionSymbol(Q, Cyclotomic.rational(-1), Cyclotomic.rational(-3))
    claims += _status_claim("(-1,-3/Q)", definite, DivisionStatus.division, settings)
    td = is_totally_definite(definite, settings.sign_precision, settings.sign_precision_cap)
    claims.append(Claim("(-1,-3/Q) totally definite", "proof of the theorem", str(td), "True", td))

    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        q = hamiltonian(AbelianFieldDescriptor.cyclotomic(p))
        local = division_status(q, DivisionCriterion.local)[0]
        paper = division_status(q, DivisionCriterion.paper)[0]
        claims.append(
            Claim(
                f"H(Q(zeta{p})): criteria agree", "derived",
                f"{local.value}/{paper.value}", "equal", local is paper,
            )
        )

    q = hamiltonian(AbelianFieldDescriptor.cyclotomic(73))
    local = division_status(q, DivisionCriterion.local)[0]
    paper = division_status(q, DivisionCriterion.paper)[0]
    claims.append(
        Claim(
            "H(Q(zeta73)): residue degree vs n = -1 mod 8", "derived",
            f"local {local.value}, n mod 8 {paper.value}", "reported", None,
        )
    )
    return claims


# presentations


def presentation_claims(settings: Settings) -> list[Claim]:
    claims = []
    for spec, order in (("DD", 16), ("DD+", 32)):
        G = resolve(spec, settings.max_order, settings.max_cosets)
        claims.append(
            Claim(f"|{spec}|", "decomposition formula", str(G.order), str(order), G.order == order)
        )
    H1 = resolve("Hn(1)", settings.max_order, settings.max_cosets)
    same = groups.is_isomorphic(H1, groups.dicyclic(16)) is not None
    claims.append(Claim("Hn(1) = Q16", "proof of the theorem", str(same), "True", same))
    return claims


# properties


def random_rational(rng: random.Random, bound: int = 60) -> Fraction:
    numerator = 0
    while numerator == 0:
        numerator = rng.randint(-bound, bound)
    return Fraction(numerator, rng.randint(1, bound))


def reciprocity_claim(settings: Settings, pairs: int = RECIPROCITY_PAIRS) -> Claim:
    """product formula for hilbert symbols and agreement with division_status over Q"""
    rng = random.Random(RECIPROCITY_SEED)
    Q = AbelianFieldDescriptor.rationals()
    failures = 0
    for _ in range(pairs):
        a, b = random_rational(rng), random_rational(rng)
        ramified = [v for v in hilbert_places(a, b) if hilbert_symbol_Q(a, b, v) == -1]
        q = QuaternionSymbol(Q, Cyclotomic.rational(a), Cyclotomic.rational(b))
        status = division_status(q, settings.division_criterion)[0]
        if hilbert_product(a, b) != 1 or len(ramified) % 2:
            failures += 1
        elif (status is DivisionStatus.division) != (len(ramified) >= 2):
            failures += 1
    return Claim(
        f"hilbert reciprocity on {pairs} pairs", "derived", f"{failures} failures", "0 failures",
        failures == 0,
    )


def _contains(G: FiniteGroup, H: FiniteGroup, max_order: int) -> bool:
    """H is isomorphic to a subgroup or a quotient of G"""
    if G.order % H.order or G.order == H.order:
        return False
    for S in groups.subgroups(G, max_order):
        if S.order == H.order and groups.is_isomorphic(S.as_group(), H) is not None:
            return True
    for N in groups.normal_subgroups(G, max_order):
        if N.index == H.order and groups.is_isomorphic(groups.quotient(G, N), H) is not None:
            return True
    return False


def closure_claims(outcomes: list[EntryOutcome], settings: Settings) -> list[Claim]:
    """no NotSubgroupSeparable group inside a SubgroupSeparable one"""
    resolved: dict[str, tuple[FiniteGroup, VerdictValue]] = {}
    for o in outcomes:
        if o.report is None or o.report.group.route != "materialized":
            continue
        if o.report.group.order > settings.isomorphism_limit:
            continue
        G = resolve(o.entry.spec, settings.max_order, settings.max_cosets)
        resolved[o.entry.spec] = (G, o.report.verdict.value)
    good = [(s, G) for s, (G, v) in resolved.items() if v is VerdictValue.subgroup_separable]
    bad = [
        (s, G)
        for s, (G, v) in resolved.items()
        if v is VerdictValue.not_subgroup_separable
    ]
    violations = []
    for s, G in good:
        if G.is_abelian:
            continue
        for t, H in bad:
            if _contains(G, H, settings.max_order):
                violations.append(f"{t} in {s}")
    return [
        Claim(
            "closure under subgroups and quotients", "derived",
            ", ".join(violations) or "none", "none", not violations,
        )
    ]


def run_suite(
    settings: Settings,
    progress: Callable[[str], None] | None = None,
) -> SuiteResult:
    """every claim, in a fixed order"""
    claims: list[Claim] = []

    def step(label: str) -> None:
        logger.info(label)
        if progress is not None:
            progress(label)

    step("catalog")
    outcomes = evaluate_catalog(settings)
    for o in outcomes:
        claims += entry_claims(o)
    step("division and split")
    claims += division_claims(settings)
    step("presentations")
    claims += presentation_claims(settings)
    step("hilbert reciprocity")
    claims.append(reciprocity_claim(settings))
    step("closure")
    claims += closure_claims(outcomes, settings)
    return SuiteResult(claims)
