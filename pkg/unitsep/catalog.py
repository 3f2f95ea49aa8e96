"""
bundled catalog of groups with their expected decompositions and verdicts.

expectations are tagged with where they come from: the displayed decomposition
formulas, the list of groups with subgroup separable unit groups, the groups used
inside its proof, or a derivation from those.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cache

from sympy import divisors, primerange

from .classify import VerdictValue
from .fields import AbelianFieldDescriptor


class Provenance(str, Enum):
    formula = "decomposition formula"
    theorem = "theorem list"
    proof = "proof of the theorem"
    derived = "derived"


class Family(str, Enum):
    theorem = "theorem"
    auxiliary = "auxiliary"
    sweep = "sweep"


@dataclass(frozen=True)
class CatalogEntry:
    spec: str
    family: Family
    expected_decomposition: str | None = None
    expected_verdict: VerdictValue | None = None
    provenance: tuple[Provenance, ...] = ()
    note: str = ""


# decomposition text


def format_decomposition(names: list[str]) -> str:
    """"4Q + M2(Q)" from component names, in order of first appearance"""
    counts = Counter(names)
    parts = []
    for name in dict.fromkeys(names):
        n = counts[name]
        parts.append(name if n == 1 else f"{n}{name}")
    return " + ".join(parts)


def decomposition_counts(text: str) -> Counter:
    """the component multiset of a "4Q + M2(Q)" string"""
    counts: Counter = Counter()
    for part in text.split(" + "):
        part = part.strip()
        digits = len(part) - len(part.lstrip("0123456789"))
        n = int(part[:digits]) if digits else 1
        counts[part[digits:]] += n
    return counts


def _field(d: int, real: bool = False) -> str:
    F = AbelianFieldDescriptor.real_cyclotomic(d) if real else AbelianFieldDescriptor.cyclotomic(d)
    return F.name


def cyclic_decomposition(n: int) -> str:
    """QC_n as the sum of Q(zeta_d) over d | n"""
    return format_decomposition([_field(d) for d in divisors(n)])


def dihedral_decomposition(m: int) -> str:
    """QD_m, m = 2n: the abelianization plus M2 of the real cyclotomic fields for 2 < d | n"""
    n = m // 2
    names = ["Q"] * (2 if n % 2 else 4)
    names += [f"M2({_field(d, real=True)})" for d in divisors(n) if d > 2]
    return format_decomposition(names)


def generalized_quaternion_decomposition(m: int) -> str:
    """QQ_m for m a power of two: QD_(m/2) plus H of the real subfield of Q(zeta_(m/2))"""
    names = list(decomposition_counts(dihedral_decomposition(m // 2)).elements())
    names.append(f"H({_field(m // 2, real=True)})")
    return format_decomposition(names)


# entries


SS = VerdictValue.subgroup_separable
NOT_SS = VerdictValue.not_subgroup_separable
OPEN = VerdictValue.open_case

ORDER_18 = "<a, b, x | a^3 = b^3 = x^2 = 1, a b = b a, x a = b x>"
C3_C8 = "sdp(3,8,2)"


def _elementary(n: int) -> str:
    if n == 0:
        return "Q8"
    if n == 1:
        return "Q8 x C2"
    return f"Q8 x C2^{n}"


def _theorem_entries() -> list[CatalogEntry]:
    T = (Provenance.theorem,)
    F = (Provenance.formula, Provenance.theorem)
    entries = [
        CatalogEntry("D6", Family.theorem, dihedral_decomposition(6), SS, F),
        CatalogEntry("D8", Family.theorem, dihedral_decomposition(8), SS, F),
        CatalogEntry(
            "Q12", Family.theorem, "2Q + Q(i) + M2(Q) + (-1,-3/Q)", SS,
            (Provenance.theorem, Provenance.derived),
            "the non-VC component M2(Q) is a derived placement",
        ),
        CatalogEntry("sdp(4,4,3)", Family.theorem, None, SS, T, "C4⋊C4"),
        CatalogEntry("DD", Family.theorem, "8Q + M2(Q(i))", SS, F),
        CatalogEntry("D16+", Family.theorem, "4Q + 2Q(i) + M2(Q(i))", SS, F),
        CatalogEntry("Q16", Family.theorem, generalized_quaternion_decomposition(16), SS, F),
        CatalogEntry(
            "Q8 x C3", Family.theorem, "4Q + H(Q) + 4Q(sqrt-3) + M2(Q(sqrt-3))", SS,
            (Provenance.theorem, Provenance.derived),
        ),
        CatalogEntry("Q8 x C4", Family.theorem, None, SS, T),
        CatalogEntry("D8YQ8", Family.theorem, "16Q + M2(H(Q))", OPEN, F),
    ]
    for n in range(11):
        expected = format_decomposition(["Q"] * (4 << n) + ["H(Q)"] * (1 << n))
        entries.append(
            CatalogEntry(
                _elementary(n), Family.theorem, expected, SS,
                (Provenance.theorem, Provenance.derived),
            )
        )
    for p in (7, 23, 31):
        zeta = _field(p)
        entries.append(
            CatalogEntry(
                f"Q8 x C{p}", Family.theorem, f"4Q + H(Q) + 4{zeta} + H({zeta})", OPEN,
                (Provenance.theorem, Provenance.derived),
            )
        )
    return entries


def _auxiliary_entries() -> list[CatalogEntry]:
    P = (Provenance.proof,)
    return [
        CatalogEntry("Q8 x Q8", Family.auxiliary, None, NOT_SS, P),
        CatalogEntry(
            C3_C8, Family.auxiliary, "2Q + Q(i) + Q(zeta8) + M2(Q) + (-1,-3/Q) + (i,-3/Q(i))",
            NOT_SS, P, "C3⋊C8",
        ),
        CatalogEntry(
            ORDER_18, Family.auxiliary, "2Q + 2Q(sqrt-3) + M2(Q) + M2(Q(sqrt-3))", NOT_SS, P,
            "(C3 x C3) ⋊ C2 with the swap action",
        ),
        CatalogEntry("D16", Family.auxiliary, dihedral_decomposition(16), NOT_SS, (Provenance.formula, *P)),
        CatalogEntry("D16-", Family.auxiliary, "4Q + M2(Q) + M2(Q(sqrt-2))", NOT_SS, (Provenance.formula, *P)),
        CatalogEntry(
            "Q32", Family.auxiliary, generalized_quaternion_decomposition(32), NOT_SS,
            (Provenance.formula, *P),
        ),
        CatalogEntry("Q8 x C5", Family.auxiliary, None, NOT_SS, P),
        CatalogEntry("Q8 x C2 x C3", Family.auxiliary, None, NOT_SS, P),
        CatalogEntry("Hn(1)", Family.auxiliary, generalized_quaternion_decomposition(16), SS, P, "≅ Q16"),
        CatalogEntry(
            "DD+", Family.auxiliary, "4Q + 2Q(i) + 2M2(Q) + 2M2(Q(i))", NOT_SS,
            (Provenance.formula, Provenance.derived),
        ),
        CatalogEntry(
            "sdp(4,4,3) / <a^2 b^2>", Family.auxiliary, "4Q + H(Q)", SS, (Provenance.derived,),
            "≅ Q8",
        ),
    ]


def _sweep_entries() -> list[CatalogEntry]:
    entries = []
    for n in range(1, 31):
        entries.append(
            CatalogEntry(f"C{n}", Family.sweep, cyclic_decomposition(n), SS, (Provenance.formula,))
        )
    for n in range(1, 17):
        m = 2 * n
        verdict = SS if n <= 4 else NOT_SS
        entries.append(
            CatalogEntry(
                f"D{m}", Family.sweep, dihedral_decomposition(m), verdict,
                (Provenance.formula, Provenance.derived),
            )
        )
    for n in range(1, 9):
        m = 4 * n
        expected = generalized_quaternion_decomposition(m) if m & (m - 1) == 0 and m >= 8 else None
        entries.append(CatalogEntry(f"Q{m}", Family.sweep, expected, None, (Provenance.formula,)))
    for p in primerange(2, 32):
        if p in (2, 3):
            verdict = SS
        elif p % 8 == 7:
            verdict = OPEN
        else:
            verdict = NOT_SS
        entries.append(CatalogEntry(f"Q8 x C{p}", Family.sweep, None, verdict, (Provenance.derived,)))
    return entries


@cache
def catalog() -> tuple[CatalogEntry, ...]:
    """theorem groups, then proof auxiliaries, then sweeps; the first entry for a spec wins"""
    seen: dict[str, CatalogEntry] = {}
    for entry in _theorem_entries() + _auxiliary_entries() + _sweep_entries():
        seen.setdefault(entry.spec, entry)
    return tuple(seen.values())


def find_entry(spec: str) -> CatalogEntry | None:
    for entry in catalog():
        if entry.spec == spec:
            return entry
    return None
