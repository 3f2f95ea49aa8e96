class UnitsepError(Exception):
    """base class for every error raised by the unitsep library"""

    hint: str | None = None

    def __init__(self, message: str, hint: str | None = None):
        super().__init__(message)
        if hint is not None:
            self.hint = hint


# group-core


class BadParameter(UnitsepError):
    """a constructor received parameters outside its domain"""


class BadAction(UnitsepError):
    """the requested action a -> a^r is not an automorphism of the right order"""


class NotAssociative(UnitsepError):
    def __init__(self, a: int, b: int, c: int):
        super().__init__(f"table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
        self.triple = (a, b, c)


class NoIdentity(UnitsepError):
    def __init__(self):
        super().__init__("table has no two-sided identity element")


class NoInverse(UnitsepError):
    def __init__(self, element: int):
        super().__init__(f"element {element} has no two-sided inverse")
        self.element = element


class NotCentral(UnitsepError):
    """a designated element does not lie in the center"""


class WrongOrder(UnitsepError):
    """a designated element does not have the required order"""


class NotNormal(UnitsepError):
    """a subgroup used as a kernel is not normal"""


class NotASubgroup(UnitsepError):
    """a member set is not closed under the group law"""


class GroupTooLarge(UnitsepError):
    def __init__(self, order: int, limit: int, hint: str | None = None):
        super().__init__(
            f"group of order {order} exceeds the materialization limit {limit}",
            hint or "raise --max-order or write the abelian part as a direct factor",
        )
        self.order = order
        self.limit = limit


# presentations


class SpecSyntaxError(UnitsepError):
    def __init__(self, text: str, offset: int, expected: frozenset[str]):
        found = text[offset:].strip()[:12] or "end of input"
        message = (
            f"syntax error at offset {offset}: expected one of "
            f"{', '.join(sorted(expected))} but found {found!r}"
        )
        super().__init__(message, "see the group-spec grammar in the README")
        self.text = text
        self.offset = offset
        self.expected = expected


class UnknownAtom(UnitsepError):
    """a spec leaf does not name any bundled group"""


class PresentationFormatError(UnitsepError):
    """a presentation file or word is malformed"""


class EmptyPresentation(UnitsepError):
    def __init__(self):
        super().__init__("presentation has no generators")


class CosetOverflow(UnitsepError):
    def __init__(self, limit: int):
        super().__init__(
            f"coset enumeration exceeded {limit} cosets, the group may be infinite",
            "raise max_cosets with 'unitsep settings set max_cosets N'",
        )
        self.limit = limit


# numbers


class DivisionByZero(UnitsepError):
    def __init__(self):
        super().__init__("division by zero in a cyclotomic field")


class BadGaloisIndex(UnitsepError):
    def __init__(self, t: int, conductor: int):
        super().__init__(f"galois index {t} is not a unit modulo {conductor}")


class NotQuadratic(UnitsepError):
    """the field descriptor does not have degree 2"""


class EvenConductor(UnitsepError):
    """2 ramifies in the field, the residue degree is undefined"""


class NotInField(UnitsepError):
    """a cyclotomic element does not lie in the requested subfield"""


class SignUncertain(UnitsepError):
    def __init__(self, precision: int):
        super().__init__(
            f"sign could not be certified at {precision} bits",
            "raise sign_precision_cap with 'unitsep settings set sign_precision_cap N'",
        )
        self.precision = precision


# wedderburn


class NotStronglyMonomial(UnitsepError):
    def __init__(self, label: str, missing_dimension: int):
        super().__init__(
            f"strong shoda pairs of {label} do not cover the group algebra "
            f"(missing dimension {missing_dimension})",
            "only strongly monomial groups are supported",
        )
        self.missing_dimension = missing_dimension


class OracleMismatch(UnitsepError):
    def __init__(self, component: str, detail: str):
        super().__init__(f"character table disagrees on {component}: {detail}")
        self.component = component


class NotACocycle(UnitsepError):
    def __init__(self, source: str):
        super().__init__(f"twist of {source} does not satisfy the 2-cocycle identity")


class NonFaithfulAction(UnitsepError):
    def __init__(self, k: int, action: tuple[int, ...]):
        super().__init__(
            f"action {list(action)} on Q(zeta{k}) is not faithful",
            "only crossed products with a faithful galois action are identified",
        )
        self.k = k
        self.action = action


class InconsistentDecomposition(UnitsepError):
    """idempotents or dimensions of a decomposition failed a consistency check"""
