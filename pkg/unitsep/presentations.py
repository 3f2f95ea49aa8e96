"""
the group-spec language, finite presentations and coset enumeration.

a spec such as "Q8 x C7", "sdp(3,8,2)" or "sdp(4,4,3) / <a^2 b^2>" is parsed
into a small syntax tree and resolved into a FiniteGroup. presented groups are
materialised by Todd-Coxeter enumeration over the trivial subgroup.
"""

import logging
import re
from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

import numpy as np
from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from . import groups
from .errors import (
    BadParameter,
    CosetOverflow,
    EmptyPresentation,
    GroupTooLarge,
    PresentationFormatError,
    SpecSyntaxError,
    UnknownAtom,
)
from .groups import FiniteGroup, Word

logger = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 10000

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")
_IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LOOSE_GENERATOR = re.compile(r"[A-Za-z](?:_?\d+)?")
_NUMBER = re.compile(r"[0-9]+")
_SUPER_NUMBER = re.compile(r"⁻?[⁰¹²³⁴⁵⁶⁷⁸⁹]+")

ATOM_EXPECTED = frozenset(
    {"C<n>", "D<n>", "Q<n>", "D<n>+", "D<n>-", "DD", "DD+", "D8YQ8", "Hn(<n>)",
     "sdp(", "y(", "(", "<"}
)


# words


def reduce_word(word: Sequence[tuple[str, int]]) -> Word:
    """merges adjacent powers of the same generator and drops trivial ones"""
    stack: list[tuple[str, int]] = []
    for name, e in word:
        if e == 0:
            continue
        if stack and stack[-1][0] == name:
            merged = stack[-1][1] + e
            stack.pop()
            if merged:
                stack.append((name, merged))
        else:
            stack.append((name, e))
    return tuple(stack)


def invert_word(word: Word) -> Word:
    return tuple((name, -e) for name, e in reversed(word))


def power_word(word: Word, k: int) -> Word:
    base = word if k >= 0 else invert_word(word)
    return reduce_word(base * abs(k))


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v"""
    return reduce_word(invert_word(u) + invert_word(v) + u + v)


def print_word(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(name if e == 1 else f"{name}^{e}" for name, e in word)


# syntax tree


@dataclass(frozen=True)
class Atom:
    kind: str
    n: int | None = None


@dataclass(frozen=True)
class Product:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Power:
    base: "GroupSpec"
    exponent: int


@dataclass(frozen=True)
class Semidirect:
    n: int
    m: int
    r: int


@dataclass(frozen=True)
class Central:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class Quotient:
    base: "GroupSpec"
    words: tuple[Word, ...]


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if not self.generators:
            raise EmptyPresentation()
        if len(set(self.generators)) != len(self.generators):
            raise PresentationFormatError("generator names must be distinct")
        for word in self.relators:
            for name, _ in word:
                if name not in self.generators:
                    raise PresentationFormatError(f"relator uses undeclared generator {name!r}")


GroupSpec = Atom | Product | Power | Semidirect | Central | Quotient | Presentation


# parser


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, expected: Sequence[str], at: int | None = None) -> SpecSyntaxError:
        return SpecSyntaxError(self.text, self.pos if at is None else at, frozenset(expected))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_keyword(self, keyword: str) -> bool:
        self.skip()
        return self.text[self.pos : self.pos + len(keyword)].lower() == keyword

    def accept(self, token: str) -> bool:
        if self.at_keyword(token.lower()):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            raise self.error([token])

    def number(self, signed: bool = False) -> int:
        self.skip()
        sign = 1
        if signed and self.peek() == "-":
            self.pos += 1
            sign = -1
        match = _NUMBER.match(self.text, self.pos)
        if not match:
            raise self.error(["<integer>"])
        self.pos = match.end()
        return sign * int(match.group())

    def done(self) -> bool:
        return self.peek() == ""

    # group specs

    def spec(self) -> GroupSpec:
        node = self.product()
        if self.accept("/"):
            self.expect("<")
            words = [self.word(None)]
            while self.accept(","):
                words.append(self.word(None))
            self.expect(">")
            node = Quotient(node, tuple(words))
        return node

    def product(self) -> GroupSpec:
        node = self.power()
        while self.peek() in ("x", "X", "×"):
            self.pos += 1
            node = Product(node, self.power())
        return node

    def power(self) -> GroupSpec:
        node = self.primary()
        if self.accept("^"):
            node = Power(node, self.number())
        return node

    def primary(self) -> GroupSpec:
        self.skip()
        start = self.pos
        if self.accept("d8yq8"):
            return Atom("D8YQ8")
        if self.accept("dd+"):
            return Atom("DD+")
        if self.accept("dd"):
            return Atom("DD")
        if self.accept("hn("):
            n = self.number()
            self.expect(")")
            return Atom("H", n)
        if self.accept("sdp("):
            n = self.number()
            self.expect(",")
            m = self.number()
            self.expect(",")
            r = self.number(signed=True)
            self.expect(")")
            return Semidirect(n, m, r)
        if self.accept("y("):
            left = self.spec()
            self.expect(",")
            right = self.spec()
            self.expect(")")
            return Central(left, right)
        if self.accept("("):
            node = self.spec()
            self.expect(")")
            return node
        if self.peek() == "<":
            return self.presentation()
        letter = self.peek().upper()
        if letter in ("C", "D", "Q"):
            self.pos += 1
            if self.accept("("):
                n = self.number()
                self.expect(")")
            elif _NUMBER.match(self.text, self.pos):
                n = self.number()
            else:
                raise self.error(["<integer>", "("])
            if letter == "D" and self.peek() in ("+", "-"):
                sign = self.text[self.pos]
                self.pos += 1
                return Atom(f"D{sign}", n)
            return Atom(letter, n)
        raise self.error(ATOM_EXPECTED, at=start)

    # presentations

    def presentation(self) -> Presentation:
        self.expect("<")
        names = [self.identifier()]
        while self.accept(","):
            names.append(self.identifier())
        self.expect("|")
        relators: list[Word] = []
        if self.peek() != ">":
            relators += self.relation(names)
            while self.accept(","):
                relators += self.relation(names)
        self.expect(">")
        return Presentation(tuple(names), tuple(relators))

    def identifier(self) -> str:
        self.skip()
        match = _IDENTIFIER.match(self.text, self.pos)
        if not match:
            raise self.error(["<generator name>"])
        self.pos = match.end()
        return match.group()

    def relation(self, names: Sequence[str] | None) -> list[Word]:
        """w1 = w2 = ... = wn as the relators w_i w_(i+1)^-1"""
        sides = [self.word(names)]
        while self.accept("="):
            sides.append(self.word(names))
        if len(sides) == 1:
            return [sides[0]] if sides[0] else []
        relators = []
        for a, b in zip(sides, sides[1:], strict=False):
            rel = reduce_word(a + invert_word(b))
            if rel:
                relators.append(rel)
        return relators

    def word(self, names: Sequence[str] | None) -> Word:
        self.skip()
        if self.text.startswith("1", self.pos) and not _NUMBER.match(self.text, self.pos + 1):
            self.pos += 1
            return ()
        parts: list[tuple[str, int]] = []
        parts += self.factor(names)
        while True:
            self.accept("*")
            c = self.peek()
            if not c or c in "=,|>)]":
                break
            parts += self.factor(names)
        return reduce_word(parts)

    def factor(self, names: Sequence[str] | None) -> Word:
        self.skip()
        if self.accept("("):
            base = self.word(names)
            self.expect(")")
        elif self.accept("["):
            u = self.word(names)
            self.expect(",")
            v = self.word(names)
            self.expect("]")
            base = commutator(u, v)
        else:
            base = ((self.generator(names), 1),)
        return power_word(base, self.exponent())

    def generator(self, names: Sequence[str] | None) -> str:
        if names is None:
            match = _LOOSE_GENERATOR.match(self.text, self.pos)
            if match:
                self.pos = match.end()
                return match.group()
            raise self.error(["<generator>", "(", "["])
        for name in sorted(names, key=len, reverse=True):
            if self.text.startswith(name, self.pos):
                self.pos += len(name)
                return name
        raise self.error([*names, "(", "["])

    def exponent(self) -> int:
        match = _SUPER_NUMBER.match(self.text, self.pos)
        if match:
            self.pos = match.end()
            return int(match.group().translate(_SUPERSCRIPTS))
        if self.text.startswith("^", self.pos):
            self.pos += 1
            return self.number(signed=True)
        return 1


def parse_spec(text: str) -> GroupSpec:
    """parses a group spec, raising SpecSyntaxError with the offending offset"""
    parser = _Parser(text)
    node = parser.spec()
    if not parser.done():
        raise parser.error(["x", "^", "/", "end of input"])
    return node


def parse_presentation(text: str) -> Presentation:
    """parses an inline presentation <gens | relations>"""
    parser = _Parser(text)
    parser.skip()
    node = parser.presentation()
    if not parser.done():
        raise parser.error(["end of input"])
    return node


def parse_presentation_file(text: str) -> Presentation:
    """
    reads the file format: a 'gens: a b c' line, then one relation per line.
    '#' starts a comment.
    """
    names: list[str] | None = None
    relators: list[Word] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if names is None:
            if not line.lower().startswith("gens:"):
                raise PresentationFormatError(f"line {number}: expected 'gens: ...'")
            names = [n for n in re.split(r"[\s,]+", line[5:].strip()) if n]
            for name in names:
                if not _IDENTIFIER.fullmatch(name):
                    raise PresentationFormatError(f"line {number}: bad generator {name!r}")
            if not names:
                raise EmptyPresentation()
            continue
        parser = _Parser(line)
        try:
            relators += parser.relation(names)
            while parser.accept(","):
                relators += parser.relation(names)
            if not parser.done():
                raise parser.error(["=", ",", "end of line"])
        except SpecSyntaxError as e:
            raise PresentationFormatError(f"line {number}: {e}") from e
    if names is None:
        raise EmptyPresentation()
    return Presentation(tuple(names), tuple(relators))


# printer


def print_spec(node: GroupSpec) -> str:
    match node:
        case Atom("H", n):
            return f"Hn({n})"
        case Atom(kind, None):
            return kind
        case Atom(kind, n) if kind in ("D+", "D-"):
            return f"D{n}{kind[1]}"
        case Atom(kind, n):
            return f"{kind}{n}"
        case Product(left, right):
            lhs = _wrap(left, (Quotient,))
            rhs = _wrap(right, (Product, Quotient))
            return f"{lhs} x {rhs}"
        case Power(base, k):
            return f"{_wrap(base, (Product, Quotient, Power))}^{k}"
        case Semidirect(n, m, r):
            return f"sdp({n},{m},{r})"
        case Central(left, right):
            return f"y({print_spec(left)}, {print_spec(right)})"
        case Quotient(base, words):
            return f"{_wrap(base, (Quotient,))} / <{', '.join(map(print_word, words))}>"
        case Presentation(gens, rels):
            return f"<{', '.join(gens)} | {', '.join(map(print_word, rels))}>"
    raise TypeError(f"not a group spec node: {node!r}")


def _wrap(node: GroupSpec, kinds: tuple[type, ...]) -> str:
    text = print_spec(node)
    return f"({text})" if isinstance(node, kinds) else text


# coset enumeration


def todd_coxeter(
    p: Presentation, max_cosets: int = DEFAULT_MAX_COSETS, label: str | None = None
) -> FiniteGroup:
    """enumerates the cosets of the trivial subgroup and returns the regular action as a table"""
    if max_cosets < 1:
        raise BadParameter("max_cosets must be positive")
    F, *letters = free_group(", ".join(p.generators))
    lookup = dict(zip(p.generators, letters, strict=True))
    relators = []
    for word in p.relators:
        element = F.identity
        for name, e in word:
            element = element * lookup[name] ** e
        relators.append(element)
    try:
        C = coset_enumeration_r(FpGroup(F, relators), [], max_cosets=max_cosets)
    except ValueError as e:
        raise CosetOverflow(max_cosets) from e
    C.compress()
    C.standardize()
    columns = np.array(C.table, dtype=np.int64)
    n = columns.shape[0]
    logger.debug("enumeration of %s closed with %d cosets", label or "presentation", n)

    # coset i is the element reached from 0 along the recorded path
    mul = np.full((n, n), -1, dtype=np.int64)
    mul[:, 0] = np.arange(n)
    queue = [0]
    seen = {0}
    for parent in queue:
        for g in range(len(p.generators)):
            child = int(columns[parent, 2 * g])
            if child not in seen:
                seen.add(child)
                mul[:, child] = columns[mul[:, parent], 2 * g]
                queue.append(child)
    gens = {name: int(columns[0, 2 * g]) for g, name in enumerate(p.generators)}
    G = FiniteGroup(mul, label or print_spec(p), gens)
    for word in p.relators:
        if G.evaluate(word) != 0:
            raise PresentationFormatError(f"relator {print_word(word)} fails in the enumerated group")
    return G


# bundled groups


BUNDLED = {
    "DD": "<a, b, c | c a = a c, c b = b c, a^2 = b^2 = c^4 = 1, b a = c^2 a b>",
    "DD+": "<a, b, c | c a = a c, c b = b c, a^4 = b^2 = c^4 = 1, b a = c a^3 b>",
}


def h_presentation(n: int) -> Presentation:
    """
    <x, y1..yn | x^4 = x^2 yi^4 = yi^2 [x, yi] = [yi, yj] = 1>, the bracket read
    as x yi x^-1 yi^-1 so that the n = 1 group is Q16
    """
    if n < 1:
        raise BadParameter(f"Hn needs n >= 1, got {n}")
    ys = [f"y{i}" for i in range(1, n + 1)]
    relators: list[Word] = [(("x", 4),)]
    for y in ys:
        relators.append((("x", 2), (y, 4)))
        relators.append(((y, 2), ("x", 1), (y, 1), ("x", -1), (y, -1)))
    for i, yi in enumerate(ys):
        for yj in ys[i + 1 :]:
            relators.append(commutator(((yi, 1),), ((yj, 1),)))
    return Presentation(("x", *ys), tuple(relators))


def _is_power_of_two(m: int) -> bool:
    return m > 0 and m & (m - 1) == 0


def predicted_order(node: GroupSpec) -> int | None:
    """an upper bound known before materialisation, None for presented groups"""
    match node:
        case Atom("DD"):
            return 16
        case Atom("DD+") | Atom("D8YQ8"):
            return 32
        case Atom("H", n):
            return 4 ** (n + 1)
        case Atom(_, n):
            return n
        case Product(left, right):
            orders = [predicted_order(left), predicted_order(right)]
            return None if None in orders else prod(orders)
        case Power(base, k):
            order = predicted_order(base)
            return None if order is None else order**k
        case Semidirect(n, m, _):
            return n * m
        case Central(left, right):
            orders = [predicted_order(left), predicted_order(right)]
            return None if None in orders else prod(orders) // 2
        case Quotient(base, _):
            return predicted_order(base)
    return None


def resolve(
    node: GroupSpec | str,
    max_order: int = groups.DEFAULT_MAX_ORDER,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> FiniteGroup:
    """builds the group a spec describes, labelled by its canonical text"""
    if isinstance(node, str):
        node = parse_spec(node)
    order = predicted_order(node)
    if order is not None and order > max_order:
        raise GroupTooLarge(order, max_order)
    G = _build(node, max_cosets)
    if G.order > max_order:
        raise GroupTooLarge(G.order, max_order)
    return FiniteGroup(G.mul, print_spec(node), G.generators, validate=False)


def _build(node: GroupSpec, max_cosets: int) -> FiniteGroup:
    match node:
        case Atom("C", n):
            return groups.cyclic(n)
        case Atom("D", n):
            return groups.dihedral(n)
        case Atom("Q", n):
            return groups.dicyclic(n)
        case Atom(kind, m) if kind in ("D+", "D-"):
            if not _is_power_of_two(m) or m < 16:
                raise BadParameter(f"D{m}{kind[1]} needs a power of two >= 16")
            r = m // 4 + 1 if kind == "D+" else m // 4 - 1
            return groups.semidirect_cyclic(m // 2, 2, r)
        case Atom("DD" | "DD+" as kind):
            return todd_coxeter(parse_presentation(BUNDLED[kind]), max_cosets, kind)
        case Atom("D8YQ8"):
            return _central(groups.dihedral(8), groups.dicyclic(8))
        case Atom("H", n):
            return todd_coxeter(h_presentation(n), max_cosets, f"Hn({n})")
        case Atom(kind, _):
            raise UnknownAtom(f"{kind!r} does not name a bundled group")
        case Product(left, right):
            return groups.direct_product(_build(left, max_cosets), _build(right, max_cosets))
        case Power(base, k):
            return groups.direct_power(_build(base, max_cosets), k)
        case Semidirect(n, m, r):
            return groups.semidirect_cyclic(n, m, r)
        case Central(left, right):
            return _central(_build(left, max_cosets), _build(right, max_cosets))
        case Quotient(base, words):
            G = _build(base, max_cosets)
            N = groups.normal_closure(G, [G.evaluate(w) for w in words])
            return groups.quotient(G, N)
        case Presentation():
            return todd_coxeter(node, max_cosets)
    raise UnknownAtom(f"cannot resolve {node!r}")


def _central(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    return groups.central_product(G, groups.central_involution(G), H, groups.central_involution(H))
