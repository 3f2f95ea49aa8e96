"""
exact cyclotomic arithmetic and abelian number field descriptors.

every field in scope is a subfield of some Q(zeta_k), so a field is stored
as a conductor k plus the subgroup of (Z/k)^* fixing it, and elements are
coefficient vectors over the power basis of Q(zeta_k) modulo the k-th
cyclotomic polynomial. both are kept at their minimal conductor.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cache, cached_property
from math import gcd, lcm
from typing import Literal

import mpmath
from sympy import QQ, Matrix, Poly, Rational, Symbol, cyclotomic_poly, isprime
from sympy import jacobi_symbol, legendre_symbol, primefactors, totient
from sympy.ntheory.factor_ import core

from .errors import (
    BadGaloisIndex,
    BadParameter,
    DivisionByZero,
    EvenConductor,
    NotInField,
    NotQuadratic,
    SignUncertain,
)

logger = logging.getLogger(__name__)

INFINITY = "inf"
Place = int | Literal["inf"]

_x = Symbol("x")


@cache
def _modulus(k: int) -> Poly:
    return Poly(cyclotomic_poly(k, _x), _x, domain=QQ)


@cache
def _phi(k: int) -> int:
    return int(totient(k))


@cache
def units(k: int) -> tuple[int, ...]:
    """representatives of (Z/k)^*, with 0 standing for the unit of Z/1"""
    return tuple(t for t in range(k) if gcd(t, k) == 1)


@cache
def _kernel(k: int, m: int) -> tuple[int, ...]:
    """the units mod k that reduce to 1 mod m"""
    return tuple(t for t in units(k) if t % m == 1 % m)


def _to_poly(terms: dict[int, Fraction]) -> Poly:
    rep = {(e,): Rational(c.numerator, c.denominator) for e, c in terms.items() if c}
    if not rep:
        return Poly(0, _x, domain=QQ)
    return Poly.from_dict(rep, _x, domain=QQ)


def _from_poly(poly: Poly, k: int) -> tuple[Fraction, ...]:
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
    coeffs += [Fraction(0)] * (_phi(k) - len(coeffs))
    return tuple(coeffs[: _phi(k)])


@cache
def _descent(big: int, small: int) -> tuple[tuple[int, ...], tuple[tuple[Fraction, ...], ...]]:
    """pivot rows and inverse matrix rewriting Q(zeta_big) coordinates of an
    element of Q(zeta_small) into the power basis of Q(zeta_small)"""
    step = big // small
    columns = []
    for j in range(_phi(small)):
        poly = _to_poly({j * step: Fraction(1)}).rem(_modulus(big))
        columns.append(_from_poly(poly, big))
    basis = Matrix(_phi(big), _phi(small), lambda r, c: Rational(columns[c][r].numerator, columns[c][r].denominator))
    _, pivots = basis.T.rref()
    square = basis.extract(list(pivots), list(range(_phi(small))))
    inverse = square.inv()
    rows = tuple(
        tuple(Fraction(int(v.p), int(v.q)) for v in inverse.row(i)) for i in range(inverse.rows)
    )
    return tuple(pivots), rows


def _galois_terms(k: int, coeffs: tuple[Fraction, ...], t: int) -> dict[int, Fraction]:
    terms: dict[int, Fraction] = {}
    for j, c in enumerate(coeffs):
        if c:
            e = j * t % k
            terms[e] = terms.get(e, Fraction(0)) + c
    return terms


def _reduce(k: int, terms: dict[int, Fraction]) -> tuple[Fraction, ...]:
    return _from_poly(_to_poly(terms).rem(_modulus(k)), k)


def _minimize(k: int, coeffs: tuple[Fraction, ...]) -> tuple[int, tuple[Fraction, ...]]:
    if not any(coeffs[1:]):
        return 1, (coeffs[0],)
    m = k
    for p in primefactors(k):
        while m % p == 0:
            smaller = m // p
            fixed = all(
                _reduce(k, _galois_terms(k, coeffs, t)) == coeffs
                for t in _kernel(k, smaller)
            )
            if not fixed:
                break
            m = smaller
    if m == k:
        return k, coeffs
    pivots, inverse = _descent(k, m)
    picked = [coeffs[r] for r in pivots]
    return m, tuple(sum((a * b for a, b in zip(row, picked, strict=True)), Fraction(0)) for row in inverse)


class Cyclotomic:
    """an exact element of a cyclotomic field at its minimal conductor"""

    __slots__ = ("conductor", "coefficients")

    def __init__(self, conductor: int, coefficients: Iterable[Fraction]):
        k, coeffs = _minimize(conductor, tuple(Fraction(c) for c in coefficients))
        self.conductor = k
        self.coefficients = coeffs

    @classmethod
    def from_terms(cls, n: int, terms: dict[int, Fraction | int]) -> "Cyclotomic":
        """sum of c * zeta_n^e"""
        exact = {e % n: Fraction(c) for e, c in terms.items()}
        return cls(n, _reduce(n, exact))

    @classmethod
    def zeta(cls, n: int, e: int = 1) -> "Cyclotomic":
        return cls.from_terms(n, {e: 1})

    @classmethod
    def rational(cls, q: Fraction | int) -> "Cyclotomic":
        return cls(1, (Fraction(q),))

    @staticmethod
    def coerce(value: "Cyclotomic | Fraction | int") -> "Cyclotomic":
        if isinstance(value, Cyclotomic):
            return value
        return Cyclotomic.rational(value)

    def _lift(self, n: int) -> dict[int, Fraction]:
        step = n // self.conductor
        return {j * step: c for j, c in enumerate(self.coefficients) if c}

    def _combine(self, other: "Cyclotomic", product: bool) -> "Cyclotomic":
        n = lcm(self.conductor, other.conductor)
        left, right = _to_poly(self._lift(n)), _to_poly(other._lift(n))
        result = left * right if product else left + right
        return Cyclotomic(n, _from_poly(result.rem(_modulus(n)), n))

    def __add__(self, other):
        return self._combine(Cyclotomic.coerce(other), product=False)

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.conductor, tuple(-c for c in self.coefficients))

    def __sub__(self, other):
        return self + (-Cyclotomic.coerce(other))

    def __rsub__(self, other):
        return Cyclotomic.coerce(other) - self

    def __mul__(self, other):
        return self._combine(Cyclotomic.coerce(other), product=True)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero:
            raise DivisionByZero()
        k = self.conductor
        inverted = _to_poly(self._lift(k)).invert(_modulus(k))
        return Cyclotomic(k, _from_poly(inverted, k))

    def __truediv__(self, other):
        return self * Cyclotomic.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "Cyclotomic":
        base = self if e >= 0 else self.inverse()
        result = Cyclotomic.rational(1)
        for _ in range(abs(e)):
            result = result * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = Cyclotomic.rational(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.conductor == other.conductor and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.conductor, self.coefficients))

    def __repr__(self) -> str:
        return f"Cyclotomic({self})"

    def __str__(self) -> str:
        if self.is_rational:
            return _rational_text(self.value)
        k = self.conductor
        parts = []
        for j, c in enumerate(self.coefficients):
            if not c:
                continue
            root = "1" if j == 0 else f"zeta{k}" if j == 1 else f"zeta{k}^{j}"
            if j == 0:
                term = _rational_text(abs(c))
            elif abs(c) == 1:
                term = root
            else:
                term = f"{_rational_text(abs(c))}*{root}"
            parts.append(("-" if c < 0 else "+", term))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    @property
    def value(self) -> Fraction:
        """the rational value, only for rational elements"""
        if not self.is_rational:
            raise NotInField(f"{self} is not rational")
        return self.coefficients[0]

    def galois_apply(self, t: int) -> "Cyclotomic":
        """applies zeta -> zeta^t"""
        k = self.conductor
        if gcd(t, k) != 1:
            raise BadGaloisIndex(t, k)
        if k == 1:
            return self
        return Cyclotomic(k, _reduce(k, _galois_terms(k, self.coefficients, t % k)))

    def conjugate(self) -> "Cyclotomic":
        return self.galois_apply(-1)

    def as_root_multiple(self) -> "RootMultiple | None":
        """writes the element as q * zeta_n^e with q > 0 rational, when possible"""
        if self.is_zero:
            return None
        if self.is_rational:
            q = self.value
            return RootMultiple(abs(q), 2, 1) if q < 0 else RootMultiple(q, 1, 0)
        k = self.conductor
        order = k if k % 2 == 0 else 2 * k
        for e in range(1, order):
            candidate = self * Cyclotomic.zeta(order, -e)
            if candidate.is_rational and candidate.value > 0:
                g = gcd(e, order)
                return RootMultiple(candidate.value, order // g, e // g)
        return None


def _rational_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RootMultiple:
    """q * zeta_order^exponent with q > 0 and exponent a unit mod order"""

    q: Fraction
    order: int
    exponent: int

    @property
    def element(self) -> Cyclotomic:
        return Cyclotomic.zeta(self.order, self.exponent) * self.q

    @property
    def is_root_of_unity(self) -> bool:
        return self.q == 1

    @property
    def text(self) -> str:
        root = _root_text(self.order, self.exponent)
        if self.order == 1:
            return _rational_text(self.q)
        if self.order == 2:
            return _rational_text(-self.q)
        if self.q == 1:
            return root
        if root.startswith("-"):
            return f"-{_rational_text(self.q)}*{root[1:]}"
        return f"{_rational_text(self.q)}*{root}"


def _root_text(order: int, exponent: int) -> str:
    if order == 1:
        return "1"
    if order == 2:
        return "-1"
    if order == 4:
        return "i" if exponent == 1 else "-i"
    return f"zeta{order}" if exponent == 1 else f"zeta{order}^{exponent}"


def _subgroup_closure(k: int, generators: Iterable[int]) -> frozenset[int]:
    one = 1 % k
    elements = {one}
    frontier = [one]
    gens = [g % k for g in generators]
    for g in gens:
        if gcd(g, k) != 1:
            raise BadGaloisIndex(g, k)
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                b = a * g % k
                if b not in elements:
                    elements.add(b)
                    fresh.append(b)
        frontier = fresh
    return frozenset(elements)


def _small_generators(k: int, subgroup: frozenset[int]) -> list[int]:
    gens: list[int] = []
    span = _subgroup_closure(k, gens)
    for t in sorted(subgroup):
        if t not in span:
            gens.append(t)
            span = _subgroup_closure(k, gens)
    return gens


@dataclass(frozen=True, init=False)
class AbelianFieldDescriptor:
    """the fixed field of a subgroup S of (Z/k)^* inside Q(zeta_k), kept at minimal conductor"""

    conductor: int
    subgroup: frozenset[int]

    def __init__(self, conductor: int, generators: Iterable[int] = ()):
        if conductor < 1:
            raise BadParameter(f"conductor must be positive, got {conductor}")
        k = conductor
        S = _subgroup_closure(k, generators)
        for p in primefactors(k):
            while k % p == 0:
                m = k // p
                if not all(t in S for t in _kernel(k, m)):
                    break
                S = frozenset(t % m for t in S)
                k = m
        object.__setattr__(self, "conductor", k)
        object.__setattr__(self, "subgroup", S)

    @classmethod
    def rationals(cls) -> "AbelianFieldDescriptor":
        return cls(1)

    @classmethod
    def cyclotomic(cls, n: int) -> "AbelianFieldDescriptor":
        return cls(n)

    @classmethod
    def real_cyclotomic(cls, n: int) -> "AbelianFieldDescriptor":
        """Q(zeta_n + zeta_n^-1)"""
        return cls(n, [-1])

    @classmethod
    def quadratic_field(cls, d: int) -> "AbelianFieldDescriptor":
        """Q(sqrt d) for a squarefree d != 1"""
        if d in (0, 1) or core(abs(d)) != abs(d):
            raise BadParameter(f"{d} is not a squarefree integer other than 0, 1")
        disc = d if d % 4 == 1 else 4 * d
        k = abs(disc)
        if disc % 2:
            kernel = [t for t in units(k) if _jacobi(t, k) == 1]
        else:
            kernel = [t for t in units(k) if _jacobi(d, t) == 1]
        return cls(k, kernel)

    def __repr__(self) -> str:
        return f"AbelianFieldDescriptor({self.name})"

    @cached_property
    def degree(self) -> int:
        return _phi(self.conductor) // len(self.subgroup)

    @cached_property
    def generators(self) -> list[int]:
        return _small_generators(self.conductor, self.subgroup)

    @property
    def is_rational(self) -> bool:
        return self.conductor == 1

    @property
    def is_full_cyclotomic(self) -> bool:
        return len(self.subgroup) == 1

    def is_totally_real(self) -> bool:
        return -1 % self.conductor in self.subgroup

    def preimage(self, n: int) -> frozenset[int]:
        """the subgroup of (Z/n)^* fixing this field, for a multiple n of the conductor"""
        if n % self.conductor:
            raise BadParameter(f"{n} is not a multiple of {self.conductor}")
        return frozenset(t for t in units(n) if t % self.conductor in self.subgroup)

    def compositum(self, other: "AbelianFieldDescriptor") -> "AbelianFieldDescriptor":
        n = lcm(self.conductor, other.conductor)
        return AbelianFieldDescriptor(n, self.preimage(n) & other.preimage(n))

    def intersection(self, other: "AbelianFieldDescriptor") -> "AbelianFieldDescriptor":
        n = lcm(self.conductor, other.conductor)
        return AbelianFieldDescriptor(n, self.preimage(n) | other.preimage(n))

    def is_subfield_of(self, other: "AbelianFieldDescriptor") -> bool:
        n = lcm(self.conductor, other.conductor)
        return other.preimage(n) <= self.preimage(n)

    def contains(self, x: Cyclotomic) -> bool:
        n = lcm(self.conductor, x.conductor)
        actions = {t % x.conductor for t in self.preimage(n)}
        return all(x.galois_apply(t) == x for t in actions)

    def contains_root(self, n: int) -> bool:
        """whether zeta_n lies in the field"""
        return AbelianFieldDescriptor.cyclotomic(n).is_subfield_of(self)

    def contains_sqrt(self, d: int) -> bool:
        """whether sqrt(d) lies in the field, for a squarefree integer d"""
        if d == 1:
            return True
        return AbelianFieldDescriptor.quadratic_field(d).is_subfield_of(self)

    def embedding_indices(self) -> list[int]:
        """smallest t of each coset of S, one per embedding zeta_k -> zeta_k^t"""
        seen: set[int] = set()
        reps = []
        for t in units(self.conductor):
            if t in seen:
                continue
            reps.append(t)
            seen |= {t * s % self.conductor for s in self.subgroup}
        return reps

    @property
    def name(self) -> str:
        return field_name(self)

    @property
    def pretty(self) -> str:
        return field_name(self, pretty=True)


def _jacobi(a: int, n: int) -> int:
    return int(jacobi_symbol(a, n))


def quadratic_identity(F: AbelianFieldDescriptor) -> int:
    """the squarefree d with F = Q(sqrt d)"""
    if F.degree != 2:
        raise NotQuadratic(f"{F.conductor}, {sorted(F.subgroup)} has degree {F.degree}")
    k = F.conductor
    sign = 1 if F.is_totally_real() else -1
    d = sign * k if k % 2 else sign * (k // 4)
    if core(abs(d)) != abs(d) or AbelianFieldDescriptor.quadratic_field(d) != F:
        raise NotQuadratic(f"no quadratic discriminant matches conductor {k}")
    return d


def field_name(F: AbelianFieldDescriptor, pretty: bool = False) -> str:
    Q = "ℚ" if pretty else "Q"
    zeta = "ζ" if pretty else "zeta"
    k = F.conductor
    if F.degree == 1:
        return Q
    if F.degree == 2:
        d = quadratic_identity(F)
        if d == -1:
            return f"{Q}(i)"
        return f"{Q}(√{d})" if pretty else f"{Q}(sqrt{d})"
    if F.is_full_cyclotomic:
        return f"{Q}({zeta}{k})"
    if F.subgroup == frozenset({1, k - 1}):
        inverse = "⁻¹" if pretty else "^-1"
        return f"{Q}({zeta}{k}+{zeta}{k}{inverse})"
    gens = ",".join(str(g) for g in F.generators)
    return f"{Q}({zeta}{k})^<{gens}>"


def embedding_signs(
    x: Cyclotomic, F: AbelianFieldDescriptor, precision: int = 64, cap: int = 1024
) -> list[int]:
    """sign of x under each real embedding of a totally real F"""
    if not F.is_totally_real():
        raise BadParameter(f"{F.name} has no real embeddings")
    if x.is_zero:
        raise BadParameter("zero has no sign")
    if not F.contains(x):
        raise NotInField(f"{x} does not lie in {F.name}")
    reps = F.embedding_indices()
    if x.is_rational:
        return [1 if x.value > 0 else -1] * len(reps)
    return [_certified_sign(x, t, precision, cap) for t in reps]


def _certified_sign(x: Cyclotomic, t: int, precision: int, cap: int) -> int:
    k = x.conductor
    mass = sum(abs(c) for c in x.coefficients)
    prec = precision
    while prec <= cap:
        with mpmath.workprec(prec):
            total = mpmath.mpf(0)
            for j, c in enumerate(x.coefficients):
                if c:
                    angle = 2 * mpmath.pi * (j * t % k) / k
                    total += mpmath.mpf(c.numerator) / c.denominator * mpmath.cos(angle)
            bound = mpmath.mpf(int(mass) + 1) * mpmath.ldexp(1, 8 - prec)
            if abs(total) > bound:
                return 1 if total > 0 else -1
        logger.debug("sign of %s unresolved at %d bits", x, prec)
        prec *= 2
    raise SignUncertain(cap)


def _split_valuation(n: int, p: int) -> tuple[int, int]:
    alpha = 0
    while n % p == 0:
        n //= p
        alpha += 1
    return alpha, n


def hilbert_symbol_Q(a: Fraction | int, b: Fraction | int, place: Place) -> int:
    """the local hilbert symbol (a, b)_v over Q"""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise BadParameter("hilbert symbol needs nonzero arguments")
    if place == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    if not isprime(p):
        raise BadParameter(f"{place} is not a place of Q")
    # a*den^2 lies in the same square class as a
    alpha, u = _split_valuation(a.numerator * a.denominator, p)
    beta, v = _split_valuation(b.numerator * b.denominator, p)
    if p == 2:

        def eps(n: int) -> int:
            return (n - 1) // 2 % 2

        def omega(n: int) -> int:
            return (n * n - 1) // 8 % 2

        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    sign = -1 if alpha * beta * ((p - 1) // 2) % 2 else 1
    lu = int(legendre_symbol(u % p, p))
    lv = int(legendre_symbol(v % p, p))
    return sign * lu**beta * lv**alpha


def hilbert_places(a: Fraction | int, b: Fraction | int) -> list[Place]:
    """the places where (a, b) can ramify: 2, the odd primes of a and b, infinity"""
    a, b = Fraction(a), Fraction(b)
    primes = {2}
    for q in (a.numerator, a.denominator, b.numerator, b.denominator):
        primes |= set(primefactors(abs(q)))
    return [*sorted(primes), INFINITY]


def hilbert_product(a: Fraction | int, b: Fraction | int) -> int:
    result = 1
    for place in hilbert_places(a, b):
        result *= hilbert_symbol_Q(a, b, place)
    return result


def frobenius_order_at_2(F: AbelianFieldDescriptor) -> int:
    """residue degree of 2 in F: the order of 2 in (Z/k)^*/S"""
    k = F.conductor
    if k % 2 == 0:
        raise EvenConductor(f"conductor {k} of {F.name} is even")
    f, v = 1, 2 % k
    while v not in F.subgroup:
        v = v * 2 % k
        f += 1
    return f


def _two_part(order: int, exponent: int) -> int:
    """order of the 2-power part of zeta_order^exponent"""
    if order == 1:
        return 1
    two = 1
    while order % (2 * two) == 0:
        two *= 2
    odd = order // two
    if two == 1:
        return 1
    e2 = exponent * odd * pow(odd, -1, two) % order
    return order // gcd(e2, order) if e2 else 1


def is_square_in_field(u: Cyclotomic, F: AbelianFieldDescriptor) -> bool | None:
    """True or False when decidable from u = q * root of unity, None otherwise"""
    rm = u.as_root_multiple()
    if rm is None:
        return None
    s = int(core(rm.q.numerator * rm.q.denominator))
    two = _two_part(rm.order, rm.exponent)
    if two <= 2:
        d = -s if two == 2 else s
        return F.contains_sqrt(d)
    if F.contains_root(2 * two):
        return F.contains_sqrt(s)
    return None


class DivisionStatus(str, Enum):
    division = "division"
    split = "split"
    unknown = "unknown"


def _square_class(x: Cyclotomic, F: AbelianFieldDescriptor) -> Cyclotomic:
    """a canonical representative of x modulo squares of F, for x = q * root"""
    rm = x.as_root_multiple()
    if rm is None:
        return x
    s = int(core(rm.q.numerator * rm.q.denominator))
    two = _two_part(rm.order, rm.exponent)
    if two == 2:
        s, two = -s, 1
    if two >= 4 and F.contains_root(2 * two):
        two = 1
    if two >= 4:
        s = abs(s)
        if F.contains_sqrt(s):
            s = 1
        return Cyclotomic.zeta(two) * s
    if F.contains_sqrt(s):
        return Cyclotomic.rational(1)
    if F.contains_root(4):
        return Cyclotomic.rational(-abs(s)) if abs(s) != 1 else Cyclotomic.rational(1)
    if s != -1 and F.contains_sqrt(-s):
        return Cyclotomic.rational(-1)
    return Cyclotomic.rational(s)


def _entry_key(x: Cyclotomic) -> tuple:
    rm = x.as_root_multiple()
    if rm is None:
        return (2, str(x))
    return (0 if rm.is_root_of_unity else 1, rm.q, str(x))


def element_text(x: Cyclotomic) -> str:
    rm = x.as_root_multiple()
    return rm.text if rm is not None else str(x)


@dataclass(frozen=True)
class QuaternionSymbol:
    """the quaternion algebra (u, c / F)"""

    field: AbelianFieldDescriptor
    u: Cyclotomic
    c: Cyclotomic

    def __post_init__(self):
        for entry in (self.u, self.c):
            if entry.is_zero:
                raise NotInField("quaternion symbol entries must be nonzero")
            if not self.field.contains(entry):
                raise NotInField(f"{entry} does not lie in {self.field.name}")

    def normalized(self) -> "QuaternionSymbol":
        """square classes reduced, the root of unity entry first"""
        u = _square_class(self.u, self.field)
        c = _square_class(self.c, self.field)
        if _entry_key(c) < _entry_key(u):
            u, c = c, u
        return QuaternionSymbol(self.field, u, c)

    @property
    def is_hamiltonian(self) -> bool:
        return self.u == -1 and self.c == -1

    def over(self, field: AbelianFieldDescriptor) -> "QuaternionSymbol":
        """the same symbol over an extension field"""
        return QuaternionSymbol(field, self.u, self.c)

    @property
    def name(self) -> str:
        if self.is_hamiltonian:
            return f"H({self.field.name})"
        return f"({element_text(self.u)},{element_text(self.c)}/{self.field.name})"

    @property
    def pretty(self) -> str:
        if self.is_hamiltonian:
            return f"ℍ({self.field.pretty})"
        u = element_text(self.u).replace("zeta", "ζ")
        c = element_text(self.c).replace("zeta", "ζ")
        return f"({u},{c}/{self.field.pretty})"
