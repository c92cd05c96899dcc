"""Exact commutative (semi)ring arithmetic.

Every ring is a small immutable descriptor object; elements are plain,
hashable Python values (ints, the tropical ``INF`` sentinel, or ``Poly``)
so that structural equality of canonical forms is element equality.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Mapping


class AlgebraError(ValueError):
    """Malformed literal, foreign element, or operation outside the regime."""


class RegimeError(AlgebraError):
    """An operation needs negatives but the active structure is a semiring."""


SEMIRING = "semiring"
RING = "ring"


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class Ring:
    """Base descriptor. Subclasses fill in the element operations."""

    name: str = "?"
    regime: str = SEMIRING
    zero: object = 0
    one: object = 1

    @property
    def is_ring(self) -> bool:
        return self.regime == RING

    @property
    def is_polynomial(self) -> bool:
        return False

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise RegimeError(f"{self.name} is a semiring: no additive inverses")

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def eq(self, x, y) -> bool:
        return x == y

    def is_zero(self, x) -> bool:
        return self.eq(x, self.zero)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def sample(self, rng: random.Random):
        raise NotImplementedError

    def from_int(self, k: int):
        """Image of the integer ``k`` (``k`` copies of one, negated if k < 0)."""
        if k < 0:
            return self.neg(self.from_int(-k))
        result, base = self.zero, self.one
        while k:
            if k & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            k >>= 1
        return result

    def sum(self, xs: Iterable):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    def prod(self, xs: Iterable):
        total = self.one
        for x in xs:
            total = self.mul(total, x)
        return total

    def power(self, x, k: int):
        result = self.one
        for _ in range(k):
            result = self.mul(result, x)
        return result

    def check(self, x):
        if not self.contains(x):
            raise AlgebraError(f"{x!r} is not an element of {self.name}")
        return x

    def __repr__(self):
        return f"<ring {self.name}>"


_SIGNED = re.compile(r"[+-]?\d+\Z")
_UNSIGNED = re.compile(r"\d+\Z")


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


@dataclass(frozen=True, repr=False)
class IntegerRing(Ring):
    name = "int"
    regime = RING

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def contains(self, x):
        return _is_int(x)

    def parse(self, text):
        text = text.strip()
        if not _SIGNED.match(text):
            raise AlgebraError(f"not an integer literal: {text!r}")
        return int(text)

    def sample(self, rng):
        return rng.randint(-9, 9)


@dataclass(frozen=True, repr=False)
class NaturalSemiring(Ring):
    name = "nat"

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def contains(self, x):
        return _is_int(x) and x >= 0

    def parse(self, text):
        text = text.strip()
        if not _UNSIGNED.match(text):
            raise AlgebraError(f"not a natural-number literal: {text!r}")
        return int(text)

    def sample(self, rng):
        return rng.randint(0, 9)


@dataclass(frozen=True, repr=False)
class BooleanSemiring(Ring):
    name = "bool"

    def add(self, x, y):
        return x | y

    def mul(self, x, y):
        return x & y

    def contains(self, x):
        return _is_int(x) and x in (0, 1)

    def parse(self, text):
        text = text.strip()
        if text not in ("0", "1"):
            raise AlgebraError(f"boolean literal must be 0 or 1, got {text!r}")
        return int(text)

    def sample(self, rng):
        return rng.randint(0, 1)


@dataclass(frozen=True, repr=False)
class ModularRing(Ring):
    modulus: int = 2
    regime = RING

    def __post_init__(self):
        if self.modulus < 2:
            raise AlgebraError(f"modulus must be >= 2, got {self.modulus}")

    @property
    def name(self):
        return f"mod:{self.modulus}"

    def add(self, x, y):
        return (x + y) % self.modulus

    def mul(self, x, y):
        return (x * y) % self.modulus

    def neg(self, x):
        return -x % self.modulus

    def from_int(self, k):
        return k % self.modulus

    def contains(self, x):
        return _is_int(x) and 0 <= x < self.modulus

    def parse(self, text):
        text = text.strip()
        if not _UNSIGNED.match(text):
            raise AlgebraError(f"not a residue literal: {text!r}")
        return int(text) % self.modulus

    def sample(self, rng):
        return rng.randrange(self.modulus)


@dataclass(frozen=True, repr=False)
class TropicalSemiring(Ring):
    """Min-plus semiring: ``add`` is min, ``mul`` is +, zero is ``INF``."""

    name = "tropical"
    zero = INF
    one = 0

    def add(self, x, y):
        if x is INF:
            return y
        if y is INF:
            return x
        return min(x, y)

    def mul(self, x, y):
        if x is INF or y is INF:
            return INF
        return x + y

    def contains(self, x):
        return x is INF or _is_int(x)

    def parse(self, text):
        text = text.strip()
        if text == "inf":
            return INF
        if not _SIGNED.match(text):
            raise AlgebraError(f"not a tropical literal: {text!r}")
        return int(text)

    def format(self, x):
        return "inf" if x is INF else str(x)

    def sample(self, rng):
        return INF if rng.random() < 0.15 else rng.randint(-5, 9)


# -- polynomials -------------------------------------------------------------


@dataclass(frozen=True)
class Poly:
    """A polynomial in canonical form.

    ``terms`` holds ``(exponents, coeff)`` pairs with nonzero coefficients,
    sorted by descending total degree and then descending exponent vector.
    ``natural`` marks the natural-coefficient (semiring) flavour.
    """

    variables: tuple[str, ...]
    terms: tuple[tuple[tuple[int, ...], int], ...]
    natural: bool = False

    def __str__(self):
        return format_poly(self)


def _monomial_key(exps):
    return (-sum(exps), tuple(-e for e in exps))


def make_poly(variables, coeffs: Mapping[tuple, int], natural=False) -> Poly:
    terms = tuple(sorted(((e, c) for e, c in coeffs.items() if c != 0),
                         key=lambda t: _monomial_key(t[0])))
    return Poly(tuple(variables), terms, natural)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exps, coeff in p.terms:
        factors = []
        for var, e in zip(p.variables, exps):
            if e == 1:
                factors.append(var)
            elif e > 1:
                factors.append(f"{var}^{e}")
        if not factors:
            body = str(abs(coeff))
        elif abs(coeff) == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(abs(coeff))] + factors)
        sign = "-" if coeff < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += sign + body
    return out


_VAR = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, repr=False)
class PolynomialRing(Ring):
    """Free commutative (semi)ring on named variables.

    Integer coefficients give a ring; natural coefficients give a semiring.
    An identity checked here holds in every commutative (semi)ring.
    """

    variables: tuple[str, ...] = ()
    natural: bool = False

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise AlgebraError(f"duplicate variables in {self.variables}")
        for v in self.variables:
            if not _VAR.match(v) or v == "inf":
                raise AlgebraError(f"bad variable name {v!r}")

    @property
    def name(self):
        kind = "poly-nat" if self.natural else "poly-int"
        return f"{kind}:{','.join(self.variables)}"

    @property
    def regime(self):
        return SEMIRING if self.natural else RING

    @property
    def is_polynomial(self):
        return True

    @property
    def zero(self):
        return make_poly(self.variables, {}, self.natural)

    @property
    def one(self):
        return self.constant(1)

    def constant(self, c: int) -> Poly:
        return make_poly(self.variables, {(0,) * len(self.variables): c}, self.natural)

    def var(self, name: str) -> Poly:
        if name not in self.variables:
            raise AlgebraError(f"{name!r} is not a variable of {self.name}")
        exps = tuple(int(v == name) for v in self.variables)
        return make_poly(self.variables, {exps: 1}, self.natural)

    def with_variables(self, extra: Iterable[str]) -> PolynomialRing:
        names = list(self.variables)
        for v in extra:
            if v not in names:
                names.append(v)
        return PolynomialRing(tuple(names), self.natural)

    def _check_pair(self, x, y):
        if not (self.contains(x) and self.contains(y)):
            raise AlgebraError(f"operands must belong to {self.name}")

    def add(self, x, y):
        self._check_pair(x, y)
        acc = dict(x.terms)
        for e, c in y.terms:
            acc[e] = acc.get(e, 0) + c
        return make_poly(self.variables, acc, self.natural)

    def mul(self, x, y):
        self._check_pair(x, y)
        acc: dict = {}
        for e1, c1 in x.terms:
            for e2, c2 in y.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return make_poly(self.variables, acc, self.natural)

    def neg(self, x):
        if self.natural:
            return super().neg(x)
        return make_poly(self.variables, {e: -c for e, c in x.terms}, False)

    def from_int(self, k):
        if k < 0 and self.natural:
            raise RegimeError(f"{self.name} has no negative constants")
        return self.constant(k)

    def contains(self, x):
        return (isinstance(x, Poly) and x.variables == self.variables
                and x.natural == self.natural)

    def format(self, x):
        return format_poly(x)

    def parse(self, text):
        return parse_poly(text, self.variables, self.natural)

    def sample(self, rng):
        acc = {}
        for _ in range(rng.randint(0, 3)):
            exps = tuple(rng.randint(0, 2) for _ in self.variables)
            lo = 0 if self.natural else -3
            acc[exps] = acc.get(exps, 0) + rng.randint(lo, 3)
        return make_poly(self.variables, acc, self.natural)


_POLY_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def parse_poly(text: str, variables: tuple[str, ...], natural: bool) -> Poly:
    """Parse ``term (('+'|'-') term)*`` with ``term = [coeff] ('*' factor)*``.

    A factor is a variable optionally raised with ``^k``; a term may also
    start directly with a variable (implicit coefficient 1).
    """
    tokens = []
    for num, name, other in _POLY_TOKEN.findall(text):
        if num:
            tokens.append(("num", int(num)))
        elif name:
            tokens.append(("var", name))
        elif other.strip():
            tokens.append(("op", other))
    if not tokens:
        raise AlgebraError(f"empty polynomial literal {text!r}")
    index = {v: i for i, v in enumerate(variables)}
    acc: dict = {}
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    sign = 1
    while True:
        kind, val = peek()
        if kind == "op" and val in "+-":
            if val == "-":
                if natural:
                    raise AlgebraError(f"negative term in natural polynomial {text!r}")
                sign = -sign
            pos += 1
            continue
        coeff = 1
        exps = [0] * len(variables)
        expect_factor = True
        while expect_factor:
            kind, val = peek()
            if kind == "num":
                coeff *= val
                pos += 1
            elif kind == "var":
                if val not in index:
                    raise AlgebraError(f"unknown variable {val!r} in {text!r}")
                pos += 1
                power = 1
                if peek() == ("op", "^"):
                    pos += 1
                    kind2, val2 = peek()
                    if kind2 != "num":
                        raise AlgebraError(f"expected exponent in {text!r}")
                    power = val2
                    pos += 1
                exps[index[val]] += power
            else:
                raise AlgebraError(f"malformed polynomial literal {text!r}")
            if peek() == ("op", "*"):
                pos += 1
            else:
                expect_factor = False
        key = tuple(exps)
        acc[key] = acc.get(key, 0) + sign * coeff
        sign = 1
        kind, val = peek()
        if kind is None:
            break
        if not (kind == "op" and val in "+-"):
            raise AlgebraError(f"malformed polynomial literal {text!r}")
    return make_poly(variables, acc, natural)


# -- descriptors -------------------------------------------------------------


def ring_from_descriptor(text: str) -> Ring:
    """``int``, ``nat``, ``bool``, ``mod:<n>``, ``tropical``,
    ``poly-int:<vars>`` or ``poly-nat:<vars>``."""
    text = text.strip()
    simple = {"int": IntegerRing, "nat": NaturalSemiring,
              "bool": BooleanSemiring, "tropical": TropicalSemiring}
    if text in simple:
        return simple[text]()
    head, sep, tail = text.partition(":")
    if sep and head == "mod":
        if not _UNSIGNED.match(tail):
            raise AlgebraError(f"bad modulus in {text!r}")
        return ModularRing(int(tail))
    if head in ("poly-int", "poly-nat"):
        names = tuple(v.strip() for v in tail.split(",") if v.strip())
        return PolynomialRing(names, natural=(head == "poly-nat"))
    raise AlgebraError(f"unknown ring descriptor {text!r}")


def parse_element(ring: Ring | str, text: str):
    if isinstance(ring, str):
        ring = ring_from_descriptor(ring)
    return ring.parse(text)


def substitute(value: Poly, assignment: Mapping[str, object], target: Ring):
    """Evaluate a polynomial under ``assignment`` using ``target`` arithmetic."""
    if not isinstance(value, Poly):
        raise AlgebraError(f"substitute expects a polynomial, got {value!r}")
    if not value.natural and not target.is_ring:
        raise RegimeError(
            f"integer-coefficient polynomial cannot be specialised into semiring {target.name}")
    missing = [v for v in value.variables if v not in assignment]
    if missing:
        raise AlgebraError(f"unbound variables: {', '.join(missing)}")
    images = [target.check(assignment[v]) for v in value.variables]
    total = target.zero
    for exps, coeff in value.terms:
        term = target.from_int(coeff)
        for img, e in zip(images, exps):
            if e:
                term = target.mul(term, target.power(img, e))
        total = target.add(total, term)
    return total


STANDARD_RINGS = ("int", "nat", "bool", "mod:6", "tropical")
