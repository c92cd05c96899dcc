"""Rewrite-rule catalogs for rings and semirings, a soundness checker, and
the derived-equality (lemma) fixtures.

Each equation is a schema: discrete parameters (arities, red phases
``sigma, tau`` in ``{0, pi}``, variants) are enumerated up to an arity bound,
and phase variables are bound to fresh polynomial indeterminates, so one
passing check holds in every commutative (semi)ring.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Callable, Iterable

from .algebra import AlgebraError, PolynomialRing, RegimeError, Ring, ring_from_descriptor
from .diagram import (AND, CAP, CUP, EMPTY, H, ID, P, SWAP, TINV, T, X, Z, AND_PRIMITIVE,
                      Diagram, on_wires, par, seq, tensor_power, transpose)
from .gadgets import pi_conjugate, row_add_gadget, row_mult_gadget
from .interp import evaluate, first_difference
from .normalform import canonical_subsets, scalar_diagram, synthesize_state

DEFAULT_ARITY_BOUND = 3
PI = 1

BOTH = "both"
RING_ONLY = "ring"
SEMIRING_ONLY = "semiring"


def default_arity_bound() -> int:
    return int(os.environ.get("ZXALG_ARITY_BOUND", DEFAULT_ARITY_BOUND))


@dataclass(frozen=True)
class Equation:
    """A named two-sided schema.

    ``domain(bound)`` lists the admissible discrete assignments;
    ``build(ring, params)`` returns ``(lhs, rhs)`` once every discrete
    parameter and phase variable in ``params`` is bound.
    """

    name: str
    regime: str
    phase_vars: tuple[str, ...]
    domain: Callable[[int], list[dict]]
    build: Callable[[Ring, dict], tuple[Diagram, Diagram]]
    source: str = ""
    flipped: bool = False
    arity_params: tuple[str, ...] = ()

    @property
    def ring_only(self) -> bool:
        return self.regime == RING_ONLY


class RewriteRule(Equation):
    pass


class LemmaFixture(Equation):
    pass


def flip_of(rule: Equation) -> Equation:
    def build(ring, params, _inner=rule.build):
        lhs, rhs = _inner(ring, params)
        return transpose(lhs), transpose(rhs)

    return replace(rule, name=f"{rule.name}.flip", build=build, flipped=True)


# -- building blocks ----------------------------------------------------------


def red_phase(n: int, m: int, sigma: int) -> Diagram:
    """Red spider with phase ``0`` or ``pi``; the ``pi`` is a ``P`` on one leg."""
    if not sigma:
        return X(n, m)
    if m:
        return seq(X(n, m), on_wires(P, 0, m - 1))
    if n:
        return seq(on_wires(P, 0, n - 1), X(n, 0))
    return seq(X(0, 1), P, X(1, 0))


def red_one() -> Diagram:
    """The state ``|1>``."""
    return seq(X(0, 1), P)


def flipped_triangle() -> Diagram:
    return transpose(T)


def add_node(ring: Ring) -> Diagram:
    """``2 -> 1`` map ``|00> -> |0>``, ``|01>, |10> -> |1>``, ``|11> -> 0``:
    the row multiplication by zero followed by XOR."""
    return seq(row_mult_gadget(2, ring.zero, ring), X(2, 1))


def split_node(ring: Ring) -> Diagram:
    return transpose(add_node(ring))


def _range(bound, lo=0):
    return range(lo, bound + 1)


def _grid(bound, *names, lo=0):
    return [dict(zip(names, vals)) for vals in product(_range(bound, lo), repeat=len(names))]


def _single(_bound):
    return [{}]


def _variants(*names):
    return lambda _bound: [{"variant": v} for v in names]


def _c(ring, k):
    return ring.from_int(k)


# -- rule builders -----------------------------------------------------------


def _s1(ring, p):
    n, k, m = p["n"], p["p"], p["m"]
    lhs = seq(Z(n, 1 + k, p["a"]), on_wires(Z(1, m, p["b"]), 0, k))
    return lhs, Z(n, m + k, ring.mul(p["a"], p["b"]))


def _s2(ring, p):
    if p["variant"] == "green":
        return Z(1, 1, ring.one), ID
    return X(1, 1), ID


def _s3(ring, p):
    v = p["variant"]
    if v == "snake":
        return seq(par(CAP, ID), par(ID, CUP)), ID
    if v == "green":
        return Z(0, 2, ring.one), CAP
    return X(0, 2), CAP


def _s4(ring, p):
    n, m, s, t = p["n"], p["m"], p["sigma"], p["tau"]
    return seq(red_phase(n, 1, s), red_phase(1, m, t)), red_phase(n, m, (s + t) % 2)


def _b1(ring, p):
    return seq(X(0, 1), Z(1, p["m"], ring.one)), tensor_power(X(0, 1), p["m"])


def _b1_prime(ring, p):
    return seq(X(0, 1), Z(1, p["m"], p["a"])), tensor_power(X(0, 1), p["m"])


def _b2(ring, p):
    one = ring.one
    lhs = seq(X(2, 1), Z(1, 2, one))
    rhs = seq(par(Z(1, 2, one), Z(1, 2, one)), par(ID, SWAP, ID), par(X(2, 1), X(2, 1)))
    return lhs, rhs


def _b3(ring, p):
    return seq(red_one(), Z(1, p["m"], ring.one)), tensor_power(red_one(), p["m"])


def _ept(ring, p):
    return seq(X(0, 1), Z(1, 0, p["a"])), EMPTY


def _eu(ring, p):
    return H, seq(T, Z(1, 1, _c(ring, -2)), flipped_triangle())


def _h(ring, p):
    return seq(P, H), seq(H, Z(1, 1, _c(ring, -1)))


def _bas0(ring, p):
    return seq(X(0, 1), T), X(0, 1)


def _bas1(ring, p):
    return seq(red_one(), T), Z(0, 1, ring.one)


def _suc(ring, p):
    return seq(T, Z(1, 0, p["a"])), Z(1, 0, ring.add(p["a"], ring.one))


def _inv(ring, p):
    if p["variant"] == "right":
        return seq(T, TINV), ID
    return seq(TINV, T), ID


def _zero(ring, p):
    return Z(1, 1, ring.zero), seq(X(1, 0), X(0, 1))


def _pcy(ring, p):
    return seq(P, T, P), flipped_triangle()


def _sym(ring, p):
    return seq(SWAP, add_node(ring)), add_node(ring)


def _aso(ring, p):
    add = add_node(ring)
    return seq(par(add, ID), add), seq(par(ID, add), add)


def _brk(ring, p):
    return seq(Z(1, 2, ring.one), AND), ID


def _ad(ring, p):
    lhs = seq(split_node(ring), par(Z(1, 1, p["a"]), Z(1, 1, p["b"])), add_node(ring))
    return lhs, Z(1, 1, ring.add(p["a"], p["b"]))


def _pcm(ring, p):
    n = p["n"]
    return seq(tensor_power(P, n), Z(n, 1, ring.one)), seq(Z(n, 1, ring.one), P)


def _tid(ring, p):
    one = ring.one
    return seq(Z(1, 2, one), par(T, ID), Z(2, 1, one)), ID


def _asym(ring, p):
    return seq(SWAP, AND), AND


def _aas(ring, p):
    return seq(par(AND, ID), AND), seq(par(ID, AND), AND)


def _bkp(ring, p):
    one = ring.one
    return seq(Z(1, 2, one), par(ID, P), AND), seq(Z(1, 0, one), X(0, 1))


def _rule(name, regime, build, domain=_single, phases=(), arity=(), source=""):
    return RewriteRule(name, regime, tuple(phases), domain, build, source, False, tuple(arity))


def _s1_domain(bound):
    return _grid(bound, "n", "p", "m")


def _s4_domain(bound):
    return [dict(n=n, m=m, sigma=s, tau=t)
            for n, m in product(_range(bound), repeat=2) for s, t in product((0, PI), repeat=2)]


def _m_domain(bound):
    return _grid(bound, "m")


def _n_domain(bound):
    return _grid(bound, "n")


_FIG1 = "rules I (rings)"
_FIG2 = "rules II (rings)"
_FIG3 = "rules I (semirings)"
_FIG4 = "rules II (semirings)"

_RULES = {
    "S1": _rule("S1", BOTH, _s1, _s1_domain, ("a", "b"), ("n", "p", "m")),
    "S2": _rule("S2", BOTH, _s2, _variants("green", "red")),
    "S3": _rule("S3", BOTH, _s3, _variants("snake", "green", "red")),
    "S4": _rule("S4", BOTH, _s4, _s4_domain, (), ("n", "m")),
    "B1": _rule("B1", BOTH, _b1, _m_domain, (), ("m",)),
    "B2": _rule("B2", BOTH, _b2),
    "B1'": _rule("B1'", BOTH, _b1_prime, _m_domain, ("a",), ("m",)),
    "B3": _rule("B3", BOTH, _b3, _m_domain, (), ("m",)),
    "Ept": _rule("Ept", BOTH, _ept, phases=("a",)),
    "EU": _rule("EU", RING_ONLY, _eu),
    "H": _rule("H", RING_ONLY, _h),
    "Bas0": _rule("Bas0", BOTH, _bas0),
    "Bas1": _rule("Bas1", BOTH, _bas1),
    "Suc": _rule("Suc", BOTH, _suc, phases=("a",)),
    "Inv": _rule("Inv", RING_ONLY, _inv, _variants("right", "left")),
    "Zero": _rule("Zero", BOTH, _zero),
    "Pcy": _rule("Pcy", BOTH, _pcy),
    "Sym": _rule("Sym", BOTH, _sym),
    "Aso": _rule("Aso", BOTH, _aso),
    "Brk": _rule("Brk", BOTH, _brk),
    "AD": _rule("AD", BOTH, _ad, phases=("a", "b")),
    "Pcm": _rule("Pcm", BOTH, _pcm, _n_domain, (), ("n",)),
    "Tid": _rule("Tid", BOTH, _tid),
    "ASym": _rule("ASym", BOTH, _asym),
    "AAs": _rule("AAs", BOTH, _aas),
    "Bkp": _rule("Bkp", BOTH, _bkp),
}

RING_RULE_NAMES = {
    _FIG1: ("S1", "S2", "S3", "S4", "B1", "B2", "B3", "Ept", "EU", "H"),
    _FIG2: ("Bas0", "Bas1", "Suc", "Inv", "Zero", "Pcy", "Sym", "Aso", "Brk", "AD"),
}
SEMIRING_RULE_NAMES = {
    _FIG3: ("S1", "S2", "S3", "S4", "B1", "B2", "B1'", "B3", "Ept", "Zero"),
    _FIG4: ("Bas0", "Bas1", "Suc", "Pcm", "Tid", "Pcy", "Sym", "Aso", "Brk", "AD",
            "ASym", "AAs", "Bkp"),
}


def catalog(regime: str) -> list[RewriteRule]:
    """Rules for ``"ring"`` or ``"semiring"``, each followed by its flip."""
    if regime == "ring":
        groups = RING_RULE_NAMES
    elif regime == "semiring":
        groups = SEMIRING_RULE_NAMES
    else:
        raise ValueError(f"regime must be 'ring' or 'semiring', got {regime!r}")
    out = []
    for group, names in groups.items():
        for name in names:
            rule = replace(_RULES[name], source=group)
            out += [rule, flip_of(rule)]
    return out


def find_rule(name: str, regime: str) -> RewriteRule:
    for rule in catalog(regime):
        if rule.name == name:
            return rule
    base = name[:-5] if name.endswith(".flip") else name
    if regime == "semiring" and any(base in names for names in RING_RULE_NAMES.values()):
        raise RegimeError(f"rule {name} is not available over semirings")
    raise KeyError(f"no rule named {name!r} in the {regime} catalog")


# -- instantiation -----------------------------------------------------------


class InstantiationError(ValueError):
    pass


def instantiate(rule: Equation, params: dict, ring: Ring,
                arity_bound: int | None = None) -> tuple[Diagram, Diagram]:
    """Closed ``(lhs, rhs)`` for fully bound ``params``."""
    if rule.ring_only and not ring.is_ring:
        raise RegimeError(f"{rule.name} needs a ring; {ring.name} is a semiring")
    missing = [v for v in rule.phase_vars if v not in params]
    if missing:
        raise InstantiationError(f"{rule.name}: unbound phase variables {missing}")
    bound = default_arity_bound() if arity_bound is None else arity_bound
    discrete = {k: v for k, v in params.items() if k not in rule.phase_vars}
    for name in rule.arity_params:
        if name in discrete and discrete[name] > bound:
            raise InstantiationError(f"{rule.name}: {name}={discrete[name]} exceeds bound {bound}")
    admissible = rule.domain(max([bound] + [v for k, v in discrete.items() if k in rule.arity_params]))
    if discrete not in admissible:
        if admissible and set(discrete) != set(admissible[0]):
            raise InstantiationError(
                f"{rule.name}: expected discrete parameters {sorted(admissible[0])}, got {sorted(discrete)}")
        raise InstantiationError(f"{rule.name}: parameters {discrete} are not admissible")
    phases = {v: ring.check(params[v]) for v in rule.phase_vars}
    lhs, rhs = rule.build(ring, {**discrete, **phases})
    if lhs.type != rhs.type:
        raise InstantiationError(
            f"{rule.name} {discrete}: lhs {lhs.n}->{lhs.m} but rhs {rhs.n}->{rhs.m}")
    return lhs, rhs


# -- soundness ---------------------------------------------------------------


@dataclass
class InstanceResult:
    params: dict
    ok: bool
    detail: str = ""


@dataclass
class SoundnessReport:
    name: str
    ring: str
    instances: list[InstanceResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(i.ok for i in self.instances)

    @property
    def failures(self) -> list[InstanceResult]:
        return [i for i in self.instances if not i.ok]


def symbolic_ring(regime: str, variables: Iterable[str] = ()) -> PolynomialRing:
    return PolynomialRing(tuple(variables), natural=(regime == "semiring"))


def _phase_bindings(rule: Equation, ring: Ring, rng: random.Random):
    if ring.is_polynomial:
        ring = ring.with_variables(rule.phase_vars)
        return ring, {v: ring.var(v) for v in rule.phase_vars}
    return ring, {v: ring.sample(rng) for v in rule.phase_vars}


def check_equation(rule: Equation, ring: Ring, arity_bound: int | None = None,
                   rng: random.Random | None = None, and_mode: str = AND_PRIMITIVE,
                   phases: dict | None = None) -> SoundnessReport:
    """Evaluate both sides of every admissible instance and compare entrywise.

    Over a polynomial ring each phase variable becomes an indeterminate;
    over any other ring it is sampled from ``rng`` unless ``phases`` is given.
    """
    if rule.ring_only and not ring.is_ring:
        raise RegimeError(f"{rule.name} needs a ring; {ring.name} is a semiring")
    bound = default_arity_bound() if arity_bound is None else arity_bound
    rng = rng or random.Random(0)
    if phases is None:
        ring, phases = _phase_bindings(rule, ring, rng)
    report = SoundnessReport(rule.name, ring.name)
    for discrete in rule.domain(bound):
        params = {**discrete, **phases}
        try:
            lhs, rhs = instantiate(rule, params, ring, bound)
            diff = first_difference(evaluate(lhs, ring, and_mode), evaluate(rhs, ring, and_mode))
        except (AlgebraError, InstantiationError) as exc:
            report.instances.append(InstanceResult(discrete, False, f"error: {exc}"))
            continue
        if diff is None:
            report.instances.append(InstanceResult(discrete, True))
        else:
            r, c, x, y = diff
            report.instances.append(InstanceResult(
                discrete, False,
                f"entry ({r},{c}): lhs {ring.format(x)} != rhs {ring.format(y)}"
                + ("" if ring.is_polynomial else
                   "".join(f"; {k}={ring.format(v)}" for k, v in phases.items()))))
    return report


def check_soundness(rule: RewriteRule, ring: Ring | str, arity_bound: int | None = None,
                    **kwargs) -> SoundnessReport:
    if isinstance(ring, str):
        ring = ring_from_descriptor(ring)
    return check_equation(rule, ring, arity_bound, **kwargs)


def check_catalog(regime: str, ring: Ring | None = None, arity_bound: int | None = None,
                  **kwargs) -> list[SoundnessReport]:
    ring = ring if ring is not None else symbolic_ring(regime)
    reports = [check_soundness(rule, ring, arity_bound, **kwargs) for rule in catalog(regime)]
    return sorted(reports, key=lambda r: r.name)


# -- lemma fixtures ----------------------------------------------------------


def _nf_state(values, ring):
    return synthesize_state([_c(ring, v) for v in values], ring)


def _lemma(name, regime, build, domain=_single, phases=(), source="", arity=()):
    return LemmaFixture(name, regime, tuple(phases), domain, build, source, False, tuple(arity))


def _gdothred(ring, p):
    return Z(1, 0, ring.one), seq(H, X(1, 0))


def _gpidotredpi(ring, p):
    return Z(0, 1, _c(ring, -1)), seq(red_one(), H)


def _gpidotcopy(ring, p):
    g = Z(0, 1, _c(ring, -1))
    return seq(g, X(1, p["m"])), tensor_power(g, p["m"])


def _gpihrpi(ring, p):
    lhs, rhs = seq(Z(1, 1, _c(ring, -1)), H), seq(H, P)
    if p["variant"] == "transpose":
        return transpose(lhs), transpose(rhs)
    return lhs, rhs


def _ivt(ring, p):
    minus = Z(1, 1, _c(ring, -1))
    return TINV, seq(minus, T, minus)


def _hopf(ring, p):
    one = ring.one
    if p["variant"] == "transpose":
        return seq(X(1, 2), Z(2, 1, one)), seq(X(1, 0), Z(0, 1, one))
    return seq(Z(1, 2, one), X(2, 1)), seq(Z(1, 0, one), X(0, 1))


def _bas1_prime(ring, p):
    return Z(0, 1, ring.one), seq(X(0, 1), flipped_triangle())


def _pic(ring, p):
    m = p["m"]
    return seq(P, Z(1, m, ring.one)), seq(Z(1, m, ring.one), tensor_power(P, m))


def _dis(ring, p):
    one = ring.one
    lhs = seq(par(ID, X(2, 1)), AND)
    rhs = seq(par(Z(1, 2, one), ID, ID), par(ID, SWAP, ID), par(AND, AND), X(2, 1))
    return lhs, rhs


def _bia(ring, p):
    one = ring.one
    lhs = seq(AND, Z(1, 2, one))
    rhs = seq(par(Z(1, 2, one), Z(1, 2, one)), par(ID, SWAP, ID), par(AND, AND))
    return lhs, rhs


def _brk1(ring, p):
    return seq(Z(1, 2, ring.one), par(T, ID), AND), T


def _zero_prime(ring, p):
    n, m = p["n"], p["m"]
    return Z(n, m, ring.zero), seq(tensor_power(X(1, 0), n), tensor_power(X(0, 1), m))


def _raddcomplex(ring, p):
    m, s1, s2 = p["m"], p["S"], p["S2"]
    g1 = row_add_gadget(m, s1, p["a"], ring)
    g2 = row_add_gadget(m, s2, p["b"], ring)
    return seq(g1, g2), seq(g2, g1)


def _raddcomplex_domain(bound):
    return [dict(m=m, S=s1, S2=s2) for m in (1, 2, 3) if m <= max(bound, 1)
            for s1 in canonical_subsets(m) for s2 in canonical_subsets(m) if s1 < s2]


def _mult_pi(m, mask, a, ring):
    return pi_conjugate(row_mult_gadget(m, a, ring), mask)


def _multiplypimulticommutg(ring, p):
    m = p["m"]
    g1 = _mult_pi(m, p["x"], p["a"], ring)
    g2 = _mult_pi(m, p["y"], p["b"], ring)
    return seq(g1, g2), seq(g2, g1)


def _mask_pairs(bound, distinct):
    out = []
    for m in (1, 2):
        for x in range(1 << m):
            for y in range(1 << m):
                if (x != y) == distinct and (not distinct or x < y):
                    out.append(dict(m=m, x=x, y=y))
    return out


def _tr15(ring, p):
    m, x = p["m"], p["x"]
    lhs = seq(_mult_pi(m, x, p["a"], ring), _mult_pi(m, x, p["b"], ring))
    return lhs, _mult_pi(m, x, ring.mul(p["a"], p["b"]), ring)


def _tr15_domain(bound):
    return [dict(m=m, x=x) for m in (1, 2) for x in range(1 << m)]


def _elem_positions(m, subset, mask):
    """Entry ``(row, col)`` of the off-diagonal coefficient of a
    pi-conjugated row addition."""
    last = (1 << m) - 1
    j = last - sum(1 << k for k in subset)
    return j ^ mask, last ^ mask


def _add_pi(m, subset, mask, a, ring):
    return pi_conjugate(row_add_gadget(m, subset, a, ring), mask)


def _pitopaddpipaircommut(ring, p):
    m = p["m"]
    g1 = _add_pi(m, p["S"], p["x"], p["a"], ring)
    g2 = _add_pi(m, p["S2"], p["y"], p["b"], ring)
    return seq(g1, g2), seq(g2, g1)


def _pitopadd_domain(bound):
    out = []
    m = 2
    for s1, s2 in product(canonical_subsets(m), repeat=2):
        for x, y in product(range(1 << m), repeat=2):
            u1, v1 = _elem_positions(m, s1, x)
            u2, v2 = _elem_positions(m, s2, y)
            if (s1, x) < (s2, y) and v1 != u2 and v2 != u1:
                out.append(dict(m=m, S=s1, x=x, S2=s2, y=y))
    return out


def _multiplypimulticommute(ring, p):
    m = p["m"]
    g1 = _mult_pi(m, p["x"], p["a"], ring)
    g2 = _add_pi(m, p["S"], p["y"], p["b"], ring)
    return seq(g1, g2), seq(g2, g1)


def _multiplypimulticommute_domain(bound):
    out = []
    m = 2
    last = (1 << m) - 1
    for s in canonical_subsets(m):
        for x, y in product(range(1 << m), repeat=2):
            u, v = _elem_positions(m, s, y)
            if last ^ x not in (u, v):
                out.append(dict(m=m, x=x, S=s, y=y))
    return out


def _redspider_nf(ring, p):
    v = p["variant"]
    if v == "ket0":
        return X(0, 1), _nf_state([1, 0], ring)
    if v == "ket1":
        return red_one(), _nf_state([0, 1], ring)
    if v == "cap":
        return X(0, 2), _nf_state([1, 0, 0, 1], ring)
    return X(0, 3), _nf_state([1, 0, 0, 1, 0, 1, 1, 0], ring)


def _ad_prime(ring, p):
    lhs = seq(par(Z(0, 1, p["a"]), Z(0, 1, p["b"])), add_node(ring))
    return lhs, Z(0, 1, ring.add(p["a"], p["b"]))


def _ad_second(ring, p):
    lhs = seq(split_node(ring), par(Z(1, 0, p["a"]), Z(1, 0, p["b"])))
    return lhs, Z(1, 0, ring.add(p["a"], p["b"]))


def _tr5prime(ring, p):
    return seq(T, P), seq(P, flipped_triangle())


def _trianglecopylr(ring, p):
    one = ring.one
    v = p["variant"]
    if v == "left":
        return seq(Z(1, 2, one), par(T, ID)), seq(Z(1, 2, one), par(ID, T), SWAP)
    if v == "right":
        return seq(Z(1, 2, one), par(ID, T)), seq(Z(1, 2, one), par(T, ID), SWAP)
    return seq(T, Z(1, 2, one)), seq(Z(1, 2, one), row_add_gadget(2, (0, 1), one, ring))


def _andgate2v(ring, p):
    return seq(par(X(0, 1), ID), AND), seq(Z(1, 0, ring.one), X(0, 1))


def _andcopy(ring, p):
    return seq(par(red_one(), red_one()), AND), red_one()


def _pitrinand(ring, p):
    return seq(par(ID, red_one()), AND), ID


def _andpieliminate(ring, p):
    one = ring.one
    lhs = seq(par(P, P), AND, P)
    rhs = seq(par(Z(1, 2, one), Z(1, 2, one)), par(ID, SWAP, ID),
              par(X(2, 1), AND), X(2, 1))
    return lhs, rhs


def _ruletensorlsim(ring, p):
    return (par(scalar_diagram(p["a"], ring), scalar_diagram(p["b"], ring)),
            scalar_diagram(ring.mul(p["a"], p["b"]), ring))


def _ruletensorl(ring, p):
    a, b, c, d = p["a"], p["b"], p["c"], p["d"]
    mul = ring.mul
    lhs = par(synthesize_state([a, b], ring), synthesize_state([c, d], ring))
    return lhs, synthesize_state([mul(a, c), mul(a, d), mul(b, c), mul(b, d)], ring)


def _hopfvariant2(ring, p):
    return seq(Z(1, 2, ring.one), par(ID, T), X(2, 1)), T


def _and_relation(ring, p):
    return seq(par(T, T), Z(2, 1, ring.one)), seq(AND, T)


_SEC3 = "simple derivable equalities (rings)"
_SEC4 = "more complicated derivable equalities (rings)"
_SEC5 = "completeness (rings)"
_SEC7 = "derivable equalities (semirings)"

LEMMAS = [
    _lemma("gdothred", RING_ONLY, _gdothred, source=_SEC3),
    _lemma("gpidotredpi", RING_ONLY, _gpidotredpi, source=_SEC3),
    _lemma("b3ring", BOTH, _b1_prime, _m_domain, ("a",), _SEC3, ("m",)),
    _lemma("Hopf", BOTH, _hopf, _variants("first", "transpose"), source=_SEC3),
    _lemma("Bas1'", BOTH, _bas1_prime, source=_SEC3),
    _lemma("gpidotcopy", RING_ONLY, _gpidotcopy, _m_domain, (), _SEC3, ("m",)),
    _lemma("Pic", BOTH, _pic, _m_domain, (), _SEC3, ("m",)),
    _lemma("gpihrpi", RING_ONLY, _gpihrpi, _variants("direct", "transpose"), source=_SEC3),
    _lemma("Brk1'", BOTH, _brk1, source=_SEC3),
    _lemma("Zero'", BOTH, _zero_prime, lambda b: _grid(b, "n", "m"), (), _SEC3, ("n", "m")),
    _lemma("tr5prime", BOTH, _tr5prime, source=_SEC3),
    _lemma("trianglecopylr", BOTH, _trianglecopylr, _variants("left", "right", "copy"), source=_SEC3),
    _lemma("AD'", RING_ONLY, _ad_prime, phases=("a", "b"), source=_SEC3),
    _lemma("Ivt", RING_ONLY, _ivt, source=_SEC3),
    _lemma("BiA", BOTH, _bia, source=_SEC3),
    _lemma("Dis", BOTH, _dis, source=_SEC3),
    _lemma("andshortnoterelat", BOTH, _and_relation, source=_SEC3),
    _lemma("raddcomplex", BOTH, _raddcomplex, _raddcomplex_domain, ("a", "b"), _SEC4),
    _lemma("multiplypimulticommutg", BOTH, _multiplypimulticommutg,
           lambda b: _mask_pairs(b, True), ("a", "b"), _SEC4),
    _lemma("TR15", BOTH, _tr15, _tr15_domain, ("a", "b"), _SEC4),
    _lemma("pitopaddpipaircommut", BOTH, _pitopaddpipaircommut, _pitopadd_domain,
           ("a", "b"), _SEC4),
    _lemma("multiplypimulticommute", BOTH, _multiplypimulticommute,
           _multiplypimulticommute_domain, ("a", "b"), _SEC4),
    _lemma("redspidertonormalfm", BOTH, _redspider_nf,
           _variants("ket0", "ket1", "cap", "three"), source=_SEC5),
    _lemma("AD''", SEMIRING_ONLY, _ad_second, phases=("a", "b"), source=_SEC7),
    _lemma("andgate2v", SEMIRING_ONLY, _andgate2v, source=_SEC7),
    _lemma("andcopy", SEMIRING_ONLY, _andcopy, source=_SEC7),
    _lemma("pitrinand", SEMIRING_ONLY, _pitrinand, source=_SEC7),
    _lemma("andpieliminate", SEMIRING_ONLY, _andpieliminate, source=_SEC7),
    _lemma("ruletensorLsim", SEMIRING_ONLY, _ruletensorlsim, phases=("a", "b"), source=_SEC7),
    _lemma("ruletensorL", SEMIRING_ONLY, _ruletensorl, phases=("a", "b", "c", "d"), source=_SEC7),
    _lemma("hopfvariant2", SEMIRING_ONLY, _hopfvariant2, source=_SEC7),
]


def lemma_fixtures(regime: str) -> list[LemmaFixture]:
    """Fixtures checked in ``regime``: those tagged for it plus shared ones."""
    if regime not in ("ring", "semiring"):
        raise ValueError(f"regime must be 'ring' or 'semiring', got {regime!r}")
    return [f for f in LEMMAS if f.regime in (BOTH, regime)]


def run_lemma_suite(regime: str, ring: Ring | None = None, arity_bound: int | None = None,
                    and_mode: str = AND_PRIMITIVE) -> list[SoundnessReport]:
    ring = ring if ring is not None else symbolic_ring(regime)
    return [check_equation(f, ring, arity_bound, and_mode=and_mode)
            for f in lemma_fixtures(regime)]


# -- negative control --------------------------------------------------------


def _s1_corrupted(ring, p):
    lhs, _ = _s1(ring, p)
    return lhs, Z(p["n"], p["m"] + p["p"], ring.add(p["a"], p["b"]))


def corrupted_rule() -> RewriteRule:
    """Spider fusion with the phases added instead of multiplied: unsound."""
    return _rule("S1.corrupted", BOTH, _s1_corrupted, _s1_domain, ("a", "b"), ("n", "p", "m"),
                 "negative control")
