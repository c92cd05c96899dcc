"""Term-level rewriting: structural normalization, rule application at a
position, and a checker for line-oriented derivation scripts.

Positions are paths of child selectors into the normalized term: ``0`` picks
``first``/``left`` and ``1`` picks ``then``/``right``.  Because spines nest to
the right, every contiguous run of a spine starts at some position, and a rule
matches there when its left-hand side is a prefix of that run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .algebra import AlgebraError, RegimeError, Ring
from .diagram import (EMPTY, Diagram, Gen, Par, Seq, Z, X, P, idn, is_identity,
                      par, seq)
from .normalform import diagram_equal
from .rules import (PI, Equation, InstantiationError, default_arity_bound,
                    find_rule, instantiate)
from .syntax import ParseError, parse_diagram

Position = tuple[int, ...]


class MatchError(ValueError):
    pass


# -- structural normalization ------------------------------------------------


def _expand_alias(g: Gen, ring: Ring | None) -> Diagram:
    if g.kind == "gbox":
        return Z(1, 1, g.phase)
    if g.kind == "XOR":
        return X(2, 1)
    if g.kind == "NOT":
        return P
    if g.kind == "copy" and ring is not None:
        return Z(1, g.m, ring.one)
    return g


def _seq_spine(d: Diagram) -> list[Diagram]:
    if isinstance(d, Seq):
        return _seq_spine(d.first) + _seq_spine(d.then)
    return [d]


def _par_spine(d: Diagram) -> list[Diagram]:
    if isinstance(d, Par):
        return _par_spine(d.left) + _par_spine(d.right)
    return [d]


def _merge_ids(factors: list[Diagram]) -> list[Diagram]:
    out: list[Diagram] = []
    for f in factors:
        if is_identity(f) and f.n == 0:
            continue
        if out and is_identity(f) and is_identity(out[-1]):
            out[-1] = idn(out[-1].n + f.n)
        else:
            out.append(f)
    return out


def structural_normalize(d: Diagram, ring: Ring | None = None) -> Diagram:
    """Flatten to right-nested spines, absorb identities, merge parallel
    identity wires and expand the alias generators (``gbox``, ``XOR``,
    ``NOT`` and, given a ring, ``copy``).  ``AND`` is left alone."""
    if isinstance(d, Gen):
        return _expand_alias(d, ring)
    if isinstance(d, Seq):
        factors = []
        for child in _seq_spine(d):
            factors += _seq_spine(structural_normalize(child, ring))
        kept = [f for f in factors if not is_identity(f)]
        return seq(*kept) if kept else idn(d.n)
    factors = []
    for child in _par_spine(d):
        factors += _par_spine(structural_normalize(child, ring))
    kept = _merge_ids(factors)
    return par(*kept) if kept else EMPTY


# -- positions ---------------------------------------------------------------


def subterm(d: Diagram, position: Sequence[int]) -> Diagram:
    for step, sel in enumerate(position):
        if sel not in (0, 1):
            raise MatchError(f"child selector must be 0 or 1, got {sel}")
        if isinstance(d, Seq):
            d = d.then if sel else d.first
        elif isinstance(d, Par):
            d = d.right if sel else d.left
        else:
            raise MatchError(f"position {list(position)} leaves the term at step {step}")
    return d


def replace_at(d: Diagram, position: Sequence[int], new: Diagram) -> Diagram:
    if not position:
        if new.type != d.type:
            raise MatchError(f"replacement {new.n}->{new.m} does not fit {d.n}->{d.m}")
        return new
    head, rest = position[0], position[1:]
    if isinstance(d, Seq):
        return Seq(replace_at(d.first, rest, new), d.then) if head == 0 else Seq(
            d.first, replace_at(d.then, rest, new))
    if isinstance(d, Par):
        return Par(replace_at(d.left, rest, new), d.right) if head == 0 else Par(
            d.left, replace_at(d.right, rest, new))
    raise MatchError(f"position {list(position)} does not address a subterm")


def positions(d: Diagram, prefix: Position = ()) -> Iterator[Position]:
    """Every position in ``d``, in preorder."""
    yield prefix
    if isinstance(d, Seq):
        yield from positions(d.first, prefix + (0,))
        yield from positions(d.then, prefix + (1,))
    elif isinstance(d, Par):
        yield from positions(d.left, prefix + (0,))
        yield from positions(d.right, prefix + (1,))


def parse_position(text: str) -> Position:
    text = text.strip()
    if text in ("", "root", "[]", "."):
        return ()
    text = text.strip("[]")
    parts = [p for p in text.replace(",", ".").replace("/", ".").split(".") if p.strip()]
    try:
        out = tuple(int(p) for p in parts)
    except ValueError:
        raise MatchError(f"bad position {text!r}") from None
    if any(p not in (0, 1) for p in out):
        raise MatchError(f"bad position {text!r}: selectors are 0 or 1")
    return out


def format_position(position: Position) -> str:
    return ".".join(map(str, position)) if position else "root"


# -- matching ----------------------------------------------------------------


def _match_par(factors: list[Diagram], pattern: list[Diagram]) -> list[Diagram] | None:
    """Replace a prefix of ``factors`` equal to ``pattern``; the first and last
    pattern identities may take a slice of a wider identity factor.
    Returns ``[lead, rest...]`` with the replacement slot marked ``None``."""
    k = len(pattern)
    if len(factors) < k:
        return None
    lead: list[Diagram] = []
    tail: list[Diagram] = []
    for i, (f, p) in enumerate(zip(factors, pattern)):
        if f == p:
            continue
        if is_identity(f) and is_identity(p) and f.n > p.n:
            if i == 0 and k > 1:
                lead = [idn(f.n - p.n)]
                continue
            if i == k - 1:
                tail = [idn(f.n - p.n)]
                continue
        return None
    return lead + [None] + tail + factors[k:]


def match_at(d: Diagram, position: Position, lhs: Diagram, rhs: Diagram) -> Diagram | None:
    """``d`` with ``lhs`` rewritten to ``rhs`` at ``position``, or ``None``."""
    try:
        s = subterm(d, position)
    except MatchError:
        return None
    if s == lhs:
        return replace_at(d, position, rhs)
    if isinstance(s, Seq) and isinstance(lhs, Seq):
        spine, pattern = _seq_spine(s), _seq_spine(lhs)
        if spine[:len(pattern)] == pattern:
            return replace_at(d, position, seq(rhs, *spine[len(pattern):]))
        return None
    if isinstance(s, Par):
        pattern = _par_spine(lhs)
        if len(pattern) == 1 and not is_identity(lhs):
            return None
        out = _match_par(_par_spine(s), pattern)
        if out is None:
            return None
        return replace_at(d, position, par(*[rhs if f is None else f for f in out]))
    return None


# -- rule application --------------------------------------------------------


def _coerce_discrete(key: str, value):
    if not isinstance(value, str):
        return value
    text = value.strip()
    if key in ("sigma", "tau"):
        if text.lower() in ("pi", "π", "1"):
            return PI
        if text == "0":
            return 0
        raise InstantiationError(f"{key} must be 0 or pi, got {text!r}")
    if text.lstrip("-").isdigit():
        return int(text)
    return text


def _split_bindings(rule: Equation, bindings: dict, ring: Ring):
    phases, discrete = {}, {}
    for key, value in bindings.items():
        if key in rule.phase_vars:
            try:
                phases[key] = ring.parse(value) if isinstance(value, str) else ring.check(value)
            except AlgebraError as exc:
                raise InstantiationError(f"{rule.name}: binding {key}: {exc}") from None
        else:
            discrete[key] = _coerce_discrete(key, value)
    missing = [v for v in rule.phase_vars if v not in phases]
    if missing:
        raise InstantiationError(f"{rule.name}: binding incomplete, missing {', '.join(missing)}")
    return phases, discrete


def _resolve(rule, ring: Ring) -> Equation:
    if isinstance(rule, str):
        rule = find_rule(rule, "ring" if ring.is_ring else "semiring")
    if rule.ring_only and not ring.is_ring:
        raise RegimeError(f"rule {rule.name} is not available over the semiring {ring.name}")
    return rule


def rule_instances(rule, bindings: dict, ring: Ring, arity_bound: int | None = None):
    """Normalized ``(lhs, rhs, params)`` for every admissible completion of
    the discrete parameters left open in ``bindings``."""
    rule = _resolve(rule, ring)
    phases, discrete = _split_bindings(rule, bindings, ring)
    given_arity = [v for k, v in discrete.items() if k in rule.arity_params]
    bound = max([default_arity_bound() if arity_bound is None else arity_bound] + given_arity)
    domain = rule.domain(bound)
    if domain and not set(discrete) <= set(domain[0]):
        unknown = sorted(set(discrete) - set(domain[0]))
        raise InstantiationError(f"{rule.name}: unknown parameters {unknown}")
    for option in domain:
        if all(option.get(k) == v for k, v in discrete.items()):
            params = {**option, **phases}
            lhs, rhs = instantiate(rule, params, ring, bound)
            yield structural_normalize(lhs, ring), structural_normalize(rhs, ring), params


def apply_rule(d: Diagram, rule, position: Sequence[int] | None, bindings: dict, ring: Ring,
               arity_bound: int | None = None, verify: bool = False) -> Diagram:
    """Rewrite the rule's left-hand side into its right-hand side.

    With ``position=None`` the first match in preorder is used.  Discrete
    parameters missing from ``bindings`` are inferred by trying every
    admissible value.  ``verify`` re-checks evaluation equality.
    """
    rule = _resolve(rule, ring)
    d = structural_normalize(d, ring)
    where = list(positions(d)) if position is None else [tuple(position)]
    if position is not None:
        subterm(d, where[0])
    for lhs, rhs, _params in rule_instances(rule, bindings, ring, arity_bound):
        for pos in where:
            result = match_at(d, pos, lhs, rhs)
            if result is not None:
                result = structural_normalize(result, ring)
                if verify and not diagram_equal(d, result, ring):
                    raise AssertionError(f"{rule.name} changed the interpretation at {pos}")
                return result
    at = "anywhere" if position is None else f"at {format_position(tuple(position))}"
    raise MatchError(f"no match for {rule.name} {at}")


def find_matches(d: Diagram, rule, bindings: dict, ring: Ring,
                 arity_bound: int | None = None) -> list[tuple[Position, dict]]:
    d = structural_normalize(d, ring)
    found = []
    for lhs, rhs, params in rule_instances(rule, bindings, ring, arity_bound):
        for pos in positions(d):
            if match_at(d, pos, lhs, rhs) is not None:
                found.append((pos, params))
    return found


# -- derivations -------------------------------------------------------------


SEMANTIC = "semantic"
SYNTACTIC = "syntactic"
MIXED = "mixed"


@dataclass(frozen=True)
class Step:
    rule: str
    result: Diagram
    position: Position | None = None
    bindings: dict = field(default_factory=dict)
    line: int = 0

    @property
    def is_semantic(self) -> bool:
        return self.rule == SEMANTIC


@dataclass(frozen=True)
class Derivation:
    start: Diagram
    steps: tuple[Step, ...] = ()

    @property
    def end(self) -> Diagram:
        return self.steps[-1].result if self.steps else self.start


@dataclass
class DerivationReport:
    accepted: bool
    failed_step: int | None = None
    reason: str = ""
    checked: int = 0

    def __bool__(self):
        return self.accepted


def _split_arrow(text: str, lineno: int, ring) -> tuple[str, Diagram]:
    head, arrow, tail = text.partition("->")
    if not arrow:
        raise ParseError("expected '->' before the resulting diagram", text, len(text))
    try:
        return head.strip(), parse_diagram(tail, ring)
    except ParseError as exc:
        raise ParseError(exc.message, text, len(head) + 2 + _offset(tail, exc)) from None


def _offset(text: str, exc: ParseError) -> int:
    lines = text.split("\n")
    return sum(len(ln) + 1 for ln in lines[:exc.line - 1]) + exc.column - 1


def _parse_bindings(text: str) -> dict:
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, eq, value = item.partition("=")
        if not eq or not key.strip():
            raise ValueError(f"binding {item!r} is not of the form name=value")
        out[key.strip()] = value.strip()
    return out


def parse_derivation(text: str, ring: Ring) -> Derivation:
    """Read ``start: <diagram>`` then one step per line:
    ``rule <name> [at <path>] [with k=v,...] -> <diagram>`` or
    ``semantic -> <diagram>``.  ``#`` starts a comment."""
    start = None
    steps = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if start is None:
                if not line.startswith("start:"):
                    raise ValueError("first line must be 'start: <diagram>'")
                start = parse_diagram(line[len("start:"):], ring)
                continue
            head, result = _split_arrow(line, lineno, ring)
            if head == SEMANTIC:
                steps.append(Step(SEMANTIC, result, line=lineno))
                continue
            words = head.split(None, 1)
            if not words or words[0] != "rule" or len(words) < 2:
                raise ValueError("step must start with 'rule <name>' or 'semantic'")
            rest = words[1]
            rest, _, with_text = rest.partition(" with ")
            name, _, at_text = rest.partition(" at ")
            pos = parse_position(at_text) if at_text.strip() else None
            steps.append(Step(name.strip(), result, pos, _parse_bindings(with_text), lineno))
        except ParseError as exc:
            raise ValueError(f"line {lineno}, column {exc.column}: {exc.message}") from None
        except (ValueError, AlgebraError) as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if start is None:
        raise ValueError("derivation has no 'start:' line")
    return Derivation(start, tuple(steps))


def check_derivation(derivation: Derivation, ring: Ring, mode: str = MIXED,
                     arity_bound: int | None = None) -> DerivationReport:
    """Replay ``derivation``.  ``syntactic``: every step is a rule
    application; ``semantic``: every step only needs equal evaluation;
    ``mixed``: rule steps are replayed and ``semantic`` steps evaluated."""
    if mode not in (SEMANTIC, SYNTACTIC, MIXED):
        raise ValueError(f"unknown mode {mode!r}")
    current = derivation.start
    for index, step in enumerate(derivation.steps, start=1):
        def fail(reason):
            return DerivationReport(False, index, reason, index - 1)

        if step.result.type != derivation.start.type:
            return fail(f"type changes to {step.result.n}->{step.result.m}")
        if mode == SEMANTIC or (mode == MIXED and step.is_semantic):
            verdict = diagram_equal(current, step.result, ring)
            if not verdict:
                return fail(f"not equal: {verdict.reason}")
        elif step.is_semantic:
            return fail("semantic step in a syntactic derivation")
        else:
            try:
                got = apply_rule(current, step.rule, step.position, step.bindings, ring, arity_bound)
            except (MatchError, InstantiationError, RegimeError, KeyError, AlgebraError) as exc:
                return fail(str(exc).strip("'\""))
            if got != structural_normalize(step.result, ring):
                return fail(f"{step.rule} yields {got}, not the claimed diagram")
        current = step.result
    return DerivationReport(True, None, "", len(derivation.steps))
