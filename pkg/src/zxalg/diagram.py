"""Typed ZX terms over a (semi)ring.

A diagram is an immutable tree of ``Gen`` leaves combined with ``Seq``
(vertical composition, first argument applied first) and ``Par``
(juxtaposition, left argument on the leftmost wires).  Wire ``p`` of an
``n``-wire boundary is bit ``n-1-p`` of the basis index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .algebra import AlgebraError, Ring, RegimeError


class DiagramTypeError(TypeError):
    """Composition of diagrams whose boundaries do not line up."""


# kind -> (fixed arity or None, ring-only)
CORE_KINDS = {
    "Z": (None, False),
    "X": (None, False),
    "H": ((1, 1), True),
    "T": ((1, 1), False),
    "Tinv": ((1, 1), True),
    "P": ((1, 1), False),
    "swap": ((2, 2), False),
    "cap": ((0, 2), False),
    "cup": ((2, 0), False),
    "id": (None, False),
}
MACRO_KINDS = {
    "AND": (2, 1),
    "NOT": (1, 1),
    "XOR": (2, 1),
    "copy": None,
    "gbox": (1, 1),
}
RING_ONLY = frozenset({"H", "Tinv"})


@dataclass(frozen=True)
class Diagram:
    n: int = field(init=False, repr=False, compare=False)
    m: int = field(init=False, repr=False, compare=False)

    @property
    def type(self) -> tuple[int, int]:
        return (self.n, self.m)

    def __rshift__(self, other: Diagram) -> Diagram:
        return seq(self, other)

    def __matmul__(self, other: Diagram) -> Diagram:
        return par(self, other)

    def __str__(self):
        from .syntax import print_diagram

        return print_diagram(self)


@dataclass(frozen=True)
class Gen(Diagram):
    kind: str
    arity: tuple[int, int] = (1, 1)
    phase: object = None

    def __post_init__(self):
        object.__setattr__(self, "n", self.arity[0])
        object.__setattr__(self, "m", self.arity[1])

    @property
    def is_macro(self) -> bool:
        return self.kind in MACRO_KINDS


@dataclass(frozen=True)
class Seq(Diagram):
    first: Diagram
    then: Diagram

    def __post_init__(self):
        if self.first.m != self.then.n:
            raise DiagramTypeError(
                f"cannot compose {self.first.n}->{self.first.m} with "
                f"{self.then.n}->{self.then.m}: {self.first.m} outputs feed "
                f"{self.then.n} inputs")
        object.__setattr__(self, "n", self.first.n)
        object.__setattr__(self, "m", self.then.m)


@dataclass(frozen=True)
class Par(Diagram):
    left: Diagram
    right: Diagram

    def __post_init__(self):
        object.__setattr__(self, "n", self.left.n + self.right.n)
        object.__setattr__(self, "m", self.left.m + self.right.m)


# -- construction ------------------------------------------------------------


def make_generator(kind: str, *params, ring: Ring | None = None) -> Gen:
    """Leaf constructor with arity and regime validation.

    ``Z`` takes ``(n, m, phase)``, ``X`` takes ``(n, m)``, ``id`` an optional
    wire count, ``copy`` a leg count and ``gbox`` a phase.  Passing ``ring``
    checks phases and rejects ring-only kinds over semirings.
    """
    if kind in RING_ONLY and ring is not None and not ring.is_ring:
        raise RegimeError(f"{kind} needs additive inverses; {ring.name} is a semiring")
    if kind == "Z":
        n, m, phase = params
        _check_arity(n, m)
        if ring is not None:
            ring.check(phase)
        return Gen("Z", (n, m), phase)
    if kind == "X":
        n, m = params
        _check_arity(n, m)
        return Gen("X", (n, m))
    if kind == "id":
        k = params[0] if params else 1
        _check_arity(k, k)
        return Gen("id", (k, k))
    if kind == "copy":
        (k,) = params
        _check_arity(1, k)
        return Gen("copy", (1, k))
    if kind == "gbox":
        (phase,) = params
        if ring is not None:
            ring.check(phase)
        return Gen("gbox", (1, 1), phase)
    if kind in CORE_KINDS:
        return Gen(kind, CORE_KINDS[kind][0])
    if kind in MACRO_KINDS:
        return Gen(kind, MACRO_KINDS[kind])
    raise ValueError(f"unknown generator kind {kind!r}")


def _check_arity(n, m):
    if not (isinstance(n, int) and isinstance(m, int)) or n < 0 or m < 0:
        raise ValueError(f"arities must be naturals, got ({n!r}, {m!r})")


def Z(n: int, m: int, phase) -> Gen:
    return Gen("Z", (n, m), phase)


def X(n: int, m: int) -> Gen:
    return Gen("X", (n, m))


def idn(k: int = 1) -> Gen:
    return Gen("id", (k, k))


ID = idn(1)
EMPTY = idn(0)
H = Gen("H")
T = Gen("T")
TINV = Gen("Tinv")
P = Gen("P")
SWAP = Gen("swap", (2, 2))
CAP = Gen("cap", (0, 2))
CUP = Gen("cup", (2, 0))
AND = Gen("AND", (2, 1))
NOT = Gen("NOT")
XOR = Gen("XOR", (2, 1))


def gbox(phase) -> Gen:
    return Gen("gbox", (1, 1), phase)


def copy(k: int) -> Gen:
    return Gen("copy", (1, k))


def seq(*ds: Diagram) -> Diagram:
    """Right-nested vertical composition; ``seq(a, b)`` applies ``a`` first."""
    if not ds:
        raise ValueError("seq needs at least one diagram")
    return reduce(lambda acc, d: Seq(d, acc), reversed(ds[:-1]), ds[-1])


def par(*ds: Diagram) -> Diagram:
    if not ds:
        return EMPTY
    return reduce(lambda acc, d: Par(d, acc), reversed(ds[:-1]), ds[-1])


def tensor_power(d: Diagram, k: int) -> Diagram:
    return par(*([d] * k)) if k else EMPTY


def is_identity(d: Diagram) -> bool:
    return isinstance(d, Gen) and d.kind == "id"


# -- wiring ------------------------------------------------------------------


def permutation(perm: list[int] | tuple[int, ...]) -> Diagram:
    """Wire permutation whose output position ``q`` carries input wire ``perm[q]``."""
    width = len(perm)
    if sorted(perm) != list(range(width)):
        raise ValueError(f"not a permutation: {perm}")
    current = list(range(width))
    target_pos = {w: q for q, w in enumerate(perm)}
    layers = []
    changed = True
    while changed:
        changed = False
        for i in range(width - 1):
            if target_pos[current[i]] > target_pos[current[i + 1]]:
                current[i], current[i + 1] = current[i + 1], current[i]
                layers.append(par(*_pad(i, SWAP, width - i - 2)))
                changed = True
    return seq(*layers) if layers else idn(width)


def _pad(before: int, d: Diagram, after: int) -> list[Diagram]:
    out = []
    if before:
        out.append(idn(before))
    out.append(d)
    if after:
        out.append(idn(after))
    return out


def on_wires(d: Diagram, before: int, after: int) -> Diagram:
    """``d`` placed between ``before`` and ``after`` identity wires."""
    return par(*_pad(before, d, after))


def caps(k: int) -> Diagram:
    """State ``sum_i |i>|i>`` on ``2k`` wires (both halves in the same order)."""
    if k == 0:
        return EMPTY
    pairs = tensor_power(CAP, k)
    if k == 1:
        return pairs
    order = [2 * q for q in range(k)] + [2 * q + 1 for q in range(k)]
    return seq(pairs, permutation(order))


def cups(k: int) -> Diagram:
    """Effect ``sum_i <i|<i|`` on ``2k`` wires; transpose of ``caps(k)``."""
    if k == 0:
        return EMPTY
    pairs = tensor_power(CUP, k)
    if k == 1:
        return pairs
    order = []
    for q in range(k):
        order += [q, k + q]
    return seq(permutation(order), pairs)


def transpose(d: Diagram) -> Diagram:
    """Bend every input down and every output up: an ``m -> n`` diagram
    evaluating to the matrix transpose."""
    n, m = d.n, d.m
    return seq(par(caps(n), idn(m)),
               par(idn(n), d, idn(m)),
               par(idn(n), cups(m)))


def bend_to_state(d: Diagram) -> Diagram:
    """``0 -> n+m`` state: input wires first, then outputs.  Its evaluation is
    the column-major flattening of ``d``'s matrix."""
    return seq(caps(d.n), par(idn(d.n), d))


def unbend_to_map(state: Diagram, n: int, m: int) -> Diagram:
    """Inverse of :func:`bend_to_state`."""
    if state.n != 0 or state.m != n + m:
        raise DiagramTypeError(
            f"unbend expects a 0->{n + m} state, got {state.n}->{state.m}")
    # (c, r, x) -> (r, c, x), then contract c with x
    order = list(range(n, n + m)) + list(range(n)) + list(range(n + m, 2 * n + m))
    return seq(par(state, idn(n)),
               permutation(order),
               par(idn(m), cups(n)))


def flip(d: Diagram) -> Diagram:
    """Upside-down mirror image, realised as the transpose."""
    return transpose(d)


# -- macros ------------------------------------------------------------------


AND_PRIMITIVE = "primitive"
AND_DERIVED = "derived"
AND_FORBID = "forbid"


def and_ring_expansion(ring: Ring | None = None) -> Diagram:
    """AND as ``Tinv . Z(2,1,1) . (T (x) T)``."""
    return seq(par(T, T), Z(2, 1, ring.one if ring is not None else 1), TINV)


def and_semiring_expansion(ring: Ring) -> Diagram:
    """AND rebuilt from row-addition gadgets only (its top-corner entry is 1,
    so the normal form needs no row multiplication)."""
    from .normalform import _state_without_multiplier
    from .interp import AND_MATRIX

    vec = [ring.from_int(v) for v in _colmajor(AND_MATRIX)]
    return unbend_to_map(_state_without_multiplier(vec, ring), 2, 1)


def _colmajor(rows):
    return [rows[r][c] for c in range(len(rows[0])) for r in range(len(rows))]


def expand_macro(g: Gen, ring: Ring | None = None, and_mode: str = AND_PRIMITIVE) -> Diagram:
    if g.kind == "XOR":
        return X(2, 1)
    if g.kind == "NOT":
        return P
    if g.kind == "copy":
        if ring is None:
            raise AlgebraError("copy expansion needs a ring for the unit phase")
        return Z(1, g.m, ring.one)
    if g.kind == "gbox":
        return Z(1, 1, g.phase)
    if g.kind == "AND":
        if ring is None or ring.is_ring:
            return and_ring_expansion(ring)
        if and_mode == AND_DERIVED:
            return and_semiring_expansion(ring)
        if and_mode == AND_FORBID:
            raise RegimeError(
                "AND has no primitive-free expansion configured over " + ring.name)
        return g
    return g


def expand_macros(d: Diagram, ring: Ring | None = None, and_mode: str = AND_PRIMITIVE) -> Diagram:
    """Replace macros by core generators.  Over a semiring AND stays a
    primitive box unless ``and_mode`` asks for the derived expansion."""
    if isinstance(d, Gen):
        return expand_macro(d, ring, and_mode) if d.is_macro else d
    if isinstance(d, Seq):
        return Seq(expand_macros(d.first, ring, and_mode), expand_macros(d.then, ring, and_mode))
    return Par(expand_macros(d.left, ring, and_mode), expand_macros(d.right, ring, and_mode))


def generators(d: Diagram):
    """Leaves in left-to-right, top-to-bottom order."""
    stack = [d]
    while stack:
        node = stack.pop()
        if isinstance(node, Gen):
            yield node
        elif isinstance(node, Seq):
            stack.append(node.then)
            stack.append(node.first)
        else:
            stack.append(node.right)
            stack.append(node.left)


def check_regime(d: Diagram, ring: Ring) -> None:
    """Reject ring-only generators and foreign phases."""
    for g in generators(d):
        if g.kind in RING_ONLY and not ring.is_ring:
            raise RegimeError(f"{g.kind} needs additive inverses; {ring.name} is a semiring")
        if g.kind in ("Z", "gbox") and not ring.contains(g.phase):
            raise AlgebraError(f"phase {g.phase!r} is not an element of {ring.name}")


def map_phases(d: Diagram, fn) -> Diagram:
    if isinstance(d, Gen):
        if d.kind in ("Z", "gbox"):
            return Gen(d.kind, d.arity, fn(d.phase))
        return d
    if isinstance(d, Seq):
        return Seq(map_phases(d.first, fn), map_phases(d.then, fn))
    return Par(map_phases(d.left, fn), map_phases(d.right, fn))


def size(d: Diagram) -> int:
    return sum(1 for _ in generators(d))
