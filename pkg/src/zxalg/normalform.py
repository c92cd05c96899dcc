"""Normal forms: base state, all row additions, one row multiplication.

Any vector of length ``2^m`` is synthesised as ``|1...1>`` followed by the
``2^m - 1`` row-addition gadgets (one per nonempty target set, in canonical
order) and a final row multiplication by the last coefficient.  Maps go
through map-state duality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .algebra import Ring
from .diagram import (CUP, P, Diagram, X, Z, bend_to_state, idn, par,
                      permutation, seq, tensor_power, unbend_to_map)
from .gadgets import row_add_gadget, row_index, row_mult_gadget
from .interp import (DimensionError, Matrix, equal, evaluate, first_difference,
                     kron, log2_exact, vec)


def canonical_subsets(m: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of ``{0..m-1}`` ordered by size, then lexicographically."""
    return [s for size in range(1, m + 1) for s in combinations(range(m), size)]


@dataclass(frozen=True)
class NormalForm:
    """Coefficient vector ``a_0 .. a_{2^m-1}`` and the gadgets realising it."""

    ring: Ring
    coefficients: tuple
    m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", log2_exact(len(self.coefficients)))
        for a in self.coefficients:
            self.ring.check(a)

    def gadgets(self) -> list[tuple]:
        """``("base",)``, then ``("add", S, a_j)`` per subset, then ``("mult", a_last)``."""
        if self.m == 0:
            return [("scalar", self.coefficients[0])]
        out: list[tuple] = [("base",)]
        for subset in canonical_subsets(self.m):
            out.append(("add", subset, self.coefficients[row_index(self.m, subset)]))
        out.append(("mult", self.coefficients[-1]))
        return out

    @property
    def addition_count(self) -> int:
        return sum(1 for g in self.gadgets() if g[0] == "add")

    def diagram(self) -> Diagram:
        return _build(self.gadgets(), self.m, self.ring)

    def vector(self) -> Matrix:
        return Matrix.column(self.ring, self.coefficients)


def _base_state(m: int) -> Diagram:
    return tensor_power(seq(X(0, 1), P), m)


def scalar_diagram(a, ring: Ring) -> Diagram:
    """``<0| + a<1|`` applied to ``|1>``: evaluates to ``a``."""
    return seq(X(0, 1), P, Z(1, 0, ring.check(a)))


def _build(gadgets, m, ring) -> Diagram:
    parts = []
    for g in gadgets:
        if g[0] == "scalar":
            return scalar_diagram(g[1], ring)
        if g[0] == "base":
            parts.append(_base_state(m))
        elif g[0] == "add":
            parts.append(row_add_gadget(m, g[1], g[2], ring))
        elif g[0] == "mult":
            parts.append(row_mult_gadget(m, g[1], ring))
    return seq(*parts)


def normal_form(v: Sequence, ring: Ring) -> NormalForm:
    return NormalForm(ring, tuple(v))


def synthesize_state(v: Sequence, ring: Ring) -> Diagram:
    """Normal-form diagram of type ``0 -> m`` evaluating exactly to ``v``."""
    return normal_form(v, ring).diagram()


def _state_without_multiplier(v: Sequence, ring: Ring) -> Diagram:
    """Normal form with the row multiplication dropped; needs ``v[-1] == 1``."""
    nf = normal_form(v, ring)
    if not ring.eq(v[-1], ring.one) or nf.m == 0:
        raise ValueError("multiplier-free synthesis needs m >= 1 and last entry 1")
    return _build(nf.gadgets()[:-1], nf.m, ring)


def synthesize_map(a: Matrix) -> Diagram:
    """Diagram of type ``n -> m`` evaluating to the ``2^m x 2^n`` matrix ``a``."""
    m, n = log2_exact(a.rows), log2_exact(a.cols)
    state = synthesize_state(vec(a).data, a.ring)
    if n == 0:
        return state
    return unbend_to_map(state, n, m)


def normalize(d: Diagram, ring: Ring) -> Diagram:
    """The normal form of ``d``'s interpretation."""
    return synthesize_map(evaluate(d, ring))


@dataclass(frozen=True)
class Equality:
    equal: bool
    reason: str = ""

    def __bool__(self):
        return self.equal


def diagram_equal(d1: Diagram, d2: Diagram, ring: Ring) -> Equality:
    if d1.type != d2.type:
        return Equality(False, f"type: {d1.n}->{d1.m} vs {d2.n}->{d2.m}")
    diff = first_difference(evaluate(d1, ring), evaluate(d2, ring))
    if diff is None:
        return Equality(True)
    r, c, x, y = diff
    return Equality(False, f"entry ({r},{c}): {ring.format(x)} vs {ring.format(y)}")


# -- completeness sub-procedures --------------------------------------------


@dataclass(frozen=True)
class CheckRecord:
    """A normal form produced from ``construction`` and whether both agree."""

    name: str
    construction: Diagram
    result: NormalForm
    verified: bool


def tensor_of_normal_forms(nf1: NormalForm, nf2: NormalForm) -> CheckRecord:
    """Juxtapose two normal forms and renormalise."""
    construction = par(nf1.diagram(), nf2.diagram())
    ring = nf1.ring
    expected = kron(nf1.vector(), nf2.vector())
    nf = normal_form(expected.data, ring)
    ok = equal(evaluate(nf.diagram(), ring), evaluate(construction, ring))
    return CheckRecord("tensor", construction, nf, ok)


def self_plug(nf: NormalForm, i: int, j: int) -> CheckRecord:
    """Connect outputs ``i`` and ``j`` of a normal form with a cup."""
    m = nf.m
    if not (0 <= i < m and 0 <= j < m) or i == j:
        raise IndexError(f"wire pair ({i}, {j}) invalid for a {m}-output normal form")
    rest = [w for w in range(m) if w not in (i, j)]
    plug = seq(permutation([i, j] + rest), par(CUP, idn(m - 2)))
    construction = seq(nf.diagram(), plug)
    ring = nf.ring
    meaning = evaluate(construction, ring)
    result = normal_form(meaning.data, ring)
    return CheckRecord("self-plug", construction, result,
                       equal(evaluate(result.diagram(), ring), meaning))


def generator_to_normal_form(g: Diagram, ring: Ring) -> CheckRecord:
    """Bend a generator into a state and produce its normal form."""
    construction = bend_to_state(g) if g.n else g
    meaning = evaluate(construction, ring)
    result = normal_form(meaning.data, ring)
    return CheckRecord("generator", construction, result,
                       equal(evaluate(result.diagram(), ring), meaning))


def scalar_to_normal_form(d: Diagram, ring: Ring) -> CheckRecord:
    if d.type != (0, 0):
        raise DimensionError(f"expected a scalar diagram, got {d.n}->{d.m}")
    meaning = evaluate(d, ring)
    result = normal_form(meaning.data, ring)
    return CheckRecord("scalar", d, result, equal(evaluate(result.diagram(), ring), meaning))


def plugged_scalar(nf: NormalForm) -> CheckRecord:
    """A 2-output normal form closed by a cup, renormalised as a scalar."""
    if nf.m != 2:
        raise DimensionError("plugging with a single cup needs exactly two outputs")
    return self_plug(nf, 0, 1)
