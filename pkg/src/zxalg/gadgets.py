"""Elementary-matrix gadgets: row addition ``A_j`` and row multiplication ``M``.

Bit convention: exponent ``k`` in a target set ``S`` is wire ``m-1-k``.
"""

from __future__ import annotations

from typing import Iterable

from .algebra import Ring
from .diagram import (AND, EMPTY, P, T, Diagram, X, Z, idn, par, permutation,
                      seq, tensor_power)
from .interp import Matrix


class GadgetError(ValueError):
    pass


def row_index(m: int, subset: Iterable[int]) -> int:
    """``j = 2^m - 1 - sum(2^k for k in S)``."""
    subset = _check(m, subset)
    return (1 << m) - 1 - sum(1 << k for k in subset)


def _check(m, subset) -> frozenset:
    if m < 1:
        raise GadgetError("gadgets need at least one wire")
    subset = frozenset(subset)
    if not subset:
        raise GadgetError("row addition needs a nonempty target set")
    if not all(0 <= k < m for k in subset):
        raise GadgetError(f"target exponents {sorted(subset)} out of range for m={m}")
    return subset


# -- oracles -----------------------------------------------------------------


def row_add_matrix(m: int, subset, a, ring: Ring) -> Matrix:
    """Identity plus ``a`` at row ``j``, last column."""
    j = row_index(m, subset)
    size = 1 << m
    data = list(Matrix.identity(ring, size).data)
    data[j * size + size - 1] = ring.check(a)
    return Matrix(ring, size, size, tuple(data))


def row_mult_matrix(m: int, a, ring: Ring) -> Matrix:
    """``diag(1, ..., 1, a)``."""
    if m < 1:
        raise GadgetError("row multiplication needs at least one wire")
    size = 1 << m
    data = list(Matrix.identity(ring, size).data)
    data[-1] = ring.check(a)
    return Matrix(ring, size, size, tuple(data))


# -- diagrams ----------------------------------------------------------------


def _tap_all(m: int, ring: Ring) -> Diagram:
    """``m -> 2m``: copy every wire, then gather the copies to the right."""
    copies = tensor_power(Z(1, 2, ring.one), m)
    if m == 1:
        return copies
    order = [2 * q for q in range(m)] + [2 * q + 1 for q in range(m)]
    return seq(copies, permutation(order))


def row_add_gadget(m: int, subset, a, ring: Ring) -> Diagram:
    """Diagram of :func:`row_add_matrix` built from copies, triangles, one
    phased green spider and XORs; valid over semirings."""
    subset = _check(m, subset)
    ring.check(a)
    targets = sorted((m - 1 - k for k in subset))
    s = len(targets)
    control = seq(tensor_power(T, m), Z(m, 1, a), Z(1, s, ring.one))
    # wires 0..m-1 then s control copies; route copy i next to wire targets[i]
    order = []
    copy_of = {w: m + i for i, w in enumerate(targets)}
    for w in range(m):
        order.append(w)
        if w in copy_of:
            order.append(copy_of[w])
    recombine = par(*[X(2, 1) if w in copy_of else idn(1) for w in range(m)])
    return seq(_tap_all(m, ring),
               par(idn(m), control),
               permutation(order),
               recombine)


def row_mult_gadget(m: int, a, ring: Ring) -> Diagram:
    """Diagram of :func:`row_mult_matrix`.

    Ring regime: triangles into ``Z(m,1,a-1)``, then ``P`` and the effect
    ``<0|+<1|`` give the multiplier ``1 + (a-1).AND``.  Semiring regime: the
    taps are AND-ed to a basis value and discarded through ``<0| + a<1|``.
    """
    if m < 1:
        raise GadgetError("row multiplication needs at least one wire")
    ring.check(a)
    if m == 1:
        return Z(1, 1, a)
    if ring.is_ring:
        discard = seq(tensor_power(T, m), Z(m, 1, ring.sub(a, ring.one)), P, Z(1, 0, ring.one))
    else:
        discard = seq(and_chain(m), Z(1, 0, a))
    return seq(_tap_all(m, ring), par(idn(m), discard))


def and_chain(k: int) -> Diagram:
    """``k -> 1`` conjunction as a left-leaning chain of AND boxes."""
    if k < 1:
        raise GadgetError("empty conjunction")
    if k == 1:
        return idn(1)
    return seq(*[par(AND, idn(w - 2)) if w > 2 else AND for w in range(k, 1, -1)])


def pi_mask(m: int, mask: int) -> Diagram:
    """``P`` on every wire whose bit is set in ``mask`` (wire 0 = top bit)."""
    if m == 0:
        return EMPTY
    return par(*[P if mask >> (m - 1 - w) & 1 else idn(1) for w in range(m)])


def pi_conjugate(d: Diagram, mask: int) -> Diagram:
    """``d`` sandwiched between two ``pi_mask`` layers: relocates the corner
    a gadget acts on from ``2^m - 1`` to ``(2^m - 1) xor mask``."""
    return seq(pi_mask(d.n, mask), d, pi_mask(d.m, mask))
