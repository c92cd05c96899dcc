from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zxalg.diagram import CAP, CUP, ID, P, T, X, Z, par, seq
from zxalg.interp import AND_MATRIX, DimensionError, Matrix, evaluate, kron
from zxalg.normalform import (canonical_subsets, diagram_equal, generator_to_normal_form,
                              normal_form, normalize, plugged_scalar, scalar_diagram,
                              scalar_to_normal_form, self_plug, synthesize_map,
                              synthesize_state, tensor_of_normal_forms)

from strategies import ALL_RINGS, CONCRETE, INT, NAT, PINT, PNAT, diagrams, elements


def test_canonical_subsets():
    assert canonical_subsets(2) == [(0,), (1,), (0, 1)]
    assert len(canonical_subsets(3)) == 7


def test_last_basis_vector_has_trivial_gadgets():
    nf = normal_form([0, 0, 0, 1], INT)
    assert [g[2] for g in nf.gadgets() if g[0] == "add"] == [0, 0, 0]
    assert nf.gadgets()[-1] == ("mult", 1)
    assert evaluate(nf.diagram(), INT).data == (0, 0, 0, 1)


def test_symbolic_state_m2():
    ring = PINT.with_variables(("c", "d"))
    v = [ring.var(x) for x in "abcd"]
    assert evaluate(synthesize_state(v, ring), ring).data == tuple(v)


def test_scalar_normal_form():
    d = synthesize_state([5], INT)
    assert d == scalar_diagram(5, INT)
    assert evaluate(d, INT).data == (5,)
    assert d.type == (0, 0)


def test_length_not_power_of_two():
    with pytest.raises(DimensionError):
        synthesize_state([1, 2, 3], INT)


def test_synthesize_map_examples():
    assert evaluate(synthesize_map(Matrix.identity(INT, 2)), INT) == Matrix.identity(INT, 2)
    h = Matrix.from_ints(INT, [[1, 1], [1, -1]])
    d = synthesize_map(h)
    assert "H" not in str(d)
    assert evaluate(d, INT) == h
    a = Matrix.from_ints(NAT, AND_MATRIX)
    assert evaluate(synthesize_map(a), NAT) == a


def test_normalize_examples():
    assert normalize(seq(P, P), INT) == normalize(ID, INT)
    b1_lhs, b1_rhs = seq(X(0, 1), Z(1, 2, 1)), par(X(0, 1), X(0, 1))
    assert normalize(b1_lhs, NAT) == normalize(b1_rhs, NAT)


def test_diagram_equal_examples():
    hopf = (seq(Z(1, 2, 1), X(2, 1)), seq(Z(1, 0, 1), X(0, 1)))
    assert diagram_equal(*hopf, INT)
    verdict = diagram_equal(T, seq(T, P), INT)
    assert not verdict and "entry" in verdict.reason
    verdict = diagram_equal(T, CAP, INT)
    assert not verdict and verdict.reason.startswith("type")


def test_gadget_count():
    for m in range(4):
        nf = normal_form([INT.one] * (1 << m), INT)
        assert nf.addition_count == ((1 << m) - 1 if m else 0)
        subsets = [g[1] for g in nf.gadgets() if g[0] == "add"]
        assert len(set(subsets)) == len(subsets)


# -- completeness sub-procedures ----------------------------------------------


def test_tensor_of_scalar_forms():
    a, b = PINT.var("a"), PINT.var("b")
    rec = tensor_of_normal_forms(normal_form([a], PINT), normal_form([b], PINT))
    assert rec.verified and rec.result.coefficients == (PINT.mul(a, b),)


def test_tensor_of_states():
    ring = PINT.with_variables(("c", "d"))
    a, b, c, d = (ring.var(x) for x in "abcd")
    rec = tensor_of_normal_forms(normal_form([a, b], ring), normal_form([c, d], ring))
    assert rec.verified
    assert rec.result.vector() == kron(Matrix.column(ring, [a, b]), Matrix.column(ring, [c, d]))


def test_self_plug_two_outputs():
    ring = PINT.with_variables(("c", "d"))
    v = [ring.var(x) for x in "abcd"]
    rec = plugged_scalar(normal_form(v, ring))
    assert rec.verified and rec.result.m == 0
    assert rec.result.coefficients == (ring.add(v[0], v[3]),)


@pytest.mark.parametrize("m", [2, 3])
def test_self_plug_all_pairs(m):
    ring = PNAT.with_variables(tuple(f"v{i}" for i in range(1 << m)))
    nf = normal_form([ring.var(f"v{i}") for i in range(1 << m)], ring)
    for i, j in combinations(range(m), 2):
        for pair in ((i, j), (j, i)):
            rec = self_plug(nf, *pair)
            assert rec.verified and rec.result.m == m - 2


def test_self_plug_bad_pair():
    nf = normal_form([1, 2, 3, 4], INT)
    with pytest.raises(IndexError):
        self_plug(nf, 0, 0)
    with pytest.raises(IndexError):
        self_plug(nf, 0, 2)


def test_generator_to_normal_form_red_unit():
    rec = generator_to_normal_form(X(0, 1), INT)
    assert rec.verified and rec.result.coefficients == (1, 0)


def test_scalar_to_normal_form():
    rec = scalar_to_normal_form(seq(CAP, CUP), INT)
    assert rec.verified and rec.result.coefficients == (2,)
    with pytest.raises(DimensionError):
        scalar_to_normal_form(T, INT)


# -- properties --------------------------------------------------------------


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_state_round_trip(ring):
    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 3).flatmap(lambda m: st.lists(elements(ring), min_size=1 << m,
                                                       max_size=1 << m)))
    def check(v):
        nf = normal_form(v, ring)
        assert evaluate(nf.diagram(), ring).data == tuple(v)
        assert nf.addition_count == (len(v) - 1 if len(v) > 1 else 0)

    check()


@pytest.mark.parametrize("ring", CONCRETE, ids=lambda r: r.name)
def test_distinct_vectors_distinct_forms(ring):
    @settings(max_examples=30, deadline=None)
    @given(st.lists(elements(ring), min_size=4, max_size=4),
           st.lists(elements(ring), min_size=4, max_size=4))
    def check(v, w):
        same = evaluate(synthesize_state(v, ring), ring) == evaluate(synthesize_state(w, ring), ring)
        assert same == all(ring.eq(x, y) for x, y in zip(v, w))

    check()


@pytest.mark.parametrize("ring", [INT, NAT, PNAT], ids=lambda r: r.name)
def test_normalize_idempotent_and_congruent(ring):
    @settings(max_examples=25, deadline=None)
    @given(diagrams(ring, depth=2, max_width=2), diagrams(ring, depth=2, max_width=2))
    def check(d1, d2):
        n1 = normalize(d1, ring)
        assert normalize(n1, ring) == n1
        assert diagram_equal(d1, n1, ring)
        assert bool(diagram_equal(d1, d2, ring)) == (n1 == normalize(d2, ring))

    check()
