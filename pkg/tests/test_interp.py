import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zxalg.algebra import INF, AlgebraError, PolynomialRing, substitute
from zxalg.diagram import CAP, CUP, EMPTY, ID, P, T, X, Z, idn, map_phases, par, seq, transpose
from zxalg.interp import (DimensionError, Matrix, evaluate, format_matrix,
                          interpret_generator, kron, matmul, parse_matrix, unvec, vec)

from strategies import (ALL_RINGS, BOOL, CONCRETE, INT, MOD6, NAT, PINT, PNAT, TROP,
                        diagrams, elements)


def mat(ring, rows):
    return Matrix.from_ints(ring, rows)


def test_generator_examples():
    assert interpret_generator(T, INT) == mat(INT, [[1, 1], [0, 1]])
    assert interpret_generator(X(2, 1), INT) == mat(INT, [[1, 0, 0, 1], [0, 1, 1, 0]])
    a = PINT.var("a")
    g = interpret_generator(Z(1, 2, a), PINT)
    assert g.shape == (4, 2)
    assert g[0, 0] == PINT.one and g[3, 1] == a
    assert sum(1 for x in g.data if x != PINT.zero) == 2


def test_evaluate_examples():
    assert evaluate(seq(P, P), INT) == Matrix.identity(INT, 2)
    snake = seq(par(CAP, ID), par(ID, CUP))
    assert evaluate(snake, INT) == Matrix.identity(INT, 2)
    assert evaluate(seq(CAP, CUP), INT) == mat(INT, [[2]])
    assert evaluate(seq(CAP, CUP), BOOL) == mat(BOOL, [[1]])
    assert evaluate(EMPTY, TROP).data == (0,)


def test_seq_order_and_kron_order():
    # T first, then P: [[P]] . [[T]]
    assert evaluate(seq(T, P), INT) == matmul(mat(INT, [[0, 1], [1, 0]]), mat(INT, [[1, 1], [0, 1]]))
    assert evaluate(par(T, P), INT) == kron(mat(INT, [[1, 1], [0, 1]]), mat(INT, [[0, 1], [1, 0]]))


def test_matrix_op_examples():
    i2 = Matrix.identity(INT, 2)
    p = mat(INT, [[0, 1], [1, 0]])
    k = kron(i2, p)
    assert k.to_rows() == [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]
    assert vec(i2).data == (1, 0, 0, 1)
    tid = Matrix.from_rows(TROP, [[0, INF], [INF, 0]])
    assert matmul(tid, tid) == tid
    with pytest.raises(DimensionError):
        matmul(mat(INT, [[1, 2]]), mat(INT, [[1, 2]]))


def test_unvec_inverts_vec():
    a = mat(INT, [[1, 2, 3, 4], [5, 6, 7, 8]])
    assert unvec(vec(a).data, 2, 4, INT) == a


def test_red_spider_parity():
    m = interpret_generator(X(2, 3), INT)
    for r in range(8):
        for c in range(4):
            assert m[r, c] == (bin(r).count("1") % 2 == bin(c).count("1") % 2)


def test_empty_and_scalar_spiders():
    assert evaluate(Z(0, 0, 5), INT).data == (6,)
    assert evaluate(X(0, 0), INT).data == (1,)


def test_matrix_text_round_trip():
    r = PolynomialRing(("a",))
    m = Matrix.from_rows(r, [[r.parse("a+1"), r.zero], [r.one, r.parse("-2*a")]])
    assert parse_matrix(format_matrix(m), r) == m
    assert format_matrix(mat(INT, [[7]])) == "1 1\n7\n"


@pytest.mark.parametrize("text,where", [
    ("2 2\n1 1\n0\n", "line 3"), ("x 1\n1\n", "line 1"), ("2 1\n1\n", "rows"),
    ("1 1\nq\n", "line 2"),
])
def test_matrix_parse_errors(text, where):
    with pytest.raises(AlgebraError) as err:
        parse_matrix(text, INT)
    assert where in str(err.value)


# -- properties --------------------------------------------------------------


def _red_from_monoid(n, m):
    mult, unit = X(2, 1), X(0, 1)

    def gather(k, mult, unit):
        if k == 0:
            return unit
        if k == 1:
            return ID
        return seq(par(mult, idn(k - 2)) if k > 2 else mult, gather(k - 1, mult, unit))

    return seq(gather(n, mult, unit), transpose(gather(m, mult, unit)))


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(5) if n + m <= 4])
def test_red_spider_generated_by_monoid_pair(n, m):
    for ring in (INT, NAT, BOOL):
        assert evaluate(_red_from_monoid(n, m), ring) == interpret_generator(X(n, m), ring)


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_interchange_law(ring):
    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def check(data):
        a = data.draw(diagrams(ring, depth=1, max_width=2))
        b = data.draw(diagrams(ring, a.m, depth=1, max_width=2))
        c = data.draw(diagrams(ring, depth=1, max_width=2))
        d = data.draw(diagrams(ring, c.m, depth=1, max_width=2))
        assert evaluate(par(seq(a, b), seq(c, d)), ring) == evaluate(seq(par(a, c), par(b, d)), ring)

    check()


@pytest.mark.parametrize("source,target", [(PINT, INT), (PINT, MOD6), (PNAT, NAT),
                                           (PNAT, BOOL), (PNAT, TROP)],
                         ids=lambda r: r.name)
def test_symbolic_specialization(source, target):
    @settings(max_examples=40, deadline=None)
    @given(diagrams(source, depth=2), elements(target), elements(target))
    def check(d, va, vb):
        env = {"a": va, "b": vb}
        spec = lambda p: substitute(p, env, target)
        symbolic = evaluate(d, source)
        concrete = evaluate(map_phases(d, spec), target)
        assert concrete.data == tuple(spec(x) for x in symbolic.data)

    check()


@pytest.mark.parametrize("ring", CONCRETE, ids=lambda r: r.name)
def test_evaluate_matches_naive_composition(ring):
    """The sparse engine agrees with dense kron/matmul on the term tree."""
    from zxalg.diagram import Par, Seq, expand_macros

    def dense(d):
        if isinstance(d, Seq):
            return matmul(dense(d.then), dense(d.first))
        if isinstance(d, Par):
            return kron(dense(d.left), dense(d.right))
        return interpret_generator(d, ring)

    @settings(max_examples=40, deadline=None)
    @given(diagrams(ring))
    def check(d):
        assert evaluate(d, ring) == dense(expand_macros(d, ring))

    check()
