import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zxalg.algebra import (INF, AlgebraError, RegimeError, make_poly, parse_element,
                           ring_from_descriptor, substitute)

from strategies import ALL_RINGS, BOOL, INT, MOD6, NAT, PINT, PNAT, TROP, elements


def test_parse_examples():
    assert parse_element("int", "-3") == -3
    assert parse_element("mod:5", "7") == 2
    p = parse_element("poly-int:a,b", "a*b+2")
    assert p == make_poly(("a", "b"), {(1, 1): 1, (0, 0): 2})
    assert p.terms == (((1, 1), 1), ((0, 0), 2))


def test_ring_op_examples():
    assert TROP.add(3, 5) == 3
    assert BOOL.add(1, 1) == 1
    r = ring_from_descriptor("poly-int:a")
    x = r.parse("a+1")
    assert r.format(r.mul(x, x)) == "a^2+2*a+1"


@pytest.mark.parametrize("ring,text", [
    ("nat", "-1"), ("bool", "2"), ("int", "1.5"), ("int", "a"), ("mod:4", "-2"),
    ("tropical", "infinity"), ("poly-nat:a", "a-1"), ("poly-int:a", "b"), ("int", ""),
])
def test_parse_rejects(ring, text):
    with pytest.raises(AlgebraError):
        parse_element(ring, text)


@pytest.mark.parametrize("desc", ["real", "mod:1", "mod:x", "poly:a", "mod:"])
def test_bad_descriptors(desc):
    with pytest.raises(AlgebraError):
        ring_from_descriptor(desc)


def test_descriptor_names_round_trip():
    for desc in ["int", "nat", "bool", "mod:6", "tropical", "poly-int:a,b", "poly-nat:x"]:
        assert ring_from_descriptor(desc).name == desc


def test_tropical_units():
    assert TROP.zero is INF and TROP.one == 0
    assert TROP.mul(INF, 4) is INF
    assert TROP.add(INF, -2) == -2
    assert TROP.format(INF) == "inf" and TROP.parse("inf") is INF


@pytest.mark.parametrize("ring", [NAT, BOOL, TROP, PNAT])
def test_semirings_have_no_negation(ring):
    assert not ring.is_ring
    with pytest.raises(RegimeError):
        ring.neg(ring.one)


def test_modular_elements_reduced():
    r = ring_from_descriptor("mod:7")
    assert r.add(5, 4) == 2 and r.mul(3, 5) == 1 and r.neg(3) == 4
    assert r.from_int(-1) == 6


def test_substitute_examples():
    p = PINT.parse("a*b+2")
    assert substitute(p, {"a": 3, "b": 4}, INT) == 14
    mod2 = ring_from_descriptor("mod:2")
    a = ring_from_descriptor("poly-int:a").parse("a")
    assert substitute(a, {"a": 1}, mod2) == 1
    two_a = ring_from_descriptor("poly-int:a").parse("2*a")
    with pytest.raises(RegimeError):
        substitute(two_a, {"a": 1}, BOOL)
    nat_two_a = ring_from_descriptor("poly-nat:a").parse("2*a")
    assert substitute(nat_two_a, {"a": 1}, BOOL) == 1


def test_substitute_unbound():
    with pytest.raises(AlgebraError):
        substitute(PINT.parse("a+b"), {"a": 1}, INT)


def test_poly_canonical_form_unique():
    r = ring_from_descriptor("poly-int:a,b")
    x = r.parse("b*a + a*b - 2*a*b + a^2")
    assert x == r.parse("a^2")
    assert r.sub(r.parse("a+b"), r.parse("b+a")) == r.zero


def test_from_int_and_power():
    assert INT.from_int(-4) == -4
    assert NAT.from_int(3) == 3
    assert BOOL.from_int(5) == 1
    assert TROP.from_int(3) == 0
    assert PINT.power(PINT.parse("a+1"), 3) == PINT.parse("a^3+3*a^2+3*a+1")


# -- properties --------------------------------------------------------------


def _axioms(ring, x, y, z):
    add, mul, eq = ring.add, ring.mul, ring.eq
    assert eq(add(x, y), add(y, x))
    assert eq(mul(x, y), mul(y, x))
    assert eq(add(add(x, y), z), add(x, add(y, z)))
    assert eq(mul(mul(x, y), z), mul(x, mul(y, z)))
    assert eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))
    assert eq(add(x, ring.zero), x)
    assert eq(mul(x, ring.zero), ring.zero)
    assert eq(mul(x, ring.one), x)
    if ring.is_ring:
        assert eq(add(x, ring.neg(x)), ring.zero)


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_semiring_axioms(ring):
    el = elements(ring)

    @settings(max_examples=1000, deadline=None)
    @given(el, el, el)
    def check(x, y, z):
        _axioms(ring, x, y, z)

    check()


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_format_parse_identity(ring):
    @settings(max_examples=200, deadline=None)
    @given(elements(ring))
    def check(x):
        assert ring.eq(ring.parse(ring.format(x)), x)

    check()


@pytest.mark.parametrize("source,target", [(PINT, INT), (PINT, MOD6), (PNAT, NAT),
                                           (PNAT, BOOL), (PNAT, TROP), (PNAT, INT)],
                         ids=lambda r: r.name)
def test_substitution_is_homomorphism(source, target):
    @settings(max_examples=200, deadline=None)
    @given(elements(source), elements(source), elements(target), elements(target))
    def check(p, q, va, vb):
        env = {"a": va, "b": vb}
        s = lambda x: substitute(x, env, target)
        assert target.eq(s(source.add(p, q)), target.add(s(p), s(q)))
        assert target.eq(s(source.mul(p, q)), target.mul(s(p), s(q)))

    check()


@settings(max_examples=300)
@given(st.integers(-50, 50))
def test_modular_reduction_canonical(k):
    x = MOD6.from_int(k)
    assert 0 <= x < 6 and x == k % 6
