import random

import pytest
from hypothesis import given, settings

from zxalg.algebra import RegimeError
from zxalg.diagram import EMPTY, H, ID, P, TINV, T, X, Z, gbox, idn, par, seq
from zxalg.interp import evaluate

from zxalg.rewrite import (MatchError, check_derivation, find_matches, parse_derivation,
                           parse_position, positions, structural_normalize, subterm,
                           apply_rule)
from zxalg.rules import InstantiationError, find_rule
from zxalg.syntax import parse_diagram

from strategies import INT, NAT, PINT, PNAT, diagrams, random_rule_application


def test_structural_examples():
    assert structural_normalize(seq(seq(T, P), H)) == seq(T, seq(P, H))
    assert structural_normalize(seq(T, ID)) == T
    assert structural_normalize(seq(ID, ID)) == ID
    assert structural_normalize(par(par(ID, EMPTY), ID)) == idn(2)
    assert structural_normalize(par(EMPTY, EMPTY)) == EMPTY
    assert structural_normalize(gbox(3)) == Z(1, 1, 3)


@pytest.mark.parametrize("ring", [INT, PNAT], ids=lambda r: r.name)
def test_structural_normalize_properties(ring):
    @settings(max_examples=60, deadline=None)
    @given(diagrams(ring))
    def check(d):
        n = structural_normalize(d, ring)
        assert structural_normalize(n, ring) == n
        assert n.type == d.type
        assert evaluate(n, ring) == evaluate(d, ring)

    check()


def test_positions_and_subterms():
    d = structural_normalize(seq(par(T, T), par(P, H)))
    assert list(positions(d)) == [(), (0,), (0, 0), (0, 1), (1,), (1, 0), (1, 1)]
    assert subterm(d, (1, 1)) == H
    with pytest.raises(MatchError):
        subterm(d, (0, 0, 0))
    assert parse_position("root") == () and parse_position("1.0") == (1, 0)
    assert parse_position("[1,1]") == (1, 1)
    with pytest.raises(MatchError):
        parse_position("2")


def test_apply_inv_at_root():
    assert apply_rule(seq(T, TINV), "Inv", (), {}, INT) == ID


def test_apply_s1_inside_par():
    a, b = PINT.var("a"), PINT.var("b")
    d = par(X(2, 1), seq(gbox(a), gbox(b)))
    out = apply_rule(d, "S1", (1,), {"a": a, "b": b}, PINT)
    assert out == par(X(2, 1), Z(1, 1, PINT.mul(a, b)))


def test_apply_rule_errors():
    with pytest.raises(RegimeError):
        apply_rule(parse_diagram("T", INT), find_rule("EU", "ring"), (), {}, NAT)
    with pytest.raises(RegimeError):
        apply_rule(T, "EU", (), {}, NAT)
    with pytest.raises(MatchError):
        apply_rule(T, "Inv", (), {}, INT)
    with pytest.raises(InstantiationError, match="incomplete"):
        apply_rule(seq(Z(1, 1, 2), Z(1, 1, 3)), "S1", (), {"a": 2}, INT)


def test_prefix_match_in_spine():
    d = seq(P, T, TINV, P)
    out = apply_rule(d, "Inv", (1,), {}, INT)
    assert out == seq(P, P)


def test_identity_slice_match():
    # B1 with m=2 inside a wider identity context
    d = par(idn(2), seq(X(0, 1), Z(1, 2, 1)), idn(1))
    out = apply_rule(d, "B1", None, {"m": 2}, INT)
    assert evaluate(out, INT) == evaluate(d, INT)
    assert out == structural_normalize(par(idn(2), X(0, 1), X(0, 1), idn(1)))


def test_find_matches():
    d = seq(T, TINV, T, TINV)
    found = find_matches(d, "Inv", {"variant": "right"}, INT)
    assert [p for p, _ in found] == [(), (1, 1)]


def test_apply_preserves_evaluation_randomized():
    rng = random.Random(3)
    done = 0
    while done < 150:
        regime = rng.choice(["ring", "semiring"])
        d, rule, params, ring = random_rule_application(rng, regime)
        matches = find_matches(d, rule, params, ring)
        assert matches, (rule.name, str(d))
        pos, _ = rng.choice(matches)
        out = apply_rule(d, rule, pos, params, ring)
        assert out.type == d.type
        assert evaluate(out, ring) == evaluate(d, ring)
        done += 1


# -- derivations -------------------------------------------------------------


def test_semantic_two_step():
    der = parse_derivation("start: P ; P\nsemantic -> id\n", INT)
    assert check_derivation(der, INT, "semantic")
    assert check_derivation(der, INT, "mixed")
    rep = check_derivation(der, INT, "syntactic")
    assert not rep and rep.failed_step == 1


def test_bad_rule_step_rejected():
    der = parse_derivation("start: T\nrule Inv -> P\n", INT)
    rep = check_derivation(der, INT)
    assert not rep and rep.failed_step == 1 and "no match" in rep.reason


def test_empty_derivation_accepted():
    assert check_derivation(parse_derivation("start: T\n", INT), INT).accepted


def test_syntactic_script():
    text = """# fuse then cancel
start: (T ; Tinv) | (Z(1,1,2) ; Z(1,1,3))
rule Inv at 0 with variant=right -> id | (Z(1,1,2) ; Z(1,1,3))
rule S1 at 1 with a=2, b=3 -> id | Z(1,1,6)
"""
    der = parse_derivation(text, INT)
    assert len(der.steps) == 2 and der.steps[0].position == (0,)
    assert check_derivation(der, INT, "syntactic")
    assert check_derivation(der, INT, "semantic")


def test_wrong_claimed_result():
    der = parse_derivation("start: Z(1,1,2);Z(1,1,3)\nrule S1 with a=2,b=3 -> Z(1,1,5)\n", INT)
    rep = check_derivation(der, INT)
    assert not rep and "claimed" in rep.reason


def test_type_change_rejected():
    der = parse_derivation("start: T\nsemantic -> cap\n", INT)
    rep = check_derivation(der, INT)
    assert not rep and "type" in rep.reason


@pytest.mark.parametrize("text", ["T\n", "start: T\nrule -> T\n", "start: T\nsemantic T\n",
                                  "start: T\nsemantic -> Q\n", "start: T\nrule Inv with a -> T\n"])
def test_script_parse_errors(text):
    with pytest.raises(ValueError):
        parse_derivation(text, INT)


def test_syntactic_acceptance_implies_semantic():
    rng = random.Random(11)
    for _ in range(60):
        regime = rng.choice(["ring", "semiring"])
        d, rule, params, ring = random_rule_application(rng, regime)
        pos, _ = rng.choice(find_matches(d, rule, params, ring))
        out = apply_rule(d, rule, pos, params, ring)
        from zxalg.rewrite import Derivation, Step
        der = Derivation(d, (Step(rule.name, out, pos, params),))
        assert check_derivation(der, ring, "syntactic")
        assert check_derivation(der, ring, "semantic")
