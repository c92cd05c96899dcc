import re

from zxalg.diagram import EMPTY, H, SWAP, T, X, Z, par, seq
from zxalg.normalform import normal_form
from zxalg.render import normal_form_to_dot, to_dot

from strategies import INT


def _nodes(dot):
    return re.findall(r"^\s*(n\d+) \[", dot, re.M)


def _edges(dot):
    return re.findall(r"^\s*(\w+) -> (\w+);", dot, re.M)


def test_triangle():
    dot = to_dot(T)
    assert _nodes(dot) == ["n0"] and "shape=triangle" in dot
    assert _edges(dot) == [("in0", "n0"), ("n0", "out0")]
    assert "rankdir=TB" in dot


def test_empty():
    dot = to_dot(EMPTY)
    assert _nodes(dot) == [] and _edges(dot) == []


def test_swap_routes_without_nodes():
    dot = to_dot(par(T, H) >> SWAP)
    assert _edges(dot) == [("in0", "n0"), ("in1", "n1"), ("n1", "out0"), ("n0", "out1")]


def test_stable_ids():
    d = seq(Z(1, 2, 3), X(2, 1))
    assert to_dot(d, INT) == to_dot(d, INT)
    assert 'label="3"' in to_dot(d, INT)


def test_normal_form_clusters():
    dot = normal_form_to_dot(normal_form([2, 3], INT))
    labels = re.findall(r'label="(base|add[^"]*|mult[^"]*)";', dot)
    assert labels == ["base", "add [0] 2", "mult 3"]
    # edges live outside the cluster blocks
    last_cluster_end = dot.rindex("  }")
    assert all(dot.index(f"{a} -> {b};") > last_cluster_end for a, b in _edges(dot))
