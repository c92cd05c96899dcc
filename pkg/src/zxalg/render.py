"""Graphviz DOT export, read top to bottom.

Wires become edges; identities and swaps only reroute wires and emit no
nodes.  Normal forms can be drawn with one cluster per gadget.
"""

from __future__ import annotations

from .algebra import Ring
from .diagram import Diagram, Gen, Par, Seq
from .normalform import NormalForm, _base_state, scalar_diagram
from .gadgets import row_add_gadget, row_mult_gadget

_STYLE = {
    "Z": 'shape=circle, style=filled, fillcolor="#99dd99"',
    "gbox": 'shape=box, style=filled, fillcolor="#99dd99"',
    "copy": 'shape=circle, style=filled, fillcolor="#99dd99", width=0.15',
    "X": 'shape=circle, style=filled, fillcolor="#ff8888"',
    "XOR": 'shape=circle, style=filled, fillcolor="#ff8888"',
    "P": 'shape=circle, style=filled, fillcolor="#ff8888"',
    "NOT": 'shape=circle, style=filled, fillcolor="#ff8888"',
    "H": 'shape=square, style=filled, fillcolor="#ffee88"',
    "T": "shape=triangle",
    "Tinv": "shape=invtriangle",
    "AND": "shape=box",
    "cap": "shape=point",
    "cup": "shape=point",
}


def _label(g: Gen, fmt) -> str:
    if g.kind in ("Z", "gbox"):
        return fmt(g.phase)
    if g.kind in ("P", "NOT"):
        return "pi"
    if g.kind in ("X", "XOR", "cap", "cup", "copy"):
        return ""
    return g.kind


class _Graph:
    def __init__(self, ring: Ring | None):
        self.fmt = ring.format if ring is not None else str
        self.lines: list[str] = []
        self.edges: list[str] = []
        self.count = 0

    def node(self, attrs: str, indent: str) -> str:
        name = f"n{self.count}"
        self.count += 1
        self.lines.append(f"{indent}{name} [{attrs}];")
        return name

    def edge(self, src: str, dst: str):
        # kept outside cluster blocks so nodes are not pulled into them
        self.edges.append(f"  {src} -> {dst};")

    def emit(self, d: Diagram, wires: list[str], indent="  ") -> list[str]:
        if isinstance(d, Seq):
            return self.emit(d.then, self.emit(d.first, wires, indent), indent)
        if isinstance(d, Par):
            left = self.emit(d.left, wires[:d.left.n], indent)
            return left + self.emit(d.right, wires[d.left.n:], indent)
        if d.kind == "id":
            return wires
        if d.kind == "swap":
            return [wires[1], wires[0]]
        label = _label(d, self.fmt).replace('"', "'")
        name = self.node(f'label="{label}", {_STYLE[d.kind]}', indent)
        for w in wires:
            self.edge(w, name)
        return [name] * d.m

    def boundary(self, prefix: str, count: int) -> list[str]:
        names = [f"{prefix}{i}" for i in range(count)]
        for name in names:
            self.lines.append(f'  {name} [label="", shape=plaintext, width=0, height=0];')
        return names

    def finish(self, outputs: list[str]) -> str:
        for i, w in enumerate(outputs):
            self.edge(w, f"out{i}")
        body = "\n".join(self.lines + self.edges)
        return "digraph zx {\n  rankdir=TB;\n" + (body + "\n" if body else "") + "}\n"


def to_dot(d: Diagram, ring: Ring | None = None) -> str:
    g = _Graph(ring)
    wires = g.boundary("in", d.n)
    g.boundary("out", d.m)
    return g.finish(g.emit(d, wires))


def normal_form_to_dot(nf: NormalForm) -> str:
    """Like :func:`to_dot`, with each normal-form gadget in its own cluster."""
    ring, m = nf.ring, nf.m
    g = _Graph(ring)
    g.boundary("out", m)
    wires: list[str] = []
    for index, gadget in enumerate(nf.gadgets()):
        kind = gadget[0]
        if kind == "scalar":
            part, title = scalar_diagram(gadget[1], ring), "scalar"
        elif kind == "base":
            part, title = _base_state(m), "base"
        elif kind == "add":
            part = row_add_gadget(m, gadget[1], gadget[2], ring)
            title = f"add {list(gadget[1])} {ring.format(gadget[2])}"
        else:
            part, title = row_mult_gadget(m, gadget[1], ring), f"mult {ring.format(gadget[1])}"
        g.lines.append(f"  subgraph cluster_{index} {{")
        g.lines.append(f'    label="{title}";')
        wires = g.emit(part, wires, "    ")
        g.lines.append("  }")
    return g.finish(wires)
