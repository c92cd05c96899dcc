"""Textual diagram grammar.

    term := gen | "id" | "idn(" nat ")" | "(" term ")" | term ";" term | term "|" term

``;`` (vertical composition, left applied first) binds looser than ``|``.
Both operators associate to the right, matching the canonical spines built
by :func:`zxalg.diagram.seq`, so printing then parsing is the identity.
"""

from __future__ import annotations

from .algebra import AlgebraError, Ring
from .diagram import (Diagram, DiagramTypeError, Gen, Par, Seq, make_generator)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, offset: int):
        line = text.count("\n", 0, offset) + 1
        col = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.column, self.message = line, col, message


_NULLARY = {"H": "H", "T": "T", "Tinv": "Tinv", "P": "P", "swap": "swap",
            "cap": "cap", "cup": "cup", "AND": "AND", "NOT": "NOT", "XOR": "XOR",
            "id": "id"}


class _Parser:
    def __init__(self, text: str, ring: Ring | None):
        self.text = text
        self.pos = 0
        self.ring = ring

    def error(self, message, offset=None):
        raise ParseError(message, self.text, self.pos if offset is None else offset)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def parse(self) -> Diagram:
        d = self.seq_term()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return d

    def seq_term(self) -> Diagram:
        start = self.pos
        left = self.par_term()
        if self.peek() == ";":
            self.pos += 1
            right = self.seq_term()
            try:
                return Seq(left, right)
            except DiagramTypeError as exc:
                self.error(f"type error in '{self.text[start:self.pos].strip()}': {exc}", start)
        return left

    def par_term(self) -> Diagram:
        left = self.atom()
        if self.peek() == "|":
            self.pos += 1
            return Par(left, self.par_term())
        return left

    def atom(self) -> Diagram:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            d = self.seq_term()
            self.expect(")")
            return d
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        word = self.text[start:self.pos]
        if not word:
            self.error("expected a generator" if ch else "unexpected end of input")
        if word in ("Z", "X", "idn", "copy", "gbox"):
            args = self.arguments(start)
            return self.build(word, args, start)
        if word in _NULLARY:
            if word == "id":
                return make_generator("id", 1)
            try:
                return make_generator(word, ring=self.ring)
            except AlgebraError as exc:
                self.error(str(exc), start)
        self.error(f"unknown generator {word!r}", start)

    def arguments(self, start) -> list[tuple[str, int]]:
        self.expect("(")
        args = []
        depth = 0
        arg_start = self.pos
        while True:
            if self.pos >= len(self.text):
                self.error("unterminated argument list", start)
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")" and depth:
                depth -= 1
            elif ch in ",)" and not depth:
                args.append((self.text[arg_start:self.pos].strip(), arg_start))
                self.pos += 1
                if ch == ")":
                    return args
                arg_start = self.pos
                continue
            self.pos += 1

    def nat(self, arg):
        text, offset = arg
        if not text.isdigit():
            self.error(f"expected a natural number, got {text!r}", offset)
        return int(text)

    def elem(self, arg):
        text, offset = arg
        if self.ring is None:
            self.error("phase literal needs an active ring", offset)
        try:
            return self.ring.parse(text)
        except AlgebraError as exc:
            self.error(str(exc), offset)

    def build(self, word, args, start) -> Gen:
        expected = {"Z": 3, "X": 2, "idn": 1, "copy": 1, "gbox": 1}[word]
        if len(args) != expected:
            self.error(f"{word} takes {expected} argument(s), got {len(args)}", start)
        if word == "Z":
            return make_generator("Z", self.nat(args[0]), self.nat(args[1]), self.elem(args[2]))
        if word == "X":
            return make_generator("X", self.nat(args[0]), self.nat(args[1]))
        if word == "idn":
            return make_generator("id", self.nat(args[0]))
        if word == "copy":
            return make_generator("copy", self.nat(args[0]))
        return make_generator("gbox", self.elem(args[0]))


def parse_diagram(text: str, ring: Ring | None = None) -> Diagram:
    """Parse one diagram expression; phases use ``ring``'s literal grammar."""
    return _Parser(text, ring).parse()


def print_diagram(d: Diagram, ring: Ring | None = None) -> str:
    fmt = ring.format if ring is not None else str
    return _print(d, fmt, top=True)


def _print(d: Diagram, fmt, top=False) -> str:
    if isinstance(d, Gen):
        return _print_gen(d, fmt)
    if isinstance(d, Seq):
        left = _print(d.first, fmt)
        if isinstance(d.first, Seq):
            left = f"({left})"
        return f"{left} ; {_print(d.then, fmt)}"
    left = _print(d.left, fmt)
    if isinstance(d.left, (Seq, Par)):
        left = f"({left})"
    right = _print(d.right, fmt)
    if isinstance(d.right, Seq):
        right = f"({right})"
    return f"{left} | {right}"


def _print_gen(g: Gen, fmt) -> str:
    kind = g.kind
    if kind == "Z":
        return f"Z({g.n},{g.m},{fmt(g.phase)})"
    if kind == "X":
        return f"X({g.n},{g.m})"
    if kind == "id":
        return "id" if g.n == 1 else f"idn({g.n})"
    if kind == "copy":
        return f"copy({g.m})"
    if kind == "gbox":
        return f"gbox({fmt(g.phase)})"
    return kind
