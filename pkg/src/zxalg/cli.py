"""``zxalg`` command line.

Exit status: 0 on success or equality, 1 when diagrams differ or a rule,
lemma or derivation fails, 2 on usage, parse, type or regime errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .algebra import AlgebraError, PolynomialRing, Ring, ring_from_descriptor
from .diagram import AND_DERIVED, AND_FORBID, AND_PRIMITIVE, Diagram, DiagramTypeError
from .interp import DimensionError, evaluate, format_matrix, parse_matrix
from .normalform import diagram_equal, normal_form, normalize, synthesize_map
from .render import normal_form_to_dot, to_dot
from .rewrite import MatchError, check_derivation, parse_derivation
from .rules import (InstantiationError, SoundnessReport, check_catalog,
                    default_arity_bound, run_lemma_suite)
from .syntax import ParseError, parse_diagram, print_diagram

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _ring(args, default: str = "int") -> Ring:
    return ring_from_descriptor(args.ring or default)


def _diagram(path: str, ring: Ring) -> Diagram:
    return parse_diagram(_strip_comments(_read(path)), ring)


# -- commands ----------------------------------------------------------------


def cmd_eval(args) -> int:
    ring = _ring(args)
    _write(format_matrix(evaluate(_diagram(args.diagram, ring), ring, args.and_mode)), args.output)
    return EXIT_OK


def cmd_synth(args) -> int:
    ring = _ring(args)
    matrix = parse_matrix(_read(args.matrix), ring)
    _write(print_diagram(synthesize_map(matrix), ring) + "\n", args.output)
    return EXIT_OK


def cmd_normalize(args) -> int:
    ring = _ring(args)
    _write(print_diagram(normalize(_diagram(args.diagram, ring), ring), ring) + "\n", args.output)
    return EXIT_OK


def cmd_equal(args) -> int:
    ring = _ring(args)
    verdict = diagram_equal(_diagram(args.first, ring), _diagram(args.second, ring), ring)
    print("equal" if verdict else f"not equal ({verdict.reason})")
    return EXIT_OK if verdict else EXIT_FAIL


def _table(reports: list[SoundnessReport]) -> tuple[str, bool]:
    width = max([len(r.name) for r in reports] + [4])
    lines = [f"{'rule':<{width}}  instances  verdict"]
    ok = True
    for r in reports:
        lines.append(f"{r.name:<{width}}  {len(r.instances):>9}  {'pass' if r.passed else 'FAIL'}")
        for bad in r.failures[:3]:
            lines.append(f"{'':<{width}}    {bad.params}: {bad.detail}")
        ok &= r.passed
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n", ok


def _regime(args) -> str:
    if args.regime:
        return args.regime
    if args.ring:
        return "ring" if ring_from_descriptor(args.ring).is_ring else "semiring"
    return "ring"


def _symbolic(regime: str, ring: Ring | None) -> Ring:
    if ring is None:
        return PolynomialRing((), natural=(regime == "semiring"))
    if regime == "ring" and not ring.is_ring:
        raise UsageError(f"the ring catalog cannot be checked over the semiring {ring.name}")
    return ring


def cmd_check_rules(args) -> int:
    regime = _regime(args)
    ring = _symbolic(regime, ring_from_descriptor(args.ring) if args.ring else None)
    reports = check_catalog(regime, ring, args.arity_bound, and_mode=args.and_mode)
    text, ok = _table(reports)
    _write(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


@dataclass
class FixtureBlock:
    name: str
    lhs: str
    rhs: str
    line: int


def parse_fixture_file(text: str) -> list[FixtureBlock]:
    """``[name]`` headers, each followed by ``lhs: <diagram>`` and
    ``rhs: <diagram>``; continuation lines extend the previous side."""
    blocks: list[FixtureBlock] = []
    current: dict | None = None
    side = None

    def close():
        if current is not None:
            if not current.get("lhs") or not current.get("rhs"):
                raise UsageError(f"line {current['line']}: fixture [{current['name']}] "
                                 "needs both lhs and rhs")
            blocks.append(FixtureBlock(current["name"], current["lhs"], current["rhs"],
                                       current["line"]))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            close()
            current, side = {"name": line[1:-1].strip(), "line": lineno}, None
        elif current is None:
            raise UsageError(f"line {lineno}: expected a [name] header")
        elif line.startswith(("lhs:", "rhs:")):
            side = line[:3]
            current[side] = line[4:].strip()
        elif side:
            current[side] += " " + line
        else:
            raise UsageError(f"line {lineno}: expected 'lhs:' or 'rhs:'")
    close()
    return blocks


def cmd_lemmas(args) -> int:
    regime = _regime(args)
    if args.fixtures:
        ring = _ring(args, "int" if regime == "ring" else "nat")
        ok = True
        for block in parse_fixture_file(_read(args.fixtures)):
            try:
                lhs, rhs = parse_diagram(block.lhs, ring), parse_diagram(block.rhs, ring)
            except ParseError as exc:
                raise UsageError(f"fixture [{block.name}] (line {block.line}): {exc}") from None
            verdict = diagram_equal(lhs, rhs, ring)
            print(f"{block.name}: {'pass' if verdict else 'FAIL ' + verdict.reason}")
            ok &= bool(verdict)
        return EXIT_OK if ok else EXIT_FAIL
    ring = _symbolic(regime, ring_from_descriptor(args.ring) if args.ring else None)
    text, ok = _table(run_lemma_suite(regime, ring, args.arity_bound, args.and_mode))
    _write(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_derive(args) -> int:
    ring = _ring(args)
    derivation = parse_derivation(_read(args.script), ring)
    report = check_derivation(derivation, ring, args.mode, args.arity_bound)
    if report:
        print(f"accepted ({report.checked} steps)")
        return EXIT_OK
    print(f"rejected at step {report.failed_step}: {report.reason}")
    return EXIT_FAIL


def cmd_render(args) -> int:
    ring = _ring(args)
    if args.matrix:
        matrix = parse_matrix(_read(args.diagram), ring)
        if matrix.cols != 1:
            raise UsageError("--matrix expects a column vector (a state)")
        text = normal_form_to_dot(normal_form(matrix.data, ring))
    else:
        text = to_dot(_diagram(args.diagram, ring), ring)
    _write(text, args.output)
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zxalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--ring", help="int, nat, bool, mod:<n>, tropical, poly-int:<vars>, poly-nat:<vars>")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    def and_mode(p):
        p.add_argument("--and-mode", choices=(AND_PRIMITIVE, AND_DERIVED, AND_FORBID),
                       default=AND_PRIMITIVE, help="how AND is interpreted over semirings")

    def bound(p):
        p.add_argument("--arity-bound", type=int, default=None,
                       help="largest arity enumerated for schematic rules "
                            f"(default ZXALG_ARITY_BOUND or {default_arity_bound()})")

    p = command("eval", cmd_eval, "print the matrix of a diagram")
    p.add_argument("diagram")
    and_mode(p)
    p = command("synth", cmd_synth, "synthesise a normal-form diagram from a matrix")
    p.add_argument("matrix")
    p = command("normalize", cmd_normalize, "print the normal form of a diagram")
    p.add_argument("diagram")
    p = command("equal", cmd_equal, "compare two diagrams semantically")
    p.add_argument("first")
    p.add_argument("second")
    for name, func, text in (("check-rules", cmd_check_rules, "check every catalog rule"),
                             ("lemmas", cmd_lemmas, "check the derived-equality fixtures")):
        p = command(name, func, text)
        p.add_argument("--regime", choices=("ring", "semiring"))
        bound(p)
        and_mode(p)
        if name == "lemmas":
            p.add_argument("--fixtures", help="file of [name] blocks with lhs:/rhs: lines")
    p = command("derive", cmd_derive, "check a derivation script")
    p.add_argument("script")
    p.add_argument("--mode", choices=("syntactic", "semantic", "mixed"), default="mixed")
    bound(p)
    p = command("render", cmd_render, "emit Graphviz DOT")
    p.add_argument("diagram")
    p.add_argument("--matrix", action="store_true",
                   help="input is a state vector; draw its normal form with gadget clusters")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DiagramTypeError, AlgebraError, DimensionError, UsageError,
            MatchError, InstantiationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
