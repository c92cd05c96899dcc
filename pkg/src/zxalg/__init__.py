"""ZX-calculus over commutative rings and semirings."""

from .algebra import (INF, AlgebraError, Poly, PolynomialRing, RegimeError, Ring,
                      parse_element, ring_from_descriptor, substitute)
from .diagram import (AND, CAP, CUP, EMPTY, H, ID, NOT, P, SWAP, TINV, XOR, T, X, Z,
                      Diagram, DiagramTypeError, Gen, bend_to_state, copy,
                      expand_macros, gbox, idn, make_generator, par, seq,
                      transpose, unbend_to_map)
from .interp import Matrix, evaluate, interpret_generator
from .normalform import (diagram_equal, normal_form, normalize, synthesize_map,
                         synthesize_state)
from .syntax import parse_diagram, print_diagram

__all__ = [
    "INF", "AlgebraError", "Poly", "PolynomialRing", "RegimeError", "Ring",
    "parse_element", "ring_from_descriptor", "substitute",
    "AND", "CAP", "CUP", "EMPTY", "H", "ID", "NOT", "P", "SWAP", "TINV", "XOR",
    "T", "X", "Z", "Diagram", "DiagramTypeError", "Gen", "bend_to_state", "copy",
    "expand_macros", "gbox", "idn", "make_generator", "par", "seq", "transpose",
    "unbend_to_map", "Matrix", "evaluate", "interpret_generator",
    "diagram_equal", "normal_form", "normalize", "synthesize_map",
    "synthesize_state", "parse_diagram", "print_diagram",
]
