"""Standard interpretation: diagrams to exact matrices over a (semi)ring.

Results are dense ``Matrix`` values.  Internally a diagram is evaluated by
pushing the nonzero entries of the running matrix through one generator at a
time, acting only on the generator's wires, which avoids materialising
Kronecker products with large identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import AlgebraError, Ring
from .diagram import (AND_PRIMITIVE, Diagram, Gen, Par, Seq, check_regime,
                      expand_macros)

AND_MATRIX = ((1, 1, 1, 0), (0, 0, 0, 1))


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class Matrix:
    """Row-major ``rows x cols`` matrix of canonical ring elements."""

    ring: Ring
    rows: int
    cols: int
    data: tuple

    def __post_init__(self):
        if len(self.data) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.data)}")

    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence]) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        return cls(ring, len(rows), ncols, tuple(ring.check(x) for r in rows for x in r))

    @classmethod
    def from_ints(cls, ring: Ring, rows) -> Matrix:
        return cls.from_rows(ring, [[ring.from_int(x) for x in r] for r in rows])

    @classmethod
    def identity(cls, ring: Ring, size: int) -> Matrix:
        zero, one = ring.zero, ring.one
        return cls(ring, size, size,
                   tuple(one if r == c else zero for r in range(size) for c in range(size)))

    @classmethod
    def column(cls, ring: Ring, values: Sequence) -> Matrix:
        return cls(ring, len(values), 1, tuple(ring.check(v) for v in values))

    def __getitem__(self, rc):
        r, c = rc
        return self.data[r * self.cols + c]

    def to_rows(self) -> list[list]:
        return [list(self.data[r * self.cols:(r + 1) * self.cols]) for r in range(self.rows)]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def format(self) -> str:
        return format_matrix(self)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    ring = a.ring
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            out.append(ring.sum(ring.mul(a[i, k], b[k, j]) for k in range(a.cols)))
    return Matrix(ring, a.rows, b.cols, tuple(out))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, left factor most significant."""
    ring = a.ring
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [None] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            x = a[i, j]
            for k in range(b.rows):
                for l in range(b.cols):
                    out[(i * b.rows + k) * cols + j * b.cols + l] = ring.mul(x, b[k, l])
    return Matrix(ring, rows, cols, tuple(out))


def transpose_matrix(a: Matrix) -> Matrix:
    return Matrix(a.ring, a.cols, a.rows,
                  tuple(a[r, c] for c in range(a.cols) for r in range(a.rows)))


def vec(a: Matrix) -> Matrix:
    """Column-major flattening into a column vector."""
    return Matrix(a.ring, a.rows * a.cols, 1,
                  tuple(a[r, c] for c in range(a.cols) for r in range(a.rows)))


def unvec(v: Sequence, rows: int, cols: int, ring: Ring) -> Matrix:
    if len(v) != rows * cols:
        raise DimensionError(f"vector of length {len(v)} cannot fill {rows}x{cols}")
    return Matrix(ring, rows, cols, tuple(v[c * rows + r] for r in range(rows) for c in range(cols)))


def equal(a: Matrix, b: Matrix) -> bool:
    if a.shape != b.shape:
        return False
    return all(a.ring.eq(x, y) for x, y in zip(a.data, b.data))


def first_difference(a: Matrix, b: Matrix):
    """``(row, col, a_entry, b_entry)`` of the first mismatch, or ``None``."""
    if a.shape != b.shape:
        return ("shape", a.shape, b.shape)
    for idx, (x, y) in enumerate(zip(a.data, b.data)):
        if not a.ring.eq(x, y):
            return (idx // a.cols, idx % a.cols, x, y)
    return None


def map_entries(a: Matrix, fn, ring: Ring) -> Matrix:
    return Matrix(ring, a.rows, a.cols, tuple(fn(x) for x in a.data))


# -- generators --------------------------------------------------------------


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def generator_entries(g: Gen, ring: Ring) -> dict[int, list[tuple[int, object]]]:
    """Sparse matrix of a generator: input column -> [(output row, value)]."""
    n, m = g.n, g.m
    cols: dict[int, dict[int, object]] = {}

    def put(r, c, v):
        row = cols.setdefault(c, {})
        row[r] = ring.add(row[r], v) if r in row else v

    one = ring.one
    kind = g.kind
    if kind in ("Z", "gbox", "copy"):
        phase = one if kind == "copy" else g.phase
        put(0, 0, one)
        put((1 << m) - 1, (1 << n) - 1, phase)
    elif kind == "X":
        for c in range(1 << n):
            pc = _parity(c)
            for r in range(1 << m):
                if _parity(r) == pc:
                    put(r, c, one)
    elif kind == "id":
        for i in range(1 << n):
            put(i, i, one)
    elif kind == "H":
        put(0, 0, one)
        put(0, 1, one)
        put(1, 0, one)
        put(1, 1, ring.neg(one))
    elif kind == "T":
        put(0, 0, one)
        put(0, 1, one)
        put(1, 1, one)
    elif kind == "Tinv":
        put(0, 0, one)
        put(0, 1, ring.neg(one))
        put(1, 1, one)
    elif kind in ("P", "NOT"):
        put(1, 0, one)
        put(0, 1, one)
    elif kind == "swap":
        for c, r in ((0, 0), (1, 2), (2, 1), (3, 3)):
            put(r, c, one)
    elif kind == "cap":
        put(0, 0, one)
        put(3, 0, one)
    elif kind == "cup":
        put(0, 0, one)
        put(0, 3, one)
    elif kind == "XOR":
        for c in range(4):
            put(_parity(c), c, one)
    elif kind == "AND":
        for r, row in enumerate(AND_MATRIX):
            for c, v in enumerate(row):
                if v:
                    put(r, c, one)
    else:
        raise ValueError(f"no interpretation for generator {kind!r}")
    return {c: [(r, v) for r, v in rows.items() if not ring.is_zero(v)]
            for c, rows in cols.items()}


def interpret_generator(g: Gen, ring: Ring) -> Matrix:
    """Exact matrix of a single generator (macros by their declared matrix)."""
    check_regime(g, ring)
    entries = generator_entries(g, ring)
    rows, cols = 1 << g.m, 1 << g.n
    data = [ring.zero] * (rows * cols)
    for c, col in entries.items():
        for r, v in col:
            data[r * cols + c] = v
    return Matrix(ring, rows, cols, tuple(data))


# -- evaluation --------------------------------------------------------------


def _apply(d: Diagram, state: dict, width: int, off: int, ring: Ring, cache: dict) -> tuple[dict, int]:
    """Apply ``d`` to wires ``[off, off + d.n)`` of a ``width``-wire sparse state.

    ``state`` maps ``(row, col)`` to nonzero entries."""
    if isinstance(d, Seq):
        state, width = _apply(d.first, state, width, off, ring, cache)
        return _apply(d.then, state, width, off, ring, cache)
    if isinstance(d, Par):
        state, width = _apply(d.left, state, width, off, ring, cache)
        return _apply(d.right, state, width, off + d.left.m, ring, cache)
    if d.kind == "id":
        return state, width
    key = (d.kind, d.arity, d.phase)
    entries = cache.get(key)
    if entries is None:
        entries = cache[key] = generator_entries(d, ring)
    n, m = d.n, d.m
    rest = width - off - n
    lo_mask = (1 << rest) - 1
    mid_mask = (1 << n) - 1
    hi_shift = rest + m
    out: dict = {}
    add, mul = ring.add, ring.mul
    for (row, col), value in state.items():
        lo = row & lo_mask
        mid = (row >> rest) & mid_mask
        hi = row >> (rest + n)
        for r, g in entries.get(mid, ()):
            key2 = ((hi << hi_shift) | (r << rest) | lo, col)
            term = mul(g, value)
            out[key2] = add(out[key2], term) if key2 in out else term
    return {k: v for k, v in out.items() if not ring.is_zero(v)}, width - n + m


def evaluate(d: Diagram, ring: Ring, and_mode: str = AND_PRIMITIVE) -> Matrix:
    """``[[d]]`` as a ``2^m x 2^n`` matrix; ``seq(d1, d2)`` means ``[[d2]] [[d1]]``."""
    check_regime(d, ring)
    d = expand_macros(d, ring, and_mode)
    n, m = d.n, d.m
    one = ring.one
    state = {(i, i): one for i in range(1 << n)}
    state, width = _apply(d, state, n, 0, ring, {})
    assert width == m
    rows, cols = 1 << m, 1 << n
    data = [ring.zero] * (rows * cols)
    for (r, c), v in state.items():
        data[r * cols + c] = v
    return Matrix(ring, rows, cols, tuple(data))


def evaluate_state(d: Diagram, ring: Ring, and_mode: str = AND_PRIMITIVE) -> list:
    """Evaluation of a ``0 -> m`` diagram as a flat list of ``2^m`` entries."""
    if d.n != 0:
        raise DimensionError(f"expected a state, got a {d.n}->{d.m} diagram")
    return list(evaluate(d, ring, and_mode).data)


@lru_cache(maxsize=None)
def is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def log2_exact(k: int) -> int:
    if not is_power_of_two(k):
        raise DimensionError(f"{k} is not a power of two")
    return k.bit_length() - 1


# -- text format -------------------------------------------------------------


def format_matrix(a: Matrix) -> str:
    lines = [f"{a.rows} {a.cols}"]
    for r in range(a.rows):
        lines.append(" ".join(a.ring.format(a[r, c]) for c in range(a.cols)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, ring: Ring) -> Matrix:
    """``rows cols`` header, then one line of space-separated literals per row."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise AlgebraError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise AlgebraError(f"line 1: expected 'rows cols', got {lines[0]!r}")
    rows, cols = int(header[0]), int(header[1])
    if len(lines) - 1 != rows:
        raise AlgebraError(f"expected {rows} rows, got {len(lines) - 1}")
    data = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split()
        if len(cells) != cols:
            raise AlgebraError(f"line {lineno}: expected {cols} entries, got {len(cells)}")
        for cell in cells:
            try:
                data.append(ring.parse(cell))
            except AlgebraError as exc:
                raise AlgebraError(f"line {lineno}: {exc}") from None
    return Matrix(ring, rows, cols, tuple(data))
