"""Dense exact linear algebra over GF(2).

Rows are stored as Python int bitsets: bit j of ``rows[i]`` is the entry
in row i, column j.  XOR is the row operation, so reduction is
word-parallel.  All values are immutable; every operation returns a new
matrix and never mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import FormatError

# Hard width cap.  Desk-scale instances stay under ~20 columns; the cap
# keeps encodings and masks well inside one machine word's worth of bits.
MAX_COLS = 64


def bits(seq: Iterable[int]) -> int:
    """Pack a 0/1 sequence into an int bitset (index 0 = lowest bit)."""
    value = 0
    for j, b in enumerate(seq):
        if b not in (0, 1):
            raise ValueError(f"entries must be 0 or 1, got {b!r}")
        value |= b << j
    return value


def unbits(value: int, width: int) -> tuple[int, ...]:
    """Unpack an int bitset into a 0/1 tuple of the given width."""
    return tuple((value >> j) & 1 for j in range(width))


@dataclass(frozen=True)
class Gf2Matrix:
    """An nrows x ncols 0/1 matrix; 0xN and Mx0 shapes are legal."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if self.ncols > MAX_COLS:
            raise ValueError(f"ncols {self.ncols} exceeds MAX_COLS={MAX_COLS}")
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        mask = (1 << self.ncols) - 1
        for r in self.rows:
            if r & ~mask:
                raise ValueError("stored bits beyond ncols must be zero")

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]], ncols: int | None = None) -> "Gf2Matrix":
        """Build from a sequence of 0/1 sequences (all the same width)."""
        packed = []
        width = ncols
        for row in rows:
            row = tuple(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError("ragged rows")
            packed.append(bits(row))
        if width is None:
            raise ValueError("ncols required for a matrix with no rows")
        return cls(len(packed), width, tuple(packed))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Gf2Matrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) out of range")
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j as an int bitset over row indices."""
        if not (0 <= j < self.ncols):
            raise IndexError(f"column {j} out of range")
        col = 0
        for i, r in enumerate(self.rows):
            col |= ((r >> j) & 1) << i
        return col

    def append_row(self, row: int | Iterable[int]) -> "Gf2Matrix":
        if not isinstance(row, int):
            row = bits(row)
        if row >> self.ncols:
            raise ValueError("appended row wider than ncols")
        return Gf2Matrix(self.nrows + 1, self.ncols, self.rows + (row,))

    def append_column(self, col: int | Iterable[int]) -> "Gf2Matrix":
        """Append one column; ``col`` is a bitset over row indices."""
        if not isinstance(col, int):
            col = bits(col)
        if col >> self.nrows:
            raise ValueError("appended column taller than nrows")
        j = self.ncols
        new_rows = tuple(r | (((col >> i) & 1) << j) for i, r in enumerate(self.rows))
        return Gf2Matrix(self.nrows, j + 1, new_rows)

    def take_columns(self, idxs: Sequence[int]) -> "Gf2Matrix":
        """New matrix made of the given columns, in the given order."""
        for j in idxs:
            if not (0 <= j < self.ncols):
                raise IndexError(f"column {j} out of range")
        new_rows = []
        for r in self.rows:
            v = 0
            for pos, j in enumerate(idxs):
                v |= ((r >> j) & 1) << pos
            new_rows.append(v)
        return Gf2Matrix(self.nrows, len(idxs), tuple(new_rows))

    def delete_columns(self, idxs: Iterable[int]) -> "Gf2Matrix":
        drop = set(idxs)
        for j in drop:
            if not (0 <= j < self.ncols):
                raise IndexError(f"column {j} out of range")
        keep = [j for j in range(self.ncols) if j not in drop]
        return self.take_columns(keep)

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix(self.ncols, self.nrows, tuple(self.column(j) for j in range(self.ncols)))

    def to_lists(self) -> list[list[int]]:
        return [list(unbits(r, self.ncols)) for r in self.rows]


class Rref(NamedTuple):
    matrix: Gf2Matrix  # reduced row-echelon form, zero rows dropped
    rank: int
    pivot_cols: tuple[int, ...]  # strictly increasing


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of a collection of int-bitset rows."""
    basis: dict[int, int] = {}  # leading-bit position -> reduced vector
    for row in rows:
        while row:
            h = row.bit_length() - 1
            if h in basis:
                row ^= basis[h]
            else:
                basis[h] = row
                break
    return len(basis)


def rref(m: Gf2Matrix) -> Rref:
    """Reduced row-echelon form with zero rows removed.

    The result is a canonical representative of the row space: rows are
    ordered by pivot column and each pivot column is zero in every other
    row, so two matrices have equal row spaces iff their RREFs are equal.
    """
    basis: dict[int, int] = {}  # pivot column -> fully reduced row
    for row in m.rows:
        for c in sorted(basis):
            if (row >> c) & 1:
                row ^= basis[c]
        if row:
            p = (row & -row).bit_length() - 1
            for c, v in basis.items():
                if (v >> p) & 1:
                    basis[c] = v ^ row
            basis[p] = row
    pivots = tuple(sorted(basis))
    reduced = Gf2Matrix(len(pivots), m.ncols, tuple(basis[c] for c in pivots))
    return Rref(reduced, len(pivots), pivots)


def row_space_equal(a: Gf2Matrix, b: Gf2Matrix) -> bool:
    """Whether two matrices of equal width span the same row space."""
    if a.ncols != b.ncols:
        raise ValueError(f"column count mismatch: {a.ncols} != {b.ncols}")
    return rref(a).matrix == rref(b).matrix


def matrix_to_text(m: Gf2Matrix) -> str:
    """Text form: "<nrows> <ncols>" then one 0/1 string per row."""
    lines = [f"{m.nrows} {m.ncols}"]
    for r in m.rows:
        lines.append("".join(str((r >> j) & 1) for j in range(m.ncols)))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> Gf2Matrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad matrix header: {lines[0]!r}")
    try:
        nrows, ncols = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"bad matrix header: {lines[0]!r}") from None
    if len(lines) - 1 != nrows:
        raise FormatError(f"expected {nrows} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        ln = ln.strip()
        if len(ln) != ncols or set(ln) - {"0", "1"}:
            raise FormatError(f"bad matrix row: {ln!r}")
        rows.append(bits(int(ch) for ch in ln))
    try:
        return Gf2Matrix(nrows, ncols, tuple(rows))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
