"""Binary matrices with named rows and columns.

Rows are stored bit-packed (one Python int per row, bit j = column at
position j), which makes the set operations used throughout the solver
cheap. Externally everything is label-based: rows and columns carry
stable integer labels, 1-based in all file I/O. Values are immutable
after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .errors import ParseError


@dataclass(frozen=True)
class BinaryMatrix:
    """An m x n 0/1 matrix.

    ``row_ids`` and ``col_ids`` are duplicate-free label tuples in storage
    order. ``identity_rows`` marks rows added by :func:`augment`; such a
    row has exactly one 1. Column labels are never renumbered: deletion
    removes rows only, and all n columns survive even if left all-zero.
    """

    row_ids: tuple[int, ...]
    col_ids: tuple[int, ...]
    rows: tuple[int, ...]
    identity_rows: frozenset[int] = field(default=frozenset())

    def __post_init__(self):
        if len(self.rows) != len(self.row_ids):
            raise ValueError("row count mismatch")
        if len(set(self.row_ids)) != len(self.row_ids):
            raise ValueError("duplicate row label")
        if len(set(self.col_ids)) != len(self.col_ids):
            raise ValueError("duplicate column label")
        full = (1 << self.n) - 1
        for label, mask in zip(self.row_ids, self.rows):
            if mask & ~full:
                raise ValueError(f"row {label}: bit outside column range")
        for label in self.identity_rows:
            if label not in self.row_index:
                raise ValueError(f"identity marker {label} is not a row")
            if self.rows[self.row_index[label]].bit_count() != 1:
                raise ValueError(f"identity row {label} must have exactly one 1")

    @property
    def m(self) -> int:
        return len(self.row_ids)

    @property
    def n(self) -> int:
        return len(self.col_ids)

    @cached_property
    def row_index(self) -> dict[int, int]:
        return {label: i for i, label in enumerate(self.row_ids)}

    @cached_property
    def col_index(self) -> dict[int, int]:
        return {label: j for j, label in enumerate(self.col_ids)}

    def row_mask(self, label: int) -> int:
        if label not in self.row_index:
            raise ValueError(f"unknown row label {label}")
        return self.rows[self.row_index[label]]

    def row_set(self, label: int) -> frozenset[int]:
        """Column labels carrying a 1 in the given row."""
        mask = self.row_mask(label)
        return frozenset(self.col_ids[j] for j in _bits(mask))

    def entry(self, row: int, col: int) -> int:
        if col not in self.col_index:
            raise ValueError(f"unknown column label {col}")
        return (self.row_mask(row) >> self.col_index[col]) & 1


@dataclass(frozen=True)
class SetSystem:
    """The row sets of a matrix: for each row, the columns holding a 1.

    ``sets`` is keyed by row label in matrix row order; the universe is
    the column label set {1..n}.
    """

    universe: frozenset[int]
    sets: dict[int, frozenset[int]]

    def row_labels(self) -> tuple[int, ...]:
        return tuple(self.sets)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _logical_lines(text: str):
    """Yield (line_no, stripped content) skipping comments and blanks."""
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def parse_matrix(text: str) -> BinaryMatrix:
    """Parse the matrix file format.

    Comment lines start with '#'. The first non-comment line is "m n";
    then m rows follow, each either n whitespace-separated 0/1 tokens or
    a contiguous digit string of length n. Labels are assigned 1-based
    in file order.
    """
    lines = _logical_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header") from None
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(header_no, f"expected header 'm n', got {header!r}")
    m, n = int(parts[0]), int(parts[1])
    rows: list[int] = []
    for _ in range(m):
        try:
            no, line = next(lines)
        except StopIteration:
            raise ParseError(header_no, f"expected {m} rows, found {len(rows)}") from None
        tokens = line.split()
        if len(tokens) == n and all(t in ("0", "1") for t in tokens):
            cells = tokens
        else:
            joined = "".join(tokens)
            if len(joined) == n and set(joined) <= {"0", "1"}:
                cells = list(joined)
            else:
                bad = next((t for t in tokens if t not in ("0", "1")), line)
                raise ParseError(no, f"expected {n} cells from {{0,1}}, got {bad!r}")
        mask = 0
        for j, cell in enumerate(cells):
            if cell == "1":
                mask |= 1 << j
        rows.append(mask)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(extra[0], "trailing content after last row")
    return BinaryMatrix(
        row_ids=tuple(range(1, m + 1)),
        col_ids=tuple(range(1, n + 1)),
        rows=tuple(rows),
    )


def serialize_matrix(M: BinaryMatrix) -> str:
    """Canonical matrix file text: header plus space-separated 0/1 rows."""
    out = [f"{M.m} {M.n}"]
    for mask in M.rows:
        out.append(" ".join("1" if (mask >> j) & 1 else "0" for j in range(M.n)))
    return "\n".join(out) + "\n"


def delete_rows(M: BinaryMatrix, deleted: Iterable[int]) -> BinaryMatrix:
    """Remove the given rows; survivors keep their labels, columns stay."""
    drop = frozenset(deleted)
    unknown = drop - set(M.row_ids)
    if unknown:
        raise ValueError(f"unknown row label {min(unknown)}")
    keep = [(label, mask) for label, mask in zip(M.row_ids, M.rows) if label not in drop]
    return BinaryMatrix(
        row_ids=tuple(label for label, _ in keep),
        col_ids=M.col_ids,
        rows=tuple(mask for _, mask in keep),
        identity_rows=M.identity_rows - drop,
    )


def augment(M: BinaryMatrix) -> BinaryMatrix:
    """Stack an n x n identity block above M.

    The identity row for column k gets label -k, so original labels are
    preserved and the new rows are recognizable downstream (they sort
    before all original rows and never appear in solver output).
    """
    ident_ids = tuple(-(k + 1) for k in range(M.n))
    ident_rows = tuple(1 << k for k in range(M.n))
    return BinaryMatrix(
        row_ids=ident_ids + M.row_ids,
        col_ids=M.col_ids,
        rows=ident_rows + M.rows,
        identity_rows=frozenset(ident_ids),
    )


def set_system(M: BinaryMatrix) -> SetSystem:
    """Per-row column sets, keyed by row label in matrix order."""
    sets = {
        label: frozenset(M.col_ids[j] for j in _bits(mask))
        for label, mask in zip(M.row_ids, M.rows)
    }
    return SetSystem(universe=frozenset(M.col_ids), sets=sets)


def support(M: BinaryMatrix, col: int) -> frozenset[int]:
    """Labels of the rows holding a 1 in the given column."""
    if col not in M.col_index:
        raise ValueError(f"unknown column label {col}")
    bit = 1 << M.col_index[col]
    return frozenset(label for label, mask in zip(M.row_ids, M.rows) if mask & bit)
