"""Ferrers boards and their transversals.

A board is given by its parts ``lambda_1 >= ... >= lambda_n``, indexed by
*value*: part ``v`` is the length of the row that holds value ``v``.  Rows are
drawn in French notation, so value ``n`` sits in the top (shortest) row and
value ``1`` in the bottom (longest) row.  Top-down row ``t`` therefore holds
value ``n + 1 - t`` and has length ``parts[n - t]``.

A transversal stores, for each column ``c`` (1-based), the value of its 1.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CellOutsideBoard,
    InfeasibleBoard,
    NonPositivePart,
    NotAPermutation,
    NotWeaklyDecreasing,
    ParseError,
)


@dataclass(frozen=True)
class FerrersBoard:
    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parts)

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Top-down row lengths; weakly increasing."""
        return tuple(reversed(self.parts))

    @cached_property
    def feasible(self) -> bool:
        n = self.n
        return self.parts[0] == n and all(p >= n - i for i, p in enumerate(self.parts))

    @property
    def is_square(self) -> bool:
        return all(p == self.n for p in self.parts)

    def part(self, value: int) -> int:
        """Length of the row holding ``value``."""
        return self.parts[value - 1]

    def contains(self, row: int, column: int) -> bool:
        """Whether top-down cell ``(row, column)`` lies in the board."""
        return 1 <= row <= self.n and 1 <= column <= self.row_lengths[row - 1]

    def cells(self) -> Iterator[tuple[int, int]]:
        for r, length in enumerate(self.row_lengths, start=1):
            for c in range(1, length + 1):
                yield r, c

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def validate_board(parts: Sequence[int]) -> FerrersBoard:
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise NonPositivePart("a board needs at least one part", parts=[])
    for i, p in enumerate(parts):
        if p < 1:
            raise NonPositivePart(f"part {i + 1} is {p}; parts must be positive", index=i + 1, part=p)
    for i in range(1, len(parts)):
        if parts[i] > parts[i - 1]:
            raise NotWeaklyDecreasing(
                f"parts must be weakly decreasing, got {parts[i - 1]} then {parts[i]}",
                index=i + 1,
                parts=list(parts),
            )
    return FerrersBoard(parts)


def square(n: int) -> FerrersBoard:
    return FerrersBoard((n,) * n)


def parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", text=text) from None


def parse_board(text: str) -> FerrersBoard:
    return validate_board(parse_int_list(text))


@dataclass(frozen=True)
class Transversal:
    board: FerrersBoard
    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    def value_at(self, column: int) -> int:
        return self.values[column - 1]

    def column_of(self, value: int) -> int:
        return self.values.index(value) + 1

    def cells(self) -> frozenset[tuple[int, int]]:
        """Filled cells as top-down ``(row, column)`` pairs."""
        n = self.n
        return frozenset((n + 1 - v, c) for c, v in enumerate(self.values, start=1))

    @classmethod
    def from_cells(cls, board: FerrersBoard, cells) -> Transversal:
        n = board.n
        values = [0] * n
        for r, c in cells:
            values[c - 1] = n + 1 - r
        return validate_transversal(board, values)

    def insertion_columns(self) -> tuple[int, ...]:
        """Columns of the 1s read top row first."""
        return tuple(self.column_of(v) for v in range(self.n, 0, -1))

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


def validate_transversal(board: FerrersBoard, values: Sequence[int]) -> Transversal:
    values = tuple(int(v) for v in values)
    n = board.n
    if sorted(values) != list(range(1, n + 1)):
        raise NotAPermutation(f"{list(values)} is not a permutation of 1..{n}", values=list(values), n=n)
    for c, v in enumerate(values, start=1):
        if c > board.part(v):
            raise CellOutsideBoard(c, v)
    return Transversal(board, values)


def parse_transversal(board: FerrersBoard, text: str) -> Transversal:
    return validate_transversal(board, parse_int_list(text))


def enumerate_transversals(board: FerrersBoard, first: int | None = None) -> Iterator[Transversal]:
    """Yield every transversal in lexicographic order of its values.

    ``first`` pins the value in column 1, which lets callers split the stream.
    """
    if not board.feasible:
        return
    n = board.n
    parts = board.parts
    # allowed[c] = bitmask of values v (bit v-1) whose row reaches column c
    allowed = [0] * (n + 1)
    for c in range(1, n + 1):
        allowed[c] = sum(1 << (v - 1) for v in range(1, n + 1) if parts[v - 1] >= c)
    if first is not None:
        if not allowed[1] >> (first - 1) & 1:
            return
        allowed[1] = 1 << (first - 1)

    values = [0] * n

    def place(c: int, used: int) -> Iterator[Transversal]:
        if c > n:
            yield Transversal(board, tuple(values))
            return
        free = allowed[c] & ~used
        while free:
            low = free & -free
            values[c - 1] = low.bit_length()
            yield from place(c + 1, used | low)
            free ^= low

    yield from place(1, 0)


def white_profile(board: FerrersBoard) -> tuple[int, ...]:
    """Number of white cells in the top white row at each insertion step.

    Every column grayed before step ``t`` lies inside row ``t`` (earlier rows
    are no longer), so exactly ``t - 1`` of that row's cells are gray.
    """
    if not board.feasible:
        raise InfeasibleBoard(f"board {board} admits no transversal", parts=list(board.parts))
    return tuple(mu - t for t, mu in enumerate(board.row_lengths))


def feasible_boards(n: int) -> Iterator[FerrersBoard]:
    """All transversal-feasible boards of order ``n``, parts in lexicographic order."""
    parts = [0] * n

    def fill(i: int) -> Iterator[FerrersBoard]:
        if i == n:
            yield FerrersBoard(tuple(parts))
            return
        upper = n if i == 0 else parts[i - 1]
        lower = n if i == 0 else n - i
        for p in range(lower, upper + 1):
            parts[i] = p
            yield from fill(i + 1)

    if n >= 1:
        yield from fill(0)
