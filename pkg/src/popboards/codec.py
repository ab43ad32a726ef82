"""Row-by-row insertion encoding of claw-family-avoiding transversals.

The 1s of a transversal are re-inserted from the top row downward.  At each
step the top white row has ``l`` white cells; of these, the valid positions
are the ones whose choice still leaves an avoiding completion.  The encoding
word records the rank of the chosen position among the valid ones, with 0
for forced steps.  Validity depends only on ``l`` and the family, so decoding
a word under a different family with the same ``(m, k, d)`` gives a bijection
between the two avoider sets.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .boards import FerrersBoard, Transversal, validate_transversal, white_profile
from .errors import (
    EmptyValidSet,
    InfeasibleBoard,
    LetterOutOfRange,
    NotAvoiding,
    ParamMismatch,
    SoundnessViolation,
    StateInconsistent,
    WordLengthMismatch,
)
from .pops import ClawFamily, Pop, avoids, occurs_in_transversal

EncodingWord = tuple[int, ...]


@dataclass(frozen=True)
class EncodingStep:
    step: int
    white_columns: tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.white_columns)

    def delta(self, m: int) -> int:
        return self.l - m + 1


def white_columns(board: FerrersBoard, placed: Sequence[int]) -> tuple[int, ...]:
    """White columns of the top white row once ``placed`` (top rows first) are in."""
    t = len(placed) + 1
    taken = set(placed)
    return tuple(c for c in range(1, board.row_lengths[t - 1] + 1) if c not in taken)


def valid_positions_formula(l: int, family: ClawFamily) -> list[int]:
    """Valid positions (1-based, among the ``l`` white cells of the top row)."""
    if l < family.m:
        return list(range(1, l + 1))
    m, a = family.m, family.a
    apexes = family.apexes
    return [
        i
        for i in range(1, l + 1)
        if i < a or (i not in apexes and all(l - i < m - x for x in apexes if x < i))
    ]


def valid_count(l: int, m: int, k: int, d: int) -> int:
    """Closed-form number of valid positions when ``l >= m``; never depends on the apex offset."""
    return m - k * d - 1 + k * max(0, d - l + m - 1)


def valid_count_any(l: int, m: int, k: int, d: int) -> int:
    return l if l < m else valid_count(l, m, k, d)


def _check_state(board: FerrersBoard, placed: Sequence[int]) -> None:
    if not board.feasible:
        raise StateInconsistent(f"board {board} admits no transversal", parts=list(board.parts))
    if len(placed) >= board.n:
        raise StateInconsistent("every row is already filled", placed=list(placed))
    if len(set(placed)) != len(placed):
        raise StateInconsistent("two placed 1s share a column", placed=list(placed))
    for t, c in enumerate(placed, start=1):
        if not board.contains(t, c):
            raise StateInconsistent(f"row {t} has no cell in column {c}", row=t, column=c)


def _family_pops(family: ClawFamily | Iterable[Pop]) -> tuple[Pop, ...]:
    return family.claws if isinstance(family, ClawFamily) else tuple(family)


def valid_positions_oracle(
    board: FerrersBoard, placed: Sequence[int], family: ClawFamily | Iterable[Pop]
) -> list[int]:
    """Valid positions found by exhaustive completion search.

    Position ``i`` is valid iff some completion of the board, with the next 1
    at the ``i``-th white cell of the top white row, avoids every POP in
    ``family``.  Occurrences are checked with the generic subset search.
    """
    placed = tuple(placed)
    _check_state(board, placed)
    pops = _family_pops(family)
    n = board.n
    mu = board.row_lengths

    def completes(columns: list[int]) -> bool:
        t = len(columns) + 1
        if t > n:
            values = [0] * n
            for row, c in enumerate(columns, start=1):
                values[c - 1] = n + 1 - row
            candidate = Transversal(board, tuple(values))
            return all(occurs_in_transversal(candidate, p) is None for p in pops)
        for c in range(1, mu[t - 1] + 1):
            if c not in columns:
                columns.append(c)
                ok = completes(columns)
                columns.pop()
                if ok:
                    return True
        return False

    whites = white_columns(board, placed)
    return [i for i, c in enumerate(whites, start=1) if completes(list(placed) + [c])]


def encode(t: Transversal, family: ClawFamily) -> EncodingWord:
    if not avoids(t, family):
        witness = next(w for p in family.claws if (w := occurs_in_transversal(t, p)) is not None)
        raise NotAvoiding(
            f"transversal {t} contains a member of family {family}",
            witness=witness.to_dict(),
        )
    board = t.board
    placed: list[int] = []
    word = []
    for step, column in enumerate(t.insertion_columns(), start=1):
        whites = white_columns(board, placed)
        valid = valid_positions_formula(len(whites), family)
        pos = whites.index(column) + 1
        if pos not in valid:
            raise SoundnessViolation(
                f"step {step}: position {pos} of {len(whites)} is not in valid set {valid}"
            )
        word.append(0 if len(valid) == 1 else valid.index(pos) + 1)
        placed.append(column)
    return tuple(word)


def decode(word: Sequence[int], board: FerrersBoard, family: ClawFamily) -> Transversal:
    if not board.feasible:
        raise InfeasibleBoard(f"board {board} admits no transversal", parts=list(board.parts))
    n = board.n
    if len(word) != n:
        raise WordLengthMismatch(f"word has {len(word)} letters, board has {n} rows", length=len(word), n=n)
    placed: list[int] = []
    for step, letter in enumerate(word, start=1):
        whites = white_columns(board, placed)
        valid = valid_positions_formula(len(whites), family)
        if not valid:
            raise EmptyValidSet(step)
        if len(valid) == 1:
            if letter != 0:
                raise LetterOutOfRange(step, letter, 1)
            pos = valid[0]
        else:
            if not 1 <= letter <= len(valid):
                raise LetterOutOfRange(step, letter, len(valid))
            pos = valid[letter - 1]
        placed.append(whites[pos - 1])
    values = [0] * n
    for row, c in enumerate(placed, start=1):
        values[c - 1] = n + 1 - row
    result = validate_transversal(board, values)
    if not avoids(result, family):
        raise SoundnessViolation(f"decoded {result} contains a member of family {family}")
    return result


def transfer(t: Transversal, source: ClawFamily, target: ClawFamily) -> Transversal:
    """Map an avoider of ``source`` to the avoider of ``target`` with the same word."""
    if source.shape != target.shape:
        raise ParamMismatch(
            f"families {source} and {target} differ in (m, k, d)",
            source=str(source),
            target=str(target),
        )
    return decode(encode(t, source), t.board, target)


def encoding_steps(board: FerrersBoard, columns: Sequence[int]) -> list[EncodingStep]:
    """Per-step white columns when inserting 1s at ``columns`` (top row first)."""
    steps = []
    for step in range(1, len(columns) + 1):
        steps.append(EncodingStep(step, white_columns(board, columns[: step - 1])))
    return steps


def valid_counts(board: FerrersBoard, family: ClawFamily) -> tuple[int, ...]:
    m, k, d = family.shape
    return tuple(valid_count_any(l, m, k, d) for l in white_profile(board))
