import itertools
from math import factorial

import pytest

from popboards.boards import (
    FerrersBoard,
    Transversal,
    enumerate_transversals,
    feasible_boards,
    parse_board,
    square,
    validate_board,
    validate_transversal,
    white_profile,
)
from popboards.errors import (
    CellOutsideBoard,
    InfeasibleBoard,
    NonPositivePart,
    NotAPermutation,
    NotWeaklyDecreasing,
    ParseError,
)

from conftest import weakly_decreasing


def fits(parts, values):
    """Direct cell check: column c holding value v needs the row of v to reach c."""
    return all(c <= parts[v - 1] for c, v in enumerate(values, start=1))


def transversals_by_filter(parts):
    n = len(parts)
    if parts[0] != n:
        return []
    return [p for p in itertools.permutations(range(1, n + 1)) if fits(parts, p)]


def simulate_profile(board: FerrersBoard, t: Transversal):
    """Gray rows and columns cell by cell, counting the top white row's white cells."""
    n = board.n
    gray = set()
    profile = []
    for row in range(1, n + 1):
        white = [(row, c) for c in range(1, board.row_lengths[row - 1] + 1) if (row, c) not in gray]
        profile.append(len(white))
        column = t.column_of(n + 1 - row)
        assert (row, column) in white
        for r, c in board.cells():
            if r == row or c == column:
                gray.add((r, c))
    return tuple(profile)


def test_sample_board():
    b = validate_board([6, 6, 6, 6, 5, 3])
    assert b.feasible
    assert b.n == 6
    assert b.row_lengths == (3, 5, 6, 6, 6, 6)


def test_single_cell_board():
    b = validate_board([1])
    assert b.feasible and b.n == 1


@pytest.mark.parametrize("parts, feasible", [((2, 2, 2), False), ((3, 3, 1), True), ((3, 2, 1), True), ((4, 3, 3), False)])
def test_feasibility_flag(parts, feasible):
    assert validate_board(parts).feasible is feasible


def test_board_errors():
    with pytest.raises(NotWeaklyDecreasing):
        validate_board([3, 4])
    with pytest.raises(NonPositivePart):
        validate_board([2, 0])
    with pytest.raises(NonPositivePart):
        validate_board([])
    with pytest.raises(ParseError):
        parse_board("6,x")


def test_parse_board():
    assert parse_board("6,6,6,6,5,3").parts == (6, 6, 6, 6, 5, 3)


@pytest.mark.parametrize("n_parts", range(1, 6))
def test_feasible_flag_matches_enumeration(n_parts):
    for parts in weakly_decreasing(n_parts, n_parts + 1):
        board = validate_board(parts)
        assert board.feasible == bool(transversals_by_filter(parts)), parts


def test_validate_transversal_sample(sample_board):
    assert validate_transversal(sample_board, (2, 6, 5, 1, 3, 4)).values == (2, 6, 5, 1, 3, 4)
    assert validate_transversal(sample_board, (5, 6, 2, 1, 4, 3)).values == (5, 6, 2, 1, 4, 3)
    assert validate_transversal(sample_board, (6, 5, 4, 3, 2, 1)).values == (6, 5, 4, 3, 2, 1)


def test_cell_outside_board(sample_board):
    with pytest.raises(CellOutsideBoard) as info:
        validate_transversal(sample_board, (1, 2, 3, 4, 5, 6))
    assert info.value.column == 6


@pytest.mark.parametrize("values", [(1, 2, 3, 4, 5, 5), (1, 2, 3), (0, 1, 2, 3, 4, 5)])
def test_not_a_permutation(sample_board, values):
    with pytest.raises(NotAPermutation):
        validate_transversal(sample_board, values)


def test_staircase_has_one_transversal():
    assert [t.values for t in enumerate_transversals(FerrersBoard((3, 2, 1)))] == [(3, 2, 1)]


def test_two_by_two():
    assert len(list(enumerate_transversals(FerrersBoard((2, 2))))) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_square_count(n):
    assert sum(1 for _ in enumerate_transversals(square(n))) == factorial(n)


def test_infeasible_enumerates_nothing():
    assert list(enumerate_transversals(FerrersBoard((2, 2, 2)))) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_filter(n):
    for parts in weakly_decreasing(n, n):
        board = FerrersBoard(parts)
        got = [t.values for t in enumerate_transversals(board)]
        assert got == transversals_by_filter(parts)  # permutations() is lexicographic
        for values in got:
            validate_transversal(board, values)


def test_first_column_split_covers_stream(sample_board):
    whole = list(enumerate_transversals(sample_board))
    pieces = [t for v in range(1, 7) for t in enumerate_transversals(sample_board, first=v)]
    assert pieces == whole


@pytest.mark.parametrize(
    "parts, profile",
    [((6, 6, 6, 6, 5, 3), (3, 4, 4, 3, 2, 1)), ((4, 4, 4, 4), (4, 3, 2, 1)), ((3, 2, 1), (1, 1, 1))],
)
def test_white_profile(parts, profile):
    assert white_profile(FerrersBoard(parts)) == profile


@pytest.mark.parametrize("n", range(1, 9))
def test_square_profile(n):
    assert white_profile(square(n)) == tuple(range(n, 0, -1))


def test_white_profile_infeasible():
    with pytest.raises(InfeasibleBoard):
        white_profile(FerrersBoard((2, 2, 2)))


@pytest.mark.parametrize("n", range(1, 6))
def test_profile_matches_simulation(n):
    for board in feasible_boards(n):
        profile = white_profile(board)
        assert min(profile) >= 1
        for t in enumerate_transversals(board):
            assert simulate_profile(board, t) == profile


def test_cells_round_trip(sample_board):
    for t in enumerate_transversals(sample_board):
        assert Transversal.from_cells(sample_board, t.cells()) == t
        assert all(sample_board.contains(r, c) for r, c in t.cells())


@pytest.mark.parametrize("n, catalan", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
def test_feasible_boards(n, catalan):
    boards = list(feasible_boards(n))
    assert len(boards) == catalan
    assert [b.parts for b in boards] == sorted(b.parts for b in boards)
    expected = sorted(p for p in weakly_decreasing(n, n) if FerrersBoard(p).feasible)
    assert [b.parts for b in boards] == expected
