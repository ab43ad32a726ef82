"""Claw-shaped partially ordered patterns on Ferrers-board transversals."""

from .boards import (
    FerrersBoard,
    Transversal,
    enumerate_transversals,
    feasible_boards,
    square,
    validate_board,
    validate_transversal,
    white_profile,
)
from .codec import (
    EncodingStep,
    decode,
    encode,
    transfer,
    valid_count,
    valid_positions_formula,
    valid_positions_oracle,
)
from .counting import (
    CountReport,
    count_avoiders_bruteforce,
    count_avoiders_formula,
    count_single_claw,
    count_square_formula,
    distinguishing_board_search,
    equivalence_check,
)
from .pops import (
    ClawFamily,
    OccurrenceWitness,
    Pop,
    avoids,
    claw,
    claw_family,
    count_occurrences_in_permutation,
    make_pop,
    occurs_in_transversal,
    pop_to_patterns,
)

__version__ = "0.1.0"
