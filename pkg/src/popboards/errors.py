"""Exception hierarchy.

Every domain error carries a stable ``code`` and a ``details`` dict so the CLI
can emit it as structured JSON.
"""

from __future__ import annotations


class PopBoardsError(ValueError):
    code = "DomainError"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self), "details": self.details}


class NotWeaklyDecreasing(PopBoardsError):
    code = "NotWeaklyDecreasing"


class NonPositivePart(PopBoardsError):
    code = "NonPositivePart"


class InfeasibleBoard(PopBoardsError):
    code = "InfeasibleBoard"


class NotAPermutation(PopBoardsError):
    code = "NotAPermutation"


class CellOutsideBoard(PopBoardsError):
    code = "CellOutsideBoard"

    def __init__(self, column: int, value: int):
        super().__init__(
            f"column {column} holds value {value}, which lies outside the board",
            column=column,
            value=value,
        )
        self.column = column


class CycleDetected(PopBoardsError):
    code = "CycleDetected"


class LabelOutOfRange(PopBoardsError):
    code = "LabelOutOfRange"


class InvalidParam(PopBoardsError):
    code = "InvalidParam"


class ApexOutOfRange(InvalidParam):
    code = "ApexOutOfRange"


class ParseError(PopBoardsError):
    code = "ParseError"


class StateInconsistent(PopBoardsError):
    code = "StateInconsistent"


class NotAvoiding(PopBoardsError):
    code = "NotAvoiding"


class SoundnessViolation(RuntimeError):
    """Raised when the transversal's own column is not in the step's valid set.

    Unreachable if the valid-position formula is correct.
    """


class LetterOutOfRange(PopBoardsError):
    code = "LetterOutOfRange"

    def __init__(self, step: int, letter: int, size: int):
        super().__init__(
            f"letter {letter} at step {step} is illegal for a valid set of size {size}",
            step=step,
            letter=letter,
            valid_count=size,
        )
        self.step = step


class EmptyValidSet(PopBoardsError):
    code = "EmptyValidSet"

    def __init__(self, step: int):
        super().__init__(f"no valid position at step {step}; no avoiding transversal exists", step=step)
        self.step = step


class WordLengthMismatch(PopBoardsError):
    code = "WordLengthMismatch"


class ParamMismatch(PopBoardsError):
    code = "ParamMismatch"


class CapExceeded(PopBoardsError):
    code = "CapExceeded"


class EquivalenceViolated(PopBoardsError):
    code = "EquivalenceViolated"
