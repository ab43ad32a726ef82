"""Exact avoider counts: product formulas, brute force, and equivalence checks."""

from __future__ import annotations

import os
from collections.abc import Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial, prod

from .boards import FerrersBoard, enumerate_transversals, feasible_boards, square, white_profile
from .codec import transfer, valid_count_any
from .errors import CapExceeded, EquivalenceViolated, InvalidParam, ParamMismatch
from .pops import ClawFamily, Pop, avoids

DEFAULT_CAP = 8

Family = ClawFamily | tuple[Pop, ...]


def brute_force_cap() -> int:
    env = os.environ.get("POPBOARDS_CAP")
    return int(env) if env else DEFAULT_CAP


def _check_cap(board: FerrersBoard, cap: int | None) -> None:
    cap = brute_force_cap() if cap is None else cap
    if board.n > cap:
        raise CapExceeded(f"board order {board.n} exceeds brute-force cap {cap}", n=board.n, cap=cap)


def _count_slice(board: FerrersBoard, family: Family, first: int) -> int:
    return sum(1 for t in enumerate_transversals(board, first=first) if avoids(t, family))


def count_avoiders_bruteforce(
    board: FerrersBoard, family: Family, cap: int | None = None, jobs: int = 1
) -> int:
    _check_cap(board, cap)
    if not board.feasible:
        return 0
    if jobs <= 1:
        return sum(1 for t in enumerate_transversals(board) if avoids(t, family))
    firsts = range(1, board.n + 1)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_count_slice, [board] * board.n, [family] * board.n, firsts))


def count_avoiders_formula(board: FerrersBoard, family: ClawFamily) -> int:
    m, k, d = family.shape
    return prod(valid_count_any(l, m, k, d) for l in white_profile(board))


def count_square_formula(n: int, m: int, k: int, d: int) -> int:
    """Avoiders of ``P^a_(m,k,d)`` among permutations of length ``n`` (any legal ``a``)."""
    if k == 0:
        d = 0
    if m < 1 or k < 0 or d < 0 or k * d + 1 > m:
        raise InvalidParam(f"no legal apex offset for m={m} k={k} d={d}", m=m, k=k, d=d)
    if n < m:
        return factorial(n)
    base = m - k * d - 1
    tail = base ** max(0, n - (d + m - 1))
    # the ramp stops at n when the board is too small to reach l = d + m - 1
    ramp = prod(base + k * (d - l + m - 1) for l in range(m, min(n, d + m - 1) + 1))
    return tail * ramp * factorial(m - 1)


def count_single_claw(n: int, m: int) -> int:
    if n < 1 or m < 1:
        raise InvalidParam(f"need n, m >= 1; got n={n} m={m}", n=n, m=m)
    if n < m:
        return factorial(n)
    return factorial(m - 1) * (m - 1) ** (n - m + 1)


@dataclass
class CountReport:
    board: FerrersBoard
    families: tuple[str, ...]
    method: str
    counts: tuple[int, ...]
    certified: bool = False
    pairs_checked: int = 0
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "board": str(self.board),
            "familyA": self.families[0],
            "method": self.method,
            "counts": list(self.counts),
            "certified": self.certified,
            "pairs_checked": self.pairs_checked,
        }
        if len(self.families) > 1:
            out["familyB"] = self.families[1]
        out.update(self.extra)
        return out


def equivalence_check(
    board: FerrersBoard, family_a: ClawFamily, family_b: ClawFamily, cap: int | None = None
) -> CountReport:
    """Brute-force both counts and certify the transfer map as a bijection."""
    if family_a.shape != family_b.shape:
        raise ParamMismatch(
            f"families {family_a} and {family_b} differ in (m, k, d)",
            source=str(family_a),
            target=str(family_b),
        )
    _check_cap(board, cap)
    avoiders_a = [t for t in enumerate_transversals(board) if avoids(t, family_a)]
    avoiders_b = {t for t in enumerate_transversals(board) if avoids(t, family_b)}
    images = set()
    for t in avoiders_a:
        image = transfer(t, family_a, family_b)
        if image not in avoiders_b or image in images:
            raise EquivalenceViolated(
                f"transfer sends {t} to {image}, which is not a fresh avoider of {family_b}",
                transversal=str(t),
                image=str(image),
            )
        if transfer(image, family_b, family_a) != t:
            raise EquivalenceViolated(f"transfer does not round-trip on {t}", transversal=str(t))
        images.add(image)
    if len(images) != len(avoiders_b):
        raise EquivalenceViolated(
            f"counts differ: {len(avoiders_a)} vs {len(avoiders_b)}",
            counts=[len(avoiders_a), len(avoiders_b)],
        )
    return CountReport(
        board=board,
        families=(str(family_a), str(family_b)),
        method="bruteforce",
        counts=(len(avoiders_a), len(avoiders_b)),
        certified=True,
        pairs_checked=len(avoiders_a),
    )


@dataclass(frozen=True)
class Distinguisher:
    board: FerrersBoard
    count_a: int
    count_b: int
    method: str
    confirmed: bool

    def to_dict(self) -> dict:
        return {
            "board": str(self.board),
            "counts": [self.count_a, self.count_b],
            "method": self.method,
            "confirmed": self.confirmed,
        }


def search_boards(max_n: int) -> Iterable[FerrersBoard]:
    """Feasible boards by increasing order; the square first, then the rest lexicographically."""
    for n in range(1, max_n + 1):
        sq = square(n)
        yield sq
        yield from (b for b in feasible_boards(n) if b != sq)


def _count(board: FerrersBoard, family: Family, cap: int | None) -> tuple[int, str]:
    if isinstance(family, ClawFamily):
        return count_avoiders_formula(board, family), "formula"
    return count_avoiders_bruteforce(board, family, cap), "bruteforce"


def distinguishing_board_search(
    family_a: Family, family_b: Family, max_n: int, cap: int | None = None
) -> Distinguisher | None:
    """First board (in ``search_boards`` order) where the avoider counts differ.

    Claw families are counted by formula; a hit is confirmed by brute force
    when the board is within the cap.
    """
    cap = brute_force_cap() if cap is None else cap
    uses_brute = not (isinstance(family_a, ClawFamily) and isinstance(family_b, ClawFamily))
    if uses_brute and max_n > cap:
        raise CapExceeded(f"max_n {max_n} exceeds brute-force cap {cap}", n=max_n, cap=cap)
    for board in search_boards(max_n):
        ca, method_a = _count(board, family_a, cap)
        cb, method_b = _count(board, family_b, cap)
        if ca == cb:
            continue
        method = "bruteforce" if "bruteforce" in (method_a, method_b) else "formula"
        confirmed = method == "bruteforce"
        if not confirmed and board.n <= cap:
            ba = count_avoiders_bruteforce(board, family_a, cap)
            bb = count_avoiders_bruteforce(board, family_b, cap)
            if (ba, bb) != (ca, cb):
                raise EquivalenceViolated(
                    f"formula counts {ca}, {cb} disagree with brute force {ba}, {bb} on {board}",
                    board=str(board),
                )
            confirmed = True
        return Distinguisher(board, ca, cb, method, confirmed)
    return None


def count_table(
    family: ClawFamily, n_max: int, method: str = "formula", cap: int | None = None, jobs: int = 1
) -> list[tuple[int, int]]:
    """Avoider counts on the ``n x n`` square for ``n = 1..n_max``."""
    rows = []
    for n in range(1, n_max + 1):
        if method == "formula":
            count = count_avoiders_formula(square(n), family)
        elif method == "square":
            count = count_square_formula(n, *family.shape)
        elif method == "bruteforce":
            count = count_avoiders_bruteforce(square(n), family, cap, jobs=jobs)
        else:
            raise InvalidParam(f"unknown method {method!r}", method=method)
        rows.append((n, count))
    return rows

