"""Partially ordered patterns and claw families.

A POP of size ``m`` is a strict partial order on the position labels
``1..m``.  A relation ``(x, y)`` means the entry at position ``x`` must be
larger than the entry at position ``y``; labels not related are unconstrained.
"""

from __future__ import annotations

import itertools
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .boards import FerrersBoard, Transversal
from .errors import ApexOutOfRange, CycleDetected, InvalidParam, LabelOutOfRange, ParseError


@dataclass(frozen=True)
class Pop:
    m: int
    relations: frozenset[tuple[int, int]]

    def holds(self, values: Sequence[int]) -> bool:
        """Whether ``values`` (length ``m``) realizes every relation."""
        return all(values[x - 1] > values[y - 1] for x, y in self.relations)

    def __str__(self) -> str:
        rel = ", ".join(f"{x}>{y}" for x, y in sorted(self.relations))
        return f"{self.m}: {rel}" if rel else f"{self.m}:"


def transitive_closure(m: int, relations: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    above = [[False] * (m + 1) for _ in range(m + 1)]
    for x, y in relations:
        above[x][y] = True
    # Warshall
    for z in range(1, m + 1):
        for x in range(1, m + 1):
            if above[x][z]:
                row_z = above[z]
                row_x = above[x]
                for y in range(1, m + 1):
                    if row_z[y]:
                        row_x[y] = True
    return frozenset((x, y) for x in range(1, m + 1) for y in range(1, m + 1) if above[x][y])


def make_pop(m: int, relations: Iterable[tuple[int, int]] = ()) -> Pop:
    if m < 1:
        raise InvalidParam(f"POP size must be positive, got {m}", m=m)
    relations = [(int(x), int(y)) for x, y in relations]
    for x, y in relations:
        for label in (x, y):
            if not 1 <= label <= m:
                raise LabelOutOfRange(f"label {label} is outside 1..{m}", label=label, m=m)
    closed = transitive_closure(m, relations)
    loops = sorted(x for x, y in closed if x == y)
    if loops:
        raise CycleDetected(f"relations form a cycle through label {loops[0]}", labels=loops)
    return Pop(m, closed)


def claw(m: int, apex: int) -> Pop:
    """The claw of size ``m`` whose apex label ``apex`` is above every other label."""
    if not 1 <= apex <= m:
        raise LabelOutOfRange(f"apex {apex} is outside 1..{m}", label=apex, m=m)
    return Pop(m, frozenset((apex, y) for y in range(1, m + 1) if y != apex))


def chain(m: int) -> Pop:
    """Labels increasing left to right: 1 < 2 < ... < m."""
    return make_pop(m, [(x + 1, x) for x in range(1, m)])


def classical(pattern: Sequence[int]) -> Pop:
    """The POP whose only linear extension is ``pattern``."""
    m = len(pattern)
    return make_pop(m, [(x, y) for x in range(1, m + 1) for y in range(1, m + 1) if pattern[x - 1] > pattern[y - 1]])


@dataclass(frozen=True)
class ClawFamily:
    """Claws of size ``m`` with apexes ``a, a+d, ..., a+k*d``."""

    m: int
    k: int
    d: int
    a: int

    @property
    def apexes(self) -> tuple[int, ...]:
        return tuple(self.a + j * self.d for j in range(self.k + 1))

    @cached_property
    def claws(self) -> tuple[Pop, ...]:
        return tuple(claw(self.m, x) for x in self.apexes)

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.m, self.k, self.d

    def __str__(self) -> str:
        return f"{self.m},{self.k},{self.d},{self.a}"


def claw_family(m: int, k: int, d: int, a: int) -> ClawFamily:
    if m < 1 or a < 1 or k < 0 or d < 0:
        raise InvalidParam(f"need m, a >= 1 and k, d >= 0; got m={m} k={k} d={d} a={a}", m=m, k=k, d=d, a=a)
    if k == 0:
        d = 0
    if a + k * d > m:
        raise ApexOutOfRange(f"a + k*d = {a + k * d} exceeds m = {m}", m=m, k=k, d=d, a=a)
    return ClawFamily(m, k, d, a)


def legal_apexes(m: int, k: int, d: int) -> range:
    if k == 0:
        d = 0
    return range(1, m - k * d + 1)


def parse_family(text: str) -> ClawFamily:
    try:
        m, k, d, a = (int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"expected family as m,k,d,a; got {text!r}", text=text) from None
    return claw_family(m, k, d, a)


_REL = re.compile(r"^(\d+)\s*>\s*(\d+)$")


def parse_pop(text: str) -> Pop:
    """Parse ``"m: x>y, x>z"``."""
    head, sep, body = text.partition(":")
    if not sep:
        raise ParseError(f"expected 'm: x>y, ...', got {text!r}", text=text)
    try:
        m = int(head.strip())
    except ValueError:
        raise ParseError(f"bad POP size {head.strip()!r}", text=text) from None
    relations = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            continue
        match = _REL.match(tok)
        if match is None:
            raise ParseError(f"bad relation {tok!r}", text=text)
        relations.append((int(match[1]), int(match[2])))
    return make_pop(m, relations)


def pop_to_patterns(pop: Pop) -> list[tuple[int, ...]]:
    """Classical patterns (permutations of 1..m) realizing ``pop``, lexicographically."""
    return [p for p in itertools.permutations(range(1, pop.m + 1)) if pop.holds(p)]


def count_occurrences_in_permutation(perm: Sequence[int], pop: Pop) -> tuple[int, list[tuple[int, ...]]]:
    """Count occurrences of ``pop`` in ``perm``; witnesses are the subsequences themselves."""
    witnesses = [sub for sub in itertools.combinations(perm, pop.m) if pop.holds(sub)]
    return len(witnesses), witnesses


@dataclass(frozen=True)
class OccurrenceWitness:
    columns: tuple[int, ...]
    values: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"columns": list(self.columns), "values": list(self.values)}


def rectangle_in_board(board: FerrersBoard, columns: Sequence[int], values: Sequence[int]) -> bool:
    """Whether every cell of the rows-by-columns rectangle lies in ``board``."""
    n = board.n
    return all(board.contains(n + 1 - v, c) for v in values for c in columns)


def occurs_in_transversal(t: Transversal, pop: Pop) -> OccurrenceWitness | None:
    """Lexicographically least occurrence of ``pop`` in ``t``, or None.

    Row lengths grow downward, so the rectangle fits iff its top-right cell
    does: rightmost column at most the part of the largest value.
    """
    board = t.board
    vals = t.values
    for cols in itertools.combinations(range(1, t.n + 1), pop.m):
        sub = tuple(vals[c - 1] for c in cols)
        if cols[-1] <= board.part(max(sub)) and pop.holds(sub):
            return OccurrenceWitness(cols, sub)
    return None


def claw_occurs(t: Transversal, m: int, apexes: Iterable[int]) -> bool:
    """Direct test for any claw of size ``m`` with apex label in ``apexes``.

    An occurrence with apex at column ``c`` needs ``x - 1`` smaller entries to
    the left of ``c`` and ``m - x`` smaller entries in columns ``c+1..part(v)``.
    """
    vals = t.values
    parts = t.board.parts
    apexes = tuple(apexes)
    for c0, v in enumerate(vals):
        reach = parts[v - 1]
        left = sum(1 for u in vals[:c0] if u < v)
        right = sum(1 for u in vals[c0 + 1 : reach] if u < v)
        for x in apexes:
            if left >= x - 1 and right >= m - x:
                return True
    return False


def avoids(t: Transversal, family: ClawFamily | Iterable[Pop]) -> bool:
    if isinstance(family, ClawFamily):
        return not claw_occurs(t, family.m, set(family.apexes))
    return all(occurs_in_transversal(t, p) is None for p in family)
