from __future__ import annotations

import itertools

import pytest

from popboards.boards import FerrersBoard
from popboards.pops import claw_family, legal_apexes

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def weakly_decreasing(n_parts: int, max_part: int):
    """Every weakly decreasing tuple of ``n_parts`` parts in 1..max_part."""
    for combo in itertools.combinations_with_replacement(range(max_part, 0, -1), n_parts):
        yield combo


def claw_shapes(max_m: int, max_k: int = 2, max_d: int = 2):
    for m in range(1, max_m + 1):
        for k in range(max_k + 1):
            for d in range(max_d + 1):
                if k == 0 and d > 0:
                    continue
                if k * d + 1 > m:
                    continue
                yield m, k, d


def claw_families(max_m: int, max_k: int = 2, max_d: int = 2):
    for m, k, d in claw_shapes(max_m, max_k, max_d):
        for a in legal_apexes(m, k, d):
            yield claw_family(m, k, d, a)


@pytest.fixture
def sample_board() -> FerrersBoard:
    return FerrersBoard((6, 6, 6, 6, 5, 3))


@pytest.fixture
def acceptance_log():
    def record(name: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))
