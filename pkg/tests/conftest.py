from __future__ import annotations

import time
from itertools import combinations_with_replacement

import pytest
from hypothesis import strategies as st

from spreadborel.monomials import Monomial, SpreadVector
from spreadborel.oracle import taylor_betti
from spreadborel.sampling import random_grid

GRID_SIZE = 250
GRID_SEED = 20211

_acceptance_lines: list[str] = []


def record_acceptance(label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    _acceptance_lines.append(f"[{status}] {label}" + (f" ({detail})" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def brute_spread(n: int, ell: int, t: SpreadVector) -> list[tuple[int, ...]]:
    """Filter every degree-ell index sequence by the gap definition."""
    if ell > t.d:
        return []
    return [
        c
        for c in combinations_with_replacement(range(1, n + 1), ell)
        if all(c[i + 1] - c[i] >= t.entries[i] for i in range(ell - 1))
    ]


@st.composite
def spread_vectors(draw, max_d: int = 4, max_entry: int = 3):
    d = draw(st.integers(2, max_d))
    return SpreadVector(tuple(draw(st.lists(st.integers(0, max_entry), min_size=d - 1, max_size=d - 1))))


@st.composite
def spread_monomials(draw, t: SpreadVector, n: int | None = None, min_degree: int = 0):
    """A t-spread monomial built from a first index and gaps at least t_i."""
    ell = draw(st.integers(min_degree, t.d))
    if ell == 0:
        return Monomial()
    idx = [draw(st.integers(1, 4))]
    for i in range(ell - 1):
        idx.append(idx[-1] + t.entries[i] + draw(st.integers(0, 2)))
    return Monomial(tuple(idx))


@pytest.fixture(scope="session")
def grid():
    return random_grid(GRID_SIZE, seed=GRID_SEED)


@pytest.fixture(scope="session")
def grid_taylor(grid):
    """Taylor-oracle tables for the grid plus the wall time spent computing them."""
    start = time.perf_counter()
    tables = [taylor_betti(I) for I, _ in grid]
    return tables, time.perf_counter() - start
