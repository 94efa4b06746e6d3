"""Shared fixtures and sequence generators for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

import splinequad as sq


def random_stretched(rng: np.random.Generator, n: int,
                     a: float = 0.0, b: float = 1.0,
                     max_step: float = 1.3) -> sq.KnotSequence:
    """Random valid symmetrically stretched sequence with n intervals.

    Left-half interval lengths grow by independent factors in
    [1, max_step], so they are non-decreasing toward the middle; the
    right half is the exact mirror image about the midpoint.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    half = (n + 1) // 2
    lens = np.cumprod(rng.uniform(1.0, max_step, size=half))
    m = n // 2
    if n % 2:
        total = 2.0 * lens[:m].sum() + lens[m]
    else:
        total = 2.0 * lens[:m].sum()
    scale = (b - a) / total
    left = [a]
    for length in lens[:m]:
        left.append(left[-1] + float(length) * scale)
    if n % 2 == 0:
        left[-1] = 0.5 * (a + b)
        mirrored = left[:-1]
    else:
        mirrored = left
    knots = left + [a + b - x for x in reversed(mirrored)]
    knots[0], knots[-1] = a, b
    return sq.validate(knots, a, b)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20140901)


# One line per acceptance criterion, filled in by test_acceptance.py and
# echoed after the run so the summary survives output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def family_zoo() -> list[tuple[str, sq.KnotSequence]]:
    """A spread of sequences across all generators and both parities."""
    zoo = []
    for n in range(2, 11):
        zoo.append((f"uniform n={n}", sq.gen_uniform(n, 0.0, 1.0)))
    for N in range(1, 11):
        zoo.append((f"chebyshev N={N}", sq.gen_chebyshev(N, 0.0, 1.0)))
        zoo.append((f"legendre N={N}", sq.gen_legendre(N, 0.0, 1.0)))
        for q in (1.5, 2.0):
            zoo.append((f"geometric q={q} N={N}", sq.gen_geometric(N, q, 0.0, 1.0)))
    return zoo
