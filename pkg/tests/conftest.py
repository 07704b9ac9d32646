import numpy as np
import pytest

from presto import TemporalNetwork


def random_network(rng: np.random.Generator, n_max: int = 10, m_min: int = 1,
                   m_max: int = 30, t_max: int = 15) -> TemporalNetwork:
    """Small random network with integer timestamps and plenty of ties."""
    n = int(rng.integers(2, n_max + 1))
    m = int(rng.integers(m_min, m_max + 1))
    triples = []
    while len(triples) < m:
        a, b = rng.integers(0, n, size=2)
        if a != b:
            triples.append((int(a), int(b), int(rng.integers(0, t_max + 1))))
    return TemporalNetwork.from_edges(triples)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def six_edges():
    return TemporalNetwork.from_edges(
        [("a", "b", 1), ("b", "c", 2), ("c", "a", 3),
         ("a", "b", 10), ("b", "c", 11), ("c", "a", 20)])


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
