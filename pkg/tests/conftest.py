import random

import pytest

from bnkit.exact import Poly, field


def random_poly(f, rng: random.Random, max_deg: int) -> Poly:
    return Poly(f, [rng.randint(-4, 4) for _ in range(rng.randint(0, max_deg + 1))])


def random_matrix(f, rng: random.Random, max_size: int, max_deg: int):
    rows, cols = rng.randint(1, max_size), rng.randint(1, max_size)
    return [[random_poly(f, rng, max_deg) for _ in range(cols)] for _ in range(rows)]


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture(params=[0, 2, 3, 5], ids=lambda c: f"c{c}")
def any_field(request):
    return field(request.param)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
