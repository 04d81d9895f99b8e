"""Shared fixtures, corpus generators, and the acceptance summary hook."""

import itertools
import random

import pytest

import veckit as vk

# worked 2x2x3 example used across the suite; indexed [p1][p2][p3]
GOLDEN_NESTED = [
    [[1, 2, 3], [4, 5, 6]],
    [[7, 8, 9], [10, 11, 12]],
]
GOLDEN_SHIFTED = [[1, 4, 2, 5, 3, 6], [7, 10, 8, 11, 9, 12]]
GOLDEN_VEC = [1, 7, 4, 10, 2, 8, 5, 11, 3, 9, 6, 12]
GOLDEN_RVEC = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]

# (criterion number, pass/fail line) pairs, printed at session end
ACCEPTANCE_LINES: list = []


@pytest.fixture
def golden():
    return vk.from_nested(GOLDEN_NESTED)


def exhaustive_shapes(max_rank=4, max_extent=3):
    """Every extent tuple with rank <= max_rank and extents <= max_extent."""
    shapes = []
    for rank in range(1, max_rank + 1):
        shapes.extend(
            itertools.product(range(1, max_extent + 1), repeat=rank)
        )
    return shapes


def sequential(dims):
    """Deterministic tensor filled with 1..size in storage order."""
    shape = vk.as_shape(dims)
    return vk.make_tensor(shape, list(range(1, shape.size + 1)))


def random_tensor(rng: random.Random, dims):
    shape = vk.as_shape(dims)
    return vk.make_tensor(shape, [rng.randint(-9, 9) for _ in range(shape.size)])


def random_shape(rng: random.Random, max_rank, max_extent, min_rank=1, max_size=None):
    while True:
        rank = rng.randint(min_rank, max_rank)
        dims = tuple(rng.randint(1, max_extent) for _ in range(rank))
        shape = vk.as_shape(dims)
        if max_size is None or shape.size <= max_size:
            return shape


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
