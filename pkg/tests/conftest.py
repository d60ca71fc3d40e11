"""Shared data for the test suite.

The three groups whose generator lists are pinned as golden values (the
rank-7 double cover of A4, the rank-8 general linear group over F3 and
the rank-7 alternating group on six points) appear inline so the unit
tests run without any bundled dataset files.
"""

import random

import pytest

from charmonoid import presentation

SL23_DEGREES = (1, 1, 1, 2, 2, 2, 3)
SL23_HILBERT = [
    (1, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 1, 0, 1, 0),
    (0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 1, 1, 1, 0),
]

GL23_DEGREES = (1, 1, 2, 2, 2, 3, 3, 4)
GL23_HILBERT = [
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 1, 1, 0, 0, 1),
]

A6_DEGREES = (1, 5, 5, 8, 8, 9, 10)
A6_HILBERT = [
    (1, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 1, 0),
    (1, 0, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 1, 0),
    (0, 1, 1, 0, 0, 0, 0),
    (0, 1, 1, 1, 2, 2, 2),
    (0, 1, 1, 2, 1, 2, 2),
    (0, 1, 0, 1, 1, 1, 0),
    (0, 1, 0, 0, 0, 0, 1),
    (0, 0, 1, 1, 1, 1, 0),
    (0, 0, 1, 0, 0, 0, 1),
    (0, 0, 0, 1, 1, 0, 2),
    (0, 0, 0, 1, 1, 1, 2),
    (0, 0, 0, 0, 0, 0, 1),
]

S3_ROWS = [
    (1, 0, 0),
    (0, 1, 0),
    (1, 1, 2),
    (1, 0, 1),
    (0, 1, 1),
    (1, 1, 0),
    (0, 0, 1),
]


@pytest.fixture
def sl23():
    return presentation(7, SL23_HILBERT)


@pytest.fixture
def gl23():
    return presentation(8, GL23_HILBERT)


@pytest.fixture
def a6():
    return presentation(7, A6_HILBERT)


@pytest.fixture
def rng():
    return random.Random(20240517)


def random_generators(rng, rank, count, entry_max=3):
    """Random nonzero nonnegative vectors (may contain duplicates)."""
    out = []
    while len(out) < count:
        v = tuple(rng.randint(0, entry_max) for _ in range(rank))
        if any(v):
            out.append(v)
    return out
