"""Shared, cached system and ball builders for the test suite.

The library memoizes per system, so reusing one instance of each preset
across test modules keeps the suite fast.
"""

from functools import lru_cache

import coxkit as ck

# Longest-element lengths: at these bounds the ball is the whole group.
FULL_BOUNDS = {
    "A2": 3,
    "B2": 4,
    "A3": 6,
    "B3": 9,
    "H3": 15,
    "I2(7)": 7,
}

EXPECTED_ORDERS = {
    "A2": 6,
    "B2": 8,
    "A3": 24,
    "B3": 48,
    "H3": 120,
    "I2(7)": 14,
}


@lru_cache(maxsize=None)
def get_system(name: str) -> ck.CoxeterSystem:
    return ck.preset(name)


@lru_cache(maxsize=None)
def get_ball(name: str, bound: int) -> ck.Ball:
    return ck.ball(get_system(name), bound)


def full_ball(name: str) -> ck.Ball:
    return get_ball(name, FULL_BOUNDS[name])


def subsets_of(rank: int):
    """All generator subsets, as sorted tuples, by bitmask."""
    return [
        tuple(s for s in range(rank) if mask >> s & 1) for mask in range(1 << rank)
    ]
