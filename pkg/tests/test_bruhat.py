"""Bruhat order: comparisons, balls, covers, intervals, Hasse export."""

import itertools
import json
import random

import pytest

import coxkit as ck
from support import full_ball, get_ball, get_system


def test_identity_below_everything():
    a2 = get_system("A2")
    for w in full_ball("A2").elements:
        assert ck.bruhat_leq(a2, ck.IDENTITY, w)
        assert ck.bruhat_leq_subword(a2, ck.IDENTITY, w)


def test_leq_examples():
    a2 = get_system("A2")
    s0 = ck.normalize(a2, [0])
    s10 = ck.normalize(a2, [1, 0])
    s01 = ck.normalize(a2, [0, 1])
    assert ck.bruhat_leq(a2, s0, s10)
    assert not ck.bruhat_leq(a2, s01, s10)
    assert not ck.bruhat_leq_subword(a2, s01, s10)


def test_subword_examples():
    a2 = get_system("A2")
    assert not ck.bruhat_leq_subword(
        a2, ck.normalize(a2, [0, 1, 0]), ck.normalize(a2, [0, 1])
    )
    b2 = get_system("B2")
    assert ck.bruhat_leq_subword(
        b2, ck.normalize(b2, [1, 0]), ck.normalize(b2, [0, 1, 0, 1])
    )


@pytest.mark.parametrize("name", ["A3", "B2", "I2(7)"])
def test_comparison_routes_agree(name):
    system = get_system(name)
    elements = full_ball(name).elements
    ball_obj = full_ball(name)
    for u in elements:
        for w in elements:
            expected = ck.bruhat_leq(system, u, w)
            assert ck.bruhat_leq_subword(system, u, w) == expected
            assert ball_obj.leq(u, w) == expected


def test_leq_choice_independent():
    system = get_system("A3")
    elements = full_ball("A3").elements
    for seed in range(3):
        rng = random.Random(seed)
        for u in elements:
            for w in elements:
                randomized = ck.bruhat_leq(system, u, w, choose=rng.choice)
                assert randomized == ck.bruhat_leq(system, u, w)


def test_partial_order_axioms():
    system = get_system("A3")
    elements = full_ball("A3").elements
    for x in elements:
        assert ck.bruhat_leq(system, x, x)
    for x, y in itertools.permutations(elements, 2):
        assert not (ck.bruhat_leq(system, x, y) and ck.bruhat_leq(system, y, x))
    leq = {
        (x, y) for x in elements for y in elements if ck.bruhat_leq(system, x, y)
    }
    for x, y in leq:
        for z in elements:
            if (y, z) in leq:
                assert (x, z) in leq


def test_lifting_property_exhaustive():
    # For u <= w and a generator s: descents on both sides push down to
    # us <= ws, ascents on both sides push up to us <= ws (when both
    # stay in the ball), and a mixed pair gives us <= w and u <= ws.
    for name in ("A3", "B2"):
        system = get_system(name)
        b = full_ball(name)
        gen = [ck.Element((s,)) for s in range(system.rank)]
        for u in b.elements:
            for w in b.elements:
                if not ck.bruhat_leq(system, u, w):
                    continue
                du = ck.right_descents(system, u)
                dw = ck.right_descents(system, w)
                for s in range(system.rank):
                    us = ck.multiply(system, u, gen[s])
                    ws = ck.multiply(system, w, gen[s])
                    if s in dw and s in du:
                        assert ck.bruhat_leq(system, us, ws)
                    elif s not in dw and s not in du:
                        if us.length <= b.bound and ws.length <= b.bound:
                            assert ck.bruhat_leq(system, us, ws)
                    elif s in dw:
                        assert ck.bruhat_leq(system, us, w)
                        assert ck.bruhat_leq(system, u, ws)


# ---------------------------------------------------------------------------
# Balls.

def test_ball_sizes():
    assert len(full_ball("A2")) == 6
    assert len(get_ball("A2", 0)) == 1
    assert len(get_ball("I2(inf)", 4)) == 9


def test_infinite_dihedral_ball_matches_word_enumeration():
    # Every element of length <= 4 arises from some word of length <= 4,
    # so normalizing all of them enumerates the ball.
    system = get_system("I2(inf)")
    seen = set()
    for k in range(5):
        for word in itertools.product(range(2), repeat=k):
            seen.add(ck.normalize(system, word))
    b = get_ball("I2(inf)", 4)
    assert seen == set(b.elements)
    by_length = {}
    for w in b.elements:
        by_length.setdefault(w.length, []).append(w)
    assert {k: len(v) for k, v in by_length.items()} == {0: 1, 1: 2, 2: 2, 3: 2, 4: 2}


def test_affine_ball_matches_word_enumeration():
    system = get_system("affine-A2")
    seen = set()
    for k in range(6):
        for word in itertools.product(range(3), repeat=k):
            seen.add(ck.normalize(system, word))
    assert seen == set(get_ball("affine-A2", 5).elements)


def test_ball_budget():
    with pytest.raises(ck.BallBudgetExceeded):
        ck.ball(get_system("I2(inf)"), 10, budget=5)


def test_ball_without_bound_enumerates_finite_group():
    b = ck.ball(get_system("B2"), None)
    assert len(b) == 8 and b.bound == 4 and b.whole_group


def test_ball_rejects_negative_bound():
    with pytest.raises(ValueError):
        ck.ball(get_system("A2"), -1)


def test_ball_elements_sorted_and_graded():
    b = full_ball("B3")
    keys = [w.sort_key for w in b.elements]
    assert keys == sorted(keys)
    for j, covered in enumerate(b.covers):
        for i in covered:
            assert b.elements[j].length == b.elements[i].length + 1
    # Graded with minimum: everything above the identity covers something.
    for j, w in enumerate(b.elements):
        if w.length > 0:
            assert b.covers[j]


def test_cover_chains_realize_the_order():
    # x < y in the ball must be witnessed by a cover chain inside it;
    # equivalently the chain closure equals the direct comparison.
    for name in ("A3", "B2"):
        system = get_system(name)
        b = full_ball(name)
        for x in b.elements:
            for y in b.elements:
                assert b.leq(x, y) == ck.bruhat_leq(system, x, y)


def test_downward_closure():
    system = get_system("affine-A2")
    b = get_ball("affine-A2", 4)
    for w in b.elements:
        for v in b.elements:
            if ck.bruhat_leq(system, v, w):
                assert v.length <= w.length


# ---------------------------------------------------------------------------
# Intervals and covers.

def test_interval_examples():
    a2 = get_system("A2")
    b = full_ball("A2")
    assert ck.interval(b, ck.IDENTITY, ck.IDENTITY).members == {ck.IDENTITY}
    longest = ck.normalize(a2, [0, 1, 0])
    assert len(ck.interval(b, ck.IDENTITY, longest).members) == 6
    s0 = ck.normalize(a2, [0])
    s01 = ck.normalize(a2, [0, 1])
    assert ck.interval(b, s0, s01).members == {s0, s01}


def test_interval_errors():
    a2 = get_system("A2")
    b = get_ball("A2", 2)
    s0 = ck.normalize(a2, [0])
    s1 = ck.normalize(a2, [1])
    with pytest.raises(ck.NotComparable):
        ck.interval(b, s0, s1)
    with pytest.raises(ck.TopOutOfBall):
        ck.interval(b, s0, ck.normalize(a2, [0, 1, 0]))


def test_interval_members_are_between():
    system = get_system("B2")
    b = full_ball("B2")
    for x in b.elements:
        for y in b.elements:
            if not ck.bruhat_leq(system, x, y):
                continue
            got = ck.interval(b, x, y)
            expected = {
                z
                for z in b.elements
                if ck.bruhat_leq(system, x, z) and ck.bruhat_leq(system, z, y)
            }
            assert got.members == expected
            for z in got.members:
                assert x.length <= z.length <= y.length


def test_covers_of_examples():
    a2 = get_system("A2")
    b = full_ball("A2")
    assert ck.covers_of(b, ck.IDENTITY) == frozenset()
    assert ck.covers_of(b, ck.normalize(a2, [0])) == {ck.IDENTITY}
    assert ck.covers_of(b, ck.normalize(a2, [0, 1])) == {
        ck.normalize(a2, [0]),
        ck.normalize(a2, [1]),
    }


def test_covers_have_nothing_between():
    system = get_system("A3")
    b = full_ball("A3")
    for w in b.elements:
        for x in ck.covers_of(b, w):
            between = [
                z
                for z in b.elements
                if ck.bruhat_leq(system, x, z) and ck.bruhat_leq(system, z, w)
            ]
            assert sorted(z.sort_key for z in between) == sorted(
                [x.sort_key, w.sort_key]
            )


# ---------------------------------------------------------------------------
# Hasse export.

def test_a2_hasse_counts():
    b = full_ball("A2")
    dot = ck.hasse_dot(b)
    assert dot.count("[label=") == 6
    assert dot.count(" -> ") == 8


def test_hasse_json_round_trip():
    b = get_ball("B2", 4)
    text = ck.hasse_json(b)
    elements, covers = ck.parse_hasse_json(text)
    assert elements == b.elements
    expected_pairs = tuple(
        sorted((i, j) for j, covered in enumerate(b.covers) for i in covered)
    )
    assert covers == expected_pairs
    assert ck.hasse_json(b) == text  # stable bytes


def test_hasse_interval_restriction():
    a2 = get_system("A2")
    b = full_ball("A2")
    members = ck.interval(b, ck.IDENTITY, ck.IDENTITY).members
    elements, covers = ck.parse_hasse_json(ck.hasse_json(b, members))
    assert elements == (ck.IDENTITY,) and covers == ()
    top = ck.normalize(a2, [0, 1, 0])
    members = ck.interval(b, ck.normalize(a2, [0]), top).members
    elements, covers = ck.parse_hasse_json(ck.hasse_json(b, members))
    assert len(elements) == 4  # 0, 01, 10, 010
    assert len(covers) == 4


def test_parse_hasse_json_validates():
    with pytest.raises(ValueError):
        ck.parse_hasse_json('{"elements": [[]], "covers": [[0, 5]]}')
