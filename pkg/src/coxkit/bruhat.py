"""
Bruhat order: comparison, covers, intervals, and bounded-length balls.

Two independent comparison routes are provided and are required to
agree everywhere:

- :func:`bruhat_leq` runs the standard descent recursion licensed by
  the lifting property: strip a left descent of the larger element and
  recurse.  Fast, and memoized per system.
- :func:`bruhat_leq_subword` is the brute-force oracle via the subword
  property: u <= w iff some reduced word of u is a subword (not
  necessarily contiguous) of one fixed reduced word of w.

A :class:`Ball` materializes {w : length(w) <= bound} with its complete
cover relation, which is finite for every Coxeter system.  Covers are
found by comparing adjacent length strata pairwise; the full order on
the ball is then the chain closure of the covers (sound because the
order is graded, so any relation inside the ball is witnessed by a
cover chain inside the ball) and is stored as per-element bitmasks for
the sweep code.  Balls are immutable once built and safe to share
across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import (
    Element,
    IDENTITY,
    CoxeterSystem,
    _mult_gen_left,
    _mult_gen_right,
    _orbit_of,
    left_descents,
    normalize,
    preset,
    right_descents,
)
from .errors import BallBudgetExceeded, NotComparable, TopOutOfBall

DEFAULT_BALL_BUDGET = 500_000


def bruhat_leq(
    system: CoxeterSystem,
    u: Element,
    w: Element,
    *,
    choose: Callable[[tuple[int, ...]], int] | None = None,
) -> bool:
    """True iff u <= w in Bruhat order.

    Recursion: if w is the identity, u must be too; otherwise pick a
    left descent s of w and compare (su, sw) when s is also a descent
    of u, else (u, sw).  Any descent works; the default takes the
    smallest index, which keeps traces reproducible, and memoizes.
    Passing ``choose`` (given the sorted descent tuple) overrides the
    choice and bypasses the cache — used to test choice-independence.

    >>> a2 = preset("A2")
    >>> bruhat_leq(a2, normalize(a2, [0]), normalize(a2, [1, 0]))
    True
    >>> bruhat_leq(a2, normalize(a2, [0, 1]), normalize(a2, [1, 0]))
    False
    """
    cache = system._leq if choose is None else None

    def step(u: Element, w: Element) -> bool:
        if w.length == 0:
            return u.length == 0
        if u.length > w.length:
            return False
        if cache is not None:
            hit = cache.get((u.word, w.word))
            if hit is not None:
                return hit
        descents = tuple(sorted(left_descents(system, w)))
        s = descents[0] if choose is None else choose(descents)
        sw = _mult_gen_left(system, s, w)
        if s in left_descents(system, u):
            result = step(_mult_gen_left(system, s, u), sw)
        else:
            result = step(u, sw)
        if cache is not None:
            cache[(u.word, w.word)] = result
        return result

    return step(u, w)


def bruhat_leq_subword(system: CoxeterSystem, u: Element, w: Element) -> bool:
    """Brute-force comparison via the subword property.

    Scans every reduced word of u against the canonical word of w.
    Deliberately independent of :func:`bruhat_leq`; the two must agree.

    >>> b2 = preset("B2")
    >>> bruhat_leq_subword(b2, normalize(b2, [1, 0]), normalize(b2, [0, 1, 0, 1]))
    True
    >>> bruhat_leq_subword(b2, IDENTITY, normalize(b2, [0]))
    True
    """
    if u.length > w.length:
        return False
    text = w.word
    for reduced in _orbit_of(system, u):
        it = iter(text)
        if all(letter in it for letter in reduced):
            return True
    return False


@dataclass(frozen=True)
class Ball:
    """All elements of length <= bound, with their complete cover relation.

    ``elements`` is sorted by (length, word); ``index`` inverts it.
    ``covers[j]`` lists the indices covered by element j (one length
    lower).  ``down[i]`` / ``up[i]`` are bitmasks over element indices
    of {z : z <= i-th} / {z : z >= i-th}.  ``whole_group`` is True when
    enumeration exhausted the group before reaching the bound, i.e. the
    ball is the entire (finite) group.
    """

    system: CoxeterSystem
    bound: int
    elements: tuple[Element, ...]
    index: dict[Element, int]
    covers: tuple[tuple[int, ...], ...]
    down: tuple[int, ...]
    up: tuple[int, ...]
    whole_group: bool
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, w: Element) -> bool:
        return w in self.index

    def index_of(self, w: Element) -> int:
        return self.index[w]

    def leq(self, x: Element, y: Element) -> bool:
        """Bruhat comparison through the precomputed cover closure."""
        return bool(self.up[self.index[x]] >> self.index[y] & 1)


def ball(
    system: CoxeterSystem,
    bound: int | None,
    *,
    budget: int = DEFAULT_BALL_BUDGET,
) -> Ball:
    """Enumerate {w : length(w) <= bound} by right multiplication from e.

    ``bound=None`` keeps going until the group is exhausted, which
    terminates only for finite groups (the budget guards the rest).

    >>> a2 = preset("A2")
    >>> len(ball(a2, 3))
    6
    >>> len(ball(preset("I2(inf)"), 4))
    9
    >>> len(ball(a2, 0))
    1
    """
    if bound is not None and bound < 0:
        raise ValueError(f"ball bound must be >= 0, got {bound}")
    strata: list[list[Element]] = [[IDENTITY]]
    total = 1
    whole_group = False
    k = 1
    while bound is None or k <= bound:
        frontier: set[Element] = set()
        for w in strata[k - 1]:
            for s in system.generators:
                if s not in right_descents(system, w):
                    frontier.add(_mult_gen_right(system, w, s))
        if not frontier:
            whole_group = True
            break
        total += len(frontier)
        if total > budget:
            raise BallBudgetExceeded(f"ball grew past {budget} elements at length {k}")
        strata.append(sorted(frontier, key=lambda e: e.word))
        k += 1
    if bound is None:
        bound = len(strata) - 1
    if not whole_group:
        # The bound cut enumeration short, but the ball may still be the
        # whole group: that happens exactly when nothing in the last
        # stratum has an ascent, i.e. every descent set is full.
        whole_group = all(
            len(right_descents(system, w)) == system.rank for w in strata[-1]
        )

    elements = tuple(w for stratum in strata for w in stratum)
    index = {w: i for i, w in enumerate(elements)}

    # Covers: pairwise comparison of adjacent strata.  Quadratic in the
    # stratum sizes, which is fine at desk scale.
    offsets = [0]
    for stratum in strata:
        offsets.append(offsets[-1] + len(stratum))
    covers: list[tuple[int, ...]] = []
    for k, stratum in enumerate(strata):
        for w in stratum:
            if k == 0:
                covers.append(())
                continue
            below = range(offsets[k - 1], offsets[k])
            covers.append(tuple(i for i in below if bruhat_leq(system, elements[i], w)))

    down = [0] * len(elements)
    for j in range(len(elements)):
        mask = 1 << j
        for i in covers[j]:
            mask |= down[i]
        down[j] = mask
    up = [0] * len(elements)
    for j, mask in enumerate(down):
        bit = 1 << j
        while mask:
            low = mask & -mask
            up[low.bit_length() - 1] |= bit
            mask ^= low

    return Ball(
        system=system,
        bound=bound,
        elements=elements,
        index=index,
        covers=tuple(covers),
        down=tuple(down),
        up=tuple(up),
        whole_group=whole_group,
    )


@dataclass(frozen=True)
class Interval:
    """The Bruhat interval [bottom, top] = {z : bottom <= z <= top}."""

    bottom: Element
    top: Element
    members: frozenset[Element]


def interval(b: Ball, x: Element, y: Element) -> Interval:
    """The interval [x, y], complete because length(y) <= ball bound.

    >>> a2 = preset("A2")
    >>> full = ball(a2, 3)
    >>> len(interval(full, IDENTITY, normalize(a2, [0, 1, 0])).members)
    6
    >>> interval(full, IDENTITY, IDENTITY).members
    frozenset({Element([])})
    """
    if y.length > b.bound:
        raise TopOutOfBall(f"length {y.length} exceeds ball bound {b.bound}")
    i, j = b.index[x], b.index[y]
    if not (b.up[i] >> j & 1):
        raise NotComparable(f"{x!r} is not <= {y!r}")
    mask = b.up[i] & b.down[j]
    members = set()
    while mask:
        low = mask & -mask
        members.add(b.elements[low.bit_length() - 1])
        mask ^= low
    return Interval(bottom=x, top=y, members=frozenset(members))


def covers_of(b: Ball, w: Element) -> frozenset[Element]:
    """All x covered by w (one length lower, nothing in between).

    >>> a2 = preset("A2")
    >>> full = ball(a2, 3)
    >>> sorted(e.word for e in covers_of(full, normalize(a2, [0, 1])))
    [(0,), (1,)]
    """
    return frozenset(b.elements[i] for i in b.covers[b.index[w]])


# ---------------------------------------------------------------------------
# Hasse-diagram export: DOT and JSON, for a ball or any interval in it.

def hasse_data(
    b: Ball, members: Iterable[Element] | None = None
) -> tuple[tuple[Element, ...], tuple[tuple[int, int], ...]]:
    """Sorted elements and cover pairs (lower, upper) as list indices.

    With ``members`` the diagram is restricted to that subset, which
    must be order-convex (a ball or an interval is); covers of the
    induced poset are then exactly the global covers between members.
    """
    if members is None:
        chosen = list(range(len(b.elements)))
    else:
        chosen = sorted(b.index[w] for w in members)
    remap = {old: new for new, old in enumerate(chosen)}
    elements = tuple(b.elements[i] for i in chosen)
    pairs = sorted(
        (remap[i], remap[j])
        for j in chosen
        for i in b.covers[j]
        if i in remap
    )
    return elements, tuple(pairs)


def _word_label(w: Element) -> str:
    return json.dumps(list(w.word), separators=(",", ":"))


def hasse_dot(b: Ball, members: Iterable[Element] | None = None) -> str:
    """Graphviz DOT text: one node per element, one edge per cover."""
    elements, pairs = hasse_data(b, members)
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for i, w in enumerate(elements):
        lines.append(f'  n{i} [label="{_word_label(w)}"];')
    for i, j in pairs:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_json(b: Ball, members: Iterable[Element] | None = None) -> str:
    """JSON text: {"elements": [[...], ...], "covers": [[lower, upper], ...]}."""
    elements, pairs = hasse_data(b, members)
    payload = {
        "elements": [list(w.word) for w in elements],
        "covers": [list(p) for p in pairs],
    }
    return json.dumps(payload, sort_keys=True)


def parse_hasse_json(text: str) -> tuple[tuple[Element, ...], tuple[tuple[int, int], ...]]:
    """Inverse of :func:`hasse_json`; validates the shape."""
    payload = json.loads(text)
    elements = tuple(Element(tuple(word)) for word in payload["elements"])
    n = len(elements)
    pairs = []
    for lower, upper in payload["covers"]:
        if not (0 <= lower < n and 0 <= upper < n):
            raise ValueError(f"cover [{lower}, {upper}] out of range")
        pairs.append((lower, upper))
    return elements, tuple(pairs)
