"""
Coxeter systems and the exact word problem.

A system is given by its rank n and a symmetric matrix of relation
orders: m(s, s) = 1, and for s != t the product st has order
m(s, t) in {2, 3, ...} or infinity.  Conventions used everywhere in
this package:

- Generators are the integers 0 .. rank-1 (API, files, CLI alike).
- A word is a tuple of generator indices; it need not be reduced.
- Infinite orders are ``math.inf`` in memory.  JSON matrix files write
  infinity as 0, which is never a legal order.
- An Element stores the canonical form of a group element: the
  ShortLex-minimal reduced word, i.e. the lexicographically least
  member of the set of reduced words (they all have equal length).
  Element equality is equality of canonical words.

The word problem is solved by rewriting.  A nil move deletes an
adjacent equal pair ``ss``; a braid move replaces an alternating factor
``s t s ...`` of length m(s, t) by ``t s t ...`` of the same length.
By Tits' theorem a word is reduced exactly when no word in its
braid-move closure admits a nil move, and all reduced words of an
element form a single closure class.  ``normalize`` therefore
alternates nil deletion with a breadth-first closure search until the
word stops shrinking, then takes the lexicographic minimum of the final
class.  Elementary and exact; entirely adequate at desk scale (lengths
up to ~16, rank up to ~5), which is all this package aims at.

Closure searches are capped by ``orbit_budget`` and raise rather than
truncate.  Results are memoized on the system: a word -> Element map
(keyed by the exact letter sequence) and an orbit cache keyed by
canonical words.  All operations are pure and every cache fill writes a
forced value, so concurrent readers may race on the caches harmlessly;
nothing mutates a validated system.
"""

from __future__ import annotations

import json
import math
import re
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    BadDiagonal,
    BadOffDiagonal,
    BadRank,
    LetterOutOfRange,
    NonSymmetric,
    NotReduced,
    OrbitBudgetExceeded,
)

Word = tuple[int, ...]
GeneratorSet = frozenset[int]

INFINITE = math.inf

DEFAULT_ORBIT_BUDGET = 200_000


@dataclass(frozen=True)
class Element:
    """A group element, stored as its ShortLex-minimal reduced word.

    Build elements with :func:`normalize` (or the arithmetic helpers);
    constructing one from a word that is not canonical breaks every
    invariant downstream.
    """

    word: Word

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    @property
    def sort_key(self) -> tuple[int, Word]:
        """Sort elements by length, then lexicographically by word."""
        return (len(self.word), self.word)

    def __repr__(self) -> str:
        return f"Element({list(self.word)})"


IDENTITY = Element(())


@dataclass(frozen=True)
class CoxeterSystem:
    """A validated Coxeter system plus its memoization caches.

    ``orders[s][t]`` is m(s, t), with ``math.inf`` for pairs subject to
    no relation.  The caches are implementation detail: they only ever
    gain entries whose values are determined by (rank, orders), so two
    equal systems are interchangeable.
    """

    rank: int
    orders: tuple[tuple[float, ...], ...]
    name: str = field(default="", compare=False)
    orbit_budget: int = field(default=DEFAULT_ORBIT_BUDGET, compare=False)
    _canon: dict = field(default_factory=dict, repr=False, compare=False)
    _orbits: dict = field(default_factory=dict, repr=False, compare=False)
    _rdesc: dict = field(default_factory=dict, repr=False, compare=False)
    _ldesc: dict = field(default_factory=dict, repr=False, compare=False)
    _leq: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def generators(self) -> range:
        return range(self.rank)

    def order(self, s: int, t: int) -> float:
        """The order of the product of generators s and t."""
        return self.orders[s][t]


def validate_system(
    rank: int,
    matrix: Sequence[Sequence[float]],
    *,
    name: str = "",
    orbit_budget: int = DEFAULT_ORBIT_BUDGET,
) -> CoxeterSystem:
    """Check a raw (rank, matrix) pair and wrap it as an immutable system.

    >>> validate_system(2, [[1, 3], [3, 1]]).order(0, 1)
    3
    >>> validate_system(2, [[1, float("inf")], [float("inf"), 1]]).rank
    2
    """
    if not isinstance(rank, int) or rank < 1:
        raise BadRank(f"rank must be a positive integer, got {rank!r}")
    if len(matrix) != rank or any(len(row) != rank for row in matrix):
        raise BadRank(f"matrix is not {rank}x{rank}")
    for i in range(rank):
        if matrix[i][i] != 1:
            raise BadDiagonal(f"m({i},{i}) = {matrix[i][i]!r}, expected 1")
        for j in range(i + 1, rank):
            entry = matrix[i][j]
            if entry != matrix[j][i]:
                raise NonSymmetric(f"m({i},{j}) = {entry!r} != m({j},{i}) = {matrix[j][i]!r}")
            if entry != INFINITE and not (isinstance(entry, int) and entry >= 2):
                raise BadOffDiagonal(f"m({i},{j}) = {entry!r}, expected an integer >= 2 or infinity")
    orders = tuple(tuple(row[j] for j in range(rank)) for row in matrix)
    return CoxeterSystem(rank, orders, name=name or f"rank-{rank}", orbit_budget=orbit_budget)


_I2_PATTERN = re.compile(r"^I2\((\d+|inf)\)$")


def preset(name: str, *, orbit_budget: int = DEFAULT_ORBIT_BUDGET) -> CoxeterSystem:
    """Resolve a named system.

    Known names: A2, A3, B2, B3, H3, I2(m) for m >= 2, I2(inf), and
    affine-A2 (rank 3, all off-diagonal orders 3).

    >>> preset("A2").orders
    ((1, 3), (3, 1))
    >>> preset("I2(7)").order(0, 1)
    7
    """
    chains = {
        "A2": (3,),
        "A3": (3, 3),
        "B2": (4,),
        "B3": (4, 3),
        "H3": (5, 3),
    }
    if name in chains:
        orders = chains[name]
        rank = len(orders) + 1
        matrix: list[list[float]] = [
            [1 if i == j else 2 for j in range(rank)] for i in range(rank)
        ]
        for i, m in enumerate(orders):
            matrix[i][i + 1] = matrix[i + 1][i] = m
        return validate_system(rank, matrix, name=name, orbit_budget=orbit_budget)
    if name == "affine-A2":
        matrix = [[1 if i == j else 3 for j in range(3)] for i in range(3)]
        return validate_system(3, matrix, name=name, orbit_budget=orbit_budget)
    match = _I2_PATTERN.match(name)
    if match:
        m: float = INFINITE if match.group(1) == "inf" else int(match.group(1))
        return validate_system(2, [[1, m], [m, 1]], name=name, orbit_budget=orbit_budget)
    raise KeyError(f"unknown system preset {name!r}")


def load_system(path: str | Path, *, orbit_budget: int = DEFAULT_ORBIT_BUDGET) -> CoxeterSystem:
    """Read a matrix file: ``{"rank": n, "m": [[...], ...]}``, 0 meaning infinity."""
    path = Path(path)
    data = json.loads(path.read_text())
    if not isinstance(data, dict) or "rank" not in data or "m" not in data:
        raise BadRank(f"{path}: expected an object with 'rank' and 'm' keys")
    matrix = [
        [INFINITE if entry == 0 else entry for entry in row] for row in data["m"]
    ]
    return validate_system(data["rank"], matrix, name=path.stem, orbit_budget=orbit_budget)


# ---------------------------------------------------------------------------
# Rewriting machinery.

def _check_word(system: CoxeterSystem, word: Iterable[int]) -> Word:
    w = tuple(word)
    for letter in w:
        if not isinstance(letter, int) or not 0 <= letter < system.rank:
            raise LetterOutOfRange(f"letter {letter!r} not in [0, {system.rank})")
    return w


def _find_pair(word: Word) -> int:
    """Index of the leftmost adjacent equal pair, or -1."""
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return -1


def _braid_neighbors(system: CoxeterSystem, word: Word):
    """Words obtained from ``word`` by a single braid move."""
    orders = system.orders
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        m = orders[s][t]
        if m == INFINITE or i + m > n:
            continue
        m = int(m)
        if all(word[i + k] == (s if k % 2 == 0 else t) for k in range(2, m)):
            flipped = tuple((t if k % 2 == 0 else s) for k in range(m))
            yield word[:i] + flipped + word[i + m:]


def _orbit_scan(system: CoxeterSystem, start: Word, budget: int):
    """Breadth-first braid-move closure of ``start``.

    Returns ``(orbit, None)`` when the closure is complete and no member
    admits a nil move, or ``(None, shorter)`` as soon as some member
    does, where ``shorter`` is that member with the pair deleted.
    """
    seen = {start}
    queue = deque((start,))
    while queue:
        current = queue.popleft()
        i = _find_pair(current)
        if i >= 0:
            return None, current[:i] + current[i + 2:]
        for neighbor in _braid_neighbors(system, current):
            if neighbor not in seen:
                if len(seen) >= budget:
                    raise OrbitBudgetExceeded(
                        f"braid closure of a {len(start)}-letter word exceeded {budget} words"
                    )
                seen.add(neighbor)
                queue.append(neighbor)
    return frozenset(seen), None


def _orbit_of(system: CoxeterSystem, element: Element) -> frozenset[Word]:
    """All reduced words of ``element`` (cached)."""
    orbit = system._orbits.get(element.word)
    if orbit is None:
        orbit, shorter = _orbit_scan(system, element.word, system.orbit_budget)
        if shorter is not None:
            raise NotReduced(f"{element!r} does not hold a reduced word")
        least = min(orbit)
        if least != element.word:
            raise ValueError(f"{element!r} does not hold a canonical word")
        system._orbits[least] = orbit
        elem = Element(least)
        for member in orbit:
            system._canon[member] = elem
    return orbit


def normalize(system: CoxeterSystem, word: Iterable[int]) -> Element:
    """Canonical form of the group element spelled by ``word``.

    >>> a2 = preset("A2")
    >>> normalize(a2, [0, 0])
    Element([])
    >>> normalize(a2, [1, 0, 1])
    Element([0, 1, 0])
    >>> normalize(a2, [0, 1, 0, 1])
    Element([1, 0])
    """
    w = _check_word(system, word)
    canon = system._canon
    hit = canon.get(w)
    if hit is not None:
        return hit
    current = w
    while True:
        i = _find_pair(current)
        while i >= 0:
            current = current[:i] + current[i + 2:]
            i = _find_pair(current)
        hit = canon.get(current)
        if hit is not None:
            elem = hit
            break
        orbit, shorter = _orbit_scan(system, current, system.orbit_budget)
        if shorter is None:
            least = min(orbit)
            elem = Element(least)
            system._orbits[least] = orbit
            for member in orbit:
                canon[member] = elem
            break
        current = shorter
    canon[w] = elem
    return elem


def braid_orbit(system: CoxeterSystem, word: Iterable[int]) -> frozenset[Word]:
    """The full set of reduced words of the element spelled by ``word``.

    The input must already be reduced; the closure search proves it
    (raising :class:`NotReduced` otherwise).

    >>> sorted(braid_orbit(preset("A2"), [0, 1, 0]))
    [(0, 1, 0), (1, 0, 1)]
    >>> braid_orbit(preset("B2"), [])
    frozenset({()})
    """
    w = _check_word(system, word)
    orbit, shorter = _orbit_scan(system, w, system.orbit_budget)
    if shorter is not None:
        raise NotReduced(f"word {list(w)} is not reduced")
    least = min(orbit)
    if least not in system._orbits:
        system._orbits[least] = orbit
        elem = Element(least)
        for member in orbit:
            system._canon[member] = elem
    return orbit


def _mult_gen_right(system: CoxeterSystem, a: Element, s: int) -> Element:
    # If some reduced word of a ends with s, then s is a right descent
    # (exchange property) and dropping it leaves a reduced word of a*s.
    for u in _orbit_of(system, a):
        if u and u[-1] == s:
            return normalize(system, u[:-1])
    return normalize(system, a.word + (s,))


def _mult_gen_left(system: CoxeterSystem, s: int, a: Element) -> Element:
    for u in _orbit_of(system, a):
        if u and u[0] == s:
            return normalize(system, u[1:])
    return normalize(system, (s,) + a.word)


def multiply(system: CoxeterSystem, a: Element, b: Element) -> Element:
    """Group product, i.e. the canonical form of the concatenation.

    >>> a2 = preset("A2")
    >>> multiply(a2, normalize(a2, [0]), normalize(a2, [0]))
    Element([])
    >>> multiply(a2, normalize(a2, [0, 1]), normalize(a2, [0, 1]))
    Element([1, 0])
    """
    result = a
    for s in b.word:
        result = _mult_gen_right(system, result, s)
    return result


def inverse(system: CoxeterSystem, a: Element) -> Element:
    """Group inverse; the reversed canonical word is already reduced.

    >>> a2 = preset("A2")
    >>> inverse(a2, normalize(a2, [0, 1]))
    Element([1, 0])
    >>> inverse(a2, normalize(a2, [0, 1, 0]))
    Element([0, 1, 0])
    """
    return normalize(system, a.word[::-1])


def right_descents(system: CoxeterSystem, w: Element) -> GeneratorSet:
    """Generators s with length(w s) < length(w).

    A generator is a right descent exactly when some reduced word of w
    ends with it (exchange property), which the orbit cache answers
    directly.

    >>> a2 = preset("A2")
    >>> sorted(right_descents(a2, normalize(a2, [0, 1])))
    [1]
    >>> sorted(right_descents(a2, IDENTITY))
    []
    """
    cached = system._rdesc.get(w.word)
    if cached is None:
        cached = frozenset(u[-1] for u in _orbit_of(system, w) if u)
        system._rdesc[w.word] = cached
    return cached


def left_descents(system: CoxeterSystem, w: Element) -> GeneratorSet:
    """Generators s with length(s w) < length(w); mirror of right_descents.

    >>> a2 = preset("A2")
    >>> sorted(left_descents(a2, normalize(a2, [0, 1])))
    [0]
    """
    cached = system._ldesc.get(w.word)
    if cached is None:
        cached = frozenset(u[0] for u in _orbit_of(system, w) if u)
        system._ldesc[w.word] = cached
    return cached
