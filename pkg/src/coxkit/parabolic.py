"""
Parabolic subgroups: quotient decomposition, cosets, projections.

For a generator subset J, W_J is the subgroup generated by J and the
quotient set W^J holds the elements with no right descent in J — the
minimal-length representatives of the left cosets w·W_J.  Every w
factors uniquely as w = w^J · w_J with w^J in W^J, w_J in W_J, and
lengths adding; :func:`decompose_right` peels right descents lying in J
until none remain, which computes exactly that factorization.  Left
cosets W_J·w mirror everything through left descents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, NamedTuple

from .bruhat import Ball, ball
from .core import (
    CoxeterSystem,
    Element,
    GeneratorSet,
    _mult_gen_left,
    _mult_gen_right,
    left_descents,
    normalize,
    preset,
    right_descents,
)
from .errors import LetterOutOfRange, RepNotMinimal


def _check_subset(system: CoxeterSystem, subset: Iterable[int]) -> GeneratorSet:
    J = frozenset(subset)
    for s in J:
        if not isinstance(s, int) or not 0 <= s < system.rank:
            raise LetterOutOfRange(f"generator {s!r} not in [0, {system.rank})")
    return J


@dataclass(frozen=True)
class CosetHandle:
    """A parabolic coset named by its minimal-length representative.

    For a left coset rep·W_J the representative has no right descent in
    J; for a right coset W_J·rep, no left descent in J.
    """

    rep: Element
    subset: GeneratorSet
    side: Literal["left", "right"]

    def check(self, system: CoxeterSystem) -> "CosetHandle":
        descents = right_descents if self.side == "left" else left_descents
        if descents(system, self.rep) & self.subset:
            raise RepNotMinimal(
                f"{self.rep!r} is not the minimal representative of its {self.side} coset"
            )
        return self


def decompose_right(
    system: CoxeterSystem, w: Element, subset: Iterable[int]
) -> tuple[Element, Element]:
    """Split w = quotient * part with quotient in W^J and part in W_J.

    Peels right descents lying in J, smallest index first; the result
    is independent of the peel order because the factorization is
    unique.  Lengths add: length(w) = length(quotient) + length(part).

    >>> a2 = preset("A2")
    >>> decompose_right(a2, normalize(a2, [0, 1]), [1])
    (Element([0]), Element([1]))
    >>> decompose_right(a2, normalize(a2, [0, 1, 0]), [1])
    (Element([1, 0]), Element([1]))
    """
    J = _check_subset(system, subset)
    peeled: list[int] = []
    while True:
        hits = right_descents(system, w) & J
        if not hits:
            break
        s = min(hits)
        w = _mult_gen_right(system, w, s)
        peeled.append(s)
    return w, normalize(system, tuple(reversed(peeled)))


def decompose_left(
    system: CoxeterSystem, w: Element, subset: Iterable[int]
) -> tuple[Element, Element]:
    """Split w = part * quotient with part in W_J, quotient free of left
    descents in J; mirror image of :func:`decompose_right`.

    >>> a2 = preset("A2")
    >>> decompose_left(a2, normalize(a2, [0, 1, 0]), [0])
    (Element([0]), Element([1, 0]))
    """
    J = _check_subset(system, subset)
    peeled: list[int] = []
    while True:
        hits = left_descents(system, w) & J
        if not hits:
            break
        s = min(hits)
        w = _mult_gen_left(system, s, w)
        peeled.append(s)
    return normalize(system, tuple(peeled)), w


def min_coset_rep(system: CoxeterSystem, w: Element, subset: Iterable[int]) -> Element:
    """The minimal-length element of the left coset w·W_J.

    >>> a2 = preset("A2")
    >>> min_coset_rep(a2, normalize(a2, [0, 1, 0]), [0, 1])
    Element([])
    """
    return decompose_right(system, w, subset)[0]


def project(system: CoxeterSystem, w: Element, subset: Iterable[int]) -> Element:
    """Alias of :func:`min_coset_rep`: the projection w -> w^J.

    Monotone for the Bruhat order (v <= w implies v^J <= w^J) and
    idempotent; the verification sweeps quantify over it under this
    name.
    """
    return decompose_right(system, w, subset)[0]


class CosetMembers(NamedTuple):
    members: frozenset[Element]
    complete: bool


def coset_members(b: Ball, u: Element, subset: Iterable[int]) -> CosetMembers:
    """The part of the left coset u·W_J that lies in the ball.

    ``complete`` reports whether that is the whole coset.  The coset
    escapes the ball exactly when some member of maximal ball length
    still has an ascent into J, so completeness is decided locally;
    infinite W_J therefore never reports complete.

    >>> a2 = preset("A2")
    >>> got = coset_members(ball(a2, 3), normalize(a2, [0]), [1])
    >>> (sorted(e.word for e in got.members), got.complete)
    ([(0,), (0, 1)], True)
    """
    J = _check_subset(b.system, subset)
    CosetHandle(rep=u, subset=J, side="left").check(b.system)
    members = frozenset(
        z for z in b.elements if decompose_right(b.system, z, J)[0] == u
    )
    complete = all(
        z.length < b.bound or J <= right_descents(b.system, z) for z in members
    )
    return CosetMembers(members=members, complete=complete)


def descent_pair_order(
    system: CoxeterSystem, x: Element
) -> frozenset[tuple[int, int, float]]:
    """Relation orders m(s, t) over unordered pairs of right descents of x.

    Whenever two generators are both right descents of the same
    element, the order of their product is finite; the verifier sweeps
    this over whole balls, including infinite groups.

    >>> a2 = preset("A2")
    >>> descent_pair_order(a2, normalize(a2, [0, 1, 0]))
    frozenset({(0, 1, 3)})
    """
    descents = sorted(right_descents(system, x))
    return frozenset(
        (s, t, system.order(s, t))
        for i, s in enumerate(descents)
        for t in descents[i + 1:]
    )
