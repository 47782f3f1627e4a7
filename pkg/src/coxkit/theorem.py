"""
Exhaustive verification of the interval–coset intersection property.

The headline claim: in any Coxeter group, the intersection of a Bruhat
interval [x, y] with a parabolic coset (u·W_J or W_J·u) is itself a
Bruhat interval — in particular, when nonempty it has a unique minimal
and a unique maximal element, and equals the full interval between
them.  :func:`verify_theorem` checks this for every quadruple
(x, y, u, J) a ball can represent; the interval side of the filter is
exact even when the coset extends past the ball, because any coset
member inside [x, y] has length at most length(y) <= bound.

The statement reduces to: W_{>=x} ∩ u·W_J, if nonempty, has a unique
minimal element, and the argument for that runs by induction on
length(x) through a recursion on minima and a transfer along
alternating words in a dihedral pair of descent generators.  Those two
intermediate identities are checked separately by
:func:`verify_min_recursion` and :func:`verify_dihedral_chain`, the
unique-maximum half by :func:`verify_unique_max`, and the finiteness of
descent pair orders by :func:`verify_descent_pair_orders`.

Monotonicity of the projection w -> w^J gives one implication between
coset order and extrema order; the converse fails, and
:func:`find_converse_counterexample` searches a ball for the first
witness.

Right cosets are swept through the inverse map (inversion exchanges
sides and preserves the order) rather than by a second code path: the
right-coset projection table is conjugate to the left one by the
inversion permutation of the ball.

Sweeps are embarrassingly parallel over the bottom element; reports are
independent of the degree of parallelism because counters are sums and
failures are sorted before emission.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bruhat import Ball, ball, bruhat_leq, interval
from .core import (
    Element,
    GeneratorSet,
    IDENTITY,
    INFINITE,
    inverse,
    multiply,
    normalize,
    preset,
    right_descents,
)
from .parabolic import CosetHandle, _check_subset, decompose_right, min_coset_rep


@dataclass(frozen=True)
class IntersectionResult:
    """The intersection of one interval with one coset, with its extrema."""

    members: frozenset[Element]
    minimals: frozenset[Element]
    maximals: frozenset[Element]
    is_interval: bool


def intersect(
    b: Ball, x: Element, y: Element, u: Element, subset: Iterable[int]
) -> IntersectionResult:
    """Members and extrema of [x, y] ∩ u·W_J.

    >>> a2 = preset("A2")
    >>> full = ball(a2, 3)
    >>> top = normalize(a2, [0, 1, 0])
    >>> got = intersect(full, IDENTITY, top, IDENTITY, [0])
    >>> sorted(e.word for e in got.members), got.is_interval
    ([(), (0,)], True)
    >>> intersect(full, normalize(a2, [1]), normalize(a2, [0, 1]), IDENTITY, [0]).members
    frozenset()
    """
    J = _check_subset(b.system, subset)
    CosetHandle(rep=u, subset=J, side="left").check(b.system)
    members = frozenset(
        z
        for z in interval(b, x, y).members
        if min_coset_rep(b.system, z, J) == u
    )
    if not members:
        return IntersectionResult(frozenset(), frozenset(), frozenset(), False)
    minimals = frozenset(
        z for z in members if not any(v != z and b.leq(v, z) for v in members)
    )
    maximals = frozenset(
        z for z in members if not any(v != z and b.leq(z, v) for v in members)
    )
    is_interval = False
    if len(minimals) == 1 and len(maximals) == 1:
        (lo,), (hi,) = minimals, maximals
        is_interval = members == interval(b, lo, hi).members
    return IntersectionResult(members, minimals, maximals, is_interval)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive sweep.

    ``tested`` counts the tuples examined, ``nonempty`` the ones whose
    assertion had content (nonempty intersections; for the dihedral
    chain, checks where both sides of the equivalence held), and
    ``skipped`` the cosets left out because the ball truncates them.
    ``failures`` holds one dict per violated assertion, sorted.
    """

    check: str
    system: str
    bound: int
    tested: int
    nonempty: int
    skipped: int
    failures: tuple[dict, ...]
    elapsed_ms: float

    @property
    def verified(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "system": self.system,
            "L": self.bound,
            "tested": self.tested,
            "nonempty": self.nonempty,
            "skipped": self.skipped,
            "failures": list(self.failures),
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)

    def format_text(self) -> str:
        verdict = "VERIFIED" if self.verified else f"FAILED ({len(self.failures)} failures)"
        head = (
            f"{self.check:<15} system={self.system} L={self.bound} "
            f"tested={self.tested} nonempty={self.nonempty} skipped={self.skipped} "
            f"elapsed_ms={self.elapsed_ms:.1f}  {verdict}"
        )
        lines = [head]
        for failure in self.failures:
            lines.append(f"  failure: {failure}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CounterexampleWitness:
    """A triple showing the converse of projection monotonicity failing:
    u1 <= u2 in the quotient, yet the corresponding extrema of
    W_{>=x} ∩ u·W_J are not comparable the same way."""

    x: Element
    u1: Element
    u2: Element
    subset: GeneratorSet
    kind: str  # "min-violation" or "max-violation"
    extremum1: Element
    extremum2: Element

    def as_dict(self) -> dict:
        return {
            "x": list(self.x.word),
            "u1": list(self.u1.word),
            "u2": list(self.u2.word),
            "J": sorted(self.subset),
            "kind": self.kind,
            "extremum1": list(self.extremum1.word),
            "extremum2": list(self.extremum2.word),
        }


# ---------------------------------------------------------------------------
# Shared sweep tables, derived once per ball.

class _Tables:
    """Index-level views of a ball used by the sweep workers.

    Everything is plain ints/tuples so the structure survives fork and
    stays cheap to read in hot loops.
    """

    def __init__(self, b: Ball):
        system = b.system
        n = len(b.elements)
        rank = system.rank
        self.n = n
        self.rank = rank
        self.nsub = 1 << rank
        self.bound = b.bound
        self.orders = system.orders
        self.up = b.up
        self.down = b.down
        self.lengths = tuple(w.length for w in b.elements)
        self.rdesc = tuple(right_descents(system, w) for w in b.elements)
        self.subsets = tuple(
            tuple(s for s in range(rank) if mask >> s & 1) for mask in range(self.nsub)
        )
        self.inv = tuple(b.index[inverse(system, w)] for w in b.elements)

        # rmul[i][s]: index of elements[i] * s, or -1 when the product
        # is longer than the ball bound.
        rmul = []
        for i, w in enumerate(b.elements):
            row = []
            for s in range(rank):
                product = multiply(system, w, Element((s,)))
                row.append(b.index.get(product, -1))
            rmul.append(tuple(row))
        self.rmul = tuple(rmul)

        # Left-quotient projection per subset; right cosets via the
        # inversion permutation (z is in W_J·r iff z^{-1} is in r^{-1}·W_J).
        proj_left = []
        for mask in range(self.nsub):
            J = self.subsets[mask]
            proj_left.append(
                tuple(b.index[decompose_right(system, w, J)[0]] for w in b.elements)
            )
        self.proj_left = tuple(proj_left)
        self.proj_right = tuple(
            tuple(self.inv[proj[self.inv[i]]] for i in range(n))
            for proj in self.proj_left
        )
        self.reps_left = tuple(
            tuple(i for i in range(n) if proj[i] == i) for proj in self.proj_left
        )
        self.reps_right = tuple(
            tuple(i for i in range(n) if proj[i] == i) for proj in self.proj_right
        )

        # Left-coset membership masks and completeness per (J, rep).
        fiber_left = []
        complete_left = []
        for mask in range(self.nsub):
            proj = self.proj_left[mask]
            J = set(self.subsets[mask])
            fibers: dict[int, int] = {}
            for i in range(n):
                r = proj[i]
                fibers[r] = fibers.get(r, 0) | 1 << i
            complete: dict[int, bool] = {}
            for r, members in fibers.items():
                ok = True
                mm = members
                while mm:
                    low = mm & -mm
                    k = low.bit_length() - 1
                    mm ^= low
                    if self.lengths[k] == b.bound and not J <= self.rdesc[k]:
                        ok = False
                        break
                complete[r] = ok
            fiber_left.append(fibers)
            complete_left.append(complete)
        self.fiber_left = tuple(fiber_left)
        self.complete_left = tuple(complete_left)

        self.pair_wlists: dict[tuple[int, int], tuple[int, ...]] = {}
        for s in range(rank):
            for t in range(s + 1, rank):
                self.pair_wlists[(s, t)] = tuple(
                    i for i in range(n) if not self.rdesc[i] & {s, t}
                )


def _tables(b: Ball) -> _Tables:
    tables = b._cache.get("sweep_tables")
    if tables is None:
        tables = _Tables(b)
        b._cache["sweep_tables"] = tables
    return tables


_WORKER_TABLES: _Tables | None = None


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _chunks(n: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, min(jobs, n)) if n else 1
    size, extra = divmod(n, jobs)
    out = []
    start = 0
    for k in range(jobs):
        stop = start + size + (1 if k < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def _run_chunked(worker, args_list: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(args_list) <= 1:
        return [worker(args) for args in args_list]
    try:
        context = multiprocessing.get_context("fork")
    except ValueError:  # no fork on this platform: degrade quietly
        return [worker(args) for args in args_list]
    with ProcessPoolExecutor(max_workers=min(jobs, len(args_list)), mp_context=context) as pool:
        return list(pool.map(worker, args_list))


# ---------------------------------------------------------------------------
# Interval × coset sweep (full check, and the unique-maximum half).

def _intersection_chunk(args: tuple[int, int, bool]):
    lo, hi, full = args
    t = _WORKER_TABLES
    up, down, nsub = t.up, t.down, t.nsub
    projections = (t.proj_left, t.proj_right)
    rep_counts = (
        tuple(len(r) for r in t.reps_left),
        tuple(len(r) for r in t.reps_right),
    )
    tested = nonempty = 0
    failures = []
    for i in range(lo, hi):
        above = up[i]
        targets = list(_bits(above))
        for j in targets:
            interval_mask = above & down[j]
            for side in (0, 1):
                proj_side = projections[side]
                counts = rep_counts[side]
                for jmask in range(nsub):
                    proj = proj_side[jmask]
                    tested += counts[jmask]
                    groups: dict[int, int] = {}
                    mm = interval_mask
                    while mm:
                        low = mm & -mm
                        k = low.bit_length() - 1
                        mm ^= low
                        r = proj[k]
                        groups[r] = groups.get(r, 0) | low
                    nonempty += len(groups)
                    for r, gmask in groups.items():
                        nmin = nmax = 0
                        lo_k = hi_k = -1
                        mm = gmask
                        while mm:
                            low = mm & -mm
                            k = low.bit_length() - 1
                            mm ^= low
                            if down[k] & gmask == low:
                                nmin += 1
                                lo_k = k
                            if up[k] & gmask == low:
                                nmax += 1
                                hi_k = k
                        problems = []
                        if full and nmin != 1:
                            problems.append("multiple minimal elements")
                        if nmax != 1:
                            problems.append("multiple maximal elements")
                        if full and not problems and gmask != up[lo_k] & down[hi_k]:
                            problems.append("members differ from the interval of the extrema")
                        if problems:
                            failures.append((side, i, j, r, jmask, "; ".join(problems)))
    return tested, nonempty, failures


def _intersection_sweep(b: Ball, jobs: int, full: bool, check: str) -> VerificationReport:
    global _WORKER_TABLES
    start = time.perf_counter()
    t = _tables(b)
    _WORKER_TABLES = t
    args = [(lo, hi, full) for lo, hi in _chunks(t.n, jobs)]
    results = _run_chunked(_intersection_chunk, args, jobs)
    tested = sum(r[0] for r in results)
    nonempty = sum(r[1] for r in results)
    raw = sorted(f for r in results for f in r[2])
    failures = tuple(
        {
            "side": ("left", "right")[side],
            "x": list(b.elements[i].word),
            "y": list(b.elements[j].word),
            "u": list(b.elements[r].word),
            "J": list(t.subsets[jmask]),
            "reason": reason,
        }
        for side, i, j, r, jmask, reason in raw
    )
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        check=check,
        system=b.system.name,
        bound=b.bound,
        tested=tested,
        nonempty=nonempty,
        skipped=0,
        failures=failures,
        elapsed_ms=elapsed,
    )


def verify_theorem(b: Ball, jobs: int = 1) -> VerificationReport:
    """Sweep every (x, y, u, J), both coset sides: each nonempty
    intersection must have unique extrema and equal their interval."""
    return _intersection_sweep(b, jobs, full=True, check="theorem")


def verify_unique_max(b: Ball, jobs: int = 1) -> VerificationReport:
    """The unique-maximum half of the sweep, exposed on its own."""
    return _intersection_sweep(b, jobs, full=False, check="unique-max")


# ---------------------------------------------------------------------------
# Recursion on minima.

def _min_recursion_chunk(args: tuple[int, int]):
    lo, hi = args
    t = _WORKER_TABLES
    up, down = t.up, t.down
    rmul, rdesc = t.rmul, t.rdesc
    tested = nonempty = 0
    failures = []
    for xi in range(lo, hi):
        above_x = up[xi]
        for jmask in range(t.nsub):
            J = t.subsets[jmask]
            fibers = t.fiber_left[jmask]
            complete = t.complete_left[jmask]
            for rep in t.reps_left[jmask]:
                if not complete[rep]:
                    continue
                tested += 1
                members = fibers[rep] & above_x
                if not members:
                    continue
                nonempty += 1
                mins = [k for k in _bits(members) if down[k] & members == 1 << k]
                if len(mins) != 1:
                    failures.append((xi, rep, jmask, -1, "multiple minimal elements"))
                    continue
                m0 = mins[0]
                for s in J:
                    if s not in rdesc[m0]:
                        continue
                    # rep itself has no right descent in J, so m0 != rep here.
                    if s not in rdesc[xi]:
                        failures.append((xi, rep, jmask, s, "x*s is not covered by x"))
                        continue
                    xs = rmul[xi][s]
                    members_s = fibers[rep] & up[xs]
                    mins_s = [k for k in _bits(members_s) if down[k] & members_s == 1 << k]
                    if len(mins_s) != 1:
                        failures.append((xi, rep, jmask, s, "recursive minimum is not unique"))
                        continue
                    if rmul[mins_s[0]][s] != m0:
                        failures.append(
                            (xi, rep, jmask, s, "recursive minimum times s is not the minimum")
                        )
    return tested, nonempty, failures


def verify_min_recursion(b: Ball, jobs: int = 1) -> VerificationReport:
    """Check the induction step behind unique minima, left cosets only.

    For every x, u in W^J and J whose coset is complete in the ball,
    with M = {w in u·W_J : w >= x} nonempty: the minimum m of M is
    unique, and for every right descent s of m lying in J, x·s is
    covered by x and min{w in u·W_J : w >= x·s}·s = m.  Cosets the ball
    truncates are skipped and counted.
    """
    global _WORKER_TABLES
    start = time.perf_counter()
    t = _tables(b)
    _WORKER_TABLES = t
    skipped = sum(
        1
        for jmask in range(t.nsub)
        for rep in t.reps_left[jmask]
        if not t.complete_left[jmask][rep]
    )
    args = _chunks(t.n, jobs)
    results = _run_chunked(_min_recursion_chunk, args, jobs)
    tested = sum(r[0] for r in results)
    nonempty = sum(r[1] for r in results)
    raw = sorted(f for r in results for f in r[2])
    failures = tuple(
        {
            "x": list(b.elements[xi].word),
            "u": list(b.elements[rep].word),
            "J": list(t.subsets[jmask]),
            "s": s,
            "reason": reason,
        }
        for xi, rep, jmask, s, reason in raw
    )
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        check="min-recursion",
        system=b.system.name,
        bound=b.bound,
        tested=tested,
        nonempty=nonempty,
        skipped=skipped,
        failures=failures,
        elapsed_ms=elapsed,
    )


# ---------------------------------------------------------------------------
# Transfer along alternating words in a dihedral descent pair.

def _alt_ending(last: int, other: int, h: int) -> tuple[int, ...]:
    """Alternating word of h letters whose final letter is ``last``."""
    return tuple(last if (h - 1 - p) % 2 == 0 else other for p in range(h))


def _alt_starting(first: int, other: int, h: int) -> tuple[int, ...]:
    """Alternating word of h letters whose first letter is ``first``."""
    return tuple(first if p % 2 == 0 else other for p in range(h))


def _dihedral_chunk(args: tuple[int, int]):
    lo, hi = args
    t = _WORKER_TABLES
    up, rmul, rdesc = t.up, t.rmul, t.rdesc
    orders, lengths, bound = t.orders, t.lengths, t.bound
    tested = hits = skipped = 0
    failures = []
    for xi in range(lo, hi):
        descents = sorted(rdesc[xi])
        for a_pos in range(len(descents)):
            for b_pos in range(a_pos + 1, len(descents)):
                s1, s2 = descents[a_pos], descents[b_pos]
                m = orders[s1][s2]
                if m == INFINITE:
                    skipped += 1
                    continue
                m = int(m)
                for wi in t.pair_wlists[(s1, s2)]:
                    top = min(m, bound - lengths[wi])
                    for first in (s1, s2):
                        other = s2 if first == s1 else s1
                        for h in range(top + 1):
                            wk = wi
                            for s in _alt_ending(first, other, h):
                                wk = rmul[wk][s]
                            xk = xi
                            for s in _alt_starting(first, other, h):
                                xk = rmul[xk][s]
                            lhs = up[xi] >> wk & 1
                            rhs = up[xk] >> wi & 1
                            tested += 1
                            if lhs != rhs:
                                failures.append((xi, wi, s1, s2, first, h))
                            elif lhs:
                                hits += 1
    return tested, hits, skipped, failures


def verify_dihedral_chain(b: Ball, jobs: int = 1) -> VerificationReport:
    """Check the alternating-word transfer that powers the induction.

    Hypotheses: s1, s2 are both right descents of x with m(s1, s2)
    finite, and w has no right descent in {s1, s2}.  Then for each
    h <= m(s1, s2) and each choice of which generator the alternation
    ends with, w·(alternating word ending with s_i, h letters) >= x
    holds iff w >= x·(alternating word starting with s_i, h letters).
    Tuples whose ascending side would leave the ball are not assertable
    and are not enumerated; descent pairs with infinite order (which
    cannot occur) would be skipped and counted.
    """
    global _WORKER_TABLES
    start = time.perf_counter()
    t = _tables(b)
    _WORKER_TABLES = t
    args = _chunks(t.n, jobs)
    results = _run_chunked(_dihedral_chunk, args, jobs)
    tested = sum(r[0] for r in results)
    hits = sum(r[1] for r in results)
    skipped = sum(r[2] for r in results)
    raw = sorted(f for r in results for f in r[3])
    failures = tuple(
        {
            "x": list(b.elements[xi].word),
            "w": list(b.elements[wi].word),
            "pair": [s1, s2],
            "ends_with": first,
            "h": h,
            "reason": "one side of the transfer equivalence holds and the other does not",
        }
        for xi, wi, s1, s2, first, h in raw
    )
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        check="dihedral-chain",
        system=b.system.name,
        bound=b.bound,
        tested=tested,
        nonempty=hits,
        skipped=skipped,
        failures=failures,
        elapsed_ms=elapsed,
    )


# ---------------------------------------------------------------------------
# Finiteness of descent pair orders.

def verify_descent_pair_orders(b: Ball) -> VerificationReport:
    """Every pair of right descents of any element generates a finite
    dihedral subgroup: m(s1, s2) must be finite throughout the ball."""
    start = time.perf_counter()
    t = _tables(b)
    tested = nonempty = 0
    failures = []
    for i in range(t.n):
        descents = sorted(t.rdesc[i])
        if len(descents) >= 2:
            nonempty += 1
        for a_pos in range(len(descents)):
            for b_pos in range(a_pos + 1, len(descents)):
                s1, s2 = descents[a_pos], descents[b_pos]
                tested += 1
                if t.orders[s1][s2] == INFINITE:
                    failures.append(
                        {
                            "x": list(b.elements[i].word),
                            "pair": [s1, s2],
                            "reason": "descent pair with infinite product order",
                        }
                    )
    elapsed = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        check="prop3",
        system=b.system.name,
        bound=b.bound,
        tested=tested,
        nonempty=nonempty,
        skipped=0,
        failures=tuple(failures),
        elapsed_ms=elapsed,
    )


ALL_CHECKS = ("theorem", "min-recursion", "dihedral-chain", "unique-max", "prop3")


def run_check(b: Ball, check: str, jobs: int = 1) -> VerificationReport:
    """Dispatch one named sweep."""
    if check == "theorem":
        return verify_theorem(b, jobs)
    if check == "min-recursion":
        return verify_min_recursion(b, jobs)
    if check == "dihedral-chain":
        return verify_dihedral_chain(b, jobs)
    if check == "unique-max":
        return verify_unique_max(b, jobs)
    if check == "prop3":
        return verify_descent_pair_orders(b)
    raise KeyError(f"unknown check {check!r}")


# ---------------------------------------------------------------------------
# Search for the converse failing.

def find_converse_counterexample(
    b: Ball, subset: Iterable[int]
) -> CounterexampleWitness | None:
    """First (x, u1, u2) with u1 <= u2 in W^J but incomparable extrema.

    Projection monotonicity forces min(W_{>=x} ∩ u1·W_J) <= min(... u2·W_J)
    to imply u1 <= u2, and likewise for maxima; this searches for the
    converse implication failing.  Sweep order: x, then u1, then u2, in
    element order, minima before maxima, skipping cosets the ball
    truncates and empty intersections; the first witness is returned.
    """
    J = _check_subset(b.system, subset)
    jmask = sum(1 << s for s in J)
    t = _tables(b)
    fibers = t.fiber_left[jmask]
    complete = t.complete_left[jmask]
    reps = [r for r in t.reps_left[jmask] if complete[r]]
    up, down = t.up, t.down

    def unique_extremum(members: int, masks) -> int | None:
        found = [k for k in _bits(members) if masks[k] & members == 1 << k]
        return found[0] if len(found) == 1 else None

    for xi in range(t.n):
        above_x = up[xi]
        for u1 in reps:
            members1 = fibers[u1] & above_x
            if not members1:
                continue
            for u2 in reps:
                if u2 == u1 or not up[u1] >> u2 & 1:
                    continue
                members2 = fibers[u2] & above_x
                if not members2:
                    continue
                for kind, masks in (("min-violation", down), ("max-violation", up)):
                    e1 = unique_extremum(members1, masks)
                    e2 = unique_extremum(members2, masks)
                    if e1 is None or e2 is None:
                        continue
                    if not up[e1] >> e2 & 1:
                        return CounterexampleWitness(
                            x=b.elements[xi],
                            u1=b.elements[u1],
                            u2=b.elements[u2],
                            subset=J,
                            kind=kind,
                            extremum1=b.elements[e1],
                            extremum2=b.elements[e2],
                        )
    return None


def validate_counterexample(b: Ball, witness: CounterexampleWitness) -> bool:
    """Re-derive the witness from scratch, masks unused.

    Recomputes coset membership by projection, extrema by pairwise
    :func:`bruhat_leq`, and every claimed relation.
    """
    system = b.system
    J = witness.subset
    for u in (witness.u1, witness.u2):
        if right_descents(system, u) & J:
            return False
    if not bruhat_leq(system, witness.u1, witness.u2):
        return False
    extrema = []
    for u in (witness.u1, witness.u2):
        members = [
            z
            for z in b.elements
            if bruhat_leq(system, witness.x, z)
            and min_coset_rep(system, z, J) == u
        ]
        if not members:
            return False
        if witness.kind == "min-violation":
            found = [
                z
                for z in members
                if not any(v != z and bruhat_leq(system, v, z) for v in members)
            ]
        else:
            found = [
                z
                for z in members
                if not any(v != z and bruhat_leq(system, z, v) for v in members)
            ]
        if len(found) != 1:
            return False
        extrema.append(found[0])
    if (extrema[0], extrema[1]) != (witness.extremum1, witness.extremum2):
        return False
    return not bruhat_leq(system, extrema[0], extrema[1])
