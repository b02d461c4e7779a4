"""The matroid of an IBIS permutation group.

Independent sets are the irredundant sequences (order does not matter in the
IBIS case); the closure of A is the set of fixed points of the pointwise
stabilizer of A.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import CapacityError, PreconditionError
from ..permcore.schreier import element_matrix, pointwise_stabilizer

FLAT_ENUMERATION_CAP = 200


@dataclass
class Matroid:
    ground_size: int
    rank: int
    closure: Callable
    flats_by_rank: dict | None = None
    rank_of: Callable | None = None

    def flats(self):
        if self.flats_by_rank is None:
            return []
        return [F for r in sorted(self.flats_by_rank) for F in self.flats_by_rank[r]]


def _dense_closure(b):
    E = element_matrix(b)
    cache = {}

    def rows_fixing(A):
        R = E
        for x in A:
            R = R[R[:, x] == x]
            if len(R) == 1:
                break
        return R

    def closure(A):
        key = frozenset(A)
        hit = cache.get(key)
        if hit is None:
            R = rows_fixing(sorted(key))
            hit = frozenset(np.flatnonzero((R == R[0]).all(axis=0)).tolist())
            if len(cache) < 500_000:
                cache[key] = hit
        return hit

    return closure


def _chain_closure(b):
    def closure(A):
        return frozenset(pointwise_stabilizer(b, sorted(set(A))).fixed_points())

    return closure


def greedy_rank(closure, A):
    """Length of a maximal irredundant subsequence drawn from A."""
    chosen = []
    span = closure(())
    for x in sorted(set(A)):
        if x not in span:
            chosen.append(x)
            span = closure(chosen)
    return len(chosen)


def enumerate_flats(closure, n):
    """All flats, grouped by rank, by closing flats under single points."""
    bottom = closure(())
    by_rank = {0: [bottom]}
    seen = {bottom}
    frontier = deque([(bottom, 0)])
    while frontier:
        F, r = frontier.popleft()
        for x in range(n):
            if x in F:
                continue
            G = closure(F | {x})
            if G not in seen:
                seen.add(G)
                by_rank.setdefault(r + 1, []).append(G)
                frontier.append((G, r + 1))
    for r in by_rank:
        by_rank[r].sort(key=lambda s: sorted(s))
    return by_rank


def matroid_from_ibis(b, verdict, flat_cap=FLAT_ENUMERATION_CAP):
    if not verdict.is_ibis:
        raise PreconditionError("the matroid exists only for IBIS groups")
    n = b.degree
    try:
        closure = _dense_closure(b)
    except CapacityError:
        closure = _chain_closure(b)
    rank_of = lambda A: greedy_rank(closure, A)  # noqa: E731
    flats = enumerate_flats(closure, n) if n <= flat_cap else None
    return Matroid(n, rank_of(range(n)), closure, flats, rank_of)


@dataclass
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.ok


def matroid_axiom_check(m, pair_rank_slack=2):
    """Closure axioms on every flat and its one- and two-point extensions.

    Two-point extensions are checked for flats of rank at most
    ``rank - pair_rank_slack``; above that every two-point extension spans.
    """
    n = m.ground_size
    cl = m.closure
    flats = m.flats_by_rank if m.flats_by_rank is not None else enumerate_flats(cl, n)
    ground = frozenset(range(n))
    for r in sorted(flats):
        for F in flats[r]:
            if cl(F) != F:
                return AxiomReport(False, "idempotent", (F,))
            ext = {}
            for x in range(n):
                if x in F:
                    continue
                A = F | {x}
                C = cl(A)
                if not A <= C:
                    return AxiomReport(False, "extensive", (A, C))
                if not F <= C:
                    return AxiomReport(False, "monotone", (F, A))
                if cl(C) != C:
                    return AxiomReport(False, "idempotent", (A, C))
                if m.rank_of is not None and m.rank_of(C) != r + 1:
                    return AxiomReport(False, "rank", (F, x, C))
                ext[x] = C
            for x, Cx in ext.items():
                for y in Cx:
                    if y in F or y == x:
                        continue
                    if x not in ext[y]:
                        return AxiomReport(False, "exchange", (F, x, y))
            if r <= m.rank - pair_rank_slack:
                xs = sorted(ext)
                for i, x in enumerate(xs):
                    for y in xs[i + 1:]:
                        C = cl(F | {x, y})
                        if not (ext[x] <= C and ext[y] <= C):
                            return AxiomReport(False, "monotone", (F, x, y))
    if cl(ground) != ground:
        return AxiomReport(False, "extensive", (ground,))
    return AxiomReport(True)
