"""Irredundant sequences, minimal bases, base-size spectra and IBIS decisions.

The searches walk the tree of irredundant sequences. At every node only one
point per nontrivial orbit of the current pointwise stabilizer H is
expanded: points in one H-orbit give H-conjugate children, and conjugation by
an element of H maps irredundant completions to irredundant completions of
the same length.

A node's subtree depends only on H, and H is the pointwise stabilizer of its
own fixed-point set, so subtrees are memoized by that fixed-point set.
Small stabilizers are held as dense element matrices; larger ones as
stabilizer chains, with children obtained by base change.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from ..config import DEFAULT_ENUMERATION_CAP, DEFAULT_NODE_CAP, DEFAULT_TIME_CAP
from ..errors import CapacityError, InputError, PreconditionError
from ..permcore import PermGroup, is_primitive, is_solvable, is_transitive, orbits
from ..permcore.schreier import _chain_from_arrays, element_matrix, pointwise_stabilizer

DENSE_ORDER_LIMIT = 200_000
DENSE_CELL_LIMIT = 40_000_000


@dataclass(frozen=True)
class IrrSequence:
    points: tuple
    chain_orders: tuple

    @property
    def is_base(self):
        return self.chain_orders[-1] == 1

    def __len__(self):
        return len(self.points)

    def __bool__(self):
        return True

    def one_based(self):
        return [p + 1 for p in self.points]


@dataclass(frozen=True)
class Rejection:
    """Returned instead of an IrrSequence; ``index`` is the first redundant point."""

    points: tuple
    index: int

    def __bool__(self):
        return False


@dataclass
class Spectrum:
    sizes: tuple
    witness: dict
    node_count: int
    complete: bool = True
    elapsed: float = 0.0

    @property
    def base_size(self):
        return min(self.sizes) if self.sizes else None


@dataclass
class IbisVerdict:
    is_ibis: bool | None
    base_size: int | None
    counterexample: tuple | None = None
    node_count: int = 0
    complete: bool = True
    witness: IrrSequence | None = None


@dataclass
class SearchCaps:
    nodes: int = DEFAULT_NODE_CAP
    seconds: float = DEFAULT_TIME_CAP
    enumeration: int = DEFAULT_ENUMERATION_CAP

    @classmethod
    def of(cls, caps):
        if caps is None:
            return cls()
        if isinstance(caps, cls):
            return caps
        return cls(
            nodes=caps.node_cap,
            seconds=caps.time_cap_seconds,
            enumeration=caps.enumeration_cap,
        )


# search nodes


class _DenseNode:
    __slots__ = ("E", "order", "key", "_mn", "_moved")

    def __init__(self, E):
        self.E = E
        self.order = len(E)
        mn = E.min(axis=0)
        mx = E.max(axis=0)
        self._mn = mn
        self._moved = mn != mx
        self.key = np.packbits(self._moved).tobytes()

    def reps(self):
        idx = np.arange(len(self._mn))
        return np.flatnonzero(self._moved & (self._mn == idx)).tolist()

    def largest_orbit(self):
        if self.order == 1:
            return 1
        return int(np.bincount(self._mn[self._moved]).max())

    def moved_points(self):
        return np.flatnonzero(self._moved).tolist()

    def stabilizer(self, pt):
        E = self.E
        return _DenseNode(E[E[:, pt] == pt])

    def fixed_points(self):
        return np.flatnonzero(~self._moved).tolist()


class _ChainNode:
    __slots__ = ("bsgs", "order", "key", "_part", "_moved", "_caps")

    def __init__(self, bsgs, caps):
        self.bsgs = bsgs
        self._caps = caps
        self.order = bsgs.order
        g = PermGroup(bsgs.degree, bsgs.strong_generators)
        self._part = orbits(g)
        moved = np.zeros(bsgs.degree, dtype=bool)
        for r, orb in self._part.orbit_of.items():
            if len(orb) > 1:
                moved[list(orb)] = True
        self._moved = moved
        self.key = np.packbits(moved).tobytes()

    def reps(self):
        return [r for r, orb in sorted(self._part.orbit_of.items()) if len(orb) > 1]

    def largest_orbit(self):
        return max(len(o) for o in self._part.orbit_of.values())

    def moved_points(self):
        return np.flatnonzero(self._moved).tolist()

    def stabilizer(self, pt):
        b = self.bsgs
        if b.base and b.base[0] == pt:
            child = b.sub_chain(1)
        else:
            child = pointwise_stabilizer(b, [pt])
        return make_node(child, self._caps)

    def fixed_points(self):
        return np.flatnonzero(~self._moved).tolist()


def make_node(bsgs, caps=None):
    caps = SearchCaps.of(caps)
    order = bsgs.order
    if (
        order <= min(DENSE_ORDER_LIMIT, caps.enumeration)
        and order * bsgs.degree <= DENSE_CELL_LIMIT
    ):
        return _DenseNode(element_matrix(bsgs, cap=caps.enumeration))
    return _ChainNode(bsgs, caps)


class _Stop(Exception):
    pass


class _CapHit(Exception):
    pass


class _Search:
    def __init__(self, caps, stop=None):
        self.caps = caps
        self.stop = stop
        self.memo = {}
        self.found = {}
        self.nodes = 0
        self.start = time.monotonic()

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.caps.nodes:
            raise _CapHit("node cap")
        if self.nodes % 64 == 0 and time.monotonic() - self.start > self.caps.seconds:
            raise _CapHit("time cap")

    def _record(self, prefix, res):
        for L, suf in res.items():
            size = len(prefix) + L
            if size not in self.found:
                self.found[size] = prefix + suf
        if self.stop is not None and self.stop(self.found):
            raise _Stop

    def completions(self, node, prefix=()):
        """Map completion length -> first suffix completing node's group to a base."""
        res = self.memo.get(node.key)
        if res is None:
            self._tick()
            if node.order == 1:
                res = {0: ()}
            else:
                res = {}
                for r in node.reps():
                    child = node.stabilizer(r)
                    sub = self.completions(child, prefix + (r,))
                    for L, suf in sub.items():
                        if L + 1 not in res:
                            res[L + 1] = (r,) + suf
            self.memo[node.key] = res
        self._record(prefix, res)
        return res


def _chain_orders(b, seq):
    """Orders of G, G_(s1), G_(s1,s2), ... along ``seq``."""
    if not seq:
        return (b.order,)
    full = _chain_from_arrays(b.degree, b.stabilizer_arrays(), list(seq), b.order)
    orders = [full.order]
    for i in range(1, len(seq) + 1):
        orders.append(full.sub_chain(i).order)
    return tuple(orders)


def _check_points(b, seq):
    for x in seq:
        if not 0 <= x < b.degree:
            raise InputError(f"point {x} outside degree {b.degree}")


def is_irredundant(b, seq):
    """IrrSequence with its chain of stabilizer orders, or a falsy Rejection."""
    seq = tuple(int(x) for x in seq)
    _check_points(b, seq)
    orders = _chain_orders(b, seq)
    for i in range(len(seq)):
        if orders[i + 1] == orders[i]:
            return Rejection(seq, i)
    return IrrSequence(seq, orders)


def extend_to_irredundant_base(b, prefix):
    if isinstance(prefix, IrrSequence):
        pts = list(prefix.points)
    else:
        checked = is_irredundant(b, prefix)
        if not checked:
            raise PreconditionError(f"prefix is redundant at index {checked.index}")
        pts = list(checked.points)
    st = pointwise_stabilizer(b, pts)
    while st.order > 1:
        moved = _smallest_moved(st)
        pts.append(moved)
        st = pointwise_stabilizer(st, [moved])
    return is_irredundant(b, pts)


def _smallest_moved(bsgs):
    fixed = set(bsgs.fixed_points())
    return next(i for i in range(bsgs.degree) if i not in fixed)


def verify_witness_not_base(b, seq):
    """True iff seq is irredundant and its pointwise stabilizer is nontrivial."""
    res = is_irredundant(b, seq)
    return bool(res) and not res.is_base


def _root(b, caps):
    return make_node(b, caps)


def irredundant_spectrum(b, caps=None):
    """Exact set of irredundant base sizes, one witness per size."""
    caps = SearchCaps.of(caps)
    search = _Search(caps)
    complete = True
    try:
        search.completions(_root(b, caps))
    except _CapHit:
        complete = False
    return _spectrum(b, search, complete)


def _spectrum(b, search, complete):
    witness = {}
    for size in sorted(search.found):
        pts = search.found[size]
        witness[size] = IrrSequence(pts, _chain_orders(b, pts))
    return Spectrum(
        tuple(sorted(search.found)),
        witness,
        search.nodes,
        complete,
        time.monotonic() - search.start,
    )


def minimal_base_size(b, caps=None):
    """Exact b(G) with a witness base, by iterative deepening."""
    caps = SearchCaps.of(caps)
    start = time.monotonic()
    nodes = 0
    dead = {}

    def search(node, depth):
        nonlocal nodes
        if node.order == 1:
            return ()
        if depth == 0:
            return None
        if dead.get(node.key, -1) >= depth:
            return None
        nodes += 1
        if nodes > caps.nodes or (nodes % 64 == 0 and time.monotonic() - start > caps.seconds):
            raise _CapHit
        if node.largest_orbit() ** depth < node.order:
            dead[node.key] = depth
            return None
        for r in node.reps():
            sub = search(node.stabilizer(r), depth - 1)
            if sub is not None:
                return (r,) + sub
        dead[node.key] = depth
        return None

    root = _root(b, caps)
    greedy = extend_to_irredundant_base(b, ())
    d = 0
    while True:
        try:
            found = search(root, d)
        except _CapHit:
            raise CapacityError(
                f"minimal base search exceeded caps at depth {d}", best=len(greedy)
            ) from None
        if found is not None:
            return len(found), IrrSequence(found, _chain_orders(b, found))
        d += 1


def is_ibis(b, caps=None):
    """IBIS verdict; stops as soon as two distinct base sizes are seen."""
    caps = SearchCaps.of(caps)
    try:
        bsize, minimal = minimal_base_size(b, caps)
    except CapacityError:
        return IbisVerdict(None, None, complete=False)
    search = _Search(caps, stop=lambda found: len(found) >= 2)
    try:
        search.completions(_root(b, caps))
        complete = True
    except _Stop:
        complete = True
    except _CapHit:
        complete = False
    sizes = sorted(search.found)
    other = [s for s in sizes if s != bsize]
    if other:
        big = other[-1]
        pts = search.found[big]
        long = IrrSequence(pts, _chain_orders(b, pts))
        return IbisVerdict(False, bsize, (minimal, long), search.nodes, True, minimal)
    if not complete:
        return IbisVerdict(None, bsize, None, search.nodes, False, minimal)
    return IbisVerdict(True, bsize, None, search.nodes, True, minimal)


def socle_irredundant_lower_bound(g, m, caps=None):
    """Witness irredundant base of size >= 3 for a non-regular normal subgroup
    m (containing the non-abelian socle) of a primitive group g."""
    if not is_transitive(g) or not is_primitive(g):
        raise PreconditionError("g must be primitive")
    for h in m.generators:
        if h not in g:
            raise PreconditionError("m is not a subgroup of g")
    for s in g.generators:
        for h in m.generators:
            if h.conjugate(s) not in m:
                raise PreconditionError("m is not normal in g")
    if is_solvable(m):
        # a solvable normal subgroup containing the socle forces an abelian socle
        raise PreconditionError("m is solvable, so the socle is abelian")
    if m.order() == m.degree and is_transitive(m):
        raise PreconditionError("m is regular")
    caps = SearchCaps.of(caps)
    search = _Search(caps, stop=lambda found: any(s >= 3 for s in found))
    try:
        search.completions(_root(m.bsgs, caps))
    except _Stop:
        pass
    except _CapHit:
        raise CapacityError("search caps exceeded") from None
    big = [s for s in search.found if s >= 3]
    if not big:
        return None
    pts = search.found[min(big)]
    return IrrSequence(pts, _chain_orders(m.bsgs, pts))


@dataclass
class NaiveResult:
    sizes: set = field(default_factory=set)
    nodes: int = 0


def naive_spectrum(elements, degree):
    """All irredundant base sizes by exhausting every point sequence.

    ``elements`` is the full element list of the group (tuples of images);
    serves as an independent oracle for small groups.
    """
    res = NaiveResult()

    def rec(stab, depth):
        res.nodes += 1
        if len(stab) == 1:
            res.sizes.add(depth)
            return
        for x in range(degree):
            sub = [g for g in stab if g[x] == x]
            if len(sub) < len(stab):
                rec(sub, depth + 1)

    rec(list(elements), 0)
    return res


def closure_elements(generators, degree):
    """All elements of <generators> as image tuples, by breadth-first closure.

    Independent of the stabilizer-chain code; used as a test oracle.
    """
    ident = tuple(range(degree))
    gens = [tuple(g.images) for g in generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
