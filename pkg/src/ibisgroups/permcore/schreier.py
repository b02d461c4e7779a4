"""Deterministic Schreier-Sims, membership, base change and element enumeration.

Internally permutations are numpy integer arrays; ``compose(p, q)`` is
``q[p]``. Transversals are stored explicitly together with their inverses.
"""

from __future__ import annotations

from math import prod

import numpy as np

from ..config import DEFAULT_ENUMERATION_CAP
from ..errors import CapacityError, InputError
from .perm import Perm


def point_dtype(n):
    if n <= np.iinfo(np.int16).max:
        return np.int16
    return np.int32


class _Level:
    __slots__ = ("point", "gens", "orbit", "trans", "inv", "_fresh")

    def __init__(self, point, ident):
        self._fresh = set()
        self.point = point
        self.gens = []
        self.orbit = [point]
        self.trans = {point: ident}
        self.inv = {point: ident}

    def extend(self, new_gens):
        """Grow orbit and transversal after ``new_gens`` were appended to gens."""
        trans, inv, orbit, gens = self.trans, self.inv, self.orbit, self.gens
        # old points only need the new generators; new points need all of them
        for beta in list(orbit):
            u = trans[beta]
            for s in new_gens:
                self._visit(s, beta, u)
        i = 0
        while i < len(orbit):
            beta = orbit[i]
            i += 1
            if beta in self._fresh:
                u = trans[beta]
                for s in gens:
                    self._visit(s, beta, u)
        self._fresh = set()

    def _visit(self, s, beta, u):
        gamma = int(s[beta])
        if gamma not in self.trans:
            t = s[u]
            self.trans[gamma] = t
            iv = np.empty_like(t)
            iv[t] = np.arange(len(t), dtype=t.dtype)
            self.inv[gamma] = iv
            self.orbit.append(gamma)
            self._fresh.add(gamma)


class _Chain:
    def __init__(self, n, gens, base_prefix=()):
        self.n = n
        self.dtype = point_dtype(n)
        self.ident = np.arange(n, dtype=self.dtype)
        self.levels: list[_Level] = []
        for b in base_prefix:
            self._add_level(int(b))
        for g in gens:
            if not np.array_equal(g, self.ident):
                self._add_generator(g, 0)

    def _add_level(self, point):
        self.levels.append(_Level(point, self.ident))

    def _moved(self, g):
        return int(np.flatnonzero(g != self.ident)[0])

    def _add_generator(self, h, start):
        """Append h to every level from ``start`` whose prefix h fixes."""
        j = start
        while j < len(self.levels) and h[self.levels[j].point] == self.levels[j].point:
            j += 1
        if j == len(self.levels):
            self._add_level(self._moved(h))
        for l in range(start, j + 1):
            lv = self.levels[l]
            lv.gens.append(h)
            lv.extend([h])
        return j

    def strip(self, g, start=0):
        for l in range(start, len(self.levels)):
            lv = self.levels[l]
            t = lv.inv.get(int(g[lv.point]))
            if t is None:
                return g, l
            g = t[g]
        return g, len(self.levels)

    def order(self):
        return prod(len(lv.orbit) for lv in self.levels)

    def run(self, known_order=None):
        i = len(self.levels) - 1
        while i >= 0:
            if known_order is not None and self.order() == known_order:
                return
            jump = self._check_level(i)
            if jump is None:
                i -= 1
            else:
                i = jump

    def _check_level(self, i):
        lv = self.levels[i]
        ident = self.ident
        for beta in list(lv.orbit):
            u = lv.trans[beta]
            for s in list(lv.gens):
                gamma = int(s[beta])
                g = lv.inv[gamma][s[u]]
                if np.array_equal(g, ident):
                    continue
                h, j = self.strip(g, i + 1)
                if j < len(self.levels) or not np.array_equal(h, ident):
                    self._add_generator(h, i + 1)
                    return max(i + 1, min(j, len(self.levels) - 1))
        return None


class Bsgs:
    """Base and strong generating set with orbits and transversals.

    Instances are immutable once built; use :func:`schreier_sims` to make one.
    """

    def __init__(self, degree, levels, ident):
        self.degree = degree
        self._levels = tuple(levels)
        self._ident = ident
        self.base = tuple(lv.point for lv in self._levels)
        self.order = prod(len(lv.orbit) for lv in self._levels)
        gens = []
        seen = set()
        for lv in self._levels:
            for g in lv.gens:
                key = g.tobytes()
                if key not in seen:
                    seen.add(key)
                    gens.append(g)
        self._gens = gens
        self.strong_generators = tuple(Perm.from_array(g) for g in gens)
        self.orbits = tuple(tuple(lv.orbit) for lv in self._levels)

    @property
    def transversals(self):
        return [
            {b: Perm.from_array(lv.trans[b]) for b in lv.orbit}
            for lv in self._levels
        ]

    @property
    def level_generators(self):
        return [tuple(Perm.from_array(g) for g in lv.gens) for lv in self._levels]

    def __repr__(self):
        return f"Bsgs(degree={self.degree}, base={self.base}, order={self.order})"

    def sift(self, p):
        """Sift a numpy image array; returns (residue, level reached)."""
        g = p
        for l, lv in enumerate(self._levels):
            t = lv.inv.get(int(g[lv.point]))
            if t is None:
                return g, l
            g = t[g]
        return g, len(self._levels)

    def contains(self, p):
        if p.degree != self.degree:
            raise InputError(f"degree mismatch: {p.degree} vs {self.degree}")
        g, _ = self.sift(p.array(self._ident.dtype))
        return bool(np.array_equal(g, self._ident))

    def fixed_points(self):
        if not self._gens:
            return list(range(self.degree))
        g = np.stack(self._gens)
        return np.flatnonzero((g == self._ident).all(axis=0)).tolist()

    def sub_chain(self, start):
        """The Bsgs of the stabilizer of ``base[:start]``."""
        return Bsgs(self.degree, self._levels[start:], self._ident)

    def stabilizer_arrays(self):
        return list(self._gens)


def schreier_sims(group, base_prefix=(), known_order=None):
    """Deterministic Schreier-Sims.

    New base points are the smallest point moved by the generator that
    forces them, so identical input gives an identical base.
    """
    n = group.degree
    dt = point_dtype(n)
    gens = [g.array(dt) for g in group.generators]
    chain = _Chain(n, gens, base_prefix)
    chain.run(known_order)
    return Bsgs(n, chain.levels, chain.ident)


def _chain_from_arrays(n, arrays, base_prefix, known_order=None):
    chain = _Chain(n, arrays, base_prefix)
    chain.run(known_order)
    return Bsgs(n, chain.levels, chain.ident)


def membership(b, p):
    return b.contains(p)


def pointwise_stabilizer(b, pts):
    """Bsgs of the subgroup of ``b`` fixing every point in ``pts``."""
    pts = [int(x) for x in pts]
    for x in pts:
        if not 0 <= x < b.degree:
            raise InputError(f"point {x} outside degree {b.degree}")
    if not pts:
        return b
    if tuple(pts) == b.base[: len(pts)]:
        return b.sub_chain(len(pts))
    full = _chain_from_arrays(b.degree, b.stabilizer_arrays(), pts, b.order)
    return full.sub_chain(len(pts))


def stabilizer_arrays(b, pts):
    """Generators (numpy arrays) of the pointwise stabilizer of ``pts``."""
    return pointwise_stabilizer(b, pts).stabilizer_arrays()


def _check_cap(b, cap):
    if cap is None:
        cap = DEFAULT_ENUMERATION_CAP
    if b.order > cap:
        raise CapacityError(
            f"group order {b.order} exceeds enumeration cap {cap}; raise the cap"
        )


def element_enumeration(b, cap=None):
    """Yield every element of the group exactly once, identity first."""
    _check_cap(b, cap)
    levels = b._levels
    if not levels:
        yield Perm.identity(b.degree)
        return

    def rec(l):
        if l == len(levels):
            yield b._ident
            return
        lv = levels[l]
        for beta in lv.orbit:
            u = lv.trans[beta]
            for h in rec(l + 1):
                yield u[h]

    for g in rec(0):
        yield Perm.from_array(g)


def element_matrix(b, cap=None):
    """All elements as rows of an (order x degree) array, same order as
    :func:`element_enumeration`."""
    _check_cap(b, cap)
    E = b._ident[None, :]
    for lv in reversed(b._levels):
        E = np.concatenate([lv.trans[beta][E] for beta in lv.orbit])
    return E
