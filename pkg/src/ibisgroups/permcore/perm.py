"""Permutations of {0, ..., n-1} stored as image tuples.

Products act on the right: ``p * q`` (equivalently ``compose(p, q)``) first
applies ``p`` and then ``q``, so ``(p * q)(i) == q(p(i))``.
"""

from __future__ import annotations

import math
import re

import numpy as np

from ..errors import InputError


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InputError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = None

    @classmethod
    def _trusted(cls, images):
        p = cls.__new__(cls)
        p.images = images
        p._hash = None
        return p

    @classmethod
    def identity(cls, n):
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n, cycles):
        """Build a permutation of degree ``n`` from 0-based cycles."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n:
                    raise InputError(f"point {a} outside degree {n}")
                if a in seen:
                    raise InputError(f"point {a} repeated in cycles")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls._trusted(tuple(img))

    @classmethod
    def from_array(cls, arr):
        return cls._trusted(tuple(arr.tolist()))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __pow__(self, e):
        if e < 0:
            return inverse(self) ** (-e)
        result = Perm.identity(self.degree)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __repr__(self):
        return f"Perm({format_cycles(self, one_based=False)}, n={self.degree})"

    def is_identity(self):
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self):
        """Nontrivial cycles, each starting at its smallest point."""
        seen = [False] * self.degree
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self):
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def support(self):
        return [i for i, x in enumerate(self.images) if i != x]

    def conjugate(self, g):
        """``g^-1 * self * g``."""
        return inverse(g) * self * g

    def array(self, dtype=np.int64):
        return np.asarray(self.images, dtype=dtype)


def compose(p, q):
    if p.degree != q.degree:
        raise InputError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.images
    return Perm._trusted(tuple(qi[i] for i in p.images))


def inverse(p):
    inv = [0] * p.degree
    for i, x in enumerate(p.images):
        inv[x] = i
    return Perm._trusted(tuple(inv))


def identity(n):
    return Perm.identity(n)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, n, one_based=True):
    """Parse disjoint cycle notation such as ``(1 2)(3 4 5)`` or ``()``."""
    s = text.strip()
    if not s:
        raise InputError("empty permutation text")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if s[pos:m.start()].strip():
            raise InputError(f"cannot parse permutation {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        if not body:
            continue
        try:
            pts = [int(x) - (1 if one_based else 0) for x in body]
        except ValueError:
            raise InputError(f"non-integer point in {text!r}") from None
        off = 1 if one_based else 0
        for x in pts:
            if not 0 <= x < n:
                raise InputError(f"point {x + off} outside 1..{n}" if one_based
                                 else f"point {x} outside 0..{n - 1}")
        cycles.append(pts)
    if s[pos:].strip() or pos == 0:
        raise InputError(f"cannot parse permutation {text!r}")
    return Perm.from_cycles(n, cycles)


def format_cycles(p, one_based=True):
    off = 1 if one_based else 0
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(str(a + off) for a in c) + ")" for c in cyc)
