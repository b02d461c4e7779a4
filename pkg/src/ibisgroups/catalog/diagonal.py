"""Diagonal-type groups T^k <= G <= W(k,T) acting on cosets of the diagonal.

A point is the coset D(1, t_2, ..., t_k), stored as the tuple of element
indices (t_2, ..., t_k) of T in the enumeration order of T's stabilizer
chain; the index of the tuple is its mixed-radix value with t_2 most
significant. Group elements act by right multiplication and the result is
renormalized by left-multiplying every coordinate by the inverse of the
first one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from ..config import DEFAULT_DEGREE_CAP
from ..errors import CapacityError, InputError
from ..permcore import Perm, PermGroup, element_enumeration, is_transitive


@dataclass
class DiagonalSpec:
    T: PermGroup
    k: int
    top: PermGroup | None = None
    outer: list = field(default_factory=list)
    twist: Perm | None = None

    def __post_init__(self):
        if self.k < 2:
            raise InputError("diagonal groups need k >= 2")
        if self.top is not None:
            if self.top.degree != self.k:
                raise InputError("top group must act on k points")
            if self.top.generators and not is_transitive(self.top):
                raise InputError("nontrivial top group must be transitive on k points")
        if self.twist is not None and self.k != 2:
            raise InputError("the sigma twist is only defined for k = 2")


@dataclass
class DiagonalGroup:
    group: PermGroup
    elements: list
    k: int

    def __post_init__(self):
        self._index = {e.images: i for i, e in enumerate(self.elements)}

    def element_index(self, t):
        try:
            return self._index[t.images]
        except KeyError:
            raise InputError("element is not in T") from None

    def point(self, *ts):
        """Point index of the coset [1, t_2, ..., t_k]."""
        if len(ts) != self.k - 1:
            raise InputError(f"expected {self.k - 1} coordinates")
        m = len(self.elements)
        i = 0
        for t in ts:
            i = i * m + self.element_index(t)
        return i

    def label(self, point):
        m = len(self.elements)
        out = []
        for _ in range(self.k - 1):
            out.append(self.elements[point % m])
            point //= m
        return tuple(reversed(out))


def diagonal_group(spec, label=None, degree_cap=None):
    T, k = spec.T, spec.k
    elems = list(element_enumeration(T.bsgs))
    m = len(elems)
    N = m ** (k - 1)
    if N > (degree_cap or DEFAULT_DEGREE_CAP):
        raise CapacityError(f"degree |T|^{k - 1} = {N} exceeds the configured cap")
    index = {e.images: i for i, e in enumerate(elems)}
    inv = [index[(~e).images] for e in elems]

    def idx(p):
        try:
            return index[p.images]
        except KeyError:
            raise InputError("element does not lie in T") from None

    def mul(i, j):
        return index[(elems[i] * elems[j]).images]

    coords = np.array(list(product(range(m), repeat=k - 1)), dtype=np.int64).reshape(N, k - 1)
    weights = m ** np.arange(k - 2, -1, -1, dtype=np.int64)

    def encode(c):
        return Perm.from_array(c @ weights)

    gens = []
    for s in T.generators:
        sinv = ~s
        left = np.array([idx(sinv * e) for e in elems])
        gens.append(encode(left[coords]))
        right = np.array([idx(e * s) for e in elems])
        for i in range(k - 1):
            c = coords.copy()
            c[:, i] = right[c[:, i]]
            gens.append(encode(c))

    if spec.top is not None and spec.twist is None:
        for pi in spec.top.generators:
            img = []
            for row in coords:
                x = (0,) + tuple(int(v) for v in row)
                y = [0] * k
                for i in range(k):
                    y[pi(i)] = x[i]
                first = inv[y[0]]
                img.append([mul(first, y[j]) for j in range(1, k)])
            gens.append(encode(np.array(img, dtype=np.int64).reshape(N, k - 1)))

    for a in spec.outer:
        conj = np.array([idx(e.conjugate(a)) for e in elems])
        gens.append(encode(conj[coords]))

    if spec.twist is not None:
        y = spec.twist
        _check_twist(T, spec.outer, y)
        # [1, t] (y, y) sigma = [1, y^-1 t^-1 y]
        tw = np.array([idx((~e).conjugate(y)) for e in elems])
        gens.append(encode(tw[coords]))

    return DiagonalGroup(PermGroup(N, gens, label), elems, k)


def _check_twist(T, outer, y):
    for s in T.generators:
        if s.conjugate(y) not in T:
            raise InputError("twist element does not normalize T")
    H = PermGroup(T.degree, list(T.generators) + list(outer))
    if (y * y) not in H:
        raise InputError("twist inconsistent: y^2 is not in H")
