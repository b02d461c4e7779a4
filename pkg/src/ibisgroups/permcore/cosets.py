"""Coset actions and element centralizers by enumeration."""

from __future__ import annotations

import numpy as np

from ..errors import InputError
from .group import PermGroup
from .perm import Perm
from .schreier import element_matrix, schreier_sims


def coset_action(b, subgroup, label=None, cap=None):
    """Action of the group of ``b`` on the right cosets of ``subgroup``.

    Returns ``(image_group, reps)`` where ``reps[i]`` is a representative of
    the coset labelled i; the coset of the identity is labelled 0.
    Generators of the image are the images of ``b.strong_generators``.
    """
    for h in subgroup.generators:
        if not b.contains(h):
            raise InputError("subgroup generator is not in the group")
    H = element_matrix(schreier_sims(subgroup), cap)
    n = b.degree

    def key(g):
        # canonical label of Hg: its lexicographically smallest element
        rows = g[H]
        return rows[np.lexsort(rows.T[::-1])[0]].tobytes()

    ident = np.arange(n, dtype=H.dtype)
    gens = [g.array(H.dtype) for g in b.strong_generators]
    reps = [ident]
    index = {key(ident): 0}
    images = [[] for _ in gens]
    i = 0
    while i < len(reps):
        r = reps[i]
        for j, s in enumerate(gens):
            rs = s[r]
            k = key(rs)
            if k not in index:
                index[k] = len(reps)
                reps.append(rs)
            images[j].append(index[k])
        i += 1
    deg = len(reps)
    perms = [Perm(img) for img in images]
    return PermGroup(deg, perms, label), [Perm.from_array(r) for r in reps]


def _generators_of(elements, n):
    """Greedy small generating set for a group given as a list of perms."""
    ident = Perm.identity(n)
    generated = {ident}
    gens = []
    for e in elements:
        if e in generated:
            continue
        gens.append(e)
        frontier = list(generated)
        generated = set(generated)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = x * s
                    if y not in generated:
                        generated.add(y)
                        nxt.append(y)
            frontier = nxt
    return gens


def centralizer_of_element(b, x, cap=None, label=None):
    """Centralizer of x in the group of ``b`` by full element enumeration."""
    if x.degree != b.degree:
        raise InputError("degree mismatch")
    if x.is_identity():
        return PermGroup(b.degree, b.strong_generators, label)
    E = element_matrix(b, cap)
    xa = x.array(E.dtype)
    mask = (xa[E] == E[:, xa]).all(axis=1)
    elems = [Perm.from_array(row) for row in E[mask]]
    return PermGroup(b.degree, _generators_of(elems, b.degree), label)
