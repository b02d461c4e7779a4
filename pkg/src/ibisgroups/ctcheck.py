"""CT-groups: groups in which commuting is transitive on nonidentity elements.

Two deciders work off the same dense commuting matrix but test different
statements: transitivity of the relation directly, and the centralizer
dichotomy (C(x) = C(y) or C(x) meets C(y) trivially). A third scan asks
whether every centralizer is abelian, with centralizers computed
independently by ``centralizer_of_element``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, InputError
from .permcore import (
    Perm,
    PermGroup,
    centralizer_of_element,
    coset_action,
    element_enumeration,
    element_matrix,
    is_primitive,
)

CT_ORDER_CAP = 10**4


@dataclass
class CtVerdict:
    is_ct: bool
    violation: tuple | None = None
    method_agreement: bool = True
    method: str = ""


class _Elements:
    """Dense element matrix plus commuting matrix, shared by the deciders."""

    def __init__(self, b, cap=CT_ORDER_CAP):
        if b.order > cap:
            raise CapacityError(f"group order {b.order} exceeds the CT cap {cap}")
        self.b = b
        self.E = element_matrix(b)
        self.n = len(self.E)
        self._commute = None

    def perm(self, i):
        return Perm.from_array(self.E[i])

    @property
    def commute(self):
        if self._commute is None:
            E = self.E
            C = np.empty((self.n, self.n), dtype=bool)
            for i in range(self.n):
                # row j: E[j] o E[i] versus E[i] o E[j], right action
                C[i] = (E[:, E[i]] == E[i][E]).all(axis=1)
            # the identity (index 0) is excluded from the relation
            C[0, :] = False
            C[:, 0] = False
            self._commute = C
        return self._commute


def _verdict_from_triple(data, triple, method):
    if triple is None:
        return CtVerdict(True, None, True, method)
    return CtVerdict(False, tuple(data.perm(i) for i in triple), True, method)


def _transitivity(data):
    """Smallest (a, t, b) in enumeration order with a~t, t~b and a not~ b."""
    C = data.commute
    for a in range(1, data.n):
        not_a = ~C[a]
        not_a[0] = False
        not_a[a] = False
        nbrs = np.flatnonzero(C[a])
        if len(nbrs) == 0:
            continue
        bad = C[nbrs] & not_a
        hit = np.flatnonzero(bad.any(axis=1))
        if len(hit):
            t = nbrs[hit[0]]
            b = int(np.flatnonzero(bad[hit[0]])[0])
            return (a, int(t), b)
    return None


def _partition(data):
    """Violation of: C(x) = C(y) or C(x) & C(y) = {1}, for nonidentity x, y.

    Returned as a commuting-chain triple derived from the smallest bad pair.
    """
    C = data.commute
    rows = C[1:, 1:]
    # centralizer rows include the element itself; put the diagonal back
    rows = rows | np.eye(data.n - 1, dtype=bool)
    uniq, cls = np.unique(rows, axis=0, return_inverse=True)
    cls = np.asarray(cls).reshape(-1)
    U = uniq.astype(np.float32)
    meet = (U @ U.T) > 0.5
    np.fill_diagonal(meet, False)
    bad_pairs = meet[cls][:, cls]
    xs = np.flatnonzero(bad_pairs.any(axis=1))
    if len(xs) == 0:
        return None
    x = int(xs[0])
    y = int(np.flatnonzero(bad_pairs[x])[0])
    cx, cy = rows[x], rows[y]
    X, Y = x + 1, y + 1
    if not C[X, Y]:
        z = int(np.flatnonzero(cx & cy)[0]) + 1
        return (X, z, Y)
    # x and y commute but have different centralizers
    only_x = np.flatnonzero(cx & ~cy)
    if len(only_x):
        return (int(only_x[0]) + 1, X, Y)
    return (int(np.flatnonzero(cy & ~cx)[0]) + 1, Y, X)


def is_ct_transitivity(b, cap=CT_ORDER_CAP):
    data = _Elements(b, cap)
    return _verdict_from_triple(data, _transitivity(data), "transitivity")


def is_ct_centralizer_partition(b, cap=CT_ORDER_CAP):
    data = _Elements(b, cap)
    return _verdict_from_triple(data, _partition(data), "centralizer-partition")


def centralizer_abelian_scan(b, cap=CT_ORDER_CAP):
    """True iff every nonidentity element has an abelian centralizer.

    One element per cyclic subgroup is checked: generators of the same cyclic
    group share a centralizer.
    """
    if b.order > cap:
        raise CapacityError(f"group order {b.order} exceeds the CT cap {cap}")
    seen = set()
    for x in element_enumeration(b):
        if x.is_identity() or x.images in seen:
            continue
        k = x.order()
        y = x
        for e in range(1, k):
            if np.gcd(e, k) == 1:
                seen.add(y.images)
            y = y * x
        C = centralizer_of_element(b, x)
        gens = C.generators
        if any(g * h != h * g for i, g in enumerate(gens) for h in gens[i + 1:]):
            return False
    return True


def decide_ct(b, cap=CT_ORDER_CAP):
    """Run both deciders; the verdict carries whether they agree."""
    data = _Elements(b, cap)
    t1 = _transitivity(data)
    t2 = _partition(data)
    agree = (t1 is None) == (t2 is None)
    v = _verdict_from_triple(data, t1, "transitivity+centralizer-partition")
    v.method_agreement = agree
    return v


@dataclass
class DihedralPair:
    q: int
    k1: PermGroup
    k2: PermGroup
    order1: int
    order2: int
    intersection_order: int
    maximal: bool

    @property
    def ok(self):
        d = 2 * (self.q - 1)
        return self.order1 == d and self.order2 == d and self.intersection_order == 1 and self.maximal


def _element_set(g):
    return {e.images for e in element_enumeration(g.bsgs)}


def dihedral_trivial_intersection_witness(q):
    """Two maximal D_{2(q-1)} subgroups of PSL(2,q), q = 8 or 16, meeting trivially."""
    if q not in (8, 16):
        raise InputError("needs q = 2^f with f >= 3 and q <= 16")
    from .catalog.classical import dihedral_subgroup, psl2

    T = psl2(q)
    K1 = dihedral_subgroup(T.bsgs, q - 1)
    s1 = _element_set(K1)
    K2 = None
    for g in element_enumeration(T.bsgs):
        cand = PermGroup(T.degree, [h.conjugate(g) for h in K1.generators])
        s2 = _element_set(cand)
        if len(s1 & s2) == 1:
            K2 = cand
            break
    if K2 is None:
        raise AssertionError("no conjugate meets K1 trivially")
    img, _ = coset_action(T.bsgs, K1)
    maximal = is_primitive(img)
    return DihedralPair(q, K1, K2, K1.order(), K2.order(), len(s1 & _element_set(K2)), maximal)
