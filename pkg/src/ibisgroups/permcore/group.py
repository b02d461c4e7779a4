from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct

import numpy as np

from ..config import DEFAULT_DEGREE_CAP
from ..errors import CapacityError, InputError, PreconditionError
from .perm import Perm, format_cycles, parse_cycles
from .schreier import schreier_sims


class PermGroup:
    """A permutation group given by generators.

    Identity generators are stripped; the trivial group has no generators.
    """

    def __init__(self, degree, generators, label=None):
        if degree < 1:
            raise InputError("degree must be positive")
        gens = []
        for g in generators:
            if g.degree != degree:
                raise InputError(f"generator of degree {g.degree} in group of degree {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.label = label

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<PermGroup{name} degree={self.degree} gens={len(self.generators)}>"

    @cached_property
    def bsgs(self):
        return schreier_sims(self)

    def order(self):
        return self.bsgs.order

    def __contains__(self, p):
        return self.bsgs.contains(p)

    def with_label(self, label):
        g = PermGroup(self.degree, self.generators, label)
        if "bsgs" in self.__dict__:
            g.__dict__["bsgs"] = self.bsgs
        return g


def normal_closure(g, gens, label=None):
    """Smallest subgroup of g normalized by g and containing ``gens``."""
    result = PermGroup(g.degree, gens)
    todo = list(result.generators)
    while todo:
        x = todo.pop()
        for s in g.generators:
            y = x.conjugate(s)
            if y not in result:
                result = PermGroup(g.degree, result.generators + (y,))
                todo.append(y)
    return result.with_label(label)


def derived_subgroup(g):
    gens = g.generators
    comms = [(~a) * (~b) * a * b for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(g, comms)


def is_solvable(g):
    h = g
    while h.generators:
        d = derived_subgroup(h)
        if d.order() == h.order():
            return False
        h = d
    return True


def trivial_group(n, label=None):
    return PermGroup(n, [], label)


@dataclass(frozen=True)
class OrbitPartition:
    degree: int
    representative: dict
    orbit_of: dict

    def orbits(self):
        return [self.orbit_of[r] for r in sorted(self.orbit_of)]


def _gen_arrays(g):
    return [np.asarray(s.images, dtype=np.int64) for s in g.generators]


def orbits(g, subset=None):
    """Orbit partition of the natural action, optionally restricted to the
    orbits meeting ``subset``."""
    n = g.degree
    rep = [-1] * n
    imgs = [s.images for s in g.generators]
    orbit_of = {}
    points = range(n) if subset is None else sorted(set(subset))
    for x in points:
        if rep[x] != -1:
            continue
        orb = [x]
        rep[x] = x
        i = 0
        while i < len(orb):
            y = orb[i]
            i += 1
            for s in imgs:
                z = s[y]
                if rep[z] == -1:
                    rep[z] = x
                    orb.append(z)
        orb.sort()
        r = orb[0]
        for y in orb:
            rep[y] = r
        orbit_of[r] = tuple(orb)
    representative = {i: rep[i] for i in range(n) if rep[i] != -1}
    return OrbitPartition(n, representative, orbit_of)


def is_transitive(g):
    return len(orbits(g, [0]).orbit_of[0]) == g.degree


def minimal_block(g, a, b):
    """Smallest block of imprimitivity containing points a and b."""
    n = g.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    imgs = [s.images for s in g.generators]
    queue = [(a, b)]
    parent[find(b)] = find(a)
    while queue:
        x, y = queue.pop()
        for s in imgs:
            u, v = find(s[x]), find(s[y])
            if u != v:
                parent[v] = u
                queue.append((s[x], s[y]))
    r = find(a)
    return sorted(i for i in range(n) if find(i) == r)


def is_primitive(g):
    """Decide primitivity of a transitive group via minimal blocks.

    Only points in distinct orbits of the stabilizer of 0 need testing.
    """
    if not is_transitive(g):
        raise PreconditionError("is_primitive requires a transitive group")
    n = g.degree
    if n <= 2:
        return True
    b = g.bsgs
    if b.base and b.base[0] == 0:
        stab = PermGroup(n, b.sub_chain(1).strong_generators)
    else:
        from .schreier import pointwise_stabilizer

        stab = PermGroup(n, pointwise_stabilizer(b, [0]).strong_generators)
    part = orbits(stab)
    for r in sorted(part.orbit_of):
        if r == 0:
            continue
        if len(minimal_block(g, 0, r)) < n:
            return False
    return True


def _check_degree(n, cap):
    if n > (cap or DEFAULT_DEGREE_CAP):
        raise CapacityError(f"degree {n} exceeds the configured cap {cap or DEFAULT_DEGREE_CAP}")


def direct_product(g, h, label=None):
    """Direct product acting on the disjoint union (g on 0..n-1, h after)."""
    n, m = g.degree, h.degree
    gens = [Perm(s.images + tuple(range(n, n + m))) for s in g.generators]
    gens += [Perm(tuple(range(n)) + tuple(n + x for x in s.images)) for s in h.generators]
    return PermGroup(n + m, gens, label)


def symmetric_generators(k):
    if k < 2:
        return []
    gens = [Perm.from_cycles(k, [[0, 1]])]
    if k > 2:
        gens.append(Perm.from_cycles(k, [list(range(k))]))
    return gens


def wreath_imprimitive(h, k, top=None, label=None, degree_cap=None):
    """H wr top in imprimitive action on k blocks of size |Gamma|."""
    n = h.degree
    _check_degree(n * k, degree_cap)
    top = top if top is not None else PermGroup(max(k, 1), symmetric_generators(k))
    gens = []
    for i in range(k):
        for s in h.generators:
            img = list(range(n * k))
            for x in range(n):
                img[i * n + x] = i * n + s.images[x]
            gens.append(Perm(img))
    for t in top.generators:
        img = [t.images[j // n] * n + j % n for j in range(n * k)]
        gens.append(Perm(img))
    return PermGroup(n * k, gens, label)


def wreath_product_action(h, k, top=None, label=None, degree_cap=None):
    """H wr top in product action on Gamma^k.

    A point (g_0, ..., g_{k-1}) is encoded as sum g_i * m^(k-1-i), m = |Gamma|.
    The top element pi sends coordinate i to coordinate pi(i).
    """
    m = h.degree
    if k == 1:
        return PermGroup(m, h.generators, label)
    _check_degree(m**k, degree_cap)
    top = top if top is not None else PermGroup(k, symmetric_generators(k))
    if top.degree != k:
        raise InputError("top group must act on k points")
    N = m**k
    coords = np.array(list(iproduct(range(m), repeat=k)), dtype=np.int64)
    weights = m ** np.arange(k - 1, -1, -1, dtype=np.int64)
    gens = []
    for i in range(k):
        for s in h.generators:
            c = coords.copy()
            c[:, i] = np.asarray(s.images)[c[:, i]]
            gens.append(Perm.from_array(c @ weights))
    for t in top.generators:
        c = np.empty_like(coords)
        for i in range(k):
            c[:, t.images[i]] = coords[:, i]
        gens.append(Perm.from_array(c @ weights))
    assert all(g.degree == N for g in gens)
    return PermGroup(N, gens, label)


def parse_group(text, label=None):
    """Parse the line-based group format (``degree n`` then ``gen <cycles>``)."""
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if degree is None:
            if key != "degree":
                raise InputError(f"line {lineno}: expected 'degree <n>'")
            try:
                degree = int(rest)
            except ValueError:
                raise InputError(f"line {lineno}: bad degree {rest!r}") from None
            if degree < 1:
                raise InputError(f"line {lineno}: degree must be positive")
            continue
        if key != "gen":
            raise InputError(f"line {lineno}: expected 'gen <cycles>'")
        try:
            gens.append(parse_cycles(rest, degree))
        except InputError as e:
            raise InputError(f"line {lineno}: {e}") from None
    if degree is None:
        raise InputError("missing 'degree' line")
    return PermGroup(degree, gens, label)


def format_group(g):
    lines = [f"degree {g.degree}"]
    gens = g.generators or (Perm.identity(g.degree),)
    lines += [f"gen {format_cycles(s)}" for s in gens]
    return "\n".join(lines) + "\n"


def load_group(path):
    with open(path, encoding="utf-8") as fh:
        return parse_group(fh.read(), label=str(path))
