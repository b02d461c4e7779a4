"""Symmetric, alternating, affine and small projective groups as permutation groups."""

from __future__ import annotations

from itertools import combinations, product
from math import comb

from ..config import DEFAULT_DEGREE_CAP
from ..errors import CapacityError, InputError
from ..gfarith import field, field_of_order, is_prime
from ..permcore import (
    Perm,
    PermGroup,
    coset_action,
    element_enumeration,
    schreier_sims,
    symmetric_generators,
)


def sym_natural(n):
    if n < 1:
        raise InputError("Sym(n) needs n >= 1")
    return PermGroup(n, symmetric_generators(n), f"sym:{n}")


def alt_natural(n):
    if n < 3:
        raise InputError("Alt(n) needs n >= 3")
    gens = [Perm.from_cycles(n, [[0, 1, 2]])]
    if n > 3:
        cyc = list(range(n)) if n % 2 else list(range(1, n))
        gens.append(Perm.from_cycles(n, [cyc]))
    return PermGroup(n, gens, f"alt:{n}")


def _induced(g, points, image_of, label, degree_cap=None):
    if len(points) > (degree_cap or DEFAULT_DEGREE_CAP):
        raise CapacityError(f"degree {len(points)} exceeds the configured cap")
    index = {pt: i for i, pt in enumerate(points)}
    gens = [Perm([index[image_of(s, pt)] for pt in points]) for s in g.generators]
    return PermGroup(len(points), gens, label)


def action_on_m_subsets(g, m, label=None, degree_cap=None):
    """Induced action on m-subsets, labelled in lexicographic order."""
    n = g.degree
    if not 1 <= m <= n - 1:
        raise InputError(f"need 1 <= m <= {n - 1}")
    if comb(n, m) > (degree_cap or DEFAULT_DEGREE_CAP):
        raise CapacityError(f"C({n},{m}) exceeds the configured degree cap")
    pts = list(combinations(range(n), m))
    return _induced(g, pts, lambda s, S: tuple(sorted(s(x) for x in S)), label, degree_cap)


def sym6_on_triple_partitions():
    """Sym(6) on the 10 splittings of [6] into two 3-sets.

    Each point is labelled by the 3-set containing 0.
    """
    full = frozenset(range(6))
    pts = [S for S in combinations(range(6), 3) if 0 in S]

    def image(s, S):
        T = {s(x) for x in S}
        if 0 not in T:
            T = full - T
        return tuple(sorted(T))

    return _induced(sym_natural(6), pts, image, "sym6:partitions")


def _vec_index(v, p):
    i = 0
    for c in v:
        i = i * p + c
    return i


def agl(d, p, degree_cap=None):
    """AGL(d, p) on GF(p)^d; vector v is point sum v_i p^(d-1-i)."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if d < 1:
        raise InputError("dimension must be positive")
    if p**d > (degree_cap or DEFAULT_DEGREE_CAP):
        raise CapacityError(f"degree {p}^{d} exceeds the configured cap")
    F = field(p)
    vecs = list(product(range(p), repeat=d))
    gens = []
    for i in range(d):
        gens.append(Perm([
            _vec_index(tuple((c + (j == i)) % p for j, c in enumerate(v)), p) for v in vecs
        ]))
    g = F.multiplicative_generator()
    mats = [[[g if (r == c == 0) else int(r == c) for c in range(d)] for r in range(d)]]
    if d >= 2:
        mats.append([[int(r == c or (r == 0 and c == 1)) for c in range(d)] for r in range(d)])
        mats.append([[int(c == (r + 1) % d) for c in range(d)] for r in range(d)])
    for A in mats:
        img = []
        for v in vecs:
            w = tuple(sum(v[r] * A[r][c] for r in range(d)) % p for c in range(d))
            img.append(_vec_index(w, p))
        gens.append(Perm(img))
    return PermGroup(p**d, gens, f"agl:{d}:{p}")


def frobenius_agl1(p):
    return agl(1, p)


# projective line over GF(q): field codes 0..q-1, infinity = q

def mobius(F, a, b, c, d):
    """x -> (a x + b) / (c x + d) on the projective line (infinity = q)."""
    q = F.q

    def img(x):
        if x == q:
            return q if c == 0 else F.div(a, c)
        num = F.add(F.mul(a, x), b)
        den = F.add(F.mul(c, x), d)
        if den == 0:
            return q
        return F.div(num, den)

    return Perm([img(x) for x in range(q + 1)])


def _psl2_gens(F):
    g = F.multiplicative_generator()
    c = g if F.p == 2 else F.mul(g, g)
    minus1 = F.neg(1)
    return [
        mobius(F, 1, 1, 0, 1),        # x -> x + 1
        mobius(F, c, 0, 0, 1),        # x -> c x
        mobius(F, 0, minus1, 1, 0),   # x -> -1/x
    ]


def psl2(q):
    F = field_of_order(q)
    if q < 4:
        raise InputError("PSL(2,q) is simple only for q >= 4")
    return PermGroup(q + 1, _psl2_gens(F), f"psl2:{q}")


def pgl2(q):
    F = field_of_order(q)
    if q < 4:
        raise InputError("PGL(2,q) catalog entries need q >= 4")
    gens = _psl2_gens(F) + [mobius(F, F.multiplicative_generator(), 0, 0, 1)]
    return PermGroup(q + 1, gens, f"pgl2:{q}")


def psl2_frobenius(q, power=1):
    """Permutation of the projective line induced by x -> x^(p^power)."""
    F = field_of_order(q)
    if F.f == 1:
        raise InputError(f"GF({q}) has no nontrivial Frobenius automorphism")
    return Perm([F.frobenius(x, power) for x in range(q)] + [q])


def first_element_of_order(b, order):
    for x in element_enumeration(b):
        if x.order() == order:
            return x
    raise InputError(f"no element of order {order}")


def first_inverting_involution(b, x):
    xinv = ~x
    for w in element_enumeration(b):
        if w.order() == 2 and x.conjugate(w) == xinv:
            return w
    raise InputError("no involution inverts the given element")


def dihedral_subgroup(b, n, label=None):
    """First (in enumeration order) dihedral subgroup <x, w> with |x| = n."""
    x = first_element_of_order(b, n)
    w = first_inverting_involution(b, x)
    return PermGroup(b.degree, [x, w], label)


def psl2_on_dihedral_cosets(q):
    if q not in (4, 8, 16):
        raise InputError("supported for q in {4, 8, 16}")
    G = psl2(q)
    D = dihedral_subgroup(G.bsgs, q + 1)
    assert D.order() == 2 * (q + 1)
    img, _ = coset_action(G.bsgs, D, f"psl2:{q}:dihedral")
    return img


_GF2_VECTORS = [v for v in product(range(2), repeat=3) if any(v)]


def gl3_2_perm(A):
    """Permutation of the 7 nonzero vectors of GF(2)^3 induced by v -> v A."""
    idx = {v: i for i, v in enumerate(_GF2_VECTORS)}
    return Perm([
        idx[tuple(sum(v[r] * A[r][c] for r in range(3)) % 2 for c in range(3))]
        for v in _GF2_VECTORS
    ])


def psl3_2_on_7():
    """GL(3,2) = PSL(3,2) on the 7 nonzero vectors of GF(2)^3 (v -> v A)."""
    mats = [
        [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
    ]
    return PermGroup(7, [gl3_2_perm(A) for A in mats], "psl3_2:7")


def find_subgroup_of_order(b, order, first=None):
    """Deterministic search for <x, y> of the given order.

    x is the first element of order ``first`` (or any nonidentity element),
    y runs over the group in enumeration order.
    """
    xs = [first_element_of_order(b, first)] if first else list(element_enumeration(b))[1:]
    for x in xs:
        for y in element_enumeration(b):
            if y.is_identity():
                continue
            H = PermGroup(b.degree, [x, y])
            if H.order() == order:
                return H
    raise InputError(f"no 2-generated subgroup of order {order}")


def alt7_on_15():
    A7 = alt_natural(7)
    H = find_subgroup_of_order(A7.bsgs, 168, first=7)
    img, _ = coset_action(A7.bsgs, H, "alt7:15")
    return img
