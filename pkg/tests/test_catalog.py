import itertools
from math import comb

import pytest

from ibisgroups.catalog import (
    LISTING,
    DiagonalSpec,
    agl,
    alt7_on_15,
    alt_natural,
    action_on_m_subsets,
    diagonal_group,
    frobenius_agl1,
    listing_lines,
    pgl2,
    product_action_group,
    psl2,
    psl2_frobenius,
    psl2_on_dihedral_cosets,
    psl3_2_on_7,
    resolve,
    sym6_on_triple_partitions,
    sym_natural,
)
from ibisgroups.catalog.classical import mobius
from ibisgroups.errors import CapacityError, InputError
from ibisgroups.gfarith import field_of_order
from ibisgroups.permcore import (
    Perm, PermGroup, is_primitive, is_transitive, orbits, pointwise_stabilizer,
)


def stabilizer_group(g, pts):
    b = pointwise_stabilizer(g.bsgs, pts)
    return PermGroup(g.degree, b.strong_generators)


def is_two_transitive(g):
    if not is_transitive(g):
        return False
    rest = [o for o in orbits(stabilizer_group(g, [0])).orbits() if 0 not in o]
    return len(rest) == 1


def test_natural_actions():
    s4 = sym_natural(4)
    assert s4.degree == 4 and s4.order() == 24
    assert alt_natural(5).order() == 60
    with pytest.raises(InputError):
        alt_natural(2)


def test_m_subsets():
    s6 = sym_natural(6)
    assert action_on_m_subsets(s6, 2).degree == 15
    assert action_on_m_subsets(s6, 3).degree == 20 == comb(6, 3)
    s4 = sym_natural(4)
    nat = action_on_m_subsets(s4, 1)
    assert nat.degree == 4 and nat.order() == 24
    # labels are the 1-subsets in order, so the generators act exactly as on points
    assert list(nat.generators) == list(s4.generators)


def test_sym6_partitions():
    g = sym6_on_triple_partitions()
    assert g.degree == 10
    assert is_transitive(g) and is_primitive(g)
    assert g.order() == 720  # faithful


def test_agl():
    g = agl(1, 5)
    assert g.degree == 5 and g.order() == 20
    g = agl(2, 3)
    gl23 = sum(1 for a, b, c, d in itertools.product(range(3), repeat=4) if (a * d - b * c) % 3)
    assert gl23 == 48
    assert g.degree == 9 and g.order() == 9 * gl23
    s2 = frobenius_agl1(2)
    assert s2.degree == 2 and s2.order() == 2
    assert frobenius_agl1(7).order() == 42
    assert frobenius_agl1(5).order() == 20


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16])
def test_psl2_and_pgl2(q):
    g = psl2(q)
    expected = q * (q * q - 1) // (2 if q % 2 else 1)
    assert g.degree == q + 1 and g.order() == expected
    assert is_two_transitive(g)
    h = pgl2(q)
    assert h.order() == q * (q * q - 1)
    assert is_two_transitive(h)


def test_psl2_examples():
    assert (psl2(4).degree, psl2(4).order()) == (5, 60)
    assert (psl2(8).degree, psl2(8).order()) == (9, 504)
    assert (pgl2(5).degree, pgl2(5).order()) == (6, 120)


def test_mobius_is_the_projective_action():
    F = field_of_order(5)
    g = mobius(F, 2, 1, 1, 1)  # x -> (2x+1)/(x+1), infinity coded as 5
    assert g(5) == 2  # infinity -> a/c
    assert g(4) == 5  # x = -1 sends the denominator to zero
    assert g(0) == 1


def test_frobenius_normalizes_psl2():
    phi4 = psl2_frobenius(4)
    assert phi4.order() == 2 and phi4.degree == 5
    phi8 = psl2_frobenius(8)
    assert phi8.order() == 3
    T = psl2(8)
    assert all(T.bsgs.contains(s.conjugate(phi8)) for s in T.generators)
    with pytest.raises(InputError):
        psl2_frobenius(7)


@pytest.mark.parametrize("q,degree", [(4, 6), (8, 28)])
def test_dihedral_cosets(q, degree):
    g = psl2_on_dihedral_cosets(q)
    assert g.degree == degree
    assert g.order() == psl2(q).order()
    assert is_primitive(g)


def test_psl3_2():
    g = psl3_2_on_7()
    assert g.degree == 7 and g.order() == 168
    assert is_two_transitive(g) and is_primitive(g)


def test_alt7_on_15():
    g = alt7_on_15()
    assert g.degree == 15 and g.order() == 2520
    assert is_primitive(g)


def test_diagonal_examples():
    T = psl2(4)
    d = diagonal_group(DiagonalSpec(T, 2))
    assert d.group.degree == 60 and d.group.order() == 3600
    top2 = sym_natural(2)
    d = diagonal_group(DiagonalSpec(alt_natural(5), 2, top=top2))
    assert d.group.degree == 60 and d.group.order() == 7200
    d = diagonal_group(DiagonalSpec(alt_natural(5), 3, top=sym_natural(3)))
    assert d.group.degree == 3600 and d.group.order() == 60**3 * 6


def test_diagonal_bad_inputs():
    T = alt_natural(5)
    with pytest.raises(InputError):
        DiagonalSpec(T, 1)
    with pytest.raises(InputError):
        DiagonalSpec(T, 3, top=sym_natural(2))
    with pytest.raises(CapacityError):
        diagonal_group(DiagonalSpec(T, 3), degree_cap=1000)


@pytest.mark.parametrize("name,tsize", [
    ("diag:psl2:4:2", 60), ("diag:alt:5:2:top=sym", 60), ("diag:psl2:7:2", 168),
    ("diag:alt:5:2:twist", 60), ("diag:psl2:4:2:frob=1", 60),
])
def test_diagonal_point_stabilizer_meets_socle_in_diagonal(name, tsize):
    e = resolve(name)
    tname = name.split(":")[1] + ":" + name.split(":")[2]
    socle = resolve(f"diag:{tname}:2").group
    # the socle is a subgroup of every variant, on the same labelling
    assert all(e.group.bsgs.contains(s) for s in socle.generators)
    assert is_transitive(socle)
    # stabilizer of [1, 1] in the socle is {(t, t)}, of order |T|
    assert pointwise_stabilizer(socle.bsgs, [0]).order == tsize
    assert socle.order() == tsize**2


def test_product_action():
    g = product_action_group(sym_natural(5), 2, sym_natural(2))
    assert g.degree == 25 and g.order() == 28800
    g = product_action_group(psl2(4), 2)
    assert g.degree == 25 and g.order() == 7200
    h = psl2(4)
    g1 = product_action_group(h, 1)
    assert g1.degree == 5 and g1.order() == 60
    c3 = PermGroup(3, [Perm.from_cycles(3, [(0, 1, 2)])])  # primitive but regular
    with pytest.raises(InputError):
        product_action_group(c3, 2)
    c4 = PermGroup(4, [Perm.from_cycles(4, [(0, 1, 2, 3)])])  # imprimitive
    with pytest.raises(InputError):
        product_action_group(c4, 2)


@pytest.mark.parametrize("name", ["prod:sym:5:2", "prod:psl2:4:2"])
def test_product_diagonal_point_index(name):
    g = resolve(name).group
    m = 5
    gamma = 2
    pt = gamma * m + gamma
    # orbit of (gamma, gamma) is everything, so its stabilizer has index m^2
    assert pointwise_stabilizer(g.bsgs, [pt]).order * m**2 == g.order()


def test_unknown_names():
    for bad in ["nope", "sym:x", "diag:psl2:4", "agl:2:4", "psl2:6", "diag:psl2:4:2:color=red"]:
        with pytest.raises(InputError):
            resolve(bad)


def test_degree_cap_applies():
    with pytest.raises(CapacityError):
        resolve("sym:2000000")
    with pytest.raises(CapacityError):
        resolve("diag:alt:5:3", degree_cap=1000)


def test_listing_examples():
    rows = {name: exp for name, _, _, exp in LISTING}
    assert rows["agl:1:7"] == "IBIS, b=2"
    assert rows["alt7:15"] == "IBIS"
    assert listing_lines() == listing_lines()
    assert len(listing_lines()) == len(LISTING)


@pytest.mark.parametrize("name,degree,order,expectation", [r for r in LISTING if r[1] <= 1000])
def test_listing_entries_match_built_groups(name, degree, order, expectation):
    e = resolve(name)
    assert e.group.degree == degree
    assert e.group.order() == order
    assert e.check_expected() == []
    assert e.expected.describe() == expectation or e.expected.ibis is None


@pytest.mark.parametrize("name,degree,order,expectation", [r for r in LISTING if r[1] > 1000])
def test_listing_large_entries(name, degree, order, expectation):
    e = resolve(name)
    assert (e.group.degree, e.group.order()) == (degree, order)
