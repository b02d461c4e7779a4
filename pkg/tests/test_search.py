import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ibisgroups.baseanalysis import (
    SearchCaps,
    closure_elements,
    extend_to_irredundant_base,
    irredundant_spectrum,
    is_ibis,
    is_irredundant,
    minimal_base_size,
    naive_spectrum,
    socle_irredundant_lower_bound,
    verify_witness_not_base,
)
from ibisgroups.catalog import agl, alt_natural, resolve, sym_natural
from ibisgroups.errors import CapacityError, PreconditionError
from ibisgroups.permcore import (
    Perm,
    PermGroup,
    element_enumeration,
    is_primitive,
    is_transitive,
    pointwise_stabilizer,
    wreath_product_action,
)
from ibisgroups.suite import ORACLE_FIXTURES, oracle_group


def b_of(name):
    return resolve(name).group.bsgs


# ---------------------------------------------------------------- irredundance


def test_is_irredundant_examples():
    s4, a4 = b_of("sym:4"), b_of("alt:4")
    r = is_irredundant(s4, (0, 1, 2))
    assert r and r.chain_orders == (24, 6, 2, 1) and r.is_base
    bad = is_irredundant(s4, (0, 0))
    assert not bad and bad.index == 1
    bad = is_irredundant(a4, (0, 1, 2))
    assert not bad and bad.index == 2


def test_extend_examples():
    s4 = b_of("sym:4")
    assert extend_to_irredundant_base(s4, ()).points == (0, 1, 2)
    assert extend_to_irredundant_base(s4, (3, 1, 0)).points == (3, 1, 0)
    s6 = b_of("sym:6:sets:2")
    r = extend_to_irredundant_base(s6, (0,))
    assert r.points[0] == 0 and r.is_base
    with pytest.raises(PreconditionError):
        extend_to_irredundant_base(s4, (0, 0))


def test_verify_witness_not_base_examples():
    s4 = b_of("sym:4")
    assert not verify_witness_not_base(s4, (0, 1, 2))
    assert verify_witness_not_base(s4, ())
    assert verify_witness_not_base(s4, (0,))
    assert not verify_witness_not_base(PermGroup(3, []).bsgs, ())


# ---------------------------------------------------------------- base size and spectrum


@pytest.mark.parametrize("name,b", [("sym:6:sets:2", 4), ("agl:2:3", 3), ("diag:psl2:4:2", 3)])
def test_minimal_base_examples(name, b):
    size, witness = minimal_base_size(b_of(name))
    assert size == b
    assert witness.is_base and len(witness) == b
    assert is_irredundant(b_of(name), witness.points)


def test_spectrum_examples():
    assert irredundant_spectrum(b_of("sym:4")).sizes == (3,)
    assert irredundant_spectrum(b_of("alt:4")).sizes == (2,)
    s = irredundant_spectrum(b_of("diag:alt:5:2:twist"))
    assert 3 in s.sizes and max(s.sizes) >= 4


def test_is_ibis_examples():
    v = is_ibis(b_of("psl2:4"))
    assert v.is_ibis is True and v.complete
    v = is_ibis(b_of("diag:psl2:4:2"))
    assert v.is_ibis is True and v.base_size == 3
    v = is_ibis(b_of("prod:sym:5:2"))
    assert v.is_ibis is False
    short, long = v.counterexample
    assert len(short) < len(long) and short.is_base and long.is_base


def test_caps_flag_incomplete():
    caps = SearchCaps(nodes=3)
    s = irredundant_spectrum(b_of("sym:6:sets:2"), caps)
    assert not s.complete
    v = is_ibis(b_of("sym:6:sets:2"), caps)
    assert v.is_ibis is None and not v.complete
    with pytest.raises(CapacityError):
        minimal_base_size(b_of("sym:6:sets:2"), caps)


@pytest.mark.parametrize("name,text", ORACLE_FIXTURES, ids=[n for n, _ in ORACLE_FIXTURES])
def test_spectrum_matches_naive_oracle_on_corpus(name, text):
    g = oracle_group(name, text)
    assert g.degree <= 10 and g.order() <= 720 and is_transitive(g)
    elems = closure_elements(g.generators, g.degree)
    assert len(elems) == g.order()
    naive = naive_spectrum(elems, g.degree)
    s = irredundant_spectrum(g.bsgs)
    assert s.complete and list(s.sizes) == sorted(naive.sizes)
    assert min(s.sizes) == minimal_base_size(g.bsgs)[0]
    for size, w in s.witness.items():
        assert len(w) == size and w.is_base and is_irredundant(g.bsgs, w.points)


def test_corpus_has_multi_size_spectra():
    multi = [
        n for n, t in ORACLE_FIXTURES
        if len(irredundant_spectrum(oracle_group(n, t).bsgs).sizes) > 1
    ]
    assert len(multi) >= 3


@st.composite
def random_group(draw, max_degree=7, max_order=720):
    n = draw(st.integers(2, max_degree))
    gens = draw(st.lists(st.permutations(list(range(n))), min_size=1, max_size=3))
    g = PermGroup(n, [Perm(x) for x in gens])
    assume(g.order() <= max_order)
    return g


@settings(max_examples=60, deadline=None)
@given(random_group())
def test_spectrum_matches_naive_oracle_random(g):
    elems = closure_elements(g.generators, g.degree)
    naive = naive_spectrum(elems, g.degree)
    s = irredundant_spectrum(g.bsgs)
    assert list(s.sizes) == sorted(naive.sizes)
    assert min(s.sizes) == minimal_base_size(g.bsgs)[0]
    v = is_ibis(g.bsgs)
    assert v.is_ibis == (len(naive.sizes) == 1)


@settings(max_examples=40, deadline=None)
@given(random_group(), st.data())
def test_conjugated_witness_is_irredundant_base(g, data):
    s = irredundant_spectrum(g.bsgs)
    elements = list(element_enumeration(g.bsgs))
    x = elements[data.draw(st.integers(0, len(elements) - 1))]
    for size, w in s.witness.items():
        moved = [x(p) for p in w.points]
        r = is_irredundant(g.bsgs, moved)
        assert r and r.is_base and len(r) == size


@settings(max_examples=30, deadline=None)
@given(random_group(), st.data())
def test_spectrum_invariant_under_relabelling(g, data):
    n = g.degree
    h = Perm(data.draw(st.permutations(list(range(n)))))
    conj = PermGroup(n, [s.conjugate(h) for s in g.generators])
    assert irredundant_spectrum(conj.bsgs).sizes == irredundant_spectrum(g.bsgs).sizes


@pytest.mark.parametrize("name", ["sym:5", "psl2:7", "agl:2:3", "sym:6:sets:2", "psl2:4:dihedral"])
def test_every_minimal_base_is_irredundant(name):
    b = b_of(name)
    size, _ = minimal_base_size(b)
    g = resolve(name).group
    # every ordered size-b sequence that is a base is irredundant
    count = 0
    for seq in itertools.permutations(range(g.degree), size):
        if pointwise_stabilizer(b, seq).order == 1:
            count += 1
            assert is_irredundant(b, seq)
        if count >= 400:
            break
    assert count > 0


NONABELIAN_SOCLE = [
    "sym:5", "alt:6", "sym:6:sets:2", "sym6:partitions", "psl2:4", "psl2:7", "pgl2:8",
    "psl2:4:dihedral", "psl2:8:dihedral", "psl3_2:7", "diag:psl2:4:2", "prod:sym:5:2",
]


@pytest.mark.parametrize("name", NONABELIAN_SOCLE)
def test_nonabelian_socle_never_ibis_with_base_two(name):
    g = resolve(name).group
    assert is_primitive(g)
    s = irredundant_spectrum(g.bsgs)
    assert max(s.sizes) >= 3
    if min(s.sizes) == 2:
        assert len(s.sizes) > 1


def test_socle_lower_bound():
    d = resolve("diag:psl2:4:2").group
    w = socle_irredundant_lower_bound(d, d)
    assert w is not None and len(w) >= 3
    p = resolve("prod:sym:5:2").group
    # the socle Alt(5)^2: product action with a trivial top group
    socle = wreath_product_action(alt_natural(5), 2, PermGroup(2, []))
    assert socle.order() == 3600
    w = socle_irredundant_lower_bound(p, socle)
    assert w is not None and len(w) >= 3
    with pytest.raises(PreconditionError):
        socle_irredundant_lower_bound(agl(1, 5), agl(1, 5))


def test_socle_lower_bound_rejects_non_normal():
    s5 = sym_natural(5)
    sub = PermGroup(5, [Perm.from_cycles(5, [(0, 1, 2)])])
    with pytest.raises(PreconditionError):
        socle_irredundant_lower_bound(s5, sub)
