import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ibisgroups.errors import DomainError, InputError
from ibisgroups.gfarith import field, field_of_order

SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (2, 2), (2, 3), (3, 2), (2, 4)]

# x^f = -(lower terms); the same moduli as the library, written out independently
ORACLE_MODULI = {4: [1, 1, 1], 8: [1, 1, 0, 1], 9: [1, 0, 1], 16: [1, 1, 0, 0, 1]}


def oracle_mul(p, f, a, b):
    """Schoolbook polynomial product reduced by the modulus (coefficients low first)."""
    ca = [(a // p**i) % p for i in range(f)]
    cb = [(b // p**i) % p for i in range(f)]
    prod = [0] * (2 * f)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] += x * y
    mod = ORACLE_MODULI.get(p**f, None)
    if mod is None:
        return (a * b) % p
    for d in range(2 * f - 1, f - 1, -1):
        c = prod[d] % p
        for i in range(f + 1):
            prod[d - f + i] -= c * mod[i]
    return sum((prod[i] % p) * p**i for i in range(f))


def oracle_add(p, f, a, b):
    return sum((((a // p**i) + (b // p**i)) % p) * p**i for i in range(f))


@pytest.mark.parametrize("p,f", SMALL)
def test_tables_match_oracle(p, f):
    F = field(p, f)
    for a, b in itertools.product(F.elements(), repeat=2):
        assert F.mul(a, b) == oracle_mul(p, f, a, b)
        assert F.add(a, b) == oracle_add(p, f, a, b)


@pytest.mark.parametrize("p,f", [(p, f) for p, f in SMALL if p**f <= 16])
def test_field_axioms_exhaustive(p, f):
    F = field(p, f)
    E = list(F.elements())
    for a, b, c in itertools.product(E, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a, b in itertools.product(E, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
    for a in E:
        assert F.add(a, F.neg(a)) == 0
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, F.q - 1) == 1


@pytest.mark.parametrize("p,f", [(p, f) for p, f in SMALL if p**f <= 16])
def test_frobenius_is_automorphism(p, f):
    F = field(p, f)
    E = list(F.elements())
    for i in range(f + 1):
        images = [F.frobenius(a, i) for a in E]
        assert sorted(images) == E
        for a, b in itertools.product(E, repeat=2):
            assert F.frobenius(F.mul(a, b), i) == F.mul(F.frobenius(a, i), F.frobenius(b, i))
            assert F.frobenius(F.add(a, b), i) == F.add(F.frobenius(a, i), F.frobenius(b, i))
    for a in E:
        assert F.frobenius(a, f) == a
        assert F.frobenius(a, 1) == F.pow(a, p)


def test_field_examples():
    assert field(2, 2).q == 4
    assert field(5, 1).q == 5
    with pytest.raises(InputError):
        field(4, 1)
    F4 = field(2, 2)
    x = 2  # the code of x: coefficients (0, 1)
    assert F4.mul(x, x) == F4.from_coeffs((1, 1))
    F8 = field(2, 3)
    assert all(F8.frobenius(a, 3) == a for a in F8.elements())
    F9 = field(3, 2)
    assert F9.mul(2, F9.inv(2)) == 1


def test_element_orders():
    F4 = field(2, 2)
    a = F4.element_of_order(3)
    assert a != 1 and F4.pow(a, 3) == 1
    F16 = field(2, 4)
    b = F16.element_of_order(5)
    assert F16.mult_order(b) == 5
    brute = [c for c in F16.elements() if c and F16.pow(c, 5) == 1 and c != 1]
    assert b == min(brute)
    with pytest.raises(InputError):
        field(2, 3).element_of_order(4)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_multiplicative_generator(q):
    F = field_of_order(q)
    g = F.multiplicative_generator()
    assert F.mult_order(g) == q - 1
    assert len({F.pow(g, e) for e in range(q - 1)}) == q - 1


def test_division_by_zero():
    F = field(3, 2)
    with pytest.raises(DomainError):
        F.inv(0)
    with pytest.raises(DomainError):
        F.div(1, 0)


def test_field_of_order_rejects_non_prime_powers():
    for q in (1, 6, 10, 12):
        with pytest.raises(InputError):
            field_of_order(q)


@given(st.sampled_from([101, 257, 65537]), st.data())
def test_large_prime_fields_sampled(p, data):
    F = field(p, 1)
    a, b, c = (data.draw(st.integers(0, p - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    if a:
        assert F.mul(a, F.inv(a)) == 1


def test_field_elem_wrapper():
    F = field(2, 2)
    x = F.elem(2)
    assert x * x == F.elem(3)
    assert (x * x.inv()) == F.elem(1)
    assert x.frobenius(2) == x
