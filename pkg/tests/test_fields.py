import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringcodes.errors import DomainError
from ringcodes.fields import (
    FieldCtx,
    field,
    field_arith,
    field_of_order,
    find_irreducible,
    format_zp_poly,
    is_irreducible,
    prime_power,
)
from ringcodes.galois import gr_construct

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64]


def test_find_irreducible_examples():
    assert format_zp_poly(find_irreducible(2, 2)) == "y^2+y+1"
    assert format_zp_poly(find_irreducible(2, 3)) == "y^3+y+1"
    assert format_zp_poly(find_irreducible(3, 1)) == "y"


@pytest.mark.parametrize("p,d", [(2, 4), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_find_irreducible_is_irreducible_and_minimal(p, d):
    f = find_irreducible(p, d)
    assert len(f) == d + 1 and f[-1] == 1
    assert is_irreducible(list(f), p)
    key = sum(c * p**k for k, c in enumerate(f[:-1]))
    for smaller in range(key):
        cand = [(smaller // p**k) % p for k in range(d)] + [1]
        assert not is_irreducible(cand, p)


def test_f4_examples():
    F4 = field(2, 2)
    w = F4.elem(F4.generator)
    assert F4.format((w * w).value) == "w+1"
    assert F4.format(field_arith(F4, "inv", w).value) == "w+1"
    for a in F4.elements():
        assert F4.pow(a, 4) == a


def test_inverse_of_zero_raises():
    with pytest.raises(DomainError):
        field(5).inv(0)
    with pytest.raises(DomainError):
        field(2, 3).elem(0).inv()


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    if q <= 27:
        # full triples
        assert np.array_equal(F.vmul(F.vmul(a, b), c), F.vmul(a, F.vmul(b, c)))
        assert np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
        assert np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
    else:
        x = np.arange(q)
        for s in x:
            A, B = np.meshgrid(x, x, indexing="ij")
            assert np.array_equal(F.vmul(F.vmul(A, B), s), F.vmul(A, F.vmul(B, s)))
            assert np.array_equal(F.vmul(s, F.vadd(A, B)), F.vadd(F.vmul(s, A), F.vmul(s, B)))
            assert np.array_equal(F.vadd(F.vadd(A, B), s), F.vadd(A, F.vadd(B, s)))
    for x in range(q):
        assert F.pow(x, q) == x
        if x:
            assert F.mul(x, F.inv(x)) == 1
        assert F.add(x, F.neg(x)) == 0


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(ORDERS), st.data())
def test_field_elem_operators(q, data):
    F = field_of_order(q)
    a = F.elem(data.draw(st.integers(0, q - 1)))
    b = F.elem(data.draw(st.integers(0, q - 1)))
    assert (a + b) - b == a
    assert a * b == b * a
    assert -(-a) == a
    if b.value:
        assert (a * b) * b.inv() == a
    assert a ** (q - 1) == (F.elem(1) if a.value else F.elem(0))


def test_field_rejects_bad_moduli():
    with pytest.raises(ValueError):
        FieldCtx(2, 2, modulus=(1, 0, 1))  # y^2+1 = (y+1)^2
    with pytest.raises(ValueError):
        FieldCtx(4)
    with pytest.raises(ValueError):
        prime_power(12)


def test_encoding_round_trip():
    F = field(3, 2)
    for a in F.elements():
        assert F.encode(F.decode(a)) == a


def test_gr_with_r1_matches_field():
    for p, n in [(2, 2), (2, 3), (3, 2)]:
        F, G = field(p, n), gr_construct(p, 1, n)
        for a, b in itertools.product(F.elements(), repeat=2):
            ga, gb = tuple(F.decode(a)), tuple(F.decode(b))
            assert F.decode(F.mul(a, b)) == G.mul(ga, gb)
            assert F.decode(F.add(a, b)) == G.add(ga, gb)
