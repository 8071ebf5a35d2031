import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ringcodes.errors import DomainError
from ringcodes.fields import field
from ringcodes.poly import (
    QuotientCtx,
    RingPoly,
    ZERO_DEGREE,
    cyclic_shift,
    divides_monic,
    format_poly,
    monic_divisors,
    parse_poly,
    poly_arith,
    poly_divmod_monic,
    quotient_mul,
)
from ringcodes.rings import ring_construct

F2, F4 = field(2), field(2, 2)
R1, R2 = ring_construct("R", 1), ring_construct("R", 2)

CTX_FIXTURES = [
    (("R", 2, None, F2), 3),
    (("R", 2, None, F2), 4),
    (("S", 2, None, F2), 3),
    (("T", 2, 2, F2), 2),
    (("R", 3, None, F4), 3),
    (("R", 2, None, field(3)), 3),
]


def P(spec, text):
    return parse_poly(spec, text)


def test_poly_arith_examples():
    assert P(R1, "(1+x)*(1+x)") == P(R1, "1+x^2")
    f = P(R2, "u+x")
    assert poly_arith("mul", f, f) == P(R2, "x^2")
    assert (f * RingPoly.zero(R2)).degree == ZERO_DEGREE


def test_divmod_examples():
    q, r = poly_divmod_monic(P(R2, "x^3-1"), P(R2, "x-1"))
    assert q == P(R2, "x^2+x+1") and not r
    q, r = poly_divmod_monic(P(R2, "x^2+u"), P(R2, "x+1"))
    assert q == P(R2, "x+1") and r == P(R2, "1+u")
    f = P(R2, "{1+u}*x^3+{u}*x")
    assert poly_divmod_monic(f, P(R2, "1")) == (f, RingPoly.zero(R2))
    with pytest.raises(DomainError):
        poly_divmod_monic(f, P(R2, "u*x+1"))


def test_divides_examples():
    for n in range(1, 8):
        assert divides_monic(P(R2, "x-1"), RingPoly.x_n_minus_one(R2, n))
    assert divides_monic(P(R2, "x^2+x+1"), P(R2, "x^3-1"))
    assert not divides_monic(P(R1, "x^2+1"), P(R1, "x^3-1"))


def test_monic_divisors_reconstruct():
    for spec, n in [(R1, 7), (R2, 3), (ring_construct("R", 1, None, F4), 3)]:
        target = RingPoly.x_n_minus_one(spec, n)
        divs = monic_divisors(spec, n)
        assert divs
        for h in divs:
            quot, rem = poly_divmod_monic(target, h)
            assert not rem and h * quot == target
    assert len(monic_divisors(R1, 7)) == 8  # (x+1)(x^3+x+1)(x^3+x^2+1)


def test_quotient_examples():
    ctx = QuotientCtx(R1, 4)
    x = ctx.parse("x")
    assert quotient_mul(ctx, ctx.parse("x^3"), x) == ctx.one()
    assert quotient_mul(ctx, ctx.parse("1+x^3"), x) == ctx.parse("x+1")
    f = ctx.parse("1+x+x^3")
    assert quotient_mul(ctx, f, ctx.one()) == f


def test_cyclic_shift_examples():
    ctx = QuotientCtx(R2, 3)
    c = ctx.parse("{1}+{u}*x+{1+u}*x^2")
    s = cyclic_shift(ctx, c)
    assert s.coeffs == [c.coeff(2), c.coeff(0), c.coeff(1)]
    for _ in range(2):
        s = cyclic_shift(ctx, s)
    assert s == c
    assert cyclic_shift(ctx, ctx.zero()) == ctx.zero()


@pytest.mark.parametrize("params,n", CTX_FIXTURES)
def test_quotient_ring_laws_random(params, n):
    ctx = QuotientCtx(ring_construct(*params), n)
    rng = np.random.default_rng(7)
    a, b, c = (rng.integers(0, ctx.field.q, size=(10_000, ctx.dim)) for _ in range(3))
    mul, add = ctx.mul_vectors, ctx.field.vadd
    assert np.array_equal(mul(a, b), mul(b, a))
    assert np.array_equal(mul(mul(a, b), c), mul(a, mul(b, c)))
    assert np.array_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CTX_FIXTURES), st.data())
def test_quotient_mul_agrees_with_remainder(fixture, data):
    params, n = fixture
    spec = ring_construct(*params)
    ctx = QuotientCtx(spec, n)
    draw = lambda: ctx.from_vector(np.array(data.draw(st.lists(st.integers(0, spec.field.q - 1),
                                                               min_size=ctx.dim, max_size=ctx.dim))))
    f, g = draw(), draw()
    _, rem = poly_divmod_monic(f * g, ctx.modulus)
    assert quotient_mul(ctx, f, g) == rem
    s = cyclic_shift(ctx, f)
    assert sum(1 for c in s.coeffs if c) == sum(1 for c in f.coeffs if c)


def test_quotient_units_match_brute_force():
    for params, n in [(("R", 2, None, F2), 3), (("S", 2, None, F2), 2), (("T", 2, 2, F2), 2),
                      (("R", 1, None, F4), 3), (("R", 2, None, F2), 4)]:
        ctx = QuotientCtx(ring_construct(*params), n)
        allv = ctx.vector_array()
        m = len(allv)
        prods = ctx.mul_vectors(np.repeat(allv, m, axis=0), np.tile(allv, (m, 1)))
        brute = np.all(prods == ctx.one_vector(), axis=1).reshape(m, m).any(axis=1)
        assert np.array_equal(ctx.unit_mask(allv), brute)


def test_inverse_and_annihilator():
    ctx = QuotientCtx(R2, 3)
    f = ctx.parse("x+u")
    inv = ctx.inverse(f)
    assert quotient_mul(ctx, f, inv) == ctx.one()
    assert format_poly(inv) == "{1}*x^2 + {u}*x"
    g = ctx.parse("x+1")
    assert ctx.inverse(g) is None
    ann = ctx.annihilator(g)
    assert ann and not quotient_mul(ctx, g, ann)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_poly_text_round_trip(data):
    spec = ring_construct("R", 3, None, F4)
    n = data.draw(st.integers(1, 5))
    coeffs = data.draw(st.lists(st.integers(0, 3), min_size=3 * n, max_size=3 * n))
    ctx = QuotientCtx(spec, n)
    f = ctx.from_vector(np.array(coeffs))
    text = format_poly(f)
    assert parse_poly(spec, text) == f
    assert format_poly(parse_poly(spec, text)) == text
