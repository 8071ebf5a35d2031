import numpy as np
import pytest

from ringcodes.analysis import (
    augmentation,
    augmentation_check,
    chain_check,
    factorization_search,
    factorization_witness,
    ideal_span,
    is_local,
    is_principal,
)
from ringcodes.errors import CapExceeded
from ringcodes.fields import field
from ringcodes.poly import QuotientCtx, RingPoly, parse_poly
from ringcodes.rings import parse_elem, ring_construct

F2, F4 = field(2), field(2, 2)
R1, R2, R3 = (ring_construct("R", i) for i in (1, 2, 3))
S2, T22 = ring_construct("S", 2), ring_construct("T", 2, 2)


def E(spec, text):
    return parse_elem(spec, text)


def test_augmentation_examples():
    ctx = QuotientCtx(R1, 3)
    assert augmentation(ctx, ctx.parse("x-1")) == R1.zero()
    assert augmentation(ctx, ctx.parse("1+x+x^2")) == R1.one()
    ctx = QuotientCtx(R2, 3)
    c = E(R2, "1+u")
    assert augmentation(ctx, RingPoly.constant(c)) == c


@pytest.mark.parametrize("spec,n", [(R2, 3), (R2, 4), (S2, 2), (T22, 2), (ring_construct("R", 2, None, F4), 2),
                                    (S2, 6), (T22, 5)])
def test_augmentation_homomorphism(spec, n):
    rep = augmentation_check(QuotientCtx(spec, n))
    assert rep.holds and rep.witness["violations"] == 0
    assert rep.witness["exhaustive"] == (spec.size**n <= 2**12)


def test_ideal_span_examples():
    i = ideal_span(S2, [E(S2, "u1"), E(S2, "u2")])
    assert i.rank == 3 and i.size == 8
    assert i.describe() == "span{u1, u2, u1*u2}"
    i = ideal_span(R3, [E(R3, "u")])
    assert sorted(R3.format(a) for a in i.elements()) == sorted(["0", "u", "u^2", "u+u^2"])
    for parent in (S2, QuotientCtx(R2, 3)):
        whole = ideal_span(parent, [parent.one()])
        assert whole.size == parent.size


def test_ideal_span_idempotent_and_closed():
    ctx = QuotientCtx(T22, 2)
    i = ideal_span(ctx, [ctx.parse("{u}*x+{v}"), ctx.parse("{u*v}")])
    again = ideal_span(ctx, i.elements())
    assert again == i
    elems = i.element_vectors()
    allv = ctx.vector_array()
    rng = np.random.default_rng(0)
    a = elems[rng.integers(0, len(elems), 2000)]
    b = elems[rng.integers(0, len(elems), 2000)]
    r = allv[rng.integers(0, len(allv), 2000)]
    assert i.contains_vectors(ctx.field.vadd(a, b)).all()
    assert i.contains_vectors(ctx.mul_vectors(r, a)).all()


def test_principal_examples():
    rep = is_principal(S2, ideal_span(S2, [E(S2, "u1"), E(S2, "u2")]))
    assert not rep.holds and rep.witness["generator"] is None and rep.witness["candidates_searched"] == 8
    rep = is_principal(R3, ideal_span(R3, [E(R3, "u^2"), E(R3, "u")]))
    assert rep.holds and rep.witness["generator"] == "u"
    rep = is_principal(R3, ideal_span(R3, []))
    assert rep.holds and rep.witness["generator"] == "0"


@pytest.mark.parametrize("spec,gens", [
    (ring_construct("S", 3), ["u1", "u2", "u3"]),
    (ring_construct("S", 2, None, field(3)), ["u1", "u2"]),
    (ring_construct("T", 3, 2), ["u", "v"]),
    (ring_construct("T", 2, 3), ["u", "v"]),
    (ring_construct("T", 3, 3), ["u", "v"]),
])
def test_variable_ideals_not_principal(spec, gens):
    rep = is_principal(spec, ideal_span(spec, [E(spec, g) for g in gens]))
    assert not rep.holds


def test_local_examples():
    assert is_local(QuotientCtx(R2, 2)).holds
    rep = is_local(QuotientCtx(R2, 3))
    assert not rep.holds
    ctx = QuotientCtx(R2, 3)
    a, b = ctx.parse(rep.witness["a"]), ctx.parse(rep.witness["b"])
    assert not ctx.is_unit(a) and not ctx.is_unit(b) and ctx.is_unit(ctx.reduce(a + b))
    assert is_local(R2).holds


@pytest.mark.parametrize("spec", [R1, R2, R3, ring_construct("R", 2, None, field(3))])
def test_locality_matches_p_power_rule(spec):
    p = spec.field.p
    for n in range(1, 7):
        if spec.size**n > 2**16:
            continue
        m = n
        while m % p == 0:
            m //= p
        assert is_local(QuotientCtx(spec, n)).holds == (m == 1), (spec.descriptor, n)


def test_local_above_cap_uses_certified_witness():
    ctx = QuotientCtx(S2, 6)
    rep = is_local(ctx)
    assert not rep.holds and not rep.witness["exhaustive"] and rep.deviations
    a, b = ctx.parse(rep.witness["a"]), ctx.parse(rep.witness["b"])
    s = ctx.reduce(a + b)
    assert not ctx.is_unit(a) and not ctx.is_unit(b) and ctx.is_unit(s)
    assert ctx.mul(s, ctx.parse(rep.witness["inverse_of_sum"])) == ctx.one()
    with pytest.raises(CapExceeded):
        is_local(QuotientCtx(S2, 4), max_enum=1000)  # 4 = 2^2: no witness exists


def test_chain_examples():
    rep = chain_check(R3)
    assert rep.holds and rep.witness["chain"] == "0 ⊂ (u^2) ⊂ (u) ⊂ R"
    assert rep.witness["ideal_count"] == 4
    rep = chain_check(ring_construct("R", 1, None, F4))
    assert rep.holds and rep.witness["chain"] == "0 ⊂ R"
    rep = chain_check(S2)
    assert not rep.holds and set(rep.witness["incomparable"]) == {"(u1)", "(u2)"}


def test_chain_for_r_family():
    for i in range(1, 6):
        rep = chain_check(ring_construct("R", i))
        assert rep.holds and rep.witness["ideal_count"] == i + 1


def test_factorization_examples():
    r3 = ring_construct("R", 3, None, F4)
    P = lambda s, t: parse_poly(s, t)
    rep = factorization_witness(r3, 2, [[P(r3, "x-1")] * 2, [P(r3, "x-(1-u^2)")] * 2])
    assert rep.holds and rep.witness["distinct_factorizations"] == 2 and rep.witness["non_unique"]
    t = ring_construct("T", 3, 2, F4)
    assert factorization_witness(t, 2, [[P(t, "x-(1+u^2+v)")] * 2]).holds
    assert factorization_witness(S2, 2, [[P(S2, "x-(1+u1*u2)")] * 2]).holds
    rep = factorization_witness(S2, 2, [[P(S2, "x-u1")] * 2])
    assert not rep.holds and rep.witness["failed"]


def test_collapsed_s3_witness_flagged():
    s3 = ring_construct("S", 3)
    P = lambda t: parse_poly(s3, t)
    rep = factorization_witness(s3, 2, [[P("x-1")] * 2, [P("x-(1+u1^2+u2^2+u3^2)")] * 2,
                                        [P("x-(1+u1*u2)")] * 2])
    assert rep.holds and rep.witness["distinct_factorizations"] == 2
    assert any("coincides" in d for d in rep.deviations)


def test_factorization_search():
    rep = factorization_search(S2, 2)
    assert rep.holds and rep.witness["distinct_factorizations"] == 8
    rep = factorization_search(R3, 3)
    assert rep.holds
