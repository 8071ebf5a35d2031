import itertools

import numpy as np
import pytest

from ringcodes.codes import (
    cardinality_bound_check,
    cardinality_formula_check,
    classify_p_adic,
    classify_report,
    code_build,
    code_contains,
    code_enumerate,
    distance_doubling_check,
    free_rank_check,
    hamming_weight,
    min_distance,
    min_weight_word,
    two_generator_build,
)
from ringcodes.errors import CapExceeded, DomainError, PreconditionError
from ringcodes.fields import field
from ringcodes.poly import (
    QuotientCtx,
    RingPoly,
    cyclic_shift,
    format_poly,
    monic_divisors,
    parse_poly,
    poly_divmod_monic,
)
from ringcodes.rings import ring_construct

F2, F3, F4 = field(2), field(3), field(2, 2)
R1, R2 = ring_construct("R", 1), ring_construct("R", 2)


def ctx_of(spec, n):
    return QuotientCtx(spec, n)


def test_code_build_examples():
    ctx = ctx_of(R2, 3)
    code = code_build(ctx, [ctx.parse("x+1")])
    assert code.rank == 4 and code.cardinality == 16
    assert len(list(code_enumerate(code))) == 16
    rep = code_build(ctx_of(R1, 4), [parse_poly(R1, "1+x+x^2+x^3")])
    assert rep.rank == 1 and rep.cardinality == 2
    zero = code_build(ctx, [ctx.zero()])
    assert zero.rank == 0 and zero.cardinality == 1
    assert [format_poly(c) for c in code_enumerate(zero)] == ["0"]
    full = code_build(ctx, [ctx.one()])
    assert full.cardinality == 4**3


def test_membership_examples():
    ctx = ctx_of(R2, 3)
    g = ctx.parse("x+1")
    code = code_build(ctx, [g])
    assert code_contains(code, g)
    assert code_contains(code, cyclic_shift(ctx, g))
    c2 = code_build(ctx_of(R1, 2), [parse_poly(R1, "x-1")])
    assert not code_contains(c2, c2.ctx.one())


@pytest.mark.parametrize("params,n,gens", [
    (("R", 2, None, F2), 3, ["x+1"]),
    (("R", 2, None, F2), 4, ["u*x+1+x^2", "u"]),
    (("S", 2, None, F2), 2, ["u1+x", "u2*x"]),
    (("T", 2, 2, F2), 2, ["u+v*x"]),
    (("R", 3, None, F4), 2, ["w*u+x"]),
])
def test_ideal_closure_exhaustive(params, n, gens):
    spec = ring_construct(*params)
    ctx = ctx_of(spec, n)
    code = code_build(ctx, [ctx.parse(g) for g in gens])
    words = list(code_enumerate(code))
    assert len(words) == code.cardinality
    for c in words:
        assert c in code
        assert code_contains(code, cyclic_shift(ctx, c))
        for m in spec.monomials():
            assert code_contains(code, ctx.reduce(c * RingPoly.constant(m)))


def test_presentation_independence():
    ctx = ctx_of(R2, 4)
    h = ctx.parse("x^2+1")
    a = code_build(ctx, [h])
    b = code_build(ctx, [h, ctx.reduce(h.shift(1))])
    assert a.same_space(b)


def test_distance_examples():
    assert min_distance(code_build(ctx_of(R1, 4), [parse_poly(R1, "1+x+x^2+x^3")])) == 4
    assert min_distance(code_build(ctx_of(R1, 2), [parse_poly(R1, "x+1")])) == 2
    with pytest.raises(DomainError, match="distance undefined"):
        min_distance(code_build(ctx_of(R1, 2), [RingPoly.zero(R1)]))
    assert hamming_weight(parse_poly(R2, "{u}*x^3+{1+u}")) == 2


def test_distance_invariant_under_generator_shift():
    ctx = ctx_of(R2, 4)
    gens = [ctx.parse("x^2+u*x+1")]
    d = min_distance(code_build(ctx, gens))
    shifted = [cyclic_shift(ctx, g) for g in gens]
    assert min_distance(code_build(ctx, shifted)) == d
    d_word, word = min_weight_word(code_build(ctx, gens))
    assert hamming_weight(word) == d_word == d


def test_free_rank_examples():
    ctx = ctx_of(R2, 3)
    rep = free_rank_check(ctx, parse_poly(R2, "x+1"))
    assert rep.holds and rep.witness["free_rank"] == 2 and rep.witness["fq_dimension"] == 4
    assert rep.witness["basis"] == ["{1}*x + {1}", "{1}*x^2 + {1}*x"]
    rep = free_rank_check(ctx_of(R1, 3), parse_poly(R1, "x^2+x+1"))
    assert rep.holds and rep.witness["free_rank"] == 1
    rep = free_rank_check(ctx, parse_poly(R2, "x^3-1"))
    assert rep.holds and rep.witness["free_rank"] == 0 and rep.deviations
    with pytest.raises(PreconditionError):
        free_rank_check(ctx, parse_poly(R2, "x^2+1"))


def test_free_rank_all_divisors():
    for spec, n in [(R1, 3), (R1, 7), (R2, 3), (ring_construct("R", 1, None, F4), 3)]:
        ctx = ctx_of(spec, n)
        for h in monic_divisors(spec, n):
            rep = free_rank_check(ctx, h)
            assert rep.holds, rep.to_text()
            assert rep.witness["fq_dimension"] == spec.s * (n - int(h.degree))
            assert cardinality_formula_check(ctx, h).holds


def test_cardinality_examples():
    rep = cardinality_formula_check(ctx_of(R2, 3), parse_poly(R2, "x+1"))
    assert rep.holds and rep.witness["observed"] == 16
    f4 = ring_construct("R", 1, None, F4)
    rep = cardinality_formula_check(ctx_of(f4, 3), parse_poly(f4, "x-1"))
    assert rep.holds and rep.witness["observed"] == 16
    rep = cardinality_formula_check(ctx_of(R2, 3), parse_poly(R2, "1"))
    assert rep.holds and rep.witness["observed"] == 4**3


def test_cardinality_bound_random():
    rng = np.random.default_rng(3)
    for params, n in [(("R", 2, None, F2), 3), (("S", 2, None, F2), 2), (("T", 2, 2, F2), 3)]:
        ctx = ctx_of(ring_construct(*params), n)
        for _ in range(20):
            gens = [ctx.from_vector(rng.integers(0, 2, ctx.dim)) for _ in range(rng.integers(1, 3))]
            rep = cardinality_bound_check(code_build(ctx, gens))
            assert rep.holds
        full = cardinality_bound_check(code_build(ctx, [ctx.one()]))
        assert full.witness["cardinality"] == full.witness["bound"]


def test_two_generator_examples():
    ctx = ctx_of(R2, 2)
    P = lambda t: parse_poly(R2, t)
    code, rep = two_generator_build(ctx, P("x+1"), P("0"), P("1"))
    assert rep.holds and code.cardinality == 8 and rep.witness["enumerated"] == 8
    code, rep = two_generator_build(ctx, P("x^2-1"), P("0"), P("x+1"))
    assert rep.holds and code.cardinality == 2
    assert sorted(format_poly(c) for c in code_enumerate(code)) == ["0", "{u}*x + {u}"]
    code, rep = two_generator_build(ctx_of(R2, 3), P("x+1"), P("0"), P("x+1"))
    assert rep.holds and rep.witness["expected"] == 2 ** (6 - 1 - 1)
    with pytest.raises(PreconditionError):
        two_generator_build(ctx, P("x+1"), P("x"), P("x+1"))
    with pytest.raises(PreconditionError):
        two_generator_build(ctx_of(R1, 2), parse_poly(R1, "x+1"), parse_poly(R1, "0"), parse_poly(R1, "1"))


def test_classify_examples():
    assert str(classify_p_adic(12, 2)) == "ZeroExpansion(t=2)"
    assert str(classify_p_adic(3, 2)) == "FullExpansion"
    assert str(classify_p_adic(5, 2)) == "NonZeroExpansion(t=1)"
    assert classify_p_adic(12, 2).digits == (1, 1, 0, 0)
    assert classify_report(12, 2).deviations


@pytest.mark.parametrize("n,p", list(itertools.product(range(1, 60), [2, 3, 5])))
def test_classify_digits_reconstruct(n, p):
    c = classify_p_adic(n, p)
    assert sum(d * p**k for k, d in enumerate(reversed(c.digits))) == n
    assert c.digits[0] != 0 and c.t >= 1


def test_distance_doubling_examples():
    P = lambda t: parse_poly(R1, t)
    rep = distance_doubling_check(R1, 2, 2, 1, P("1+x"))
    assert rep.holds and (rep.witness["d_C1"], rep.witness["d_C"]) == (2, 4)
    assert rep.params["g"] == "{1}*x^3 + {1}*x^2 + {1}*x + {1}"
    rep = distance_doubling_check(R1, 2, 2, 1, P("1"))
    assert rep.holds and rep.params["g"] == "{1}*x^2 + {1}"
    rep = distance_doubling_check(R2, 2, 1, 1, parse_poly(R2, "1"))
    assert rep.holds and rep.witness["d_C"] == 2


def test_distance_doubling_counterexample_is_reported():
    r1 = ring_construct("R", 1, None, F3)
    rep = distance_doubling_check(r1, 3, 2, 1, parse_poly(r1, "x-1"))
    assert not rep.holds
    ce = rep.witness["counterexample"]
    assert ce["weight"] == 3 and ce["expected"] == 4
    word = parse_poly(r1, ce["codeword"])
    assert hamming_weight(word) == 3
    code = code_build(ctx_of(r1, 9), [parse_poly(r1, rep.params["g"])])
    assert code_contains(code, word)


def test_caps():
    ctx = ctx_of(ring_construct("S", 2), 6)
    with pytest.raises(CapExceeded, match="enumeration too large"):
        min_distance(code_build(ctx, [ctx.one()]), max_enum=1000)
    with pytest.raises(CapExceeded):
        code_build(ctx, [ctx.one()], max_dim=10)


def test_two_generator_formula_tracks_side_condition():
    P = lambda t: parse_poly(R2, t)
    code, rep = two_generator_build(ctx_of(R2, 3), P("x+1"), P("1"), P("x+1"))
    assert not rep.holds
    assert (rep.witness["observed"], rep.witness["expected"]) == (32, 16)
    assert rep.witness["a_divides_p_times_cofactor"] is False and rep.deviations
    for n in (2, 3, 4):
        ctx = ctx_of(R2, n)
        for g in monic_divisors(R1, n):
            g = parse_poly(R2, format_poly(g))
            for a in monic_divisors(R1, n):
                a = parse_poly(R2, format_poly(a))
                if a.degree > g.degree or poly_divmod_monic(g, a)[1]:
                    continue
                for p in ("0", "1", "x"):
                    p = P(p)
                    if not p.degree < a.degree:
                        continue
                    _, rep = two_generator_build(ctx, g, p, a)
                    assert rep.holds == rep.witness["a_divides_p_times_cofactor"]
