"""
Cyclic codes as ideals of R[x]/(x^n - 1)
========================================

A code is stored as an F_q basis of the ideal, so size and membership are exact
even when the code is not a free module.
"""

from ringcodes import QuotientCtx, code_build, free_rank_check, min_distance, ring_construct, two_generator_build
from ringcodes.poly import format_poly, monic_divisors, parse_poly

r2 = ring_construct("R", 2)
ctx = QuotientCtx(r2, 3)

# (x+1) over R_2 in length 3: free of rank 2, 4^2 words
code = code_build(ctx, [ctx.parse("x+1")])
print("dim over F_2:", code.rank, " |C| =", code.cardinality, " d =", min_distance(code))

# every monic divisor h of x^3 - 1 gives a free code of rank n - deg h
for h in monic_divisors(r2, 3):
    rep = free_rank_check(ctx, h)
    print(f"h = {format_poly(h):32s} rank {rep.witness['free_rank']}  {rep.verdict}")

# two generators (g + u p, u a): the count q^(2n-r-t) needs a | p (x^n-1)/g
P = lambda t: parse_poly(r2, t)
for n, g, p, a in [(2, "x+1", "0", "1"), (3, "x+1", "0", "x+1"), (3, "x+1", "1", "x+1")]:
    _, rep = two_generator_build(QuotientCtx(r2, n), P(g), P(p), P(a))
    w = rep.witness
    print(f"n={n} g={g} p={p} a={a}: |C|={w['observed']} formula={w['expected']} "
          f"side condition={w['a_divides_p_times_cofactor']}")
