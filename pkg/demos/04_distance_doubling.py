"""
Distance of (x^(a p^(r-1)) - 1) g1
==================================

Both distances are found by enumerating the codes; a failure comes with the
offending codeword.
"""

from ringcodes import distance_doubling_check, field, ring_construct
from ringcodes.poly import parse_poly

f2 = ring_construct("R", 1)
for g1 in ["1", "1+x", "1+x^2", "1+x+x^2+x^3"]:
    rep = distance_doubling_check(f2, 2, 3, 1, parse_poly(f2, g1))
    print(f"F_2, n=8, g1={g1:12s} d(C1)={rep.witness['d_C1']} d(C)={rep.witness['d_C']} {rep.verdict}")

f3 = ring_construct("R", 1, field=field(3))
rep = distance_doubling_check(f3, 3, 2, 1, parse_poly(f3, "x-1"))
print("F_3, n=9, g1=x-1:", rep.verdict, rep.witness["counterexample"])
