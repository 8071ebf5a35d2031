"""
Local rings, principal ideals and chains
========================================

R[x]/(x^n - 1) over R_2 is local exactly when n is a power of the characteristic.
"""

from ringcodes import QuotientCtx, chain_check, ideal_span, is_local, is_principal, parse_elem, ring_construct

r2 = ring_construct("R", 2)
for n in range(1, 7):
    rep = is_local(QuotientCtx(r2, n))
    extra = "" if rep.holds else f"  {rep.witness['a']}  +  {rep.witness['b']}  =  {rep.witness['a_plus_b']} (unit)"
    print(f"n={n}: local={rep.holds}{extra}")

# (u1, u2) in S_2 needs two generators
s2 = ring_construct("S", 2)
ideal = ideal_span(s2, [parse_elem(s2, "u1"), parse_elem(s2, "u2")])
print(ideal.describe(), "principal:", is_principal(s2, ideal).holds)

print("R_3:", chain_check(ring_construct("R", 3)).witness["chain"])
print("S_2:", chain_check(s2).witness["incomparable"], "are incomparable")

# above the enumeration cap a certified witness still settles non-locality
rep = is_local(QuotientCtx(s2, 6))
print("S_2, n=6:", rep.verdict, "|", rep.deviations[0])
