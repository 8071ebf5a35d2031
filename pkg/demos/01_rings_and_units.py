"""
Rings with nilpotent variables
==============================

R_i = F_q[u]/(u^i), S_i with square-zero variables, T_(i,j) in two variables.
Units are exactly the elements with a nonzero constant term.
"""

from ringcodes import elem_inverse, field, nilpotency_index, parse_elem, ring_construct

F4 = field(2, 2)  # F_4 = F_2[y]/(y^2+y+1); the class of y prints as w
r3 = ring_construct("R", 3, field=F4)
print(r3.descriptor, "has", r3.size, "elements, basis", r3.labels)

# 1 - u^2 squares to 1, so x - (1 - u^2) is a second square root of x^2 - 1
a = parse_elem(r3, "1-u^2")
print("(1-u^2)^2 =", r3.format(a * a))

b = parse_elem(r3, "w+u")
print("inverse of", r3.format(b), "is", r3.format(elem_inverse(r3, b)))
print("u is nilpotent of index", nilpotency_index(r3, parse_elem(r3, "u")))

# count units on every small ring and compare with (q-1) q^(s-1)
for fam, i, j in [("R", 2, None), ("S", 2, None), ("T", 2, 2), ("S", 3, None)]:
    spec = ring_construct(fam, i, j)
    units = int(spec.unit_mask(spec.vector_array()).sum())
    q, s = spec.field.q, spec.s
    print(f"{spec.descriptor:16s} units={units:4d}  (q-1)q^(s-1)={(q - 1) * q ** (s - 1)}")
