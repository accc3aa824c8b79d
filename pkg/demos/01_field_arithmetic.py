"""
Finite fields and polynomials over them
=======================================

Elements of F_q are small integer codes; polynomials in T are tuples of codes.
"""

from ascyclo.algebra import FqElem, Poly, enumerate_monic_irreducibles, factor, field_from_q, parse_poly

F4 = field_from_q(4)
print("F_4 modulus (low to high):", F4.modulus)
g = FqElem(F4, F4.generator)
print("g =", g, " g^2 =", g * g, " g^3 =", g**3)

# the absolute trace decides whether b^2 - b = a is solvable in F_4
for a in range(4):
    print(f"  Tr({FqElem(F4, a)}) = {F4.trace(a)}")

spacer = "-" * 60
print(spacer)

F2 = field_from_q(2)
f = parse_poly(F2, "T^6 + T^5 + T^3 + T^2 + T + 1")
lc, fac = factor(f)
print("factor", f, "=", " * ".join(f"({P})^{e}" for P, e in fac))

print(spacer)
print("monic irreducibles of degree <= 3 over F_2, in enumeration order:")
for P in enumerate_monic_irreducibles(F2, 3):
    print("  ", P)

T = Poly.T(F2)
print("(T^3 + T + 1) mod (T^2 + 1) =", (T**3 + T + 1) % (T**2 + 1))
