"""
The Carlitz module
==================

[T](u) = T u + u^q, extended to every M in F_q[T] by composition and addition.
"""

from ascyclo import carlitz_action, field_from_q, phi
from ascyclo.algebra import PrimePoly, parse_poly
from ascyclo.carlitz import torsion_report

F2 = field_from_q(2)
for text in ["T", "T^2", "T^2 + 1", "T^3 + T + 1"]:
    M = parse_poly(F2, text)
    print(f"[{text}](u) = {carlitz_action(M)}")

# composition and addition mirror multiplication and addition in F_q[T]
F3 = field_from_q(3)
M, N = parse_poly(F3, "T + 1"), parse_poly(F3, "T^2 + 2")
A, B = carlitz_action(M), carlitz_action(N)
print("\n[MN] == [M] o [N]:", carlitz_action(M * N) == A @ B)
print("[M+N] == [M] + [N]:", carlitz_action(M + N) == A + B)

# the number of primitive P^beta-torsion points is Phi(P^beta)
P = PrimePoly.of(parse_poly(F3, "T^2 + 1"))
for beta in (1, 2, 3):
    r = torsion_report(P, beta)
    print(f"beta={beta}: deg difference {r['difference']}, Phi {phi(P, beta)}, quotient degree {r['quotient_degree']}")
