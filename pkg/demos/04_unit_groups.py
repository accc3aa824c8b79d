"""
Elements of order p in (F_q[T]/P^beta)^*
========================================
"""

from ascyclo import count_order_p, field_from_q, n_beta, phi
from ascyclo.algebra import parse_poly, PrimePoly
from ascyclo.unit_group import n_beta_difference, scan_units

F2 = field_from_q(2)
P = PrimePoly.of(parse_poly(F2, "T^2 + T + 1"))
print(f"{'beta':>4} {'units':>6} {'order p':>8} {'brute':>6} {'subgroups':>9}")
for beta in range(1, 7):
    scan = scan_units(P, beta)
    print(f"{beta:4} {phi(P, beta):6} {count_order_p(P, beta):8} {scan.order_p:6} {n_beta(P, beta):9}")

# the census of fields is p times the jump in subgroup counts
print()
for alpha in (1, 3, 5):
    print(f"alpha={alpha}: n(alpha+1) - n(alpha) = {n_beta_difference(P, alpha)}")
