"""
Counting fields ramified at one prime
=====================================

Enumerate every y^p - y = a + h/P^alpha (h prime to P, deg h < d alpha),
reduce each to normal form and group the equations that define the same field.
"""

import time

from ascyclo import census_bruteforce, field_from_q, n_alpha
from ascyclo.algebra import enumerate_monic_irreducibles

for q in (2, 3, 4):
    F = field_from_q(q)
    for P in list(enumerate_monic_irreducibles(F, 1))[:1]:
        for alpha in range(1, 6):
            if alpha % F.p == 0:
                continue
            t0 = time.perf_counter()
            rep = census_bruteforce(P, alpha)
            print(f"q={q} P={P} alpha={alpha}: {rep.enumerated_equations:6} equations, "
                  f"{rep.brute_count:5} fields (formula {n_alpha(P, alpha)}), "
                  f"class sizes {rep.class_sizes}  [{time.perf_counter() - t0:.2f}s]")

rep = census_bruteforce(list(enumerate_monic_irreducibles(field_from_q(3), 1))[0], 2, max_representatives=5)
print("\nfirst representatives over F_3, alpha = 2:")
for nf in rep.class_representatives:
    print("  ", nf)
