"""
Embedding into cyclotomic function fields
=========================================

certify() names a Carlitz modulus and a constant extension whose compositum
contains K(y).  The smoke test looks at primes Q that split completely there:
they must split in K(y) too, i.e. s(theta) has trace 0 for a root theta of Q.
"""

from ascyclo import certify, field_from_q, parse_ratfunc, ramification_data, splitting_smoke_test

F2 = field_from_q(2)
for text in ["1/T", "1/(T*(T+1))", "T/(T^2+T+1)^3", "T^3 + 1/T"]:
    cert = certify(parse_ratfunc(F2, text))
    ram = ramification_data(cert.source)
    mod = " * ".join(f"({P})^{e}" for P, e in cert.finite_modulus) or "1"
    smoke = splitting_smoke_test(cert, 10)
    print(f"{text:16} modulus {mod:22} infinity exponent {cert.infinite_exponent}  "
          f"conductor exponents {ram.conductor_exponents}  smoke: {smoke.status}, "
          f"{len(smoke.tested)} primes")

cert = certify(parse_ratfunc(field_from_q(3), "1/T"))
smoke = splitting_smoke_test(cert, 6)
print("\nover F_3, y^3 - y = 1/T, split primes of degree <= 6:")
for Q, tr in smoke.tested[:8]:
    print(f"  {Q}   trace {tr}")
