"""
Reducing Artin-Schreier right-hand sides
========================================

wp(b) = b^p - b.  Every rational function s reduces to a normal form whose
pole orders are prime to p, plus a witness w with s = nf + wp(w).
"""

from ascyclo import field_from_q, in_wp, is_equivalent, parse_ratfunc, wp_reduce

F2 = field_from_q(2)
for text in ["1/T^2", "T^2 + T", "(T+1)/T^4 + T^6", "T^3/(T+1)^3"]:
    s = parse_ratfunc(F2, text)
    nf, w = wp_reduce(s)
    print(f"{text:22} -> {str(nf):24} witness {w}")
    assert s - nf.value() == w**2 - w

# F_4: g has trace 1, so g is not of the form b^2 - b
F4 = field_from_q(4)
print("\ng in wp(F_4(T)) ?", in_wp(parse_ratfunc(F4, "g")))
print("g^2 + g in wp(F_4(T)) ?", in_wp(parse_ratfunc(F4, "g^2 + g")))

# over F_3 the fields of 1/T and 2/T coincide (j = 2), 1/T and 1/T + 1 do not
F3 = field_from_q(3)
nf = lambda t: wp_reduce(parse_ratfunc(F3, t))[0]
print("\n1/T vs 2/T:", is_equivalent(nf("1/T"), nf("2/T")))
print("1/T vs 1/T + 1:", is_equivalent(nf("1/T"), nf("1/T + 1")))
