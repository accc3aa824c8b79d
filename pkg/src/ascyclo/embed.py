"""Explicit cyclotomic data containing an Artin-Schreier extension, and a splitting check.

For y^p - y = s with s in normal form

    s = constant + polypart + sum_i f_i / P_i^{a_i}

the extension K(y) lies in K(Lambda_M) K'(Lambda_{S^{n+1}}) F_{q^p} with
M = prod P_i^{a_i + 1}, S = 1/T, n = deg polypart (the second factor only
when polypart != 0).  ``splitting_smoke_test`` checks a necessary consequence:
a prime Q splitting completely in that composite must split in K(y), so
Tr_{F_{q^deg Q}/F_p}(s(theta)) = 0 for a root theta of Q.
"""

import json
from bisect import bisect_left
from dataclasses import dataclass, field as dc_field

from .algebra import Poly, PrimePoly, invmod, is_irreducible, mulmod
from .algebra.poly import _irreducible_lower_codes
from .artin_schreier import NormalForm, wp_reduce
from .errors import InWpError
from .unit_group import field_dict

UNKNOWN = "unknown"


@dataclass(frozen=True)
class EmbeddingCertificate:
    field: object
    finite_modulus: tuple
    infinite_exponent: int
    constant_degree: int
    source: NormalForm
    subforms: tuple = ()
    needs_constant_part: object = UNKNOWN
    minimal_for_cyclotomic_part: object = UNKNOWN

    @property
    def modulus(self):
        """M = prod P_i^{e_i} as a polynomial."""
        M = Poly.one(self.field)
        for P, e in self.finite_modulus:
            M = M * P**e
        return M

    def to_dict(self):
        return {
            "field": field_dict(self.field),
            "source": str(self.source),
            "finite_modulus": [{"prime": str(P), "exponent": e} for P, e in self.finite_modulus],
            "infinite_exponent": self.infinite_exponent,
            "constant_degree": self.constant_degree,
            "needs_constant_part": self.needs_constant_part,
            "minimal_for_cyclotomic_part": self.minimal_for_cyclotomic_part,
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def certify(s):
    """Embedding certificate for K(y), y^p - y = s (a RatFunc or a NormalForm)."""
    nf = s if isinstance(s, NormalForm) else wp_reduce(s)[0]
    if nf.is_zero():
        raise InWpError("s lies in wp(K); y^p - y = s defines no extension")
    F = nf.field
    finite = tuple((P, a + 1) for P, a, _ in nf.terms)
    inf_exp = nf.polypart.degree + 1 if not nf.polypart.is_zero() else 0

    # a nonzero constant with no pole at infinity leaves oo inert in K(y), while
    # oo has residue degree 1 in K(Lambda_M): the constant part is then required
    needs_const = True if nf.constant and inf_exp == 0 else UNKNOWN
    single_finite = len(nf.terms) == 1 and inf_exp == 0
    minimal = True if single_finite else UNKNOWN
    return EmbeddingCertificate(
        F, finite, inf_exp, F.p, nf, tuple(nf.pieces()), needs_const, minimal,
    )


def _is_irreducible_cached(Q):
    F = Q.field
    d = Q.degree
    if F.q <= 1024 and F.q**d <= 2**21:
        codes = _irreducible_lower_codes(F, d)
        low = Q.code - F.q**d
        i = bisect_left(codes, low)
        return i < len(codes) and codes[i] == low
    return is_irreducible(Q)


def infinity_splits(Q, n):
    """Does Q split completely in the Carlitz field of S^n, S = 1/T?

    With Q*(S) = S^D Q(1/S) normalized to be monic, the condition is
    Q* = 1 mod S^n: Q(0) = 1 and the coefficients of T^{D-1}, ..., T^{D-n+1}
    of Q vanish.
    """
    if n <= 0:
        return True
    D = Q.degree
    if Q[0] != 1:
        return False
    return all(Q[D - k] == 0 for k in range(1, n) if D - k >= 0)


def power_sums(Q):
    """p_k = sum of theta^k over the roots of Q, k = 0..D-1, by Newton's identities."""
    F = Q.field
    D = Q.degree
    a = Q.coeffs
    ps = [F.from_int(D)]
    for k in range(1, D):
        acc = F.scale(k, a[D - k])
        for i in range(1, k):
            acc = F.add(acc, F.mul(a[D - i], ps[k - i]))
        ps.append(F.neg(acc))
    return ps


def residue_trace(g, Q, ps=None):
    """Tr_{F_q[T]/(Q) / F_p} of the class of g."""
    F = Q.field
    ps = ps or power_sums(Q)
    g = g % Q
    acc = 0
    for i, c in enumerate(g.coeffs):
        acc = F.add(acc, F.mul(c, ps[i]))
    return F.trace(acc)


def evaluate_mod(r, Q):
    """The class of r = num/den in F_q[T]/(Q), Q prime to den."""
    return mulmod(r.num % Q, invmod(r.den % Q, Q), Q)


@dataclass
class SmokeReport:
    certificate: EmbeddingCertificate
    degree_bound: int
    tested: list = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)

    @property
    def status(self):
        if self.violations:
            return "violated"
        return "complete" if self.tested else "vacuous"

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {
            "certificate": self.certificate.to_dict(),
            "degree_bound": self.degree_bound,
            "status": self.status,
            "tested": [{"Q": str(Q), "degree": Q.degree, "trace": tr} for Q, tr in self.tested],
            "violations": [str(Q) for Q in self.violations],
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def qualifying_primes(cert, degree_bound):
    """Monic irreducible Q, deg Q <= bound, splitting completely in the composite field.

    Finite part: Q = 1 mod M, enumerated as Q = 1 + M k with k monic.
    Constant part: p | deg Q.  Infinite part: :func:`infinity_splits`.
    """
    F = cert.field
    p, q = F.p, F.q
    M = cert.modulus
    m = M.degree
    bad = [P for P, _ in cert.finite_modulus]
    one = Poly.one(F)
    out = []
    for D in range(p, degree_bound + 1, p):
        if D <= m:
            # Q = 1 + M k needs deg k >= 1, except Q = 1 itself
            continue
        kd = D - m
        top = q**kd
        for low in range(top):
            k = Poly.from_code(F, top + low)
            Q = one + M * k
            if not infinity_splits(Q, cert.infinite_exponent):
                continue
            if any(Q == P for P in bad) or not _is_irreducible_cached(Q):
                continue
            out.append(PrimePoly.of(Q, check=False))
    return out


def splitting_smoke_test(cert, degree_bound):
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    report = SmokeReport(cert, degree_bound)
    s = cert.source.value()
    for Q in qualifying_primes(cert, degree_bound):
        tr = residue_trace(evaluate_mod(s, Q), Q)
        report.tested.append((Q, tr))
        if tr != 0:
            report.violations.append(Q)
    return report
