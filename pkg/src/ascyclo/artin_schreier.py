"""Artin-Schreier right-hand sides modulo wp(K), wp(b) = b^p - b, K = F_q(T).

Every s in K is written uniquely as

    s = constant + polypart + sum_i f_i / P_i^{a_i} + wp(witness)

where

* constant lies in {i * rho : i in F_p}, rho the first element of F_q with
  nonzero absolute trace;
* polypart has zero constant term and no monomial T^n with p | n;
* each principal part f_i / P_i^{a_i} = sum_k u_k / P_i^k (deg u_k < deg P_i)
  has u_k = 0 whenever p | k, so in particular p does not divide a_i.

The representative set is an F_p-subspace complementary to wp(K), so the
reduction is F_p-linear and two normal forms are equal iff their right-hand
sides differ by an element of wp(K).  Field equality K(y1) = K(y2) becomes a
structural comparison after scaling by j in F_p^*.
"""

from dataclasses import dataclass, field as dc_field

from .algebra import (
    FieldSpec,
    FqElem,
    Poly,
    PrimePoly,
    RatFunc,
    from_p_adic_digits,
    p_adic_digits,
    partial_fractions,
    powmod,
)
from .errors import DegenerateInput, InvalidAlpha, NotSingleTerm, RhoInWp


@dataclass(frozen=True)
class NormalForm:
    field: FieldSpec
    constant: FqElem
    polypart: Poly
    terms: tuple = dc_field(default=())

    @classmethod
    def zero(cls, field):
        return cls(field, FqElem(field, 0), Poly.zero(field), ())

    def is_zero(self):
        return not self.constant and self.polypart.is_zero() and not self.terms

    def value(self):
        """The right-hand side as a rational function."""
        acc = RatFunc.from_poly(self.polypart + self.constant)
        for P, a, f in self.terms:
            acc = acc + RatFunc(f, P**a)
        return acc

    def scale(self, j):
        """The normal form of j * value for an integer j prime to p."""
        F = self.field
        j %= F.p
        if j == 0:
            return NormalForm.zero(F)
        return NormalForm(
            F,
            self.constant * j,
            self.polypart.scale(j),
            tuple((P, a, f.scale(j)) for P, a, f in self.terms),
        )

    @property
    def constant_index(self):
        """i in F_p with constant = i * rho."""
        F = self.field
        return F.trace(self.constant.code) * pow(F.trace(F.rho), F.p - 2, F.p) % F.p

    def pieces(self):
        """Single-place sub-forms whose values sum to this form's value.

        Order: pole terms (canonical prime order), then the polynomial part,
        then the constant.  Zero pieces are omitted.
        """
        F = self.field
        zero_c, zero_p = FqElem(F, 0), Poly.zero(F)
        out = [NormalForm(F, zero_c, zero_p, (t,)) for t in self.terms]
        if not self.polypart.is_zero():
            out.append(NormalForm(F, zero_c, self.polypart, ()))
        if self.constant:
            out.append(NormalForm(F, self.constant, zero_p, ()))
        return out

    def check(self):
        """Raise AssertionError if any normal-form invariant fails."""
        F = self.field
        p = F.p
        assert self.constant.code in {F.scale(i, F.rho) for i in range(p)}
        if not self.polypart.is_zero():
            assert self.polypart[0] == 0
            assert all(c == 0 for n, c in enumerate(self.polypart.coeffs) if n % p == 0)
            assert self.polypart.degree % p != 0
        primes = [P for P, _, _ in self.terms]
        assert len(set(primes)) == len(primes)
        assert primes == sorted(primes, key=lambda P: P.sort_key())
        for P, a, f in self.terms:
            assert a >= 1 and a % p != 0
            assert not f.is_zero() and f.degree < a * P.d
            digits = p_adic_digits(f, P, a)
            assert not digits[0].is_zero()
            for k, u in enumerate(digits):
                if (a - k) % p == 0:
                    assert u.is_zero()

    def to_dict(self):
        return {
            "value": str(self.value()),
            "constant": str(self.constant),
            "polypart": str(self.polypart),
            "terms": [{"prime": str(P), "alpha": a, "numerator": str(f)} for P, a, f in self.terms],
        }

    def __str__(self):
        return str(self.value())


def residue_pth_root(u, P):
    """The b with deg b < deg P and b^p = u mod P (residue field F_q[T]/(P))."""
    F = u.field
    return powmod(u, F.q**P.d // F.p, P)


def _reduce_pole(P, m, f, p):
    """Clear the digits of f/P^m at orders divisible by p.

    Returns (new order, new numerator, witness digits by order).
    """
    F = P.field
    zero = Poly.zero(F)
    digits = p_adic_digits(f, P, m)
    # u[o] is the coefficient of 1/P^o
    u = [zero] + [digits[m - o] for o in range(1, m + 1)]
    w = [zero] * (m + 1)
    for o in range(m, 0, -1):
        if o % p or u[o].is_zero():
            continue
        b = residue_pth_root(u[o], P)
        # b^p / P^o spreads over orders o, o-1, ..., o-p+1 (all >= 1 since o >= p)
        for i, di in enumerate(p_adic_digits(b.frobenius(), P, p)):
            if not di.is_zero():
                u[o - i] = u[o - i] - di
        assert u[o].is_zero()
        e = o // p
        u[e] = u[e] + b
        w[e] = w[e] + b
    top = max((o for o in range(1, m + 1) if not u[o].is_zero()), default=0)
    num = from_p_adic_digits([u[top - k] for k in range(top)], P) if top else zero
    return top, num, w


def wp_reduce(s):
    """Return (nf, witness) with s = nf.value() + witness^p - witness."""
    F = s.field
    p = F.p
    polypart, terms = partial_fractions(s)
    witness = RatFunc.zero(F)

    new_terms = []
    for P, m, f in terms:
        top, num, w = _reduce_pole(P, m, f, p)
        if top:
            new_terms.append((P, top, num))
        wtop = max((e for e in range(len(w)) if not w[e].is_zero()), default=0)
        if wtop:
            wnum = from_p_adic_digits([w[wtop - k] for k in range(wtop)], P)
            witness = witness + RatFunc(wnum, P**wtop)

    h = list(polypart.coeffs) or [0]
    wpoly = [0] * len(h)
    for n in range(len(h) - 1, 0, -1):
        if n % p == 0 and h[n]:
            b = F.pth_root(h[n])
            h[n] = 0
            h[n // p] = F.add(h[n // p], b)
            wpoly[n // p] = F.add(wpoly[n // p], b)
    a = h[0]
    h[0] = 0
    witness = witness + Poly(F, wpoly)

    i = F.trace(a) * pow(F.trace(F.rho), p - 2, p) % p
    rep = F.scale(i, F.rho)
    b0 = F.wp_preimage(F.sub(a, rep))
    witness = witness + FqElem(F, b0)

    nf = NormalForm(F, FqElem(F, rep), Poly(F, h), tuple(new_terms))
    return nf, witness


def normal_form(s):
    return wp_reduce(s)[0]


def in_wp(s):
    """True iff s = b^p - b for some b in F_q(T)."""
    return wp_reduce(s)[0].is_zero()


def is_equivalent(nf1, nf2):
    """The j in 1..p-1 with nf2 - j*nf1 in wp(K) (so K(y1) = K(y2)), else None."""
    if nf1.is_zero() or nf2.is_zero():
        raise DegenerateInput("a right-hand side in wp(K) defines no degree-p extension")
    # normal forms are unique representatives and scale is exact, so
    # nf2 - j*nf1 lies in wp(K) iff nf2 == nf1.scale(j)
    for j in range(1, nf1.field.p):
        if nf1.scale(j) == nf2:
            return j
    return None


def _check_alpha(alpha, p):
    if alpha < 1 or alpha % p == 0:
        raise InvalidAlpha(f"alpha = {alpha} must be a positive integer prime to p = {p}")


def equivalent_generator_data(P, alpha):
    """(number of generators z, number of distinct equations) for one field.

    For y^p - y = f/P^alpha in normal form: z = j y + h/P^{alpha0} with
    1 <= j <= p-1 and deg h <= d alpha0, and equations are counted up to the
    p-to-1 collapse c -> c + F_p.
    """
    F = P.field
    p, q = F.p, F.q
    _check_alpha(alpha, p)
    alpha0 = alpha // p
    count_z = (p - 1) * q ** (P.d * alpha0 + 1)
    return count_z, count_z // p


@dataclass(frozen=True)
class TwistFamily:
    base: NormalForm
    rho: FqElem
    numerators: tuple
    members: tuple

    @property
    def prime(self):
        return self.base.terms[0][0]

    @property
    def alpha(self):
        return self.base.terms[0][1]


def twist_family(base, rho):
    """The p right-hand sides (f + i rho P^alpha)/P^alpha, i = 0..p-1.

    These come from y_i = y + i xi with xi^p - xi = rho, i.e. from adjoining
    the constant field F_{q^p}.
    """
    F = base.field
    if isinstance(rho, int):
        rho = FqElem(F, rho)
    if len(base.terms) != 1 or base.constant or not base.polypart.is_zero():
        raise NotSingleTerm("twist families are built from a single pole term")
    if F.trace(rho.code) == 0:
        raise RhoInWp(f"rho = {rho} has zero absolute trace")
    P, alpha, f = base.terms[0]
    Pa = P**alpha
    nums = tuple(f + Pa * (rho * i) for i in range(F.p))
    members = tuple(RatFunc(g, Pa) for g in nums)
    return TwistFamily(base, rho, nums, members)
