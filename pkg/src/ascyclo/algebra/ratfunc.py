"""The rational function field F_q(T): reduced fractions, valuations, partial fractions."""

import math

from ..errors import FieldMismatch
from .field import FqElem
from .poly import NEG_INF, Poly, PrimePoly, factor, gcd, invmod, poly_divmod


class InfinitePrime:
    """The place at infinity of F_q(T).  Use the ``INFINITY`` singleton."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "oo"

    def __reduce__(self):
        return (InfinitePrime, ())


INFINITY = InfinitePrime()


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic.  Immutable and hashable."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc) and den is None:
            n, d = num.num, num.den
        else:
            if den is None:
                den = Poly.one(num.field)
            if num.field != den.field:
                raise FieldMismatch("numerator and denominator over different fields")
            if den.is_zero():
                raise ZeroDivisionError("zero denominator")
            g = gcd(num, den)
            n, d = num // g, den // g
            c = d.field.inv(d.lc)
            n, d = n.scale(c), d.scale(c)
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def _raw(cls, num, den):
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls, field):
        return cls._raw(Poly.zero(field), Poly.one(field))

    @classmethod
    def from_poly(cls, poly):
        return cls._raw(poly, Poly.one(poly.field))

    @classmethod
    def constant(cls, field, c):
        return cls._raw(Poly.constant(field, c), Poly.one(field))

    @property
    def field(self):
        return self.num.field

    @property
    def degree(self):
        """deg num - deg den, i.e. minus the valuation at infinity."""
        if self.num.is_zero():
            return NEG_INF
        return self.num.degree - self.den.degree

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, FqElem)):
            return self == _as_ratfunc(other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        from .grammar import format_ratfunc

        return format_ratfunc(self)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldMismatch("rational functions over different fields")
            return other
        if isinstance(other, (Poly, int, FqElem)):
            return _as_ratfunc(other, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        # powers of coprime polynomials stay coprime and a monic den stays monic
        return RatFunc._raw(self.num**n, self.den**n)


def _as_ratfunc(x, field):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        if x.field != field:
            raise FieldMismatch("polynomial over another field")
        return RatFunc.from_poly(x)
    if isinstance(x, FqElem):
        return RatFunc.constant(field, x.code)
    return RatFunc.constant(field, field.from_int(x))


def multiplicity(f, P):
    """Largest k with P^k | f (f nonzero)."""
    k = 0
    while True:
        quo, rem = poly_divmod(f, P)
        if not rem.is_zero():
            return k
        f = quo
        k += 1


def valuation(r, at):
    """nu_P(r) for a monic irreducible P, or nu_oo(r) when ``at`` is INFINITY.

    Returns ``math.inf`` for r = 0.
    """
    if r.is_zero():
        return math.inf
    if at is INFINITY:
        return r.den.degree - r.num.degree
    return multiplicity(r.num, at) - multiplicity(r.den, at)


def p_adic_digits(f, P, n):
    """Digits c_0..c_{n-1} (deg c_k < deg P) with f = sum c_k P^k, for deg f < n deg P."""
    out = []
    for _ in range(n):
        f, r = poly_divmod(f, P)
        out.append(r)
    if not f.is_zero():
        raise ValueError("polynomial too large for the requested number of digits")
    return out


def from_p_adic_digits(digits, P):
    acc = Poly.zero(P.field)
    for c in reversed(digits):
        acc = acc * P + c
    return acc


def partial_fractions(r):
    """Split r into polypart + sum f_i / P_i^{a_i}.

    Returns (polypart, [(P_i, a_i, f_i)]) with distinct monic irreducible P_i in
    canonical order, deg f_i < a_i deg P_i and gcd(f_i, P_i) = 1.
    """
    polypart, rem = poly_divmod(r.num, r.den)
    if r.den.is_one():
        return polypart, []
    _, fac = factor(r.den)
    terms = []
    for P, e in fac:
        Pe = P**e
        cof = r.den // Pe
        f = (rem * invmod(cof % Pe, Pe)) % Pe
        terms.append((PrimePoly.of(P, check=False), e, f))
    return polypart, terms


def recombine(polypart, terms):
    """Inverse of :func:`partial_fractions`."""
    acc = RatFunc.from_poly(polypart)
    for P, e, f in terms:
        acc = acc + RatFunc(f, P**e)
    return acc
