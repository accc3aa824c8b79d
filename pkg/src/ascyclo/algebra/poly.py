"""Univariate polynomials over F_q: the ring R_T = F_q[T].

Coefficients are field codes (see :mod:`ascyclo.algebra.field`), stored low
degree first in a tuple with no trailing zeros.  The zero polynomial has
degree ``NEG_INF``.  Polynomials are ordered by (degree, code) where the code
of c_0 + ... + c_n T^n is sum c_i q^i; this is the enumeration order used by
every stream in the package.
"""

from functools import lru_cache

import numpy as np

from ..errors import DivisionByZeroPoly, FieldMismatch, NotIrreducible, ZeroPolynomial
from . import batch
from .field import FqElem, factorint

NEG_INF = float("-inf")

# monic irreducibles of degree d are sieved in one go when q^d is at most this
SIEVE_LIMIT = 2**21


# -- list-level kernels ------------------------------------------------------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    add = F.add
    for i, bi in enumerate(b):
        if bi:
            out[i] = add(out[i], bi)
    return _trim(out)


def _sub(F, a, b):
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    sub = F.sub
    for i, bi in enumerate(b):
        if bi:
            out[i] = sub(out[i], bi)
    return _trim(out)


def _scale(F, c, a):
    if c == 0:
        return []
    mul = F.mul
    return [mul(c, x) for x in a]


def _mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = add(out[i + j], mul(ai, bj))
    return _trim(out)


def _divmod(F, a, b):
    if not b:
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv_lead = F.inv(b[-1])
    quo = [0] * (len(r) - db)
    sub, mul = F.sub, F.mul
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = mul(c, inv_lead)
        quo[k - db] = c
        base = k - db
        for i, bi in enumerate(b):
            if bi:
                r[base + i] = sub(r[base + i], mul(c, bi))
    return _trim(quo), _trim(r[:db])


def _mod(F, a, b):
    return _divmod(F, a, b)[1]


class Poly:
    """An element of F_q[T].  Immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        c = []
        for x in coeffs:
            if isinstance(x, FqElem):
                if x.field != field:
                    raise FieldMismatch("coefficient from another field")
                x = x.code
            elif not 0 <= x < field.q:
                raise ValueError(f"coefficient code {x} out of range")
            c.append(x)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # constructors

    @classmethod
    def zero(cls, field):
        return cls._raw(field, ())

    @classmethod
    def one(cls, field):
        return cls._raw(field, (1,))

    @classmethod
    def T(cls, field):
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        if isinstance(c, FqElem):
            c = c.code
        return cls._raw(field, (c,) if c else ())

    @classmethod
    def monomial(cls, field, c, n):
        if isinstance(c, FqElem):
            c = c.code
        return cls._raw(field, (0,) * n + (c,) if c else ())

    @classmethod
    def from_code(cls, field, code):
        out = []
        while code:
            code, r = divmod(code, field.q)
            out.append(r)
        return cls._raw(field, out)

    @classmethod
    def from_ints(cls, field, ints):
        """Coefficients given as integers reduced into the prime field."""
        return cls(field, [field.from_int(i) for i in ints])

    # basic properties

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def is_monic(self):
        return self.lc == 1

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    @property
    def code(self):
        q, out = self.field.q, 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def sort_key(self):
        return (len(self.coeffs), self.code)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == tuple(_trim([self.field.from_int(other)]))
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        from .grammar import format_poly

        return format_poly(self)

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise FieldMismatch("polynomials over different fields")
            return other.coeffs
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch("scalar from another field")
            return (other.code,) if other.code else ()
        if isinstance(other, int):
            c = self.field.from_int(other)
            return (c,) if c else ()
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Poly._raw(self.field, _add(self.field, self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Poly._raw(self.field, _sub(self.field, self.coeffs, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Poly._raw(self.field, _sub(self.field, b, self.coeffs))

    def __neg__(self):
        F = self.field
        return Poly._raw(F, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Poly._raw(self.field, _mul(self.field, self.coeffs, b))

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by a scalar code."""
        return Poly._raw(self.field, _scale(self.field, c, self.coeffs))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = [1], list(self.coeffs)
        F = self.field
        while n:
            if n & 1:
                result = _mul(F, result, base)
            n >>= 1
            if n:
                base = _mul(F, base, base)
        return Poly._raw(F, result)

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def shift(self, n):
        """Multiply by T^n."""
        if not self.coeffs:
            return self
        return Poly._raw(self.field, (0,) * n + self.coeffs)

    def monic(self):
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no monic associate")
        return self.scale(self.field.inv(self.lc))

    def __call__(self, x):
        """Evaluate at an element of F_q (FqElem or code)."""
        F = self.field
        code = x.code if isinstance(x, FqElem) else x
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, code), c)
        return FqElem(F, acc) if isinstance(x, FqElem) else acc

    def derivative(self):
        F = self.field
        return Poly._raw(F, _trim([F.scale(i, c) for i, c in enumerate(self.coeffs)][1:]))

    def frobenius(self):
        """self^p computed coefficientwise: sum c_i^p T^(ip)."""
        F, p = self.field, self.field.p
        out = [0] * ((len(self.coeffs) - 1) * p + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * p] = F.frobenius(c)
        return Poly._raw(F, out)

    def pth_root(self):
        """The polynomial r with r^p = self; requires all exponents divisible by p."""
        F, p = self.field, self.field.p
        out = []
        for i, c in enumerate(self.coeffs):
            if i % p:
                if c:
                    raise ValueError("polynomial is not a p-th power")
            else:
                out.append(F.pth_root(c))
        return Poly._raw(F, _trim(out))


class PrimePoly(Poly):
    """A monic irreducible polynomial."""

    __slots__ = ()

    def __init__(self, field, coeffs=(), check=True):
        super().__init__(field, coeffs)
        if check:
            if not self.coeffs or not self.is_monic():
                raise NotIrreducible(f"{self} is not monic")
            if not is_irreducible(self):
                raise NotIrreducible(f"{self} is reducible")

    @classmethod
    def of(cls, poly, check=True):
        if isinstance(poly, PrimePoly):
            return poly
        obj = cls._raw(poly.field, poly.coeffs)
        if check:
            if not obj.coeffs or not obj.is_monic():
                raise NotIrreducible(f"{poly} is not monic")
            if not is_irreducible(obj):
                raise NotIrreducible(f"{poly} is reducible")
        return obj

    @property
    def d(self):
        return len(self.coeffs) - 1

    def __repr__(self):
        return f"PrimePoly({self})"


# -- Euclidean algorithms ----------------------------------------------------

def poly_divmod(f, g):
    """(quotient, remainder) with f = quotient * g + remainder, deg remainder < deg g."""
    if f.field != g.field:
        raise FieldMismatch("polynomials over different fields")
    quo, rem = _divmod(f.field, f.coeffs, g.coeffs)
    return Poly._raw(f.field, quo), Poly._raw(f.field, rem)


def gcd(f, g):
    """Monic gcd (zero if both inputs are zero)."""
    F = f.field
    a, b = list(f.coeffs), list(g.coeffs)
    while b:
        a, b = b, _mod(F, a, b)
    if not a:
        return Poly.zero(F)
    return Poly._raw(F, _scale(F, F.inv(a[-1]), a))


def xgcd(f, g):
    """(d, s, t) with d = s f + t g monic (or zero)."""
    F = f.field
    r0, r1 = list(f.coeffs), list(g.coeffs)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        qt, r = _divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(F, s0, _mul(F, qt, s1))
        t0, t1 = t1, _sub(F, t0, _mul(F, qt, t1))
    if not r0:
        return Poly.zero(F), Poly.zero(F), Poly.zero(F)
    c = F.inv(r0[-1])
    return (Poly._raw(F, _scale(F, c, r0)), Poly._raw(F, _scale(F, c, s0)),
            Poly._raw(F, _scale(F, c, t0)))


def invmod(a, m):
    """Inverse of a modulo m; ValueError when gcd(a, m) != 1."""
    d, s, _ = xgcd(a % m, m)
    if not d.is_one():
        raise ValueError(f"{a} is not invertible modulo {m}")
    return s % m


def mulmod(a, b, m):
    F = a.field
    return Poly._raw(F, _mod(F, _mul(F, a.coeffs, b.coeffs), m.coeffs))


def powmod(a, e, m):
    F = a.field
    mc = m.coeffs
    result = _mod(F, [1], mc)
    base = _mod(F, list(a.coeffs), mc)
    while e:
        if e & 1:
            result = _mod(F, _mul(F, result, base), mc)
        e >>= 1
        if e:
            base = _mod(F, _mul(F, base, base), mc)
    return Poly._raw(F, result)


# -- irreducibility and enumeration ----------------------------------------

def is_irreducible(f):
    """Deterministic (Rabin) irreducibility test over F_q."""
    if f.is_zero():
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    F = f.field
    f = f.monic()
    if f.coeffs[0] == 0:
        return False
    T = Poly.T(F)
    q = F.q
    # frob[i] = T^(q^i) mod f
    frob = [T % f]
    for _ in range(n):
        frob.append(powmod(frob[-1], q, f))
    if frob[n] != T % f:
        return False
    for r in factorint(n):
        if not gcd(frob[n // r] - T, f).is_one():
            return False
    return True


@lru_cache(maxsize=None)
def _irreducible_lower_codes(field, d):
    """Sorted codes (of the non-leading coefficients) of monic irreducibles of degree d."""
    q = field.q
    total = q**d
    if d == 1:
        return tuple(range(q))
    if total > SIEVE_LIMIT or q > 1024:
        out = []
        for code in range(total):
            f = Poly.from_code(field, code + total)
            if f.coeffs[0] != 0 and is_irreducible(f):
                out.append(code)
        return tuple(out)
    composite = np.zeros(total, dtype=bool)
    for a in range(1, d // 2 + 1):
        A_low = np.array(_irreducible_lower_codes(field, a), dtype=np.int64)
        A = np.hstack([batch.codes_to_coeffs(A_low, q, a), np.ones((len(A_low), 1), dtype=np.int64)])
        b = d - a
        B_low = np.arange(q**b, dtype=np.int64)
        B = np.hstack([batch.codes_to_coeffs(B_low, q, b), np.ones((len(B_low), 1), dtype=np.int64)])
        chunk = max(1, 2**18 // max(1, len(B_low)))
        for start in range(0, len(A_low), chunk):
            Ai = A[start:start + chunk]
            rows_a = np.repeat(Ai, len(B_low), axis=0)
            rows_b = np.tile(B, (len(Ai), 1))
            prod = batch.mul(field, rows_a, rows_b)
            composite[batch.coeffs_to_codes(prod[:, :d], q)] = True
    return tuple(int(c) for c in np.flatnonzero(~composite))


def monic_irreducibles(field, d):
    """List of the monic irreducible polynomials of exact degree d, in order."""
    q = field.q
    top = q**d
    return [PrimePoly.of(Poly.from_code(field, c + top), check=False)
            for c in _irreducible_lower_codes(field, d)]


def enumerate_monic_irreducibles(field, d_max):
    """Yield every monic irreducible of degree <= d_max once, by (degree, code)."""
    if d_max < 1:
        raise ValueError("d_max must be >= 1")
    for d in range(1, d_max + 1):
        top = field.q**d
        for c in _irreducible_lower_codes(field, d):
            yield PrimePoly.of(Poly.from_code(field, c + top), check=False)


def monic_polys(field, d):
    """Yield every monic polynomial of degree d in code order."""
    top = field.q**d
    for c in range(top):
        yield Poly.from_code(field, c + top)


# -- factorisation -----------------------------------------------------------

def squarefree_decomposition(f):
    """[(g, e)] with monic squarefree g and f = lc * prod g^e."""
    F = f.field
    f = f.monic()
    if f.degree < 1:
        return []
    out = []
    df = f.derivative()
    if df.is_zero():
        return [(g, e * F.p) for g, e in squarefree_decomposition(f.pth_root())]
    c = gcd(f, df)
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        z = w // y
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if not c.is_one():
        out.extend((g, e * F.p) for g, e in squarefree_decomposition(c.pth_root()))
    return out


def _nullspace(F, rows, n):
    """Basis of {v : v M = 0} for the n x n matrix M given by rows (codes)."""
    # solve M^T v = 0 by row reduction of M^T
    A = [[rows[i][j] for i in range(n)] for j in range(n)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][col])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(n):
            if i != r and A[i][col]:
                c = A[i][col]
                A[i] = [F.sub(x, F.mul(c, y)) for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = F.neg(A[i][fc])
        basis.append(v)
    return basis


def _berlekamp(f):
    """Split a monic squarefree polynomial into its monic irreducible factors."""
    F = f.field
    n = f.degree
    if n <= 1:
        return [f]
    xq = powmod(Poly.T(F), F.q, f)
    rows = []
    cur = Poly.one(F)
    for i in range(n):
        row = list(cur.coeffs) + [0] * (n - len(cur.coeffs))
        row[i] = F.sub(row[i], 1)
        rows.append(row)
        cur = mulmod(cur, xq, f)
    basis = _nullspace(F, rows, n)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        vp = Poly(F, v)
        if vp.degree < 1:
            continue
        new = []
        for g in factors:
            if g.degree <= 1:
                new.append(g)
                continue
            rest = g
            for c in range(F.q):
                if rest.degree <= 1:
                    break
                h = gcd(rest, vp - Poly.constant(F, c))
                if 0 < h.degree < rest.degree:
                    new.append(h)
                    rest = rest // h
            new.append(rest)
        factors = new
        if len(factors) == r:
            break
    return factors


def factor(f):
    """Factor f = lc * prod P^e; returns (lc, [(PrimePoly, e)]) sorted by prime order."""
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    out = {}
    for g, e in squarefree_decomposition(f):
        for h in _berlekamp(g):
            P = PrimePoly.of(h.monic(), check=False)
            out[P] = out.get(P, 0) + e
    return f.lc, sorted(out.items(), key=lambda kv: kv[0].sort_key())
