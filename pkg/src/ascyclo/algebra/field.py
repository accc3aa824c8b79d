"""Finite fields F_q, q = p^t, as F_p[x]/(modulus).

Elements are handled internally as integer *codes*: the element
c_0 + c_1 x + ... + c_{t-1} x^{t-1} has code c_0 + c_1 p + ... + c_{t-1} p^{t-1}.
Integer order on codes is the canonical element order used everywhere
(enumeration, sorting, "first element with ...").  Multiplication goes
through exp/log tables built once per field; addition is XOR for p = 2,
integer addition mod p for prime fields, and a table or digitwise sum
otherwise.

`FqElem` is a small user-facing wrapper around (field, code) for interactive
use; the polynomial layer works on raw codes for speed.
"""

from functools import lru_cache

import numpy as np

from ..errors import FieldMismatch, FieldTooLarge, NonPrimeP, ReducibleModulus
from ._moduli import DEFAULT_MODULI

MAX_Q = 2**16
_ADD_TABLE_LIMIT = 1024


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorint(n):
    """Prime factorisation of a positive integer as a {prime: exponent} dict."""
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q):
    """Return (p, t) with q = p^t, or raise NonPrimeP."""
    if q < 2:
        raise NonPrimeP(f"{q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise NonPrimeP(f"{q} is not a prime power")
    ((p, t),) = fac.items()
    return p, t


# -- polynomials over F_p as int lists, low degree first ----------------------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(_fp_trim(a)) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
    return a


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_mod(out, m, p)


def _fp_powmod(a, e, m, p):
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def fp_is_irreducible(m, p):
    """Rabin's deterministic irreducibility test for a polynomial over F_p."""
    m = _fp_trim([c % p for c in m])
    n = len(m) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    for r in factorint(n):
        h = _fp_powmod(x, p ** (n // r), m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(m, _fp_trim(diff), p)
        if len(g) - 1 > 0:
            return False
    h = _fp_powmod(x, p**n, m, p)
    return _fp_trim(list(h)) == [0, 1]


def fp_is_primitive(m, p):
    """True if m is irreducible over F_p and x generates (F_p[x]/m)^*."""
    if not fp_is_irreducible(m, p):
        return False
    n = len(m) - 1
    order = p**n - 1
    if n == 1:
        # x is the residue -m[0]/m[1]
        root = (-m[0] * pow(m[1], p - 2, p)) % p
        return root != 0 and all(pow(root, order // r, p) != 1 for r in factorint(order))
    return all(_fp_powmod([0, 1], order // r, m, p) != [1] for r in factorint(order))


# -- the field -----------------------------------------------------------------

class FieldSpec:
    """The finite field F_q = F_p[x]/(modulus) with q = p^t.

    Construct through :func:`field_make`, which validates the inputs and
    caches one instance per (p, t, modulus).
    """

    def __init__(self, p, t, modulus):
        self.p = p
        self.t = t
        self.modulus = tuple(modulus)
        self.q = p**t
        self._build_tables()
        if p == 2:
            self.add = self.sub = _xor
        elif t == 1:
            self.add = self._add_prime
            self.sub = self._sub_prime
        elif self.q <= _ADD_TABLE_LIMIT:
            q = self.q
            dig = [self.digits(a) for a in range(q)]
            self._add_t = [[self.from_digits([(x + y) % p for x, y in zip(dig[a], dig[b])])
                            for b in range(q)] for a in range(q)]
            self._neg_t = [self.from_digits([(-x) % p for x in dig[a]]) for a in range(q)]
            self.add = self._add_table
            self.sub = self._sub_table
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits
        self._rho = None
        self._trace_t = None
        self._wp_pre = None
        self._np = None

    # identity and display

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def key(self):
        return (self.p, self.t, self.modulus)

    def __repr__(self):
        if self.t == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.t}, modulus={self.modulus})"

    def format(self, a):
        """Render a code as an expression in the generator symbol ``g``."""
        if self.t == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "g" if i == 1 else f"g^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    # codes

    def digits(self, a):
        out = []
        for _ in range(self.t):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds):
        a = 0
        for c in reversed(ds):
            a = a * self.p + c % self.p
        return a

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.q)

    @property
    def generator(self):
        """Code of the class of x (the symbol ``g``)."""
        return self.from_digits(_fp_mod([0, 1], self.modulus, self.p)) if self.t > 1 else 0

    # arithmetic on codes

    def _add_prime(self, a, b):
        return (a + b) % self.p

    def _sub_prime(self, a, b):
        return (a - b) % self.p

    def _add_table(self, a, b):
        return self._add_t[a][b]

    def _sub_table(self, a, b):
        return self._add_t[a][self._neg_t[b]]

    def _add_digits(self, a, b):
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def _sub_digits(self, a, b):
        return self.from_digits([x - y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.sub(0, a)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def scale(self, n, a):
        """n * a for an integer n (an element of the prime field)."""
        return self.mul(n % self.p, a)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def pth_root(self, a):
        """The unique b with b^p = a, computed as a^(q/p)."""
        return self.pow(a, self.q // self.p)

    def trace(self, a):
        """Absolute trace Tr_{F_q/F_p}(a) as an integer in [0, p)."""
        if self._trace_t is None:
            tab = []
            for x in range(self.q):
                s, y = 0, x
                for _ in range(self.t):
                    s = self.add(s, y)
                    y = self.frobenius(y)
                tab.append(s)
            self._trace_t = tab
        return self._trace_t[a]

    @property
    def rho(self):
        """First element (in code order) with nonzero absolute trace."""
        if self._rho is None:
            self._rho = next(a for a in range(self.q) if self.trace(a) != 0)
        return self._rho

    def wp(self, b):
        return self.sub(self.frobenius(b), b)

    def wp_preimage(self, a):
        """Smallest b with b^p - b = a; raises ValueError when Tr(a) != 0."""
        if self._wp_pre is None:
            pre = [None] * self.q
            for b in range(self.q):
                v = self.wp(b)
                if pre[v] is None:
                    pre[v] = b
            self._wp_pre = pre
        b = self._wp_pre[a]
        if b is None:
            raise ValueError(f"{self.format(a)} is not of the form b^p - b")
        return b

    # tables

    def _mul_slow(self, a, b):
        r = _fp_mulmod(self.digits(a), self.digits(b), list(self.modulus), self.p)
        return self.from_digits(r + [0] * (self.t - len(r)))

    def _build_tables(self):
        q, p = self.q, self.p
        order = q - 1
        if q == 2:
            gen = 1
        else:
            primes = list(factorint(order))
            gen = None
            for cand in range(2, q):
                ok = True
                for r in primes:
                    e, x, acc = order // r, cand, 1
                    while e:
                        if e & 1:
                            acc = self._mul_slow(acc, x)
                        x = self._mul_slow(x, x)
                        e >>= 1
                    if acc == 1:
                        ok = False
                        break
                if ok:
                    gen = cand
                    break
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = exp[i + order] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        self._exp, self._log = exp, log
        self.primitive_element = gen

    def numpy_tables(self):
        """(add, mul, neg, inv) lookup arrays for vectorised arithmetic.

        The q x q tables are only materialised for q <= 1024.
        """
        if self._np is None:
            q = self.q
            if q > _ADD_TABLE_LIMIT:
                raise FieldTooLarge(f"vectorised tables need q <= {_ADD_TABLE_LIMIT}")
            add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
            inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
            self._np = (add, mul, neg, inv)
        return self._np

    def __call__(self, value):
        """Coerce an int, digit list or FqElem into an FqElem of this field."""
        if isinstance(value, FqElem):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, int):
            return FqElem(self, self.from_int(value))
        return FqElem(self, self.from_digits(list(value)))

    def element(self, code):
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FqElem(self, code)


def _xor(a, b):
    return a ^ b


class FqElem:
    """An element of F_q; immutable and hashable."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FqElem is immutable")

    @property
    def rep(self):
        """Coefficients over F_p of the representing polynomial, low degree first."""
        return tuple(self.field.digits(self.code))

    def _other(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch("elements of different fields")
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FqElem(self.field, self.field.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FqElem(self.field, self.field.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FqElem(self.field, self.field.sub(b, self.code))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FqElem(self.field, self.field.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is None else FqElem(self.field, self.field.div(self.code, b))

    def __pow__(self, n):
        return FqElem(self.field, self.field.pow(self.code, n))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"FqElem({self.field.format(self.code)})"

    def __str__(self):
        return self.field.format(self.code)

    def trace(self):
        return self.field.trace(self.code)


def pth_root(a):
    """Return the unique b in F_q with b^p = a."""
    return FqElem(a.field, a.field.pth_root(a.code))


def absolute_trace(a):
    return a.field.trace(a.code)


def field_make(p, t=1, modulus=None):
    """Build (or fetch from cache) the field with p^t elements.

    ``modulus`` is an optional sequence of F_p coefficients, low degree first.
    When omitted a built-in table supplies a primitive modulus.
    """
    if not is_prime(p):
        raise NonPrimeP(f"{p} is not prime")
    if t < 1:
        raise ValueError("t must be a positive integer")
    if p**t > MAX_Q:
        raise FieldTooLarge(f"q = {p}^{t} exceeds {MAX_Q}")
    if modulus is None:
        modulus = (0, 1) if t == 1 else DEFAULT_MODULI[(p, t)]
    m = _fp_trim([int(c) % p for c in modulus])
    if len(m) - 1 != t:
        raise ReducibleModulus(f"modulus must have degree {t}, got {len(m) - 1}")
    lead_inv = pow(m[-1], p - 2, p)
    m = [c * lead_inv % p for c in m]
    if not fp_is_irreducible(m, p):
        raise ReducibleModulus(f"modulus {m} is reducible over F_{p}")
    return _field_cached(p, t, tuple(m))


@lru_cache(maxsize=None)
def _field_cached(p, t, modulus):
    return FieldSpec(p, t, modulus)


def field_from_q(q, modulus=None):
    """Field with q elements given as an integer or a "p^t" string."""
    if isinstance(q, str):
        if "^" in q:
            p_s, t_s = q.split("^", 1)
            return field_make(int(p_s), int(t_s), modulus)
        q = int(q)
    if q > MAX_Q:
        raise FieldTooLarge(f"q = {q} exceeds {MAX_Q}")
    p, t = prime_power(q)
    return field_make(p, t, modulus)
