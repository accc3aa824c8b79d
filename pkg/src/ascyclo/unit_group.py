"""The unit group (F_q[T]/P^beta)^*, its one-units and its elements of order p."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import Poly, factorint, gcd, powmod
from .algebra import batch
from .errors import BudgetExceeded, InvalidAlpha, ModulusMismatch, NotAUnit


def phi(P, alpha):
    """Order of (F_q[T]/P^alpha)^*, i.e. q^{(alpha-1)d} (q^d - 1)."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    qd = P.field.q**P.d
    return qd ** (alpha - 1) * (qd - 1)


def ceil_div(a, b):
    return -(-a // b)


class Residue:
    """A class A mod P^beta with deg rep < beta deg P."""

    __slots__ = ("prime", "beta", "rep")

    def __init__(self, prime, beta, rep):
        if isinstance(rep, int):
            rep = Poly.constant(prime.field, prime.field.from_int(rep))
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "rep", rep % (prime**beta))

    def __setattr__(self, name, value):
        raise AttributeError("Residue is immutable")

    @property
    def modulus(self):
        return self.prime**self.beta

    def is_unit(self):
        return not (self.rep % self.prime).is_zero()

    def is_one(self):
        return self.rep.is_one()

    def is_one_unit(self):
        """True for members of D = {A : A = 1 mod P}."""
        return (self.rep % self.prime).is_one()

    def __mul__(self, other):
        return residue_mul(self, other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        return Residue(self.prime, self.beta, powmod(self.rep, n, self.modulus))

    def __eq__(self, other):
        return (isinstance(other, Residue) and self.prime == other.prime
                and self.beta == other.beta and self.rep == other.rep)

    def __hash__(self):
        return hash((self.prime, self.beta, self.rep))

    def __repr__(self):
        return f"Residue({self.rep} mod ({self.prime})^{self.beta})"


def residue_mul(a, b):
    if a.prime != b.prime or a.beta != b.beta:
        raise ModulusMismatch("residues modulo different prime powers")
    return Residue(a.prime, a.beta, a.rep * b.rep)


def element_order(a):
    """Multiplicative order of a unit, by walking down the divisors of Phi(P^beta)."""
    if not a.is_unit():
        raise NotAUnit(f"{a.rep} is not prime to {a.prime}")
    n = phi(a.prime, a.beta)
    for r in factorint(n):
        while n % r == 0 and (a ** (n // r)).is_one():
            n //= r
    return n


def count_order_p(P, beta):
    """r_p = q^{(beta - ceil(beta/p)) d} - 1 (zero for beta = 1)."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    if beta == 1:
        return 0
    F = P.field
    return F.q ** ((beta - ceil_div(beta, F.p)) * P.d) - 1


def count_order_p_by_cases(P, beta):
    """r_p following the two cases beta <= p and beta > p separately."""
    F = P.field
    p, q, d = F.p, F.q, P.d
    if beta == 1:
        return 0
    if beta <= p:
        # every nontrivial one-unit has order p
        return q ** ((beta - 1) * d) - 1
    # h must be divisible by P^(ceil(beta/p) - 1), leaving deg h_2 <= (beta - ceil)d - 1
    return q ** ((beta - ceil_div(beta, p)) * d) - 1


def n_beta(P, beta):
    """Number of subgroups of order p of (F_q[T]/P^beta)^*."""
    r = count_order_p(P, beta)
    p = P.field.p
    if r % (p - 1):
        raise ArithmeticError("r_p not divisible by p - 1")
    return r // (p - 1)


def n_beta_difference(P, alpha):
    """N_{alpha+1} - N_alpha, checked against Phi(P^{alpha - alpha0}) / (p - 1)."""
    p = P.field.p
    if alpha < 1 or alpha % p == 0:
        raise InvalidAlpha(f"alpha = {alpha} must be a positive integer prime to p = {p}")
    diff = n_beta(P, alpha + 1) - n_beta(P, alpha)
    expected = Fraction(phi(P, alpha - alpha // p), p - 1)
    if diff != expected:
        raise ArithmeticError(f"difference {diff} != {expected}")
    return diff


@dataclass
class UnitScan:
    """Result of an exhaustive scan of F_q[T]/P^beta."""

    prime: object
    beta: int
    residues: int
    units: int
    one_units: int
    order_p: int
    subgroups: int
    order_p_reps: list


def scan_units(P, beta, budget=2**16):
    """Enumerate every residue mod P^beta and classify the units.

    Counts units, one-units and elements of order p, checks that each element
    of order p is a one-unit 1 + hP with P^(ceil(beta/p) - 1) | h when
    beta > p, and counts order-p subgroups by grouping each element x with
    x^2, ..., x^(p-1).
    """
    F = P.field
    q, p, d = F.q, F.p, P.d
    n = beta * d
    if q**n > budget:
        raise BudgetExceeded(f"q^(beta d) = {q**n} exceeds budget {budget}")
    if q > 1024:
        return _scan_units_scalar(P, beta)
    M = (P**beta).coeffs
    A = batch.codes_to_coeffs(np.arange(q**n, dtype=np.int64), q, n)
    modP = batch.reduce_mod(F, A, P.coeffs)
    unit = modP.any(axis=1)
    one_mod_P = (modP[:, 0] == 1) & ~modP[:, 1:].any(axis=1)
    U = A[unit]
    is_one = (U[:, 0] == 1) & ~U[:, 1:].any(axis=1)
    Up = batch.powmod(F, U, p, M)
    pth_is_one = (Up[:, 0] == 1) & ~Up[:, 1:].any(axis=1)
    X = U[pth_is_one & ~is_one]

    # every element of order p is a one-unit ...
    Xmod = batch.reduce_mod(F, X, P.coeffs)
    if not ((Xmod[:, 0] == 1) & ~Xmod[:, 1:].any(axis=1)).all():
        raise AssertionError("element of order p outside the one-units")
    # ... and X - 1 is divisible by P^ceil(beta/p) once beta > p
    if beta > p and len(X):
        _, _, neg, _ = F.numpy_tables()
        add = F.numpy_tables()[0]
        Xm1 = X.copy()
        Xm1[:, 0] = add[Xm1[:, 0], neg[1]]
        depth = ceil_div(beta, p)
        if batch.reduce_mod(F, Xm1, (P**depth).coeffs).any():
            raise AssertionError("order-p element 1 + hP with h not divisible by P^(ceil(beta/p)-1)")

    keys = batch.coeffs_to_codes(X, q)
    canon = keys.copy()
    power = X
    for _ in range(2, p):
        power = batch.mulmod(F, power, X, M)
        canon = np.minimum(canon, batch.coeffs_to_codes(power, q))
    subgroups = len(np.unique(canon)) if len(canon) else 0
    reps = [Poly.from_code(F, int(c)) for c in np.unique(canon)[:64]]
    return UnitScan(P, beta, q**n, int(unit.sum()), int(one_mod_P.sum()), len(X), subgroups, reps)


def _scan_units_scalar(P, beta):
    F = P.field
    q, p, n = F.q, F.p, beta * P.d
    units = one_units = 0
    order_p = []
    for code in range(q**n):
        a = Residue(P, beta, Poly.from_code(F, code))
        if not a.is_unit():
            continue
        units += 1
        if a.is_one_unit():
            one_units += 1
        if not a.is_one() and (a**p).is_one():
            if not a.is_one_unit():
                raise AssertionError("element of order p outside the one-units")
            if beta > p and not ((a.rep - 1) % (P ** ceil_div(beta, p))).is_zero():
                raise AssertionError("order-p element with h not divisible by P^(ceil(beta/p)-1)")
            order_p.append(a)
    seen, reps = set(), []
    for a in order_p:
        if a.rep in seen:
            continue
        orbit = {(a**k).rep for k in range(1, p)}
        seen |= orbit
        reps.append(min(orbit, key=lambda f: f.sort_key()))
    return UnitScan(P, beta, q**n, units, one_units, len(order_p), len(reps), reps[:64])


def count_order_p_bruteforce(P, beta, budget=2**16):
    """Number of elements of order p found by exhaustive enumeration."""
    return scan_units(P, beta, budget).order_p


def count_subgroups_bruteforce(P, beta, budget=2**16):
    return scan_units(P, beta, budget).subgroups


def units_report(P, beta, budget=2**16):
    """JSON-ready comparison of closed forms and exhaustive counts."""
    F = P.field
    try:
        scan = scan_units(P, beta, budget)
        r_brute, sub_brute, units = scan.order_p, scan.subgroups, scan.units
    except BudgetExceeded:
        r_brute = sub_brute = units = None
    return {
        "field": field_dict(F),
        "prime": str(P),
        "beta": beta,
        "group_order": phi(P, beta),
        "units_brute": units,
        "r_p_formula": count_order_p(P, beta),
        "r_p_brute": r_brute,
        "subgroups_formula": n_beta(P, beta),
        "subgroups_brute": sub_brute,
    }


def field_dict(F):
    return {"p": F.p, "t": F.t, "q": F.q, "modulus": list(F.modulus)}


def is_coprime(a, b):
    return gcd(a, b).is_one()
