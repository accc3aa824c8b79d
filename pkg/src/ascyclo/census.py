"""Counting Artin-Schreier extensions ramified at a single finite prime P.

Closed forms:

* ``phi(P, a)``      = |(F_q[T]/P^a)^*| = q^{(a-1)d} (q^d - 1)
* ``n_alpha(P, a)``  = p/(p-1) * phi(P, a - floor(a/p)), the number of fields
  K(y), y^p - y = f/P^a, deg f <= a d, gcd(f, P) = 1.

``census_bruteforce`` recounts n_alpha without using the formula: it lists all
q * phi(P, a) right-hand sides a + h/P^alpha, reduces each to its normal form
and groups them into fields.
"""

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

import numpy as np

from .algebra import Poly, RatFunc, poly_divmod
from .artin_schreier import _check_alpha, equivalent_generator_data, wp_reduce
from .errors import BudgetExceeded
from .unionfind import DisjointSet
from .unit_group import field_dict, n_beta, phi

__all__ = [
    "CensusReport", "census_bruteforce", "census_identity_check", "n_alpha", "phi",
    "nf_vector", "equation_rhs",
]

DEFAULT_BUDGET = 2**20


def n_alpha(P, alpha):
    """Number of Artin-Schreier fields with only P ramified and conductor exponent alpha + 1."""
    p = P.field.p
    _check_alpha(alpha, p)
    val = Fraction(p, p - 1) * phi(P, alpha - alpha // p)
    if val.denominator != 1:
        raise ArithmeticError(f"n_alpha = {val} is not an integer")
    return int(val)


@dataclass
class CensusReport:
    field: object
    prime: object
    alpha: int
    alpha0: int
    formula_count: Fraction
    brute_count: object = None
    enumerated_equations: int = 0
    class_representatives: list = None
    class_sizes: dict = dc_field(default_factory=dict)
    method: str = "linear"

    @property
    def matches(self):
        return self.brute_count is not None and self.brute_count == self.formula_count

    @property
    def expected_class_size(self):
        return equivalent_generator_data(self.prime, self.alpha)[1]

    def to_dict(self):
        fc = self.formula_count
        return {
            "field": field_dict(self.field),
            "prime": str(self.prime),
            "alpha": self.alpha,
            "alpha0": self.alpha0,
            "formula_count": int(fc) if fc.denominator == 1 else str(fc),
            "brute_count": self.brute_count,
            "enumerated_equations": self.enumerated_equations,
            "class_sizes": {str(k): v for k, v in sorted(self.class_sizes.items())},
            "representatives": [str(nf) for nf in (self.class_representatives or [])],
        }

    def to_json(self, **kw):
        return json.dumps(self.to_dict(), **kw)


def equation_rhs(P, alpha, a, h):
    """The right-hand side a + h/P^alpha (a a code, h a Poly)."""
    Pa = P**alpha
    return RatFunc(Pa.scale(a) + h, Pa)


def nf_vector(nf, P, alpha):
    """Coordinates over F_p of a normal form supported at P with pole order <= alpha.

    Layout: [i] + F_p digits of N, where constant = i * rho and the principal
    part is N / P^alpha with deg N < alpha d.
    """
    F = nf.field
    if not nf.polypart.is_zero() or any(Q != P for Q, _, _ in nf.terms):
        raise ValueError("normal form is not supported at P alone")
    n = alpha * P.d
    N = Poly.zero(F)
    for _, a, f in nf.terms:
        if a > alpha:
            raise ValueError("pole order exceeds alpha")
        N = N + f * P ** (alpha - a)
    out = [nf.constant_index]
    for i in range(n):
        out.extend(F.digits(N[i]))
    return out


def _linear_nf_map(P, alpha):
    """F_p matrices sending input digits to nf_vector coordinates.

    Inputs are the digits of a (t of them) and of h (t per coefficient,
    alpha*d coefficients).  The reduction is F_p-linear, so the images of the
    basis inputs determine it.
    """
    F = P.field
    p, t = F.p, F.t
    n = alpha * P.d
    zero = Poly.zero(F)
    rows_a = []
    for j in range(t):
        nf, _ = wp_reduce(equation_rhs(P, alpha, p**j, zero))
        rows_a.append(nf_vector(nf, P, alpha))
    rows_h = []
    for i in range(n):
        for j in range(t):
            nf, _ = wp_reduce(equation_rhs(P, alpha, 0, Poly.monomial(F, p**j, i)))
            rows_h.append(nf_vector(nf, P, alpha))
    return np.array(rows_a, dtype=np.int64), np.array(rows_h, dtype=np.int64)


def _digit_matrix(codes, p, width):
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((len(codes), width), dtype=np.int64)
    rest = codes.copy()
    for k in range(width):
        out[:, k] = rest % p
        rest //= p
    return out


def _unit_codes(P, alpha):
    """Codes of all h with deg h < alpha d and P not dividing h, ascending."""
    F = P.field
    p, t = F.p, F.t
    n, d = alpha * P.d, P.d
    # remainder mod P is F_p-linear in the digits of h
    R = []
    for i in range(n):
        for j in range(t):
            r = poly_divmod(Poly.monomial(F, p**j, i), P)[1]
            row = []
            for k in range(d):
                row.extend(F.digits(r[k]))
            R.append(row)
    R = np.array(R, dtype=np.int64)
    codes = np.arange(F.q**n, dtype=np.int64)
    H = _digit_matrix(codes, p, n * t)
    unit = ((H @ R) % p).any(axis=1)
    return codes[unit], H[unit]


def _keys(Y, p):
    D = Y.shape[1]
    if p**D < 2**62:
        w = p ** np.arange(D, dtype=np.int64)
        return Y @ w
    return np.array([int("".join(map(str, row[::-1])), p) for row in Y.tolist()], dtype=object)


def census_bruteforce(P, alpha, budget=DEFAULT_BUDGET, method="linear", max_representatives=64):
    """Enumerate all q*phi(P, alpha) right-hand sides a + h/P^alpha and count fields.

    ``method="linear"`` reduces every equation through the F_p-linear normal
    form map (numpy); ``method="direct"`` calls :func:`wp_reduce` on each
    equation and merges classes with a union-find keyed by the normal forms of
    the j-multiples.  Both report identical classes.
    """
    F = P.field
    p, q, d = F.p, F.q, P.d
    _check_alpha(alpha, p)
    if q ** (d * alpha + 1) > budget:
        raise BudgetExceeded(f"q^(d alpha + 1) = {q ** (d * alpha + 1)} exceeds budget {budget}")
    alpha0 = alpha // p
    formula = Fraction(p, p - 1) * phi(P, alpha - alpha0)
    report = CensusReport(F, P, alpha, alpha0, formula, method=method)
    if method == "direct":
        _census_direct(report, max_representatives)
    elif method == "linear":
        _census_linear(report, max_representatives)
    else:
        raise ValueError(f"unknown method {method!r}")
    return report


def census_vectors(P, alpha):
    """(a codes, h codes, Y) where row k of Y is nf_vector of equation k.

    Equations are ordered a-major then by the code of h.
    """
    F = P.field
    p, q = F.p, F.q
    La, Lh = _linear_nf_map(P, alpha)
    h_codes, H = _unit_codes(P, alpha)
    A = _digit_matrix(np.arange(q), p, F.t)
    Ya = (A @ La) % p
    Yh = (H @ Lh) % p
    Y = ((Ya[:, None, :] + Yh[None, :, :]) % p).reshape(-1, Ya.shape[1])
    a_codes = np.repeat(np.arange(q, dtype=np.int64), len(h_codes))
    return a_codes, np.tile(h_codes, q), Y


def _census_linear(report, max_reps):
    P, alpha = report.prime, report.alpha
    F = P.field
    p = F.p
    a_codes, h_codes, Y = census_vectors(P, alpha)
    keys = [_keys((Y * j) % p, p) for j in range(1, p)]
    canon = keys[0]
    for k in keys[1:]:
        canon = np.minimum(canon, k)
    if (canon == 0).any():
        raise AssertionError("an enumerated right-hand side lies in wp(K)")
    uniq, first, counts = np.unique(canon, return_index=True, return_counts=True)
    order = np.argsort(first)
    report.enumerated_equations = len(Y)
    report.brute_count = len(uniq)
    sizes = {}
    for c in counts.tolist():
        sizes[c] = sizes.get(c, 0) + 1
    report.class_sizes = sizes
    reps = []
    for idx in first[order][:max_reps].tolist():
        h = Poly.from_code(F, int(h_codes[idx]))
        reps.append(wp_reduce(equation_rhs(P, alpha, int(a_codes[idx]), h))[0])
    report.class_representatives = reps


def enumerate_equations(P, alpha):
    """Yield (a, h) for the q*phi(P, alpha) right-hand sides, a-major."""
    F = P.field
    h_codes, _ = _unit_codes(P, alpha)
    hs = [Poly.from_code(F, int(c)) for c in h_codes]
    for a in range(F.q):
        for h in hs:
            yield a, h


def census_direct_forms(P, alpha):
    """Normal forms of every enumerated equation, in enumeration order."""
    return [wp_reduce(equation_rhs(P, alpha, a, h))[0] for a, h in enumerate_equations(P, alpha)]


def _census_direct(report, max_reps):
    P, alpha = report.prime, report.alpha
    p = P.field.p
    forms = census_direct_forms(P, alpha)
    uf = DisjointSet()
    seen = {}
    for i, nf in enumerate(forms):
        if nf.is_zero():
            raise AssertionError("an enumerated right-hand side lies in wp(K)")
        uf.make_set(i)
        for j in range(1, p):
            other = seen.get(nf.scale(j))
            if other is not None:
                uf.union(i, other)
        seen.setdefault(nf, i)
    groups = uf.groups()
    report.enumerated_equations = len(forms)
    report.brute_count = len(groups)
    sizes = {}
    for g in groups:
        sizes[len(g)] = sizes.get(len(g), 0) + 1
    report.class_sizes = sizes
    firsts = sorted(min(g) for g in groups)
    report.class_representatives = [forms[i] for i in firsts[:max_reps]]


def census_identity_check(P, alpha):
    """N_alpha == p * (n_beta(alpha + 1) - n_beta(alpha)), exactly."""
    p = P.field.p
    _check_alpha(alpha, p)
    return n_alpha(P, alpha) == p * (n_beta(P, alpha + 1) - n_beta(P, alpha))


def class_members(P, alpha, nf):
    """All enumerated (a, h) whose normal form is a nonzero F_p-multiple of nf."""
    p = P.field.p
    targets = {nf.scale(j) for j in range(1, p)}
    return [(a, h) for a, h in enumerate_equations(P, alpha)
            if wp_reduce(equation_rhs(P, alpha, a, h))[0] in targets]

