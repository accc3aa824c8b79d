"""The Carlitz module over F_q[T] and ramification bookkeeping.

[M](u) is the F_q-linear polynomial sum_j c_j(T) u^{q^j} defined by
[a](u) = a u for a in F_q, [T](u) = T u + u^q, additivity in M and
[MN] = [M] o [N].  Coefficients c_j are kept as sparse maps {exponent: code}
because raising to q-th powers only spreads exponents out.
"""

import json
from dataclasses import dataclass

from .algebra import INFINITY, Poly
from .artin_schreier import NormalForm
from .errors import DegenerateInput, ZeroPolynomial
from .unit_group import phi

# sparse F_q[T] helpers: dict exponent -> nonzero code


def _sp_from_poly(f):
    return {k: c for k, c in enumerate(f.coeffs) if c}


def _sp_to_poly(field, sp):
    if not sp:
        return Poly.zero(field)
    coeffs = [0] * (max(sp) + 1)
    for k, c in sp.items():
        coeffs[k] = c
    return Poly(field, coeffs)


def _sp_add(F, a, b):
    out = dict(a)
    for k, c in b.items():
        v = F.add(out.get(k, 0), c)
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _sp_neg(F, a):
    return {k: F.neg(c) for k, c in a.items()}


def _sp_mul(F, a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            v = F.add(out.get(k, 0), F.mul(x, y))
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _sp_frob(a, power):
    """a(T)^power for power a power of q: coefficients are fixed."""
    return {k * power: c for k, c in a.items()}


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


class CarlitzOperator:
    """[M](u) = sum_j coeffs[j] u^{q^j}."""

    __slots__ = ("field", "M", "_sparse")

    def __init__(self, field, M, sparse):
        self.field = field
        self.M = M
        self._sparse = tuple(dict(c) for c in _trim(sparse))

    @property
    def coeffs(self):
        """The coefficients c_0, ..., c_{deg M} as polynomials in T."""
        return tuple(_sp_to_poly(self.field, c) for c in self._sparse)

    def coefficient(self, j):
        if 0 <= j < len(self._sparse):
            return _sp_to_poly(self.field, self._sparse[j])
        return Poly.zero(self.field)

    @property
    def q_degree(self):
        """Largest j with c_j != 0."""
        return len(self._sparse) - 1

    @property
    def degree(self):
        """Degree in u."""
        if not self._sparse:
            return Poly.zero(self.field).degree
        return self.field.q**self.q_degree

    def is_zero(self):
        return not self._sparse

    def __eq__(self, other):
        if not isinstance(other, CarlitzOperator):
            return NotImplemented
        return self.field == other.field and self._sparse == other._sparse

    def __hash__(self):
        return hash(tuple(tuple(sorted(c.items())) for c in self._sparse))

    def __add__(self, other):
        return carlitz_add(self, other)

    def __matmul__(self, other):
        return carlitz_compose(self, other)

    def __call__(self, x):
        return evaluate(self, x)

    def terms(self):
        """[(j, c_j)] for the nonzero coefficients."""
        return [(j, _sp_to_poly(self.field, c)) for j, c in enumerate(self._sparse) if c]

    def __str__(self):
        q = self.field.q
        parts = []
        for j, c in reversed(self.terms()):
            mono = "u" if j == 0 else f"u^{q**j}"
            cs = str(c)
            if cs == "1":
                parts.append(mono)
            elif "+" in cs or "*" in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CarlitzOperator([{self.M}](u) = {self})"

    def to_list(self):
        return [[j, str(c)] for j, c in self.terms()]

    def to_json(self, **kw):
        return json.dumps(self.to_list(), **kw)


def carlitz_add(A, B):
    F = A.field
    n = max(len(A._sparse), len(B._sparse))
    out = []
    for j in range(n):
        a = A._sparse[j] if j < len(A._sparse) else {}
        b = B._sparse[j] if j < len(B._sparse) else {}
        out.append(_sp_add(F, a, b))
    return CarlitzOperator(F, A.M + B.M, out)


def carlitz_compose(A, B):
    """[A] o [B]: the coefficient of u^{q^k} is sum_{i+j=k} a_i b_j^{q^i}."""
    F = A.field
    q = F.q
    out = [{} for _ in range(len(A._sparse) + len(B._sparse) - 1)] if A._sparse and B._sparse else []
    for i, a in enumerate(A._sparse):
        if not a:
            continue
        for j, b in enumerate(B._sparse):
            if b:
                out[i + j] = _sp_add(F, out[i + j], _sp_mul(F, a, _sp_frob(b, q**i)))
    return CarlitzOperator(F, A.M * B.M, out)


def carlitz_action(M):
    """The operator [M], by Horner's rule over the coefficients of M."""
    if M.is_zero():
        raise ZeroPolynomial("the Carlitz action of 0 is not an operator of positive degree")
    F = M.field
    q = F.q
    T = {1: 1}
    acc = []
    for k in range(M.degree, -1, -1):
        # acc <- [T] o acc + M_k
        nxt = [_sp_mul(F, T, c) for c in acc] + [{}]
        for j, c in enumerate(acc):
            nxt[j + 1] = _sp_add(F, nxt[j + 1], _sp_frob(c, q))
        if not nxt[:-1]:
            nxt = [{}]
        if M[k]:
            nxt[0] = _sp_add(F, nxt[0], {0: M[k]})
        acc = nxt
    return CarlitzOperator(F, M, acc)


def evaluate(op, x):
    """[M](x) for a polynomial x in F_q[T]."""
    F = op.field
    q = F.q
    xs = _sp_from_poly(x)
    acc = {}
    for j, c in enumerate(op._sparse):
        if c:
            acc = _sp_add(F, acc, _sp_mul(F, c, _sp_frob(xs, q**j)))
    return _sp_to_poly(F, acc)


def torsion_degree(M):
    """deg_u [M](u), read off the operator; always q^{deg M}."""
    op = carlitz_action(M)
    deg = op.degree
    if deg != M.field.q**M.degree:
        raise ArithmeticError(f"deg [M](u) = {deg} but q^deg M = {M.field.q**M.degree}")
    return deg


def primitive_torsion_count(P, beta):
    """deg [P^beta](u) - deg [P^(beta-1)](u), the number of primitive P^beta-torsion points."""
    if beta < 1:
        raise ValueError("beta must be >= 1")
    one = Poly.one(P.field)
    prev = torsion_degree(P ** (beta - 1)) if beta > 1 else torsion_degree(one)
    return torsion_degree(P**beta) - prev


def torsion_report(P, beta, quotient_limit=2**8):
    """Carlitz torsion data for P^beta compared with Phi(P^beta).

    When q^{beta d} <= quotient_limit, [P^beta](u) is divided by
    [P^(beta-1)](u) explicitly and the exact quotient degree is reported too.
    """
    F = P.field
    top = torsion_degree(P**beta)
    low = torsion_degree(P ** (beta - 1)) if beta > 1 else 1
    qdeg = None
    if F.q ** (beta * P.d) <= quotient_limit:
        qdeg = torsion_quotient(P, beta)[0]
    return {
        "prime": str(P),
        "beta": beta,
        "degree": top,
        "previous_degree": low,
        "difference": top - low,
        "quotient_degree": qdeg,
        "phi": phi(P, beta),
    }


def _bivariate(op):
    """u-exponent -> sparse T-coefficient for the u-polynomial [M](u)."""
    q = op.field.q
    return {q**j: dict(c) for j, c in enumerate(op._sparse) if c}


def torsion_quotient(P, beta):
    """Exact long division of [P^beta](u) by [P^(beta-1)](u) in F_q[T][u].

    Returns (degree of quotient in u, quotient as {u-exponent: Poly}).
    Raises ArithmeticError if the division leaves a remainder.
    """
    F = P.field
    num = _bivariate(carlitz_action(P**beta))
    den = _bivariate(carlitz_action(P ** (beta - 1))) if beta > 1 else {1: {0: 1}}
    dtop = max(den)
    if den[dtop] != {0: 1}:
        raise ArithmeticError("divisor is not monic in u")
    quo = {}
    while num and max(num) >= dtop:
        e = max(num)
        c = num[e]
        shift = e - dtop
        quo[shift] = c
        for k, d in den.items():
            v = _sp_add(F, num.get(k + shift, {}), _sp_neg(F, _sp_mul(F, c, d)))
            if v:
                num[k + shift] = v
            else:
                num.pop(k + shift, None)
    if num:
        raise ArithmeticError("[P^(beta-1)](u) does not divide [P^beta](u)")
    return max(quo), {k: _sp_to_poly(F, v) for k, v in sorted(quo.items())}


@dataclass(frozen=True)
class RamificationData:
    """Ramified places with different exponent (a+1)(p-1) and conductor exponent a+1."""

    terms: tuple
    different_exponents: tuple
    conductor_exponents: tuple

    def to_dict(self):
        return {
            "terms": [{"prime": str(P), "alpha": a} for P, a in self.terms],
            "different_exponents": list(self.different_exponents),
            "conductor_exponents": list(self.conductor_exponents),
        }


def ramification_data(nf: NormalForm):
    if nf.is_zero():
        raise DegenerateInput("a right-hand side in wp(K) defines no extension")
    p = nf.field.p
    terms = [(P, a) for P, a, _ in nf.terms]
    if not nf.polypart.is_zero():
        terms.append((INFINITY, nf.polypart.degree))
    for _, a in terms:
        if a % p == 0:
            raise ArithmeticError(f"pole order {a} divisible by p in a normal form")
    return RamificationData(
        tuple(terms),
        tuple((a + 1) * (p - 1) for _, a in terms),
        tuple(a + 1 for _, a in terms),
    )
