import pytest
from hypothesis import given
from hypothesis import strategies as st

from ascyclo.algebra import (
    NEG_INF,
    Poly,
    PrimePoly,
    enumerate_monic_irreducibles,
    factor,
    field_from_q,
    gcd,
    invmod,
    is_irreducible,
    monic_irreducibles,
    monic_polys,
    mulmod,
    parse_poly,
    poly_divmod,
    powmod,
    squarefree_decomposition,
    xgcd,
)
from ascyclo.algebra.poly import _irreducible_lower_codes
from ascyclo.errors import DivisionByZeroPoly, NotIrreducible, ZeroPolynomial

from conftest import fields, polys


def mobius(n):
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


def necklace(q, d):
    return sum(mobius(d // e) * q**e for e in range(1, d + 1) if d % e == 0) // d


def trial_irreducible(f):
    """No monic factor of degree 1..deg f // 2."""
    F = f.field
    for k in range(1, f.degree // 2 + 1):
        for g in monic_polys(F, k):
            if (f % g).is_zero():
                return False
    return True


def test_degree_of_zero_is_sentinel():
    F = field_from_q(2)
    assert Poly.zero(F).degree == NEG_INF
    assert Poly.zero(F).degree < -10**9


def test_spec_divmod_examples():
    F = field_from_q(2)
    T = Poly.T(F)
    assert poly_divmod(T**2, T) == (T, Poly.zero(F))
    q, r = poly_divmod(T**3 + T + 1, T**2 + 1)
    assert (q, r) == (T, Poly.one(F))
    f = T**5 + T**2 + 1
    assert poly_divmod(f, Poly.one(F)) == (f, Poly.zero(F))
    with pytest.raises(DivisionByZeroPoly):
        poly_divmod(f, Poly.zero(F))


def test_spec_irreducible_examples():
    F = field_from_q(2)
    T = Poly.T(F)
    assert is_irreducible(T**2 + T + 1)
    assert not is_irreducible(T**2 + 1)
    for q in (2, 3, 4, 9):
        G = field_from_q(q)
        for c in range(q):
            assert is_irreducible(Poly(G, [c, 1]))
    with pytest.raises(ZeroPolynomial):
        is_irreducible(Poly.zero(F))


def test_spec_enumeration_examples():
    F2, F3 = field_from_q(2), field_from_q(3)
    assert [str(P) for P in enumerate_monic_irreducibles(F2, 1)] == ["T", "T + 1"]
    assert [str(P) for P in enumerate_monic_irreducibles(F2, 2)] == ["T", "T + 1", "T^2 + T + 1"]
    assert [str(P) for P in enumerate_monic_irreducibles(F3, 1)] == ["T", "T + 1", "T + 2"]


@given(st.data())
def test_divmod_roundtrip(data):
    F = data.draw(fields())
    f = data.draw(polys(F, 9))
    g = data.draw(polys(F, 5, nonzero=True))
    q, r = poly_divmod(f, g)
    assert q * g + r == f
    assert r.degree < g.degree


@given(st.data())
def test_ring_axioms(data):
    F = data.draw(fields())
    a, b, c = (data.draw(polys(F, 5)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + Poly.zero(F) == a and a * Poly.one(F) == a
    assert a - a == Poly.zero(F)
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


@given(st.data())
def test_gcd_and_bezout(data):
    F = data.draw(fields())
    a = data.draw(polys(F, 6, nonzero=True))
    b = data.draw(polys(F, 6, nonzero=True))
    g = gcd(a, b)
    assert g.is_monic()
    assert (a % g).is_zero() and (b % g).is_zero()
    d, u, v = xgcd(a, b)
    assert d == g and u * a + v * b == g


@given(st.data())
def test_invmod_and_powmod(data):
    F = data.draw(fields())
    m = data.draw(polys(F, 4, nonzero=True).filter(lambda f: f.degree >= 1))
    a = data.draw(polys(F, 6))
    n = data.draw(st.integers(0, 20))
    expected = Poly.one(F) % m
    for _ in range(n):
        expected = (expected * a) % m
    assert powmod(a, n, m) == expected
    assert mulmod(a, a, m) == (a * a) % m
    if gcd(a, m).is_one():
        assert ((a * invmod(a, m)) % m).is_one()


@pytest.mark.parametrize("q,dmax", [(2, 6), (3, 6), (4, 6), (5, 4), (9, 4)])
def test_irreducible_counts_match_necklace_formula(q, dmax):
    F = field_from_q(q)
    for d in range(1, dmax + 1):
        assert len(monic_irreducibles(F, d)) == necklace(q, d)


@pytest.mark.parametrize("q,dmax", [(2, 7), (3, 5), (4, 4), (9, 3)])
def test_is_irreducible_matches_trial_division(q, dmax):
    F = field_from_q(q)
    for d in range(1, dmax + 1):
        listed = {P.code for P in monic_irreducibles(F, d)}
        for f in monic_polys(F, d):
            t = trial_irreducible(f)
            assert is_irreducible(f) == t
            assert (f.code in listed) == t


def test_sieve_agrees_with_rabin():
    F = field_from_q(3)
    sieve = _irreducible_lower_codes(F, 7)
    top = 3**7
    rabin = [c for c in range(top) if is_irreducible(Poly.from_code(F, top + c))]
    assert list(sieve) == rabin


def test_enumeration_order_and_uniqueness():
    F = field_from_q(4)
    ps = enumerate_monic_irreducibles(F, 3)
    keys = [P.sort_key() for P in ps]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    assert all(P.is_monic() for P in ps)


def test_primepoly_checks():
    F = field_from_q(3)
    assert PrimePoly(F, (1, 0, 1)).d == 2
    with pytest.raises(NotIrreducible):
        PrimePoly(F, (2, 0, 1))
    with pytest.raises(NotIrreducible):
        PrimePoly(F, (1, 0, 2))  # not monic


@given(st.data())
def test_factor_reconstructs(data):
    F = data.draw(fields())
    f = data.draw(polys(F, 8, nonzero=True))
    lc, fac = factor(f)
    acc = Poly.constant(F, lc)
    for P, e in fac:
        assert is_irreducible(P) and P.is_monic() and e >= 1
        acc = acc * P**e
    assert acc == f
    primes = [P for P, _ in fac]
    assert len(set(primes)) == len(primes)


def test_factor_of_field_polynomial():
    # T^9 - T is the product of all monic irreducibles of degree 1 and 2 over F_3
    F = field_from_q(3)
    T = Poly.T(F)
    _, fac = factor(T**9 - T)
    assert sorted(P.code for P, e in fac) == sorted(P.code for P in enumerate_monic_irreducibles(F, 2))
    assert all(e == 1 for _, e in fac)


@given(st.data())
def test_squarefree_decomposition(data):
    F = data.draw(fields())
    f = data.draw(polys(F, 6, nonzero=True)).monic()
    g = data.draw(polys(F, 3, nonzero=True)).monic()
    h = f * g**2 * g.frobenius()
    acc = Poly.one(F)
    for part, e in squarefree_decomposition(h):
        assert gcd(part, part.derivative()).is_one()
        acc = acc * part**e
    assert acc == h.monic()


@given(st.data())
def test_frobenius_is_pth_power(data):
    F = data.draw(fields())
    f = data.draw(polys(F, 5))
    assert f.frobenius() == f**F.p
    assert f.frobenius().pth_root() == f


def test_code_and_order():
    F = field_from_q(3)
    f = Poly(F, [2, 0, 1])
    assert f.code == 2 + 0 * 3 + 1 * 9
    assert Poly.from_code(F, f.code) == f
    assert Poly(F, [0, 1]) < Poly(F, [1, 1]) < Poly(F, [0, 0, 1])


def test_monic_polys_count():
    F = field_from_q(4)
    assert len(list(monic_polys(F, 3))) == 64
