import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ascyclo.algebra import (
    INFINITY,
    Poly,
    PrimePoly,
    enumerate_monic_irreducibles,
    field_from_q,
    parse_poly,
    parse_ratfunc,
)
from ascyclo.artin_schreier import NormalForm, normal_form
from ascyclo.carlitz import (
    carlitz_action,
    primitive_torsion_count,
    ramification_data,
    torsion_degree,
    torsion_quotient,
    torsion_report,
)
from ascyclo.census import phi
from ascyclo.errors import DegenerateInput, ZeroPolynomial

from conftest import fields, polys


def naive_apply(M, x):
    """[M](x) from the recursion alone: [T^k](x) = T [T^(k-1)](x) + [T^(k-1)](x)^q."""
    q = M.field.q
    acc = Poly.zero(M.field)
    tk = x
    for k, c in enumerate(M.coeffs):
        if k:
            tk = Poly.T(M.field) * tk + tk**q
        acc = acc + tk.scale(c)
    return acc


def test_spec_examples():
    F = field_from_q(2)
    T = Poly.T(F)
    one = carlitz_action(Poly.one(F))
    assert str(one) == "u" and one.degree == 1
    assert str(carlitz_action(T)) == "u^2 + T*u"
    op = carlitz_action(T**2)
    assert op.coeffs == (T**2, T**2 + T, Poly.one(F))
    assert torsion_degree(T) == 2
    assert torsion_degree(T**2) == 4
    assert torsion_degree(T * (T + 1)) == 4
    assert primitive_torsion_count(PrimePoly(F, (0, 1)), 2) == phi(PrimePoly(F, (0, 1)), 2) == 2
    with pytest.raises(ZeroPolynomial):
        carlitz_action(Poly.zero(F))


def test_constants_act_by_scaling():
    F = field_from_q(9)
    for c in range(1, 9):
        op = carlitz_action(Poly.constant(F, c))
        assert op.coeffs == (Poly.constant(F, c),)


@given(st.data())
def test_module_laws(data):
    F = data.draw(fields())
    M = data.draw(polys(F, 4, nonzero=True))
    N = data.draw(polys(F, 4, nonzero=True))
    A, B = carlitz_action(M), carlitz_action(N)
    assert A @ B == B @ A == carlitz_action(M * N)
    if not (M + N).is_zero():
        assert A + B == carlitz_action(M + N)
    assert A.degree == F.q**M.degree
    assert A.coefficient(0) == M
    assert A.coefficient(M.degree) == Poly.constant(F, M.lc)


@given(st.data())
def test_action_matches_recursion(data):
    F = data.draw(st.sampled_from([2, 3]).map(field_from_q))
    M = data.draw(polys(F, 3, nonzero=True))
    x = data.draw(polys(F, 2))
    assert carlitz_action(M)(x) == naive_apply(M, x)


def test_composition_is_functional_composition():
    F = field_from_q(3)
    M, N = parse_poly(F, "T^2 + 2"), parse_poly(F, "T + 1")
    x = parse_poly(F, "T + 2")
    A, B = carlitz_action(M), carlitz_action(N)
    assert A(B(x)) == carlitz_action(M * N)(x)


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_torsion_difference_is_phi(q):
    F = field_from_q(q)
    for P in enumerate_monic_irreducibles(F, 2):
        for beta in range(1, 7):
            if q ** (beta * P.degree) > 2**16:
                continue
            assert primitive_torsion_count(P, beta) == phi(P, beta)
            rep = torsion_report(P, beta)
            assert rep["difference"] == rep["phi"]
            if rep["quotient_degree"] is not None:
                assert rep["quotient_degree"] == rep["phi"]


def test_torsion_quotient_by_hand():
    # [T^2](u) / [T](u) over F_3 = u^6 + 2T u^4 + T^2 u^2 + T
    F = field_from_q(3)
    deg, quo = torsion_quotient(PrimePoly(F, (0, 1)), 2)
    assert deg == 6
    assert {k: str(v) for k, v in quo.items()} == {0: "T", 2: "T^2", 4: "2*T", 6: "1"}


def test_serialization():
    F = field_from_q(2)
    op = carlitz_action(parse_poly(F, "T^2"))
    assert json.loads(op.to_json()) == [[0, "T^2"], [1, "T^2 + T"], [2, "1"]]


def test_ramification_examples():
    F2 = field_from_q(2)
    r = ramification_data(normal_form(parse_ratfunc(F2, "1/T")))
    assert [(str(P), a) for P, a in r.terms] == [("T", 1)]
    assert r.different_exponents == (2,) and r.conductor_exponents == (2,)
    r = ramification_data(normal_form(parse_ratfunc(F2, "T")))
    assert r.terms == ((INFINITY, 1),) and r.conductor_exponents == (2,)
    F3 = field_from_q(3)
    r = ramification_data(normal_form(parse_ratfunc(F3, "1/T^2")))
    assert r.conductor_exponents == (3,) and r.different_exponents == (6,)
    r = ramification_data(normal_form(parse_ratfunc(F3, "1")))
    assert r.terms == ()
    with pytest.raises(DegenerateInput):
        ramification_data(NormalForm.zero(F3))


@given(st.data())
def test_conductor_discriminant_consistency(data):
    F = data.draw(fields())
    nf = normal_form(parse_ratfunc(F, "1") / data.draw(polys(F, 4, nonzero=True)) + data.draw(polys(F, 3)))
    if nf.is_zero():
        return
    r = ramification_data(nf)
    for (P, a), c, d in zip(r.terms, r.conductor_exponents, r.different_exponents):
        assert a % F.p and c == a + 1 and d == (F.p - 1) * c
