import itertools
import json

import numpy as np
import pytest

from ascyclo.algebra import (
    Poly,
    PrimePoly,
    RatFunc,
    enumerate_monic_irreducibles,
    field_from_q,
    parse_ratfunc,
)
from ascyclo.artin_schreier import equivalent_generator_data, is_equivalent, wp_reduce
from ascyclo.census import (
    census_bruteforce,
    census_identity_check,
    census_vectors,
    enumerate_equations,
    equation_rhs,
    n_alpha,
    nf_vector,
    phi,
)
from ascyclo.errors import BudgetExceeded, InvalidAlpha
from ascyclo.unit_group import n_beta


def T_over(q):
    return PrimePoly(field_from_q(q), (0, 1))


def test_n_alpha_examples():
    assert n_alpha(T_over(2), 1) == 2
    assert n_alpha(T_over(2), 3) == 4
    assert n_alpha(T_over(3), 1) == 3
    with pytest.raises(InvalidAlpha):
        n_alpha(T_over(2), 2)
    with pytest.raises(InvalidAlpha):
        n_alpha(T_over(3), 0)


@pytest.mark.parametrize("q,alpha,eqs,classes", [(2, 1, 2, 2), (2, 3, 8, 4), (3, 1, 6, 3)])
@pytest.mark.parametrize("method", ["linear", "direct"])
def test_census_examples(q, alpha, eqs, classes, method):
    rep = census_bruteforce(T_over(q), alpha, method=method)
    assert rep.enumerated_equations == eqs
    assert rep.brute_count == classes == rep.formula_count
    assert rep.matches


def test_census_f2_alpha1_classes():
    rep = census_bruteforce(T_over(2), 1)
    assert [str(r) for r in rep.class_representatives] == ["1/T", "(T + 1)/T"]


def test_census_identity_examples():
    for q, alpha in [(2, 1), (2, 3), (3, 1)]:
        assert census_identity_check(T_over(q), alpha)
    P = T_over(2)
    assert n_beta(P, 1) == 0 and n_beta(P, 2) == 1
    assert n_beta(P, 3) == 1 and n_beta(P, 4) == 3
    with pytest.raises(InvalidAlpha):
        census_identity_check(P, 4)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        census_bruteforce(T_over(9), 7)
    with pytest.raises(BudgetExceeded):
        census_bruteforce(T_over(2), 5, budget=16)


def small_points():
    for q in (2, 3, 4):
        F = field_from_q(q)
        for P in enumerate_monic_irreducibles(F, 2):
            for alpha in range(1, 6):
                if alpha % F.p and q ** (P.degree * alpha + 1) <= 2**11:
                    yield P, alpha


@pytest.mark.parametrize("P,alpha", list(small_points()), ids=str)
def test_linear_and_direct_agree(P, alpha):
    a = census_bruteforce(P, alpha, method="linear", max_representatives=10**6)
    b = census_bruteforce(P, alpha, method="direct", max_representatives=10**6)
    assert a.brute_count == b.brute_count == n_alpha(P, alpha)
    assert a.class_sizes == b.class_sizes == {equivalent_generator_data(P, alpha)[1]: a.brute_count}
    assert a.class_representatives == b.class_representatives


@pytest.mark.parametrize("q,d,alpha", [(2, 2, 3), (3, 1, 4), (4, 1, 3), (9, 1, 2)])
def test_linear_map_matches_scalar_reduction(q, d, alpha):
    F = field_from_q(q)
    P = list(enumerate_monic_irreducibles(F, d))[-1]
    a_codes, h_codes, Y = census_vectors(P, alpha)
    rng = np.random.default_rng(q * 10 + alpha)
    for k in rng.choice(len(Y), size=min(60, len(Y)), replace=False).tolist():
        nf = wp_reduce(equation_rhs(P, alpha, int(a_codes[k]), Poly.from_code(F, int(h_codes[k]))))[0]
        assert nf_vector(nf, P, alpha) == Y[k].tolist()


def test_enumeration_count_and_shape():
    F = field_from_q(3)
    P = PrimePoly(F, (1, 0, 1))
    eqs = list(enumerate_equations(P, 2))
    assert len(eqs) == F.q * phi(P, 2)
    for a, h in eqs[:50]:
        assert h.degree < 2 * P.degree and not (h % P).is_zero()
        r = equation_rhs(P, 2, a, h)
        assert r.den == P**2


def test_representatives_are_normal_and_pairwise_inequivalent():
    for P, alpha in [(T_over(3), 2), (T_over(4), 1), (PrimePoly(field_from_q(2), (1, 1, 1)), 3)]:
        rep = census_bruteforce(P, alpha, max_representatives=40)
        for nf in rep.class_representatives:
            nf.check()
        for a, b in itertools.combinations(rep.class_representatives, 2):
            assert is_equivalent(a, b) is None


def test_witness_bound_on_equivalent_pairs():
    # for equivalent equations the difference is wp(h / P^alpha0) with deg h <= d alpha0
    F = field_from_q(3)
    P = PrimePoly(F, (0, 1))
    alpha = 4
    alpha0 = alpha // 3
    forms = {}
    for a, h in enumerate_equations(P, alpha):
        s = equation_rhs(P, alpha, a, h)
        nf = wp_reduce(s)[0]
        key = frozenset(nf.scale(j) for j in (1, 2))
        forms.setdefault(key, []).append(s)
    for members in list(forms.values())[:40]:
        for s1, s2 in itertools.combinations(members, 2):
            j = is_equivalent(wp_reduce(s1)[0], wp_reduce(s2)[0])
            assert j is not None
            _, w = wp_reduce(s2 - s1 * j)
            h = w * P**alpha0
            assert h.is_polynomial() and h.num.degree <= P.degree * alpha0


def test_report_json():
    rep = census_bruteforce(T_over(3), 2)
    d = json.loads(rep.to_json())
    for key in ("field", "prime", "alpha", "formula_count", "brute_count",
                "enumerated_equations", "representatives"):
        assert key in d
    assert d["brute_count"] == d["formula_count"] == 9
    F = field_from_q(3)
    for s in d["representatives"]:
        assert isinstance(parse_ratfunc(F, s), RatFunc)
