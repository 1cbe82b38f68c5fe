"""Field arithmetic, Graham monomials and sums, sparse polynomials."""

import random

import pytest

from egc.ring import (DEFAULT_PRIME, EvaluationPoint, GrahamMonomial,
                      GrahamSum, SparsePoly, divided_difference, eval_graham,
                      factor_type, field_inv, is_prime, isobaric, ominus,
                      omega1_factor, oneg, prec, sample_point)

P = 101


def test_is_prime():
    assert is_prime(2) and is_prime(101) and is_prime(DEFAULT_PRIME)
    assert not is_prime(1) and not is_prime(91)


def test_ominus_basics():
    assert ominus(5, 5, 7, P) == 0
    assert ominus(9, 4, 0, P) == 5
    assert oneg(0, 3, P) == 0


def test_ominus_telescoping():
    rng = random.Random(1)
    for _ in range(100):
        a, b, c, beta = (rng.randrange(P) for _ in range(4))
        if (1 + beta * b) % P == 0 or (1 + beta * c) % P == 0:
            continue
        ab, bc = ominus(a, b, beta, P), ominus(b, c, beta, P)
        assert (ab + bc + beta * ab * bc) % P == ominus(a, c, beta, P)


def test_ominus_rejects_zero_denominator():
    with pytest.raises(ArithmeticError):
        ominus(1, P - 1, 1, P)  # 1 + beta*b = 0


def test_field_inv():
    for a in range(1, 20):
        assert a * field_inv(a, P) % P == 1


def test_prec_order():
    assert prec(1, 2) and prec(5, -3) and prec(-1, 0)
    assert not prec(0, -1) and not prec(2, 1) and not prec(1, 1)


def test_factor_types():
    assert factor_type((1, 2)) == 1
    assert factor_type((-2, 0)) == 2
    assert factor_type((2, 0)) == 3
    with pytest.raises(ValueError):
        factor_type((2, 1))


def test_omega1_factor():
    assert omega1_factor((1, 2)) == (-1, 0)
    assert omega1_factor((2, 0)) == (1, -1)
    for i in range(-10, 11):
        for j in range(-10, 11):
            if prec(i, j):
                assert omega1_factor(omega1_factor((i, j))) == (i, j)
                assert prec(*omega1_factor((i, j)))


def test_graham_monomial_sorting():
    m = GrahamMonomial(((2, 0), (1, 2), (1, 2)), 0)
    assert m.factors == ((1, 2), (1, 2), (2, 0))
    with pytest.raises(ValueError):
        GrahamMonomial(((2, 1),), 0)


def test_graham_sum_product_and_shift():
    a = GrahamSum({GrahamMonomial(((1, 2),), 0): 1})
    b = GrahamSum({GrahamMonomial(((2, 0),), 1): 2})
    prod = a * b
    ((mono, coeff),) = prod.canonical()
    assert mono.factors == ((1, 2), (2, 0))
    assert mono.beta_shift == 1 and coeff == 2
    assert all(m.beta_shift == 0 for m in prod.shifted(-1).terms)


def test_graham_sum_json_roundtrip():
    s = GrahamSum({GrahamMonomial(((1, 2), (2, 0)), 0): 3,
                   GrahamMonomial((), 0): 1})
    text = s.to_json(2)
    back, norm = GrahamSum.from_json(text)
    assert back == s and norm == 2


def test_eval_graham():
    assert eval_graham(GrahamSum.zero(), _pt()) == 0
    assert eval_graham(GrahamSum.one(), _pt()) == 1
    s = GrahamSum({GrahamMonomial(((1, 2),), 0): 1})
    pt = EvaluationPoint.make(P, 1, {}, {1: 3, 2: 1})
    assert eval_graham(s, pt) == 1  # 1*(3-1)/(1+1)


def _pt():
    return EvaluationPoint.make(P, 1, {}, {1: 3, 2: 1})


def test_evaluation_point():
    pt = EvaluationPoint.make(P, 2, {1: 5, -1: 7}, {0: 3})
    assert pt.x_val(1) == 5 and pt.x_val(2) == 0
    assert pt.y_val(0) == 3 and pt.y_val(9) == 0
    assert pt.x_support == frozenset({1, -1})
    sub = pt.with_x_to_y()
    assert sub.x_val(0) == 3 and sub.x_val(1) == 0


def test_evaluation_point_omega1():
    pt = EvaluationPoint.make(P, 2, {1: 5}, {0: 3, 2: 4})
    w = pt.omega1()
    assert w.x_val(0) == oneg(5, 2, P)
    assert w.y_val(1) == oneg(3, 2, P)
    assert w.omega1() == pt


def test_sample_point_distinct():
    rng = random.Random(0)
    pt = sample_point(P, rng, range(-2, 3), (1, 2), distinct_x=True)
    vals = [pt.x_val(i) for i in range(-2, 3)]
    assert len(set(vals)) == 5 and 0 not in vals


def test_divided_difference_fixtures():
    x1 = SparsePoly.var(1, 2, P)
    x2 = SparsePoly.var(2, 2, P)
    one = SparsePoly.const(1, 2, P)
    assert divided_difference(x1, 1) == one
    assert divided_difference(x1 * x2, 1).is_zero()
    assert divided_difference(x1 * x1, 1) == x1 + x2
    d = divided_difference(x1 * x1 * x2, 1)
    assert divided_difference(d, 1).is_zero()


def test_isobaric_fixtures():
    one = SparsePoly.const(1, 2, P)
    beta = 7
    assert isobaric(one, 1, beta) == one.scale(beta)
    rng = random.Random(2)
    f = SparsePoly.var(1, 3, P) * SparsePoly.var(1, 3, P) \
        + SparsePoly.var(2, 3, P).scale(rng.randrange(1, P))
    pi_f = isobaric(f, 1, beta)
    assert isobaric(pi_f, 1, beta) == pi_f.scale(beta)
    lhs = isobaric(isobaric(isobaric(f, 1, beta), 2, beta), 1, beta)
    rhs = isobaric(isobaric(isobaric(f, 2, beta), 1, beta), 2, beta)
    assert lhs == rhs
