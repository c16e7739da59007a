import random

import pytest
from hypothesis import given, strategies as st

from retset.fields import GF
from retset.poly import (RatFunc, SparsePoly, Specialization, parse_ratfunc, parse_sparse,
                         ratfunc_eq, specialization_field)

F5 = GF(5)
F25 = GF(5, 2)

polys = st.dictionaries(st.integers(0, 30), st.integers(0, 4), max_size=6).map(
    lambda d: SparsePoly(F5, d))


def test_freshman_dream():
    t = SparsePoly.t(F5)
    assert (t + 1) ** 25 == SparsePoly(F5, {25: 1, 0: 1})
    assert (t + 1) ** 5 == parse_sparse("t^5 + 1", F5)


def test_huge_sparse_power():
    f = parse_sparse("t^3 + 2*t + 1", F5)
    g = f.frob_pow(12)
    assert g.degree() == 3 * 5 ** 12 and len(g) == 3


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == SparsePoly(F5)


@given(polys, st.integers(0, 3))
def test_frobenius_is_power(a, e):
    assert a.frob_pow(e) == a ** (5 ** e)


@given(polys, polys.filter(bool), polys.filter(bool))
def test_ratfunc_cancellation(a, b, c):
    r = RatFunc(a * c, b * c)
    assert r == RatFunc(a, b)
    red = r.reduced()
    assert red == RatFunc(a, b)
    assert red.den.degree() <= b.degree()


def test_ratfunc_over_f25():
    alpha = F25((1, 1))
    x = parse_ratfunc("(t + alpha)/(t - alpha)", F25, {"alpha": alpha})
    y = parse_ratfunc("(t - alpha)/(t + alpha)", F25, {"alpha": alpha})
    assert x * y == 1
    assert (x ** 25).frob(0) == x.frob(2)


def test_specialization_is_ring_map():
    T = specialization_field(F25, 10 ** 6)
    rng = random.Random(3)
    spec = Specialization.random(T, F25, rng)
    alpha = F25((1, 1))
    t = RatFunc.t(F25)
    f, g = t * t + alpha, t + 2
    assert spec(f * g) == spec(f) * spec(g)
    assert spec(f + g) == spec(f) + spec(g)


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(SparsePoly.t(F5), SparsePoly(F5))


def test_probabilistic_equality_reports_bound():
    a = RatFunc(SparsePoly(F5, {i * 7: 1 for i in range(40)}))
    b = RatFunc(SparsePoly(F5, {i * 7: 1 for i in range(40)}))
    v = ratfunc_eq(a, b, threshold=10)
    assert v.equal and v.probabilistic and v.error_bound < 1e-6
