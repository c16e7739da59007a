import random

import pytest
from hypothesis import given, strategies as st

from retset.curves import (EllipticCurve, TorsionBoundTooSmall, _double_and_add, division_poly,
                           ec_add, ec_frobenius, ec_scalar_mul, torsion_count)
from retset.fields import GF

E = EllipticCurve(5, 0, 1)
ORD = EllipticCurve(5, 1, 1)
F = GF(5, 3)


def random_point(curve, field, rng):
    while True:
        x = field.random(rng)
        r = curve.rhs(x)
        if r.is_square():
            return curve.lift_x(x)


points = st.integers(0, 10 ** 6).map(lambda s: random_point(E, F, random.Random(s)))


def test_point_counts():
    assert E.count_points(1) == 6 and E.trace == 0 and E.supersingular
    assert ORD.trace == -3 and not ORD.supersingular


def test_singular_curve_rejected():
    with pytest.raises(ValueError):
        EllipticCurve(5, 0, 0)


@given(points, points, points)
def test_group_law(P, Q, R):
    assert ec_add(ec_add(P, Q), R) == ec_add(P, ec_add(Q, R))
    assert ec_add(P, Q) == ec_add(Q, P)
    assert ec_add(P, -P).infinity
    assert ec_add(P, Q).on_curve()


@given(points)
def test_frobenius_squared_is_minus_p(P):
    assert ec_frobenius(P, 2) == -_double_and_add(5, P)


@given(points, st.integers(1, 400))
def test_scalar_mul_routes_agree(P, n):
    assert ec_scalar_mul(n, P) == _double_and_add(n, P)


def test_ordinary_curve_breaks_frobenius_identity():
    rng = random.Random(1)
    pts = [random_point(ORD, F, rng) for _ in range(10)]
    assert any(not ec_frobenius(P, 2) == -_double_and_add(5, P) for P in pts)


@pytest.mark.parametrize("m", [2, 3, 4, 7])
def test_division_polynomials(m):
    f, g = division_poly(m, E)
    assert f.degree() == m * m and g.degree() == m * m - 1
    rng = random.Random(m)
    for _ in range(5):
        P = random_point(E, F, rng)
        Q = _double_and_add(m, P)
        if Q.infinity:
            assert not g.evaluate(P.x)
        else:
            assert Q.x == f.evaluate(P.x) / g.evaluate(P.x)


def test_torsion_counts():
    assert torsion_count(5, E) == 1
    assert torsion_count(2, E) == 4
    assert torsion_count(3, E) == 9


def test_torsion_bound_too_small():
    with pytest.raises(TorsionBoundTooSmall):
        torsion_count(7, E, max_degree=1)
