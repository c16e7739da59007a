import pytest
from hypothesis import given, strategies as st

from retset.fields import GF, NoSquareRoot, is_irreducible, sqrt_in_fq

F25 = GF(5, 2)
F343 = GF(7, 3)


def elems(F):
    return st.lists(st.integers(0, F.p - 1), min_size=F.k, max_size=F.k).map(F)


def test_default_moduli():
    assert F25.modulus == (2, 0, 1)
    big = GF(5, 18)
    assert big.modulus == (1, 1) + (0,) * 16 + (1,)
    assert is_irreducible(list(big.modulus), 5)


def test_alpha_is_primitive():
    alpha = F25((1, 1))
    orders = [e for e in range(1, 25) if alpha ** e == F25.one()]
    assert orders[0] == 24


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(5, 2, (1, 0, 1))  # u^2 + 1 = (u - 2)(u + 2) mod 5
    with pytest.raises(ZeroDivisionError):
        F25.zero().inverse()


@pytest.mark.parametrize("F", [F25, F343])
def test_field_axioms(F):
    @given(elems(F), elems(F), elems(F))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == F.zero()
        if a:
            assert a * a.inverse() == F.one()
        assert a ** F.order == a
        assert (a + b).frob() == a.frob() + b.frob()
    check()


@given(elems(F25))
def test_sqrt(a):
    s = a * a
    r = sqrt_in_fq(s)
    assert r * r == s


def test_nonsquare_has_no_root():
    n = F25.nonresidue()
    with pytest.raises(NoSquareRoot):
        sqrt_in_fq(n)
