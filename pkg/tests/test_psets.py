import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gen import brute_values, random_term
from retset.psets import (AP, NO, P_NORMAL, UNKNOWN, WIDELY_ONLY, YES, ABTerm, DecompositionError,
                          DomainError, InvalidTerm, PSetTerm, SetExpr, UndecidedElement, affine,
                          classify, equal_up_to_finite, intersect_nat, parse_setexpr,
                          two_exponential_decompose, union, window)

S5 = PSetTerm(5, -1, [[1]])
S25 = PSetTerm(25, 0, [[1, 1]])


def test_membership_examples():
    m = S5.member(24)
    assert m.verdict == YES and m.witness == (2,)
    assert S5.member(30).verdict == NO
    m = S25.member(650)
    assert m.verdict == YES and m.witness == (1,)


def test_window_examples():
    assert window(S25, 1000) == [2, 650]
    assert window(AP(1, 6), 20) == [1, 7, 13, 19]
    assert window(S5, 130) == [0, 4, 24, 124]


def test_parse_round_trip():
    E = parse_setexpr("N: PS(5;-1;[1]) + AP(1,6) add{17} del{7}")
    assert window(E, 30) == [0, 1, 4, 13, 17, 19, 24, 25]
    assert window(parse_setexpr(str(E)), 30) == window(E, 30)


@pytest.mark.parametrize("text", ["PS(5;1/3;[1])", "PS(6;0;[1])", "PS(5;0;[1,2|3])", "A(5;1,1)"])
def test_invalid_terms(text):
    with pytest.raises(InvalidTerm):
        parse_setexpr(text)


def test_affine_examples():
    assert window(affine(2, 1, AP(0, 3)), 20) == window(AP(1, 6), 20)
    assert window(affine(0, 7, S5), 20) == [7]
    assert window(affine(3, 2, S5), 100) == [2, 14, 74]


def test_affine_domain_error():
    with pytest.raises(DomainError):
        affine(-1, 0, intersect_nat(S5))


def test_classify_examples():
    assert classify(AP(3, 5)) == P_NORMAL
    assert classify(S5) == P_NORMAL
    assert classify(S25) == WIDELY_ONLY
    assert classify(PSetTerm(25, 0, [[1, 0]])) == P_NORMAL


def test_union_and_exceptions():
    E = union(S5, SetExpr([AP(17, 0)]))
    assert window(E, 100) == [0, 4, 17, 24]
    rep = equal_up_to_finite(S5, E, 0, 100)
    assert sorted(rep.differences) == [17]
    assert equal_up_to_finite(S5, S5, 0, 200).differences == []
    assert not equal_up_to_finite(AP(0, 2), AP(1, 2), 0, 100).consistent


def test_mixed_signs_are_undecided():
    T = PSetTerm(5, 0, [[1], [-1]])
    assert T.member(24).verdict == YES
    assert T.member(3).verdict == UNKNOWN
    with pytest.raises(UndecidedElement):
        window(T, 10)


def test_ab_terms():
    assert window(ABTerm("A", 25, 1, 1), 20000) == [2, 26, 50, 626, 650, 1250, 15626, 15650, 16250]
    assert window(ABTerm("B", 25, 3, 2), 2000) == [5, 53, 1253]
    with pytest.raises(InvalidTerm):
        ABTerm("A", 5, 1, 1)


@given(st.integers(0, 10 ** 9))
def test_window_matches_brute_force(seed):
    T = random_term(random.Random(seed), dmax=2)
    assert set(window(T, 10 ** 5)) == brute_values(T, 12, 0, 10 ** 5)


@given(st.integers(0, 10 ** 9), st.integers(1, 4), st.integers(0, 9))
def test_affine_maps_values(seed, a, b):
    T = random_term(random.Random(seed), dmax=2, rmax=1)
    lhs = set(window(affine(a, b, T), 10 ** 4))
    rhs = {a * x + b for x in T.elements(-10 ** 5, 10 ** 5)} & set(range(10 ** 4 + 1))
    assert lhs == rhs


@given(st.integers(0, 10 ** 9))
def test_membership_agrees_with_window(seed):
    rng = random.Random(seed)
    T = random_term(rng, dmax=2, rmax=1)
    vals = set(window(T, 3000))
    for n in rng.sample(range(3001), 20):
        v = T.member(n).verdict
        assert v == (YES if n in vals else NO)


def test_lemma56_examples():
    D = two_exponential_decompose(1, 1, 0, [2], 5, N=10)
    assert [(c.form, c.offset) for c in D.components] == [(4, (0, 0))]
    D = two_exponential_decompose(1, -1, 0, [], 5)
    assert [(c.form, c.offset) for c in D.components] == [(4, (0, 0))]
    D = two_exponential_decompose(2, 3, 1, [4], 5)
    assert [(c.form, c.offset) for c in D.components] == [(1, (0, 0))]
    assert D.status == "window-certified" and D.certified_to == 16


def test_lemma56_quadrant_and_rows():
    D = two_exponential_decompose(1, 1, 0, [1, 1], 5)
    assert [(c.form, c.offset) for c in D.components] == [(5, (0, 0))]
    D = two_exponential_decompose(1, 0, 0, [1], 5)
    assert [(c.form, c.offset) for c in D.components] == [(5, (0, 0))]
    D = two_exponential_decompose(1, 1, 1, [], 5)
    assert D.components == []


def test_lemma56_rational_coefficients():
    D = two_exponential_decompose(Fraction(1, 2), Fraction(1, 2), 0, [1], 5)
    assert [(c.form, c.offset) for c in D.components] == [(4, (0, 0))]


def test_lemma56_run_starting_on_covered_point():
    # -5^n1 + 5^n2 = -1 + 5^m: the diagonal and the column n1 = 0 share (0, 0)
    D = two_exponential_decompose(-1, 1, -1, [1], 5, N=12)
    assert sorted((c.form, c.offset) for c in D.components) == [(3, (0, 0)), (4, (0, 0))]
