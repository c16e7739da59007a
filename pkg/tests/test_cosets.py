import itertools
import random

import pytest
from hypothesis import given, strategies as st

from gen import random_coset, random_requirements
from retset.cosets import (Double, Eq, GoodCoset, GoodSubgroup, Mult, Requirement, Zero,
                           format_canonical, intersect, parse_coset, solve_integer)


def test_canonical_examples():
    assert GoodSubgroup(3, [Eq(1, 2), Double(3, 1)]).canonical() == [(1, (1, 1, 2))]
    assert GoodSubgroup(2, [Mult(1, 3), Zero(2)]).canonical() == [(3, (1, 0))]
    assert GoodSubgroup(2, []).canonical() == [(1, (1, 0)), (1, (0, 1))]


def test_inconsistent_cycle_is_zero():
    H = GoodSubgroup(2, [Eq(1, 2), Double(1, 2)])
    assert H.canonical() == []


def test_intersection_examples():
    A = GoodCoset((0, 0), (0, 0), GoodSubgroup(2, [Eq(1, 2)]))
    B = GoodCoset((0, 0), (0, 0), GoodSubgroup(2, [Mult(1, 2)]))
    C = intersect(A, B)
    assert C.subgroup.canonical() == [(2, (1, 1))]
    D = intersect(A, GoodCoset((0, 0), (0, 0), GoodSubgroup(2, [Double(1, 2)])))
    assert D.enumerate(10) == [(0, 0)]


def test_member_examples():
    C = parse_coset("coset base=(1,1) rect=(1,1) req=[eq(1,2)]")
    assert C.member((3, 3)) and not C.member((3, 4)) and not C.member((0, 0))


def test_text_round_trip():
    C = parse_coset("coset base=(1,2,0) rect=(0,1,0) req=[mult(1,2), double(2,3)]")
    assert parse_coset(str(C)).enumerate(6) == C.enumerate(6)
    assert format_canonical(C.subgroup.canonical()) == "[2*(1,0,0), 1*(0,2,1)]"


def test_bad_requirement():
    with pytest.raises(ValueError):
        GoodSubgroup(2, [Eq(1, 3)])
    with pytest.raises(ValueError):
        Requirement("mult", 1, 0)


@given(st.integers(0, 10 ** 9))
def test_canonical_membership(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 4)
    H = GoodSubgroup(d, random_requirements(rng, d))
    for v in itertools.product(range(-4, 5), repeat=min(d, 3)):
        v = v + (0,) * (d - len(v))
        assert H.contains(v) == H.span_contains(v)


@given(st.integers(0, 10 ** 9))
def test_intersection_matches_brute_force(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 3)
    A, B = random_coset(rng, d), random_coset(rng, d)
    C = intersect(A, B)
    for v in itertools.product(range(13), repeat=d):
        both = A.member(v) and B.member(v)
        assert both == (C is not None and C.member(v))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3), min_size=1, max_size=4),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_integer(gens, coeffs):
    target = [sum(c * g[k] for c, g in zip(coeffs, gens)) for k in range(3)]
    sol = solve_integer(gens, target)
    assert sol is not None
    assert [sum(a * g[k] for a, g in zip(sol, gens)) for k in range(3)] == target
