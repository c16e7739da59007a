import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from retset.fsets import (EXACT, FGModule, FitFailure, FrobeniusSpec, FSetSpec, ResourceError,
                          charpoly, decompose_index_set, eventual_period_mod, fit_cosets,
                          parse_fset_file, phi_power_apply, prop211_closed_form, prop212_fit,
                          recurrence_basis, telescoping_holds,
                          telescoping_lift)
from retset.psets import window

M = FGModule(1, (3,))
ODD = FrobeniusSpec(M, [[5]], [[2]])


def test_recurrence_examples():
    B = recurrence_basis([1, -3, 2])
    assert [B(0, n) for n in range(4)] == [1, 0, -2, -6]
    assert B(0, 2) == -2
    assert recurrence_basis([1, -5])(0, 3) == 125
    assert recurrence_basis([1, -5, 0])(1, 3) == 25


def test_period_examples():
    assert eventual_period_mod([1, -5], 4) == (0, 1)
    assert eventual_period_mod([1, -5], 8) == (0, 2)
    assert eventual_period_mod([1, -5], 5) == (1, 1)


def test_period_resource_guard():
    with pytest.raises(ResourceError):
        eventual_period_mod([1, -3, 1], 10 ** 6 + 3, max_steps=1000)


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=3), st.integers(2, 60), st.integers(0, 1))
def test_period_is_correct(tail, N, j):
    P = [1] + tail
    j = min(j, len(tail) - 1)
    mu, lam = eventual_period_mod(P, N, j)
    seq = recurrence_basis(P).sequence(j, N)
    vals = [next(seq) for _ in range(mu + 3 * lam + 5)]
    assert all(vals[n] == vals[n + lam] for n in range(mu, mu + 2 * lam + 5))
    if mu:
        assert vals[mu - 1] != vals[mu - 1 + lam]


def test_charpoly():
    assert charpoly([[0, -5], [1, 2]]) == [1, -2, 5]
    assert ODD.P == [1, -7, 10]


def test_phi_power_example():
    assert phi_power_apply(2, M.elem((1,), (1,)), ODD) == ((1,), (25,))


@given(st.integers(0, 12), st.lists(st.integers(-5, 5), min_size=3, max_size=3),
       st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_phi_power_matches_iteration(n, a, mat):
    Mod = FGModule(2, (4,))
    spec = FrobeniusSpec(Mod, [mat[:2], mat[2:]], [[3]], [[1, 2]])
    x = Mod.elem(a[:1], a[1:])
    assert phi_power_apply(n, x, spec) == spec.iterate(n, x)
    assert spec.annihilates(x)


def test_odd_index_example():
    F = FSetSpec(M.elem((1,), (0,)), [M.elem((1,), (1,))])
    D = decompose_index_set(ODD, F, M.elem((0,), (1,)))
    assert D.flag == EXACT
    assert D.canonical() == [((1,), (1,), [(2, (1,))])]
    assert [n for n in range(20) if D.member((n,))] == list(range(1, 20, 2))


def test_decomposition_matches_enumeration():
    M2 = FGModule(1, (4,))
    spec = FrobeniusSpec(M2, [[5]], [[3]], [[1]])
    F = FSetSpec(M2.elem((1,), (0,)), [M2.elem((1,), (1,)), M2.elem((2,), (-1,))])
    g0 = M2.elem((0,), (1,))
    D = decompose_index_set(spec, F, g0)
    from retset.fsets import _line_test
    member = _line_test(M2, g0)[0]
    for ns in itertools.product(range(10), repeat=2):
        assert D.member(ns) == member(F.evaluate(spec, ns))


def test_lemma214_only_zero_orbit():
    M2 = FGModule(2)
    spec = FrobeniusSpec(M2, [[0, -5], [1, 2]])
    assert spec.eigen_kind() == "quadratic"
    full = []
    for a in itertools.product(range(-3, 4), repeat=2):
        D = decompose_index_set(spec, FSetSpec(M2.zero(), [M2.elem((), a)]), M2.elem((), (1, 0)))
        if all(D.member((n,)) for n in range(25)):
            full.append(a)
    assert full == [(0, 0)]


def test_window_fallback_fits_cosets():
    S = {(a, b) for a in range(9) for b in range(9) if a == b or (a >= 2 and b == 0)}
    cosets = fit_cosets(S, 8, 2)
    got = {(a, b) for a in range(9) for b in range(9) if any(c.member((a, b)) for c in cosets)}
    assert got == S


def test_prop211_examples():
    assert window(prop211_closed_form(0, [4], 5), 700) == [0, 4, 24, 124, 624]
    E = prop211_closed_form(0, [6], -5)
    even, odd = E.terms
    assert sorted(even.elements(-700, 0)) == [-624, -24, 0]
    assert sorted(odd.elements(0, 4000)) == [6, 126, 3126]
    assert window(prop211_closed_form(3, [0, 0], 5), 10) == [3]


def test_prop212_examples():
    assert prop212_fit([3 * 25 ** n + 2 * 625 ** n for n in range(7)], 25, 2) == [3, 2]
    assert prop212_fit([0] * 5, 25, 2) == [0, 0]
    with pytest.raises(FitFailure):
        prop212_fit([1, 26, 626], 25, 1)


@given(st.lists(st.fractions(min_value=-50, max_value=50, max_denominator=10), min_size=1,
                max_size=21), st.sampled_from([5, 25, -5]))
def test_telescoping(samples, q):
    assert telescoping_holds(samples, q)


@given(st.integers(-20, 20), st.lists(st.integers(-9, 9), min_size=0, max_size=2),
       st.sampled_from([5, 25]))
def test_telescoping_lift(l0, cprime, q):
    cs = telescoping_lift(l0, cprime, q)
    lp = [sum(c * q ** (2 ** j * m) for j, c in enumerate(cprime, 1)) for m in range(20)]
    seq = [Fraction(l0)]
    for m in range(20):
        seq.append(q * seq[-1] + lp[m])
    closed = [sum(c * q ** (2 ** j * n) for j, c in enumerate(cs)) for n in range(21)]
    assert seq == closed
    assert all(seq[n] == q ** n * l0 + sum(q ** (n - 1 - m) * lp[m] for m in range(n))
               for n in range(21))
    assert prop212_fit(seq, q, len(cs)) == cs


FILE = """[module]
rank 1
torsion 3
[frobenius]
free 5
torsion 2
[fset]
alpha0 tors=(1) free=(0)
alpha tors=(1) free=(1)
g0 tors=(0) free=(1)
"""


def test_parse_fset_file():
    spec, F, g0 = parse_fset_file(FILE)
    D = decompose_index_set(spec, F, g0)
    assert D.to_text() == "# exact\ncoset base=(1) rect=(1) req=[mult(1,2)]\n"
