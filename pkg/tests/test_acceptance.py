"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line.

Run alone with:  python3 -m pytest -v tests/test_acceptance.py
or as a script:  python3 tests/test_acceptance.py
"""

import itertools
import os
import random
import sys
import time
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from gen import brute_values, random_requirements, random_coset, random_term  # noqa: E402
from retset import checks, configs  # noqa: E402
from retset.cosets import GoodSubgroup, intersect  # noqa: E402
from retset.fsets import (EXACT, FGModule, FrobeniusSpec, FSetSpec, decompose_index_set,  # noqa: E402
                          prop211_closed_form, prop212_fit, telescoping_lift)
from retset.groups import group_mul, parse_group_file  # noqa: E402
from retset.psets import (AP, P_NORMAL, WIDELY_ONLY, DecompositionError, PSetTerm,  # noqa: E402
                          classify, two_exponential_decompose, window)
from retset.scan import orbit_scan  # noqa: E402
from retset.subvariety import MEMBER, PROBABLE, check_sum_witness, contains, parse_equation_file  # noqa: E402

# pinned tolerances
TIME_C1 = 10.0
TIME_C2 = 300.0
TIME_C3 = 120.0
MAX_BOUND = 1e-6
FIELD_MIN = 10 ** 12
LEMMA56_TARGET = 0.10

TORUS_EXPECTED = [2, 26, 50, 626, 650, 1250, 15626, 15650, 16250]


def report(capsys, k, ok, detail):
    line = "criterion %d: %s  %s" % (k, "PASS" if ok else "FAIL", detail)
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    return ok


def criterion1(capsys=None):
    group, g = parse_group_file(configs.example36_group())
    V = parse_equation_file(configs.EXAMPLE36_EQUATIONS)
    t0 = time.time()
    verdicts = [contains(V, group_mul(5 ** j, g), "exact").verdict for j in range(7)]
    dt = time.time() - t0
    ok = all(v == MEMBER for v in verdicts) and dt < TIME_C1
    return report(capsys, 1, ok, "p^j in S for j=0..6 exactly: %s; %.2f s (limit %.0f s)"
                  % (verdicts.count(MEMBER) == 7, dt, TIME_C1))


def criterion2(capsys=None):
    group, g = parse_group_file(configs.example36_group())
    V = parse_equation_file(configs.EXAMPLE36_EQUATIONS)
    t0 = time.time()
    rep = orbit_scan(group, g, V, 10 ** 5, "monte_carlo", s=5, seed=0, max_bound=MAX_BOUND, start=1)
    dt = time.time() - t0
    field_order = 5 ** int(rep.params["field"].split("^")[1].rstrip(")"))
    bad = [n for n in rep.members if checks.prime_to_p(n, 5) % 10 not in (1, 9)]
    bound = rep.max_member_bound()
    ok = (not bad and not rep.undecided and bound < MAX_BOUND and field_order > FIELD_MIN
          and dt < TIME_C2)
    return report(capsys, 2, ok, "members=%s; all prime-to-5 parts +-1 mod 10: %s; undecided=%d; "
                  "field=%s; max false-accept bound per member=%.3e (< %.0e); %.1f s (limit %.0f s)"
                  % (rep.members, not bad, len(rep.undecided), rep.params["field"], bound,
                     MAX_BOUND, dt, TIME_C2))


def criterion3(capsys=None):
    group, g = parse_group_file(configs.torus_group())
    V = parse_equation_file(configs.TORUS_EQUATIONS)
    t0 = time.time()
    rep = orbit_scan(group, g, V, 20000, "exact")
    dt = time.time() - t0
    ok = rep.members == TORUS_EXPECTED and dt < TIME_C3
    return report(capsys, 3, ok, "members=%s (expected %s); %.1f s (limit %.0f s)"
                  % (rep.members, TORUS_EXPECTED, dt, TIME_C3))


def criterion4(capsys=None):
    group, g0, factors = checks.example54_setup()
    bounds, ok = [], True
    for j in range(4):
        w, target = checks.example54_witness(group, g0, factors, j)
        v = check_sum_witness(w, target, "monte_carlo", s=5, seed=j)
        bounds.append(v.error_bound)
        ok &= v.verdict == PROBABLE and v.error_bound < MAX_BOUND
    return report(capsys, 4, ok, "witness triples certify (5^j+5^2j) g0 in X for j=0..3; "
                  "bounds=%s (< %.0e)" % (["%.2e" % b for b in bounds], MAX_BOUND))


def criterion5(capsys=None):
    rng = random.Random(20240505)
    mismatches = 0
    for _ in range(200):
        T = random_term(rng, qs=(5, 25), dmax=3, rmax=2)
        if set(window(T, 10 ** 6)) != brute_values(T, 10, 0, 10 ** 6):
            mismatches += 1
    return report(capsys, 5, mismatches == 0, "200 random PSetTerms, window(.,1e6) vs brute force "
                  "on [0,10]^d: %d mismatches" % mismatches)


def criterion6(capsys=None):
    rng = random.Random(66)
    canon_bad = 0
    for _ in range(100):
        d = rng.randint(1, 4)
        H = GoodSubgroup(d, random_requirements(rng, d, kmax=4))
        canon_bad += sum(H.contains(v) != H.span_contains(v)
                         for v in itertools.product(range(9), repeat=d))
    inter_bad = 0
    for _ in range(100):
        d = rng.randint(1, 4)
        A, B = random_coset(rng, d), random_coset(rng, d)
        C = intersect(A, B)
        for v in itertools.product(range(13), repeat=d):
            if (A.member(v) and B.member(v)) != (C is not None and C.member(v)):
                inter_bad += 1
    ok = canon_bad == 0 and inter_bad == 0
    return report(capsys, 6, ok, "canonical vs requirements on [0,8]^d: %d mismatches; "
                  "intersect vs brute force on [0,12]^d: %d mismatches" % (canon_bad, inter_bad))


def _prop211_instance(rng):
    d = rng.randint(1, 3)
    t = rng.choice([5, 25, -5, -25])
    c = rng.randint(-20, 20)
    l = [rng.randint(-9, 9) for _ in range(d)]
    return c, l, t


def _prop211_agrees(c, l, t, nmax=8):
    brute = {c + sum(li * Fraction(t ** n - 1, t - 1) for li, n in zip(l, ns))
             for ns in itertools.product(range(nmax + 1), repeat=len(l))}
    E = prop211_closed_form(c, l, t)
    live = [x for x in l if x]
    got = set()
    if not live:
        got = {Fraction(c)}
    elif t > 0:
        T = E.terms[0]
        got = {T.value(ms) for ms in itertools.product(range(nmax + 1), repeat=len(live))}
    else:
        for T, eps in zip(E.terms, itertools.product((0, 1), repeat=len(live))):
            ranges = [range((nmax - e) // 2 + 1) for e in eps]
            got |= {T.value(ms) for ms in itertools.product(*ranges)}
    return got == brute


def criterion7(capsys=None):
    rng = random.Random(77)
    bad211 = sum(not _prop211_agrees(*_prop211_instance(rng)) for _ in range(50))
    bad215 = 0
    for _ in range(50):
        q = rng.choice([5, 25])
        l0 = rng.randint(-50, 50)
        cprime = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rng.randint(0, 2))]
        cs = telescoping_lift(l0, cprime, q)
        lp = [sum(c * q ** (2 ** j * m) for j, c in enumerate(cprime, 1)) for m in range(20)]
        seq = [Fraction(l0)]
        for m in range(20):
            seq.append(q * seq[-1] + lp[m])
        tele = all(seq[n] == q ** n * l0 + sum(q ** (n - 1 - m) * lp[m] for m in range(n))
                   for n in range(21))
        closed = all(seq[n] == sum(c * q ** (2 ** j * n) for j, c in enumerate(cs)) for n in range(21))
        fitted = prop212_fit(seq, q, len(cs)) == cs
        bad215 += not (tele and closed and fitted)
    M = FGModule(1, (3,))
    spec = FrobeniusSpec(M, [[5]], [[2]])
    D = decompose_index_set(spec, FSetSpec(M.elem((1,), (0,)), [M.elem((1,), (1,))]),
                            M.elem((0,), (1,)))
    odd_ok = D.flag == EXACT and D.canonical() == [((1,), (1,), [(2, (1,))])]
    ok = bad211 == 0 and bad215 == 0 and odd_ok
    return report(capsys, 7, ok, "prop211 vs brute force: %d/50 mismatches; telescoping n<=20: "
                  "%d/50 failures; odd-index example %s (%s)"
                  % (bad211, bad215, "reproduced" if odd_ok else "WRONG", D.canonical()))


def _lemma56_instance(rng):
    nz = lambda: rng.choice([x for x in range(-10, 11) if x])  # noqa: E731
    c1, c2 = nz(), nz()
    kind = rng.random()
    if kind < 0.3:
        e0, e = rng.randint(-10, 10), [nz() for _ in range(rng.randint(0, 2))]
    elif kind < 0.6:
        e0, e = 0, [c1, c2][: rng.randint(1, 2)]
    elif kind < 0.8:
        e0, e = c1 + c2, [nz()]
    else:
        e0, e = c1, [c2] + [nz() for _ in range(rng.randint(0, 1))]
    return c1, c2, e0, e


def _lemma56_brute(c1, c2, e0, e, q, N, L):
    rhs = {e0 + sum(ei * q ** m for ei, m in zip(e, ms))
           for ms in itertools.product(range(L + 1), repeat=len(e))}
    return {(a, b) for a in range(N + 1) for b in range(N + 1) if c1 * q ** a + c2 * q ** b in rhs}


def criterion8(capsys=None):
    rng = random.Random(88)
    failures, mismatches = [], 0
    for _ in range(50):
        c1, c2, e0, e = _lemma56_instance(rng)
        try:
            D = two_exponential_decompose(c1, c2, e0, e, 5, N=30)
        except DecompositionError as exc:
            failures.append((c1, c2, e0, e, str(exc)[:80]))
            continue
        brute = _lemma56_brute(c1, c2, e0, e, 5, 30, 36)
        fitted = set().union(*[c.points(30) for c in D.components]) if D.components else set()
        mismatches += fitted != brute or D.certified_to != 60
    rate = len(failures) / 50
    ok = mismatches == 0
    return report(capsys, 8, ok, "50 instances (q=5, |coeff|<=10), fit [0,30]^2, certify [0,60]^2: "
                  "%d mismatches vs brute force; fitting failures %d (rate %.0f%%, target < %.0f%% "
                  "%s)%s" % (mismatches, len(failures), 100 * rate, 100 * LEMMA56_TARGET,
                             "met" if rate < LEMMA56_TARGET else "missed",
                             "; failed: %s" % failures if failures else ""))


def criterion9(capsys=None):
    a = classify(PSetTerm(25, 0, [[1, 1]]))
    b = classify(PSetTerm(5, -1, [[1]]))
    c = [classify(AP(a0, dl)) for a0, dl in [(3, 5), (0, 0), (-2, 7)]]
    ok = a == WIDELY_ONLY and b == P_NORMAL and all(x == P_NORMAL for x in c)
    return report(capsys, 9, ok, "S_{25,1,1}(0;1,1) -> %s; S_{5,1,0}(-1;1) -> %s; AP -> %s" % (a, b, c))


CRITERIA = [criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7,
            criterion8, criterion9]


@pytest.mark.parametrize("k", range(1, 10))
def test_criterion(k, capsys):
    assert CRITERIA[k - 1](capsys)


if __name__ == "__main__":
    results = [f() for f in CRITERIA]
    print("%d/9 criteria pass" % sum(results))
    sys.exit(0 if all(results) else 1)
