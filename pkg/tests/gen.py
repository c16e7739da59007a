"""Random instance generators shared by the property and acceptance tests."""

import itertools
from fractions import Fraction

from retset.cosets import GoodCoset, GoodSubgroup, Requirement
from retset.psets import PSetTerm


def random_term(rng, qs=(5, 25), dmax=3, rmax=2, cmax=10):
    """A valid PSetTerm whose rows all lead with one sign.

    Coefficients are k/(q-1) or integers; c0 compensates so every value is
    c + sum k_ij (q^(2^j n_i) - 1)/(q - 1) or an integer combination.
    """
    q = rng.choice(qs)
    d = rng.randint(1, dmax)
    r = rng.randint(0, rmax)
    sign = rng.choice((1, -1))
    c0 = Fraction(rng.randint(-cmax, cmax))
    rows = []
    for _ in range(d):
        row = []
        for j in range(r + 1):
            k = rng.randint(1, cmax) * sign if j == r else rng.randint(-cmax, cmax)
            if rng.random() < 0.5:
                c = Fraction(k, q - 1)
                c0 -= c
            else:
                c = Fraction(k)
            row.append(c)
        rows.append(row)
    return PSetTerm(q, c0, rows)


def brute_values(term, hi_n, lo, hi):
    out = set()
    rows = [[term.row_value(i, m) for m in range(hi_n + 1)] for i in range(term.d)]
    for combo in itertools.product(*rows):
        v = term.c0 + sum(combo)
        if lo <= v <= hi:
            out.add(int(v))
    return out


def random_requirements(rng, d, kmax=3):
    reqs = []
    for _ in range(rng.randint(0, kmax)):
        kind = rng.choice(["zero", "mult", "eq", "double"])
        i = rng.randint(1, d)
        if kind == "zero":
            if rng.random() < 0.5:
                continue
            reqs.append(Requirement("zero", i))
        elif kind == "mult":
            reqs.append(Requirement("mult", i, rng.randint(1, 6)))
        elif d > 1:
            j = rng.choice([x for x in range(1, d + 1) if x != i])
            reqs.append(Requirement(kind, i, j))
    return reqs


def random_coset(rng, d, top=5):
    rect = [rng.randint(0, 3) for _ in range(d)]
    base = [rng.randint(0, top) for _ in range(d)]
    return GoodCoset(base, rect, GoodSubgroup(d, random_requirements(rng, d)))
