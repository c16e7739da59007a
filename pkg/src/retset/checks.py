"""Reproductions of the worked examples as pass/fail reports.

Each check returns a CheckReport whose status is one of PASS, FAIL (with a
witness) or UNDECIDED (Monte Carlo bound too weak, or resources exhausted).
"""

import json

from . import configs
from .curves import CurveMultiple
from .groups import GroupPoint, group_mul, parse_group_file
from .poly import RatFunc
from .psets import ABTerm, PSetTerm, WIDELY_ONLY, classify, window
from .scan import orbit_scan
from .subvariety import (MEMBER, NON_MEMBER, PROBABLE, SumWitness, check_sum_witness, contains,
                         parse_equation_file)

PASS, FAIL, UNDECIDED = "pass", "fail", "undecided"
EXIT = {PASS: 0, FAIL: 1, UNDECIDED: 2}

COUNTEREXAMPLE_HEADER = ("Only the computable ingredients of the disproof are verified: the torus "
                         "return-set identity, the Example 5.4 witness inclusions and the "
                         "classification of the torus set.  The contradiction argument itself "
                         "is a proof and is not computed.")


class CheckReport:
    def __init__(self, name, header=None):
        self.name = name
        self.header = header
        self.parts = []

    def add(self, label, status, **info):
        self.parts.append(dict(label=label, status=status, **info))

    @property
    def status(self):
        stats = [p["status"] for p in self.parts]
        if FAIL in stats:
            return FAIL
        if UNDECIDED in stats or not stats:
            return UNDECIDED
        return PASS

    def to_dict(self):
        d = {"check": self.name, "status": self.status, "parts": self.parts}
        if self.header:
            d["header"] = self.header
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def lines(self):
        out = ["# " + self.header] if self.header else []
        for p in self.parts:
            extra = ", ".join("%s=%s" % (k, p[k]) for k in sorted(p) if k not in ("label", "status"))
            out.append("%-8s %s%s" % (p["status"].upper(), p["label"], " (" + extra + ")" if extra else ""))
        out.append("%s: %s" % (self.name, self.status.upper()))
        return out


def prime_to_p(n, p):
    while n % p == 0:
        n //= p
    return n


def example36_setup(p=5, curve=(0, 1)):
    group, g = parse_group_file(configs.example36_group(p, *curve))
    V = parse_equation_file(configs.EXAMPLE36_EQUATIONS)
    return group, g, V


def verify_example36(N=10 ** 5, J=6, s=5, field_degree=None, seed=0, p=5, curve=(0, 1),
                     allow_weak=False, max_bound=1e-6):
    """(a) p^j in S exactly for j <= J; (b) members of a scan of [1, N] have m = +-1 mod 2p."""
    rep = CheckReport("verify-example36")
    group, g, V = example36_setup(p, curve)
    failed = None
    for j in range(J + 1):
        v = contains(V, group_mul(p ** j, g), "exact")
        if v.verdict != MEMBER:
            failed = j
            break
    if failed is None:
        rep.add("(a) p^j in S for j=0..%d (exact)" % J, PASS)
    else:
        rep.add("(a) p^j in S for j=0..%d (exact)" % J, FAIL, failing_j=failed, witness_n=p ** failed)
    if N < 1:
        rep.add("(b) empty scan window", PASS)
        return rep, None
    scan = orbit_scan(group, g, V, N, "monte_carlo", s, field_degree, seed,
                      max_bound=max_bound, allow_weak=allow_weak, start=1)
    bad = [n for n in scan.members if prime_to_p(n, p) % (2 * p) not in (1, 2 * p - 1)]
    info = dict(N=N, members=len(scan.members), max_error_bound="%.3e" % scan.max_member_bound(),
                field=scan.params["field"], s=s)
    if bad:
        rep.add("(b) prime-to-p part = +-1 mod %d" % (2 * p), FAIL, witness_n=bad[0], **info)
    elif scan.undecided:
        rep.add("(b) prime-to-p part = +-1 mod %d" % (2 * p), UNDECIDED,
                undecided=scan.undecided[:10], **info)
    else:
        rep.add("(b) prime-to-p part = +-1 mod %d" % (2 * p), PASS, **info)
    extra = [n for n in scan.members if prime_to_p(n, p) != 1]
    if extra:
        rep.add("members beyond {p^k} (recorded as data)", PASS, extra=extra[:20])
    return rep, scan


def example54_setup(p=5):
    group, g0 = parse_group_file(configs.example54_group(p))
    factors = [parse_equation_file(t) for t in configs.EXAMPLE54_FACTORS]
    return group, g0, factors


def example54_witness(group, g0, factors, j, p=5, corrupt=None):
    """Witness triple for (p^j + p^2j) g0 and the target point.

    corrupt="C3" swaps the torus part of the third witness to (t^(p^2j) - 1, t^(p^2j)).
    """
    F = group.field
    t = RatFunc.t(F)
    P, Q = g0.coords[1], g0.coords[2]
    O = P.curve.O()
    a, b = p ** j, p ** (2 * j)
    one = RatFunc.const(F, 1)
    w1 = GroupPoint(group, [(t ** a + 1, t ** a), O, O])
    w2 = GroupPoint(group, [(one, one), CurveMultiple(b, P), CurveMultiple(b, Q)], check=False)
    u1 = t ** b - 1 if corrupt == "C3" else t ** b + 1
    w3 = GroupPoint(group, [(u1, t ** b), CurveMultiple(a, P), CurveMultiple(a, Q)], check=False)
    n = a + b
    # the target uses plain double-and-add, independent of the Frobenius route
    target = GroupPoint(group, [((t + 1) ** n, t ** n), CurveMultiple(n, P, False),
                                CurveMultiple(n, Q, False)], check=False)
    return SumWitness([w1, w2, w3], factors), target


def verify_counterexample(N=20000, n_max=3, s=5, field_degree=None, seed=0, p=5,
                          corrupt=None, max_bound=1e-6):
    rep = CheckReport("verify-counterexample", COUNTEREXAMPLE_HEADER)
    p0 = p * p
    # (1) torus identity
    tg, tp = parse_group_file(configs.torus_group(p))
    V0 = parse_equation_file(configs.TORUS_EQUATIONS)
    scan = orbit_scan(tg, tp, V0, N, "exact")
    expected = window(ABTerm("A", p0, 1, 1, p), N)
    if scan.members == expected:
        rep.add("(1) torus window equals A(p0;1,1) on [0,%d]" % N, PASS, members=scan.members)
    else:
        diff = sorted(set(scan.members) ^ set(expected))
        rep.add("(1) torus window equals A(p0;1,1) on [0,%d]" % N, FAIL, witness_n=diff[0])
    # (2) witnesses
    group, g0, factors = example54_setup(p)
    for j in range(n_max + 1):
        w, target = example54_witness(group, g0, factors, j, p, corrupt)
        log = []
        v = check_sum_witness(w, target, "monte_carlo", s, field_degree, seed + j, log=log)
        label = "(2) (p^%d + p^%d) g0 in C1+C2+C3" % (j, 2 * j)
        if v.verdict == NON_MEMBER:
            rep.add(label, FAIL, failing_index=v.failing_index, detail=v.detail)
        elif v.error_bound > max_bound:
            rep.add(label, UNDECIDED, error_bound="%.3e" % v.error_bound)
        else:
            rep.add(label, PASS, error_bound="%.3e" % v.error_bound, signs=sorted(set(log)))
    # (3) classification
    term = PSetTerm(p0, 0, [[1, 1]], p=p)
    kind = classify(term)
    rep.add("(3) classify S_{p0,1,1}(0;1,1)", PASS if kind == WIDELY_ONLY else FAIL, result=kind)
    return rep
