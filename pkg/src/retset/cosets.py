"""Good subgroups of Z^d, big rectangles and good cosets in N^d.

A good subgroup is cut out by requirements zero(i), mult(i,D), eq(i,j) and
double(i,j) (n_i = 2 n_j); indices are 1-based.  Its canonical form is a
list of (D, eta) with eta supported on disjoint coordinate sets, entries
0 or powers of 2, so that the subgroup is sum Z * D * eta.

Canonicalization: eq/double edges form a graph; on each connected component
every n_v equals 2^(e_v) z for one free integer z (exponents found by a
walk, normalised to minimum 0).  An inconsistent cycle or a zero(i) forces
z = 0; mult(i, D) asks D / gcd(D, 2^(e_i)) to divide z.
"""

import itertools
import math
import re
from collections import deque


class Requirement:
    KINDS = ("zero", "mult", "eq", "double")

    def __init__(self, kind, i, j=None):
        if kind not in self.KINDS:
            raise ValueError("unknown requirement %r" % kind)
        self.kind, self.i, self.j = kind, int(i), None if j is None else int(j)
        if kind == "mult" and self.j < 1:
            raise ValueError("mult(i, D) needs D >= 1")
        if kind in ("eq", "double", "mult") and self.j is None:
            raise ValueError("%s needs two arguments" % kind)

    def check_dim(self, d):
        idx = [self.i] + ([self.j] if self.kind in ("eq", "double") else [])
        if any(not 1 <= x <= d for x in idx):
            raise ValueError("requirement %s refers outside 1..%d" % (self, d))

    def holds(self, v):
        a = v[self.i - 1]
        if self.kind == "zero":
            return a == 0
        if self.kind == "mult":
            return a % self.j == 0
        b = v[self.j - 1]
        return a == b if self.kind == "eq" else a == 2 * b

    def __eq__(self, o):
        return isinstance(o, Requirement) and (o.kind, o.i, o.j) == (self.kind, self.i, self.j)

    def __hash__(self):
        return hash((self.kind, self.i, self.j))

    def __str__(self):
        if self.kind == "zero":
            return "zero(%d)" % self.i
        return "%s(%d,%d)" % (self.kind, self.i, self.j)

    __repr__ = __str__


def Zero(i):
    return Requirement("zero", i)


def Mult(i, D):
    return Requirement("mult", i, D)


def Eq(i, j):
    return Requirement("eq", i, j)


def Double(i, j):
    return Requirement("double", i, j)


class GoodSubgroup:
    def __init__(self, d, requirements=()):
        if d < 1:
            raise ValueError("dimension must be positive")
        self.d = d
        self.requirements = list(requirements)
        for r in self.requirements:
            r.check_dim(d)
        self._canon = None

    def contains(self, v):
        if len(v) != self.d:
            raise ValueError("dimension mismatch")
        return all(r.holds(v) for r in self.requirements)

    def canonical(self):
        if self._canon is None:
            self._canon = canonicalize(self)
        return self._canon

    def span_contains(self, v):
        """Membership through the canonical generators."""
        v = list(v)
        covered = set()
        for D, eta in self.canonical():
            supp = [k for k in range(self.d) if eta[k]]
            covered.update(supp)
            k0 = supp[0]
            if v[k0] % (D * eta[k0]):
                return False
            z = v[k0] // (D * eta[k0])
            if any(v[k] != z * D * eta[k] for k in supp):
                return False
        return all(v[k] == 0 for k in range(self.d) if k not in covered)

    def intersect(self, other):
        if other.d != self.d:
            raise ValueError("dimension mismatch")
        return GoodSubgroup(self.d, self.requirements + other.requirements)

    def __str__(self):
        return "[" + ", ".join(map(str, self.requirements)) + "]"


def canonicalize(G):
    """List of (D, eta): eta has disjoint support and entries in {0} u {2^m}."""
    d = G.d
    adj = [[] for _ in range(d)]
    for r in G.requirements:
        if r.kind == "eq":
            adj[r.i - 1].append((r.j - 1, 0))
            adj[r.j - 1].append((r.i - 1, 0))
        elif r.kind == "double":
            adj[r.i - 1].append((r.j - 1, -1))
            adj[r.j - 1].append((r.i - 1, 1))
    exp = [None] * d
    comp_of = [None] * d
    comps = []
    for s in range(d):
        if exp[s] is not None:
            continue
        exp[s] = 0
        comp_of[s] = len(comps)
        members, consistent = [s], True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, delta in adj[u]:
                if exp[w] is None:
                    exp[w] = exp[u] + delta
                    comp_of[w] = comp_of[s]
                    members.append(w)
                    queue.append(w)
                elif exp[w] != exp[u] + delta:
                    consistent = False
        comps.append({"members": sorted(members), "zero": not consistent, "D": 1})
    for c in comps:
        lo = min(exp[v] for v in c["members"])
        for v in c["members"]:
            exp[v] -= lo
    for r in G.requirements:
        c = comps[comp_of[r.i - 1]]
        if r.kind == "zero":
            c["zero"] = True
        elif r.kind == "mult":
            need = r.j // math.gcd(r.j, 2 ** exp[r.i - 1])
            c["D"] = c["D"] * need // math.gcd(c["D"], need)
    out = []
    for c in comps:
        if c["zero"]:
            continue
        eta = [0] * d
        for v in c["members"]:
            eta[v] = 2 ** exp[v]
        out.append((c["D"], tuple(eta)))
    return out


# -- integer linear algebra ----------------------------------------------------

def solve_integer(gens, target):
    """Integer coefficients a with sum a_i gens[i] = target, or None."""
    d = len(target)
    cols = [(list(g), [int(k == i) for k in range(len(gens))]) for i, g in enumerate(gens)]
    t = list(target)
    coeff = [0] * len(gens)
    for row in range(d):
        active = [c for c in cols if c[0][row]]
        rest = [c for c in cols if not c[0][row]]
        while len(active) > 1:
            active.sort(key=lambda c: abs(c[0][row]))
            piv = active[0]
            nxt = []
            for c in active[1:]:
                q = c[0][row] // piv[0][row]
                c = ([x - q * y for x, y in zip(c[0], piv[0])], [x - q * y for x, y in zip(c[1], piv[1])])
                (nxt if c[0][row] else rest).append(c)
            active = [piv] + nxt
        if active:
            piv = active[0]
            if t[row] % piv[0][row]:
                return None
            q = t[row] // piv[0][row]
            t = [x - q * y for x, y in zip(t, piv[0])]
            coeff = [x + q * y for x, y in zip(coeff, piv[1])]
        elif t[row]:
            return None
        cols = rest
    return coeff


class GoodCoset:
    """{v in N^d : v >= rect, v - base in H}."""

    def __init__(self, base, rect, subgroup):
        self.base = tuple(int(x) for x in base)
        self.rect = tuple(int(x) for x in rect)
        self.subgroup = subgroup
        d = subgroup.d
        if len(self.base) != d or len(self.rect) != d:
            raise ValueError("dimension mismatch")
        if any(x < 0 for x in self.base + self.rect):
            raise ValueError("base and rectangle bounds must be in N^d")

    @property
    def d(self):
        return self.subgroup.d

    def member(self, v):
        if len(v) != self.d:
            raise ValueError("dimension mismatch")
        if any(a < m for a, m in zip(v, self.rect)):
            return False
        return self.subgroup.contains([a - b for a, b in zip(v, self.base)])

    def enumerate(self, W):

        return [v for v in itertools.product(range(W + 1), repeat=self.d) if self.member(v)]

    def affine_form(self):
        """(eta0, [(D, eta)]) with the coset equal to eta0 + sum N * D * eta, or None if empty."""
        return _normalise(self.base, self.rect, self.subgroup)

    def __str__(self):
        return "coset base=(%s) rect=(%s) req=%s" % (
            ",".join(map(str, self.base)), ",".join(map(str, self.rect)), self.subgroup)


def _normalise(v, rect, H):
    """Least point of (v + H) inside the rectangle, with H's generators."""
    v = list(v)
    gens = H.canonical()
    covered = set()
    for D, eta in gens:
        supp = [k for k in range(len(v)) if eta[k]]
        covered.update(supp)
        step = [D * eta[k] for k in supp]
        # smallest shift putting every support coordinate at or above rect
        k = max(-((v[s] - rect[s]) // st) for s, st in zip(supp, step))
        for s, st in zip(supp, step):
            v[s] += k * st
    if any(v[k] < rect[k] for k in range(len(v)) if k not in covered):
        return None
    return tuple(v), gens


def intersect(A, B):
    """Good coset A n B, or None when empty."""
    if A.d != B.d:
        raise ValueError("dimension mismatch")
    H = A.subgroup.intersect(B.subgroup)
    rect = tuple(max(a, b) for a, b in zip(A.rect, B.rect))
    ga = [tuple(D * x for x in eta) for D, eta in A.subgroup.canonical()]
    gb = [tuple(D * x for x in eta) for D, eta in B.subgroup.canonical()]
    diff = [b - a for a, b in zip(A.base, B.base)]
    sol = solve_integer(ga + gb, diff)
    if sol is None:
        return None
    v = list(A.base)
    for a, g in zip(sol[: len(ga)], ga):
        v = [x + a * y for x, y in zip(v, g)]
    norm = _normalise(v, rect, H)
    if norm is None:
        return None
    return GoodCoset(norm[0], rect, H)


# -- text form -------------------------------------------------------------------

_COSET = re.compile(r"coset\s+base=\(([^)]*)\)\s+rect=\(([^)]*)\)\s+req=\[(.*)\]\s*$")
_REQ = re.compile(r"(zero|mult|eq|double)\(([^)]*)\)")


def _tuple(s):
    return tuple(int(x) for x in s.split(",") if x.strip())


def parse_coset(text):
    m = _COSET.match(text.strip())
    if not m:
        raise ValueError("expected 'coset base=(..) rect=(..) req=[..]'")
    base, rect = _tuple(m.group(1)), _tuple(m.group(2))
    reqs = [Requirement(k, *_tuple(args)) for k, args in _REQ.findall(m.group(3))]
    return GoodCoset(base, rect, GoodSubgroup(len(base), reqs))


def format_canonical(gens):
    if not gens:
        return "[]"
    return "[" + ", ".join("%d*(%s)" % (D, ",".join(map(str, eta))) for D, eta in gens) + "]"
