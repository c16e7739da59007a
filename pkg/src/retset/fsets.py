"""F-sets on abstract finitely generated modules with a Frobenius-like map.

A module M = Z/d_1 + ... + Z/d_s + Z^l carries an endomorphism Phi given by
integer matrices (torsion block, free block and an optional free-to-torsion
block).  A monic P with P(Phi) = 0 gives the recurrences c_j(n) with
Phi^n = sum_j c_j(n) Phi^j.

decompose_index_set computes {(n_1..n_d) : a_0 + sum Phi^(k n_i)(a_i) in Z g0}
as a finite union of good cosets.  Conditions that only see residues are
eventually periodic and handled exactly.  The remaining condition, that the
free part lies on the line through g0, is exact when it is constant along
every row or when a residue certificate confines all solutions to a finite
box; otherwise the set is fitted on a window and re-checked on twice the
window ("window-certified").
"""

import itertools
import math
import re
from fractions import Fraction

from .cosets import GoodCoset, GoodSubgroup, Requirement, canonicalize
from .psets import AP, PSetTerm, SetExpr

EXACT, WINDOW = "exact", "window-certified"
MAX_STATES = 200000
MAX_CELLS = 200000
CERT_MODULI = (210, 2 ** 4 * 3 ** 2 * 7 * 11 * 13, 2 ** 6 * 3 ** 3 * 7 * 11 * 13 * 17 * 19)


class ResourceError(RuntimeError):
    pass


class NotCosetShaped(RuntimeError):
    pass


def _lcm(*xs):
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x) if x else out
    return out


# -- modules -------------------------------------------------------------------

class FGModule:
    """Z/d_1 + ... + Z/d_s + Z^l; elements are (tors tuple, free tuple)."""

    def __init__(self, rank, torsion=()):
        if rank < 0 or any(d < 2 for d in torsion):
            raise ValueError("rank must be >= 0 and torsion invariants >= 2")
        self.rank = rank
        self.torsion = tuple(torsion)

    def elem(self, tors=(), free=()):
        tors, free = tuple(tors), tuple(free)
        if len(tors) != len(self.torsion) or len(free) != self.rank:
            raise ValueError("element shape does not match the module")
        return (tuple(a % d for a, d in zip(tors, self.torsion)), tuple(int(x) for x in free))

    def zero(self):
        return self.elem([0] * len(self.torsion), [0] * self.rank)

    def add(self, a, b):
        return self.elem([x + y for x, y in zip(a[0], b[0])], [x + y for x, y in zip(a[1], b[1])])

    def scale(self, k, a):
        return self.elem([k * x for x in a[0]], [k * x for x in a[1]])

    def neg(self, a):
        return self.scale(-1, a)

    def sum(self, elems):
        out = self.zero()
        for e in elems:
            out = self.add(out, e)
        return out

    def lift(self, a):
        return list(a[0]) + list(a[1])

    def from_lift(self, v):
        s = len(self.torsion)
        return self.elem(v[:s], v[s:])


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matpow(A, e, mod=None):
    R = _identity(len(A))
    while e:
        if e & 1:
            R = _matmul(R, A)
            if mod:
                R = [[x % mod for x in row] for row in R]
        A = _matmul(A, A)
        if mod:
            A = [[x % mod for x in row] for row in A]
        e >>= 1
    return R


def charpoly(A):
    """Characteristic polynomial of an integer matrix, coefficients highest first."""
    n = len(A)
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        M = _matmul(A, M)
        for i in range(n):
            M[i][i] += c
        AM = _matmul(A, M)
        tr = sum(AM[i][i] for i in range(n))
        c = Fraction(-tr, k)
        assert c.denominator == 1
        c = int(c)
        coeffs.append(c)
    return coeffs


class FrobeniusSpec:
    """Phi(T, x) = (A_tor T + C x mod d, A_free x) on an FGModule."""

    def __init__(self, module, free, torsion=None, cross=None, P=None, q=None):
        self.module = module
        s, l = len(module.torsion), module.rank
        self.free = [list(map(int, r)) for r in free] if l else []
        self.tors = [list(map(int, r)) for r in torsion] if torsion is not None else _identity(s)
        self.cross = [list(map(int, r)) for r in cross] if cross is not None else [[0] * l for _ in range(s)]
        if len(self.free) != l or any(len(r) != l for r in self.free):
            raise ValueError("free matrix must be %d x %d" % (l, l))
        if len(self.tors) != s or any(len(r) != s for r in self.tors):
            raise ValueError("torsion matrix must be %d x %d" % (s, s))
        # (T, x) -> (A_tor T + C x, A_free x) as one integer matrix on lifts
        self.block = ([self.tors[i] + self.cross[i] for i in range(s)]
                      + [[0] * s + self.free[i] for i in range(l)])
        self.P = list(P) if P is not None else charpoly(self.block)
        if self.P[0] != 1:
            raise ValueError("P must be monic")
        self.q = q
        self.basis = RecurrenceBasis(self.P)

    def apply(self, a):
        return self.module.from_lift(_matvec(self.block, self.module.lift(a)))

    def iterate(self, n, a):
        for _ in range(n):
            a = self.apply(a)
        return a

    def annihilates(self, a):
        """P(Phi)(a) == 0."""
        M = self.module
        out, cur = M.zero(), a
        for coeff in reversed(self.P):
            out = M.add(out, M.scale(coeff, cur))
            cur = self.apply(cur)
        return out == M.zero()

    def eigen_kind(self):
        """'integer' if P splits over Z, 'quadratic' if one irreducible quadratic remains, else 'other'."""
        poly, roots = list(self.P), []
        changed = True
        while changed and len(poly) > 1:
            changed = False
            c0 = poly[-1]
            cands = [0] if c0 == 0 else [s * k for k in _divisors(abs(c0)) for s in (1, -1)]
            for r in cands:
                if _peval(poly, r) == 0:
                    poly = _pdiv_root(poly, r)
                    roots.append(r)
                    changed = True
                    break
        deg = len(poly) - 1
        return "integer" if deg == 0 else "quadratic" if deg == 2 else "other"


def _divisors(n):
    return [k for k in range(1, n + 1) if n % k == 0]


def _peval(poly, x):
    v = 0
    for c in poly:
        v = v * x + c
    return v


def _pdiv_root(poly, r):
    out, acc = [], 0
    for c in poly[:-1]:
        acc = acc * r + c
        out.append(acc)
    return out


# -- recurrences -----------------------------------------------------------------

class RecurrenceBasis:
    """c_0..c_{s-1} for monic P (highest coefficient first): c_j(i) = [i == j] for i < s."""

    def __init__(self, P):
        P = [int(c) for c in P]
        if not P or P[0] != 1:
            raise ValueError("P must be monic")
        self.P = P
        self.s = s = len(P) - 1
        # companion on states (u(n), ..., u(n+s-1))
        C = [[int(j == i + 1) for j in range(s)] for i in range(s - 1)]
        if s:
            C.append([-P[s - k] for k in range(s)])
        self.companion = C

    def values(self, n, mod=None):
        """[c_0(n), ..., c_{s-1}(n)]: the first row of companion^n."""
        if self.s == 0:
            return []
        return _matpow(self.companion, n, mod)[0]

    def __call__(self, j, n):
        return self.values(n)[j]

    def sequence(self, j, mod=None):
        state = [int(i == j) for i in range(self.s)]
        while True:
            yield state[0] % mod if mod else state[0]
            nxt = -sum(self.P[self.s - k] * state[k] for k in range(self.s))
            state = state[1:] + [nxt % mod if mod else nxt]


def recurrence_basis(P):
    return RecurrenceBasis(P)


def phi_power_apply(n, alpha, spec):
    """Phi^n(alpha) through the c_j(n) expansion."""
    M = spec.module
    c = spec.basis.values(n)
    out, cur = M.zero(), alpha
    for cj in c:
        out = M.add(out, M.scale(cj, cur))
        cur = spec.apply(cur)
    return out


def _cycle(step, state, max_steps=MAX_STATES):
    seen = {}
    seq = []
    n = 0
    while state not in seen:
        if n > max_steps:
            raise ResourceError("no period found within %d steps" % max_steps)
        seen[state] = n
        seq.append(state)
        state = step(state)
        n += 1
    mu = seen[state]
    return mu, n - mu, seq


def eventual_period_mod(P, N, j=0, max_steps=MAX_STATES):
    """Minimal (preperiod, period) of c_j(n) mod N, found by cycle detection on states."""
    if N < 1:
        raise ValueError("N must be >= 1")
    basis = P if isinstance(P, RecurrenceBasis) else RecurrenceBasis(P)
    s = basis.s
    coef = [-basis.P[s - k] for k in range(s)]

    def step(st):
        return st[1:] + (sum(c * x for c, x in zip(coef, st)) % N,)

    start = tuple(int(i == j) % N for i in range(s))
    mu, lam, seq = _cycle(step, start, max_steps)
    vals = [st[0] for st in seq]
    # shrink to the minimal period and preperiod of the value sequence
    for d in sorted(_divisors(lam)):
        if all(vals[n] == vals[mu + (n - mu + d) % lam] for n in range(mu, mu + lam)):
            lam = d
            break
    total = len(vals)

    def v(n):
        return vals[n] if n < total else vals[mu + (n - mu) % (total - mu)]

    while mu > 0 and v(mu - 1) == v(mu - 1 + lam):
        mu -= 1
    return mu, lam


# -- F-sets -------------------------------------------------------------------------

class FSetSpec:
    """a_0 + sum_i sum_j Phi^(k 2^j n_i)(a_ij); plain F-sets have one column."""

    def __init__(self, alpha0, alphas, k=1):
        if k < 1:
            raise ValueError("stride k must be positive")
        self.alpha0 = alpha0
        self.rows = [list(a) if isinstance(a, list) else [a] for a in alphas]
        if not self.rows:
            raise ValueError("an F-set needs at least one alpha")
        self.k = k

    @property
    def d(self):
        return len(self.rows)

    def exponents(self, i):
        return [self.k * 2 ** j for j in range(len(self.rows[i]))]

    def evaluate(self, spec, ns):
        M = spec.module
        out = self.alpha0
        for i, n in enumerate(ns):
            for K, a in zip(self.exponents(i), self.rows[i]):
                out = M.add(out, phi_power_apply(K * n, a, spec))
        return out


class Decomposition:
    def __init__(self, cosets, flag, d, notes=None):
        self.cosets = cosets
        self.flag = flag
        self.d = d
        self.notes = list(notes or [])

    def member(self, v):
        return any(c.member(v) for c in self.cosets)

    def canonical(self):
        return [(c.base, c.rect, c.subgroup.canonical()) for c in self.cosets]

    def to_text(self):
        lines = ["# %s" % self.flag] + [str(c) for c in self.cosets]
        return "\n".join(lines) + "\n"


def _line_test(M, g0):
    """Membership test for Z*g0 and the data used by the residue conditions."""
    tg, xg = g0
    if not any(xg):
        raise ValueError("g0 must be non-torsion (nonzero free part)")
    k0 = next(i for i, x in enumerate(xg) if x)
    E = _lcm(*M.torsion) if M.torsion else 1

    def member(v):
        tv, xv = v
        if xv[k0] % xg[k0]:
            return False
        m = xv[k0] // xg[k0]
        if any(a != m * b for a, b in zip(xv, xg)):
            return False
        return all((a - m * b) % d == 0 for a, b, d in zip(tv, tg, M.torsion))

    functionals = [(k0, b) for b in range(len(xg)) if b != k0]
    return member, k0, E, functionals


def _row_orbits(spec, F, Q, s):
    """Per row: (mu, lam, residues) of the lifted row value mod Q."""
    B = spec.block
    out = []
    for i in range(F.d):
        mats = [_matpow(B, K, Q) for K in F.exponents(i)]
        start = tuple(tuple(x % Q for x in spec.module.lift(a)) for a in F.rows[i])

        def step(st, mats=mats):
            return tuple(tuple(x % Q for x in _matvec(Mk, v)) for Mk, v in zip(mats, st))

        mu, lam, seq = _cycle(step, start)
        residues = [tuple(sum(col) % Q for col in zip(*st)) for st in seq]
        out.append((mu, lam, residues))
    return out


def _cells(spec, F, g0, Q, check_line):
    """Reduced index tuples passing every residue condition mod Q."""
    M = spec.module
    s = len(M.torsion)
    member, k0, E, functionals = _line_test(M, g0)
    tg, xg = g0
    gk = abs(xg[k0])
    rows = _row_orbits(spec, F, Q, s)
    size = 1
    for mu, lam, _ in rows:
        size *= mu + lam
    if size > MAX_CELLS:
        raise ResourceError("residue grid of %d cells is too large" % size)
    base = [x % Q for x in M.lift(F.alpha0)]
    cells = []
    for rho in itertools.product(*[range(mu + lam) for mu, lam, _ in rows]):
        v = list(base)
        for (mu, lam, res), r in zip(rows, rho):
            v = [(a + b) % Q for a, b in zip(v, res[r])]
        tv, xv = v[:s], v[s:]
        xk = xv[k0] % (gk * E)
        if xk % gk:
            continue
        m = (xk // gk) * (1 if xg[k0] > 0 else -1)
        if any((a - m * b) % d for a, b, d in zip(tv, tg, M.torsion)):
            continue
        if check_line and any((xv[a] * xg[b] - xv[b] * xg[a]) % Q for a, b in functionals):
            continue
        cells.append(tuple((r, 0) if r < mu else (r, lam) for (mu, lam, _), r in zip(rows, rho)))
    return cells, rows


def _merge_cells(cells):
    cells = set(cells)
    changed = True
    while changed:
        changed = False
        for c in sorted(cells):
            if c not in cells:
                continue
            for i, (s, g) in enumerate(c):
                # rule B: a finite cell one step below an infinite one extends it
                if g == 0:
                    continue
                below = c[:i] + ((s - g, 0),) + c[i + 1:]
                if s - g >= 0 and below in cells:
                    cells -= {c, below}
                    cells.add(c[:i] + ((s - g, g),) + c[i + 1:])
                    changed = True
                    break
                # rule A: the residues s, s+h, ..., s+g-h (mod g) all present
                for h in sorted(_divisors(g))[:-1]:
                    group = [c[:i] + ((s + t * h, g),) + c[i + 1:] for t in range(g // h)]
                    if all(x in cells for x in group):
                        cells -= set(group)
                        cells.add(c[:i] + ((s, h),) + c[i + 1:])
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return sorted(cells)


def _cell_coset(cell):
    d = len(cell)
    base = [s for s, _ in cell]
    reqs = []
    for i, (s, g) in enumerate(cell, 1):
        reqs.append(Requirement("zero", i) if g == 0 else Requirement("mult", i, g))
    return GoodCoset(base, base, GoodSubgroup(d, reqs))


def _row_constant(spec, F, g0, i):
    """Do the line functionals stay constant along row i?"""
    M = spec.module
    _, k0, _, functionals = _line_test(M, g0)
    xg = g0[1]
    order = (len(spec.P) - 1) * len(F.rows[i]) + 2
    vals = set()
    for n in range(order + 1):
        v = M.zero()
        for K, a in zip(F.exponents(i), F.rows[i]):
            v = M.add(v, phi_power_apply(K * n, a, spec))
        vals.add(tuple(v[1][a] * xg[b] - v[1][b] * xg[a] for a, b in functionals))
    return len(vals) == 1


def _enumerate(spec, F, g0, W):
    """Exact index set on [0, W]^d."""
    M = spec.module
    member = _line_test(M, g0)[0]
    rows = []
    for i in range(F.d):
        vals = []
        for n in range(W + 1):
            v = M.zero()
            for K, a in zip(F.exponents(i), F.rows[i]):
                v = M.add(v, phi_power_apply(K * n, a, spec))
            vals.append(v)
        rows.append(vals)
    out = set()
    for ns in itertools.product(range(W + 1), repeat=F.d):
        v = F.alpha0
        for i, n in enumerate(ns):
            v = M.add(v, rows[i][n])
        if member(v):
            out.add(ns)
    return out


def decompose_index_set(spec, F, g0, N=8):
    """Good cosets covering {n in N^d : a_0 + sum Phi^(k n_i)(a_i) in Z g0}."""
    M = spec.module
    member, k0, E, functionals = _line_test(M, g0)
    gk = abs(g0[1][k0])
    notes = ["eigenvalues: %s" % spec.eigen_kind()]
    Q0 = _lcm(gk * E, *M.torsion) if M.torsion else gk * E
    try:
        if all(_row_constant(spec, F, g0, i) for i in range(F.d)):
            zero = M.zero()
            c = F.evaluate(spec, [0] * F.d)
            line_ok = all(c[1][a] * g0[1][b] - c[1][b] * g0[1][a] == 0 for a, b in functionals)
            if not line_ok:
                return Decomposition([], EXACT, F.d, notes + ["line condition fails identically"])
            cells, _ = _cells(spec, F, g0, Q0, check_line=False)
            notes.append("line condition constant; residue conditions periodic")
            return Decomposition([_cell_coset(c) for c in _merge_cells(cells)], EXACT, F.d, notes)
        for mod in CERT_MODULI:
            Q = _lcm(Q0, mod)
            cells, rows = _cells(spec, F, g0, Q, check_line=True)
            if all(g == 0 for cell in cells for _, g in cell):
                box = max([s for cell in cells for s, _ in cell] + [0])
                pts = sorted(_enumerate(spec, F, g0, box)) if cells else []
                pts = [p for p in pts if _in_cells(p, cells)]
                notes.append("residues mod %d confine solutions to [0,%d]^%d" % (Q, box, F.d))
                return Decomposition([_point_coset(p) for p in pts], EXACT, F.d, notes)
    except ResourceError as exc:
        notes.append("exact route skipped: %s" % exc)
    return _window_decompose(spec, F, g0, N, notes)


def _in_cells(p, cells):
    return any(all((x == s) if g == 0 else (x >= s and (x - s) % g == 0)
                   for x, (s, g) in zip(p, cell)) for cell in cells)


def _point_coset(p):
    d = len(p)
    return GoodCoset(p, p, GoodSubgroup(d, [Requirement("zero", i) for i in range(1, d + 1)]))


def _candidate_subgroups(d):
    pool = [Requirement("zero", i) for i in range(1, d + 1)]
    pool += [Requirement("mult", i, D) for i in range(1, d + 1) for D in (2, 3, 4)]
    pool += [Requirement("eq", i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    pool += [Requirement("double", i, j) for i in range(1, d + 1) for j in range(1, d + 1) if i != j]
    seen, out = set(), []
    for size in range(0, d + 1):
        for reqs in itertools.combinations(pool, size):
            H = GoodSubgroup(d, list(reqs))
            key = tuple(H.canonical())
            if key not in seen:
                seen.add(key)
                out.append(H)
    return out


def fit_cosets(S, N, d):
    """Greedy cover of S (a subset of [0, N]^d) by good cosets inside S."""
    S = set(S)
    groups = _candidate_subgroups(d)
    covered, cosets = set(), []
    window = list(itertools.product(range(N + 1), repeat=d))
    for b in sorted(S):
        if b in covered:
            continue
        best, best_pts = _point_coset(b), {b}
        for H in groups:
            C = GoodCoset(b, b, H)
            pts = {v for v in window if C.member(v)}
            if len(pts) > len(best_pts) and pts <= S and not pts <= covered:
                best, best_pts = C, pts
        cosets.append(best)
        covered |= best_pts
    return cosets


def _window_decompose(spec, F, g0, N, notes):
    S = _enumerate(spec, F, g0, N)
    cosets = fit_cosets(S, N, F.d)
    S2 = _enumerate(spec, F, g0, 2 * N)
    for v in itertools.product(range(2 * N + 1), repeat=F.d):
        if (v in S2) != any(c.member(v) for c in cosets):
            raise NotCosetShaped("not coset-shaped on window: fit on [0,%d]^%d fails at %s"
                                 % (N, F.d, v))
    notes.append("fitted on [0,%d]^%d, re-checked on [0,%d]^%d" % (N, F.d, 2 * N, F.d))
    return Decomposition(cosets, WINDOW, F.d, notes)


# -- Prop 2.11 / 2.12 -----------------------------------------------------------------

def prop211_closed_form(c, l, t):
    """{c + sum l_i (t^n_i - 1)/(t - 1)} as a SetExpr of S_{q,d,0} terms (t = +-p^e)."""
    if abs(t) < 2:
        raise ValueError("t must be +-p^e with e >= 1")
    from .psets import prime_base
    prime_base(abs(t))
    l = [int(x) for x in l if x != 0]
    if not l:
        return SetExpr([AP(c, 0)])
    c0 = Fraction(c) - sum(Fraction(x, t - 1) for x in l)
    if t > 0:
        return SetExpr([PSetTerm(t, c0, [[Fraction(x, t - 1)] for x in l])])
    terms = []
    for eps in itertools.product((0, 1), repeat=len(l)):
        rows = [[Fraction(x * t ** e, t - 1)] for x, e in zip(l, eps)]
        terms.append(PSetTerm(t * t, c0, rows))
    return SetExpr(terms)


class FitFailure(ValueError):
    pass


def _solve(A, b):
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col] / M[col][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def prop212_fit(samples, q, r):
    """c_0..c_{r-1} with l_n = sum_j c_j q^(2^j n), verified on every sample."""
    samples = [Fraction(x) for x in samples]
    if q <= 1:
        raise ValueError("q must exceed 1")
    if len(samples) < r + 1:
        raise ValueError("need at least r + 1 samples")
    nodes = [q ** (2 ** j) for j in range(r)]
    assert len(set(nodes)) == r
    if r:
        A = [[x ** n for x in nodes] for n in range(r)]
        coeffs = _solve(A, samples[:r])
    else:
        coeffs = []
    for n, ln in enumerate(samples):
        if sum(cj * x ** n for cj, x in zip(coeffs, nodes)) != ln:
            raise FitFailure("sample l_%d = %s does not fit the q^(2^j n) family" % (n, ln))
    if not telescoping_holds(samples, q):
        raise FitFailure("telescoping identity fails")
    return coeffs


def telescoping_holds(samples, q):
    """l_n = q^n l_0 + sum_{m<n} q^(n-1-m) l'_m with l'_m = l_{m+1} - q l_m."""
    lp = [samples[m + 1] - q * samples[m] for m in range(len(samples) - 1)]
    return all(samples[n] == q ** n * samples[0] + sum(q ** (n - 1 - m) * lp[m] for m in range(n))
               for n in range(len(samples)))


def telescoping_lift(l0, cprime, q):
    """Coefficients c_0..c_r of l_n when l_{n+1} - q l_n = sum_{j>=1} c'_j q^(2^j n).

    The induction step of the coefficient lemma: c_j = c'_j / (q^(2^j) - q)
    for j >= 1 and c_0 = l_0 - sum_{j>=1} c_j.
    """
    cs = [Fraction(c) / (q ** (2 ** j) - q) for j, c in enumerate(cprime, 1)]
    return [Fraction(l0) - sum(cs)] + cs


# -- text format ------------------------------------------------------------------------

def _vec(s):
    s = s.strip()
    return tuple(int(x) for x in s.strip("()").split(",") if x.strip())


def _mat(s):
    return [list(_vec(row)) for row in s.split(";") if row.strip()]


def _elem(M, text):
    kv = dict(re.findall(r"(tors|free)=\(([^)]*)\)", text))
    return M.elem(_vec(kv.get("tors", "")), _vec(kv.get("free", "")))


def parse_fset_file(text):
    """Module, Frobenius, F-set and g0 from a sectioned text file.

        [module]
        rank 1
        torsion 3
        [frobenius]
        free 5
        torsion 2
        [fset]
        stride 1
        alpha0 tors=(1) free=(0)
        alpha tors=(1) free=(1)
        g0 tors=(0) free=(1)

    Matrices list rows separated by ';'.  'P 1 -7 10' overrides the
    characteristic polynomial; several 'alpha' entries on one line separated
    by '|' form one row of a widely F-set.
    """
    from .groups import split_sections
    sec = split_sections(text)
    for name in ("module", "frobenius", "fset"):
        if name not in sec:
            raise ValueError("missing [%s] section" % name)
    rank, torsion = 0, ()
    for _, line in sec["module"]:
        key, _, rest = line.partition(" ")
        if key == "rank":
            rank = int(rest)
        elif key == "torsion":
            torsion = tuple(int(x) for x in rest.replace(",", " ").split())
    M = FGModule(rank, torsion)
    kw = {}
    for _, line in sec["frobenius"]:
        key, _, rest = line.partition(" ")
        if key in ("free", "torsion", "cross"):
            kw[key] = _mat(rest)
        elif key == "P":
            kw["P"] = [int(x) for x in rest.split()]
        elif key == "q":
            kw["q"] = int(rest)
    spec = FrobeniusSpec(M, kw.get("free", []), kw.get("torsion"), kw.get("cross"), kw.get("P"), kw.get("q"))
    alpha0, rows, g0, k = M.zero(), [], None, 1
    for _, line in sec["fset"]:
        key, _, rest = line.partition(" ")
        if key == "alpha0":
            alpha0 = _elem(M, rest)
        elif key == "alpha":
            rows.append([_elem(M, part) for part in rest.split("|")])
        elif key == "g0":
            g0 = _elem(M, rest)
        elif key == "stride":
            k = int(rest)
    if g0 is None:
        raise ValueError("[fset] needs g0")
    return spec, FSetSpec(alpha0, rows, k), g0
