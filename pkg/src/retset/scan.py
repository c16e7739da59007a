"""Orbit scans: the return set {n in [0, N] : n*g in V} over a window.

Two engines:

* exact: torus-only groups with polynomial coordinates are scanned with
  dense coefficient arrays, powers built incrementally; anything else falls
  back to symbolic group_mul + contains (small windows only);
* monte_carlo: the orbit is specialized at s random points t -> theta of
  GF(p^K) and stepped in numpy lanes.  Curve components travel on the
  x-line in projective (X : Z), so no square roots are needed; equations
  may therefore not use the curve y-coordinate.

A Monte Carlo member is reported as "probable-member" with the bound
(D(n) / (|F| - poles))^s, where D(n) bounds the number of theta at which a
nonzero equation value (or a pole of some coordinate) can vanish.
"""

import json
import math
import random
from collections import namedtuple

import numpy as np

from . import expr
from .batch import BatchField, DensePoly, FqVec
from .curves import kummer_diff_add, kummer_double, kummer_step, x_degree
from .groups import Curve, Torus, group_mul
from .poly import BadSpecialization, RatFunc, Specialization
from .subvariety import (MEMBER, NON_MEMBER, PROBABLE, ConfigError, _constants, check_layout,
                         contains, default_field, MIN_FIELD)

UNDECIDED = "undecided"
ScanRow = namedtuple("ScanRow", "n verdict error_bound")

# exact scans of groups with curve components go through symbolic group_mul
EXACT_CURVE_LIMIT = 60


class ResourceError(RuntimeError):
    pass


class ScanReport:
    def __init__(self, rows, mode, seed, params, notes=None):
        self.rows = rows
        self.mode = mode
        self.seed = seed
        self.params = dict(params)
        self.notes = list(notes or [])
        self.timing = None

    @property
    def members(self):
        return [r.n for r in self.rows if r.verdict in (MEMBER, PROBABLE)]

    @property
    def undecided(self):
        return [r.n for r in self.rows if r.verdict == UNDECIDED]

    def max_member_bound(self):
        return max([r.error_bound for r in self.rows if r.verdict == PROBABLE] or [0.0])

    def to_csv(self):
        lines = ["n,verdict,error_bound"]
        lines += ["%d,%s,%.3e" % (r.n, r.verdict, r.error_bound) for r in self.rows]
        return "\n".join(lines) + "\n"

    def to_dict(self, rows=True):
        d = {"mode": self.mode, "seed": self.seed, "params": self.params,
             "members": self.members, "undecided": self.undecided,
             "max_member_error_bound": float("%.3e" % self.max_member_bound()),
             "notes": self.notes}
        if rows:
            d["rows"] = [{"n": r.n, "verdict": r.verdict, "error_bound": float("%.3e" % r.error_bound)}
                         for r in self.rows]
        if self.timing is not None:
            d["seconds"] = round(self.timing, 3)
        return d

    def to_json(self, rows=True):
        return json.dumps(self.to_dict(rows), indent=2, sort_keys=True) + "\n"


def orbit_scan(group, g, V, N, mode="monte_carlo", s=5, field_degree=None, seed=0,
               lanes=None, max_bound=1e-6, allow_weak=False, start=0):
    """Verdict for every n in [start, N]."""
    if N < 0:
        raise ValueError("window must be non-negative")
    check_layout(V, group)
    if mode == "exact":
        return _exact_scan(group, g, V, N, start)
    if mode != "monte_carlo":
        raise ValueError("mode must be 'exact' or 'monte_carlo'")
    return _mc_scan(group, g, V, N, s, field_degree, seed, lanes, max_bound, allow_weak, start)


# -- exact -------------------------------------------------------------------

def _exact_scan(group, g, V, N, start):
    if all(isinstance(c, Torus) for c in group.components) and _polynomial_coords(g):
        verdicts = _dense_torus_scan(group, g, V, N)
        rows = [ScanRow(n, MEMBER if verdicts[n] else NON_MEMBER, 0.0) for n in range(start, N + 1)]
        return ScanReport(rows, "exact", None, {"N": N, "engine": "dense"})
    if N > EXACT_CURVE_LIMIT:
        raise ResourceError("exact scans with curve components are limited to N <= %d; "
                            "use monte_carlo" % EXACT_CURVE_LIMIT)
    rows = []
    for n in range(start, N + 1):
        v = contains(V, group_mul(n, g), "exact")
        rows.append(ScanRow(n, v.verdict, 0.0))
    return ScanReport(rows, "exact", None, {"N": N, "engine": "symbolic"})


def _polynomial_coords(g):
    return all(v.den.degree() == 0 for v in g.torus_coords())


def _dense_torus_scan(group, g, V, N):
    bf = BatchField(group.field)
    base = []
    for v in g.torus_coords():
        inv = v.den.terms[0].inverse()
        base.append(DensePoly.from_sparse(bf, v.num * inv))
    consts = {}
    for name, val in _constants(V, group, lambda x: x).items():
        if name == "t":
            consts[name] = DensePoly.t(bf)
        elif val.num.degree() <= 0 and val.den.degree() == 0:
            consts[name] = DensePoly.const(bf, (val.num * val.den.terms[0].inverse()).terms.get(0, 0))
        else:
            raise ConfigError("constant %s is not a field element" % name)
    names = [n for names in V.coords for n in names]
    powers = [DensePoly.const(bf, 1) for _ in base]
    out = []
    for n in range(N + 1):
        env = dict(consts)
        env.update(zip(names, powers))
        ok = all(not expr.evaluate(node, env, lambda c: c) for node in V.equations)
        out.append(ok)
        powers = [p * b for p, b in zip(powers, base)]
    return out


# -- Monte Carlo ---------------------------------------------------------------

def _lane_ladder(ns, X1, Z1, A, B):
    """(x(nP), x((n+1)P)) per lane by the Montgomery ladder; O is (1 : 0)."""
    bf = X1.bf
    L = len(ns)
    R0X, R0Z = bf.const(1, L), bf.zeros(L)
    R1X, R1Z = X1, Z1
    top = max(int(n).bit_length() for n in ns) if L else 0
    ns = np.asarray(ns, dtype=np.int64)
    for b in range(top - 1, -1, -1):
        bit = ((ns >> b) & 1).astype(bool)
        SX, SZ = kummer_diff_add(R0X, R0Z, R1X, R1Z, X1, Z1, A, B)
        D0X, D0Z = kummer_double(R0X, R0Z, A, B)
        D1X, D1Z = kummer_double(R1X, R1Z, A, B)
        R0X, R0Z = SX.where(bit, D0X), SZ.where(bit, D0Z)
        R1X, R1Z = D1X.where(bit, SX), D1Z.where(bit, SZ)
    return (R0X, R0Z), (R1X, R1Z)


class _CurveLanes:
    def __init__(self, x1, n0, A, B, bf):
        L = len(n0)
        self.A, self.B = A, B
        self.X1, self.Z1 = bf.const(x1, L), bf.const(1, L)
        (self.cX, self.cZ), (self.nX, self.nZ) = _lane_ladder(n0, self.X1, self.Z1, A, B)
        self._check(self.cX, self.cZ)
        self._check(self.nX, self.nZ)

    @staticmethod
    def _check(X, Z):
        if (X.is_zero() & Z.is_zero()).any():
            raise BadSpecialization("degenerate ladder (x(g) is 0 at this theta)")

    def current(self):
        return self.cX, self.cZ

    def advance(self, n_next):
        """Move to n+1; n_next holds the new 'next' index (n+2) per lane."""
        X, Z = kummer_step(self.nX, self.nZ, self.X1, self.Z1, self.cX, self.cZ, self.A, self.B)
        bad = X.is_zero() & Z.is_zero()
        if bad.any():
            idx = np.nonzero(bad)[0]
            (fx, fz), _ = _lane_ladder(n_next[idx], self.X1.take(idx), self.Z1.take(idx), self.A, self.B)
            self._check(fx, fz)
            X.a[idx], Z.a[idx] = fx.a, fz.a
        self.cX, self.cZ, self.nX, self.nZ = self.nX, self.nZ, X, Z


def _scan_degree(V, g, n):
    """D(n): root budget of the equations at n*g plus pole budget of n*g."""
    heights, poles = {}, 0
    for names, comp, c in zip(V.coords, g.group.components, g.coords):
        if isinstance(comp, Torus):
            for name, v in zip(names, c):
                heights[name] = n * v.degree_bound()
                poles += v.den.degree()
        else:
            h = n * n * x_degree(c)
            heights[names[0]] = h
            heights[names[2]] = 0
            poles += h
    heights["t"] = 1
    total = 0
    for node in V.equations:
        from .subvariety import _strip_consts
        dims = expr.degree_bounds(_strip_consts(node, V))
        total += max(1, sum(d * heights.get(v, 0) for v, d in dims.items()))
    return total + poles


def _base_bad_count(g):
    bad = 2
    for v in g.torus_coords():
        bad += v.den.degree() + v.num.degree()
    for P in g.curve_points():
        if not P.infinity:
            bad += x_degree(P)
    return bad


def _mc_scan(group, g, V, N, s, field_degree, seed, lanes, max_bound, allow_weak, start):
    for names, kind in zip(V.coords, V.kinds):
        if kind == "curve" and V.uses(names[1]):
            raise ConfigError("Monte Carlo scans work on x-coordinates only; "
                              "equation uses the y-coordinate %s" % names[1])
    for P in g.curve_points():
        if not P.infinity and not isinstance(P.x, RatFunc):
            raise ConfigError("curve x-coordinates must be rational functions")
    neq = max(1, len(V.equations))
    need = N * N * neq
    T = default_field(group.field, field_degree, max(MIN_FIELD, need + 1))
    if T.order <= need and not allow_weak:
        raise ConfigError("field GF(%d^%d) is too small for N=%d (need p^k > N^2 * %d); "
                          "raise --field-degree or pass the override" % (T.p, T.k, N, neq))
    bf = BatchField(T)
    rng = random.Random(seed)
    dens = [v.den for v in g.torus_coords()]
    for P in g.curve_points():
        if not P.infinity:
            dens.append(P.x.den)
    member = np.ones(N + 1, dtype=bool)
    thetas = []
    for _ in range(s):
        for _attempt in range(50):
            spec = Specialization.random(T, group.field, rng, avoid=dens)
            try:
                ok = _mc_one(group, g, V, N, spec, bf, lanes)
                break
            except BadSpecialization:
                continue
        else:
            raise ResourceError("no usable specialization after 50 draws")
        thetas.append(str(spec.theta))
        member &= ok
    bad = _base_bad_count(g)
    rows, notes = [], []
    for n in range(start, N + 1):
        if not member[n]:
            rows.append(ScanRow(n, NON_MEMBER, 0.0))
            continue
        beta = min(1.0, _scan_degree(V, g, n) / max(1, T.order - bad))
        bound = beta ** s
        verdict = PROBABLE if (bound <= max_bound or allow_weak) else UNDECIDED
        rows.append(ScanRow(n, verdict, bound))
    if any(r.verdict == UNDECIDED for r in rows):
        notes.append("members with error bound above %.0e reported as undecided" % max_bound)
    params = {"N": N, "s": s, "field": "GF(%d^%d)" % (T.p, T.k), "start": start}
    return ScanReport(rows, "monte_carlo", seed, params, notes)


def _mc_one(group, g, V, N, spec, bf, lanes):
    """Boolean array over n in [0, N]: do all equations vanish at n*g_theta?"""
    T = bf.field
    total = N + 1
    if lanes is None:
        # fewer, longer lanes amortise the ladder start-up; sqrt(N) balances it
        lanes = min(1024, max(64, int(2 * math.sqrt(total))))
    L = max(1, min(lanes, total))
    B = math.ceil(total / L)
    n0 = np.arange(L, dtype=np.int64) * B
    consts = _constants(V, group, spec)
    torus, curves = [], []
    for names, comp, c in zip(V.coords, group.components, g.coords):
        if isinstance(comp, Torus):
            for name, v in zip(names, c):
                val = spec(v)
                if not val:
                    raise BadSpecialization("torus coordinate vanishes")
                base = bf.const(val, L)
                torus.append((name, base.pow_lanes(n0), val))
        else:
            if c.infinity:
                curves.append((names, None))
                continue
            x1 = spec(c.x)
            if not x1:
                raise BadSpecialization("x(g) vanishes at theta")
            curves.append((names, _CurveLanes(x1, n0, comp.curve.A, comp.curve.B, bf)))
    zero, one = bf.zeros(L), bf.const(1, L)
    out = np.zeros(L * B, dtype=bool)
    for i in range(B):
        env = dict(consts)
        for name, cur, _ in torus:
            env[name] = cur
        for names, lane in curves:
            if lane is None:
                X, Z = zero, zero
            else:
                X, Z = lane.current()
                X = X.where(~Z.is_zero(), 0)  # O is represented by (0 : 1 : 0)
            env[names[0]], env[names[2]] = X, Z
        ok = np.ones(L, dtype=bool)
        for node in V.equations:
            val = expr.evaluate(node, env, lambda c: c)
            if isinstance(val, FqVec):
                ok &= val.is_zero()
            else:
                ok &= not val
        out[n0 + i] = ok
        if i + 1 < B:
            torus = [(name, cur * val, val) for name, cur, val in torus]
            for _, lane in curves:
                if lane is not None:
                    lane.advance(n0 + i + 2)
    return out[:total]
