"""Subvarieties as equation systems, membership of group points, sum witnesses.

Equation files::

    [coordinates]
    torus x y z          # one line per ambient component, in order
    curve x0 x1 x2       # projective (X : Y : Z); O is (0 : 1 : 0)
    [constants]
    alpha = u + 1        # optional; u generates the coefficient field
    [equations]
    x + y - 2*z - 2*alpha^2

Each equation must be homogeneous in the coordinates of every curve, so
that rescaling projective representatives cannot change a verdict.
"""

import random
from collections import namedtuple

from . import expr
from .curves import CurveMultiple, ECPoint, QuadElem, XOnlyError, ec_add, specialize_point, x_degree
from .fields import GF
from .groups import ConfigError, Curve, GroupPoint, Torus, split_sections
from .poly import BadSpecialization, RatFunc, SparsePoly, Specialization, poly_env

Verdict = namedtuple("Verdict", "verdict error_bound failing_index detail")
Verdict.__new__.__defaults__ = (0.0, None, "")

MEMBER, NON_MEMBER, PROBABLE = "member", "non-member", "probable-member"

# default Monte Carlo field: smallest p^K above this size
MIN_FIELD = 10 ** 12


class BadSpecializationExhausted(RuntimeError):
    pass


class PolySystem:
    """Equations in named ambient coordinates.

    ``coords`` has one tuple of names per component: a torus of dimension d
    contributes d names, a curve contributes (X, Y, Z).
    """

    def __init__(self, coords, equations, constants=None, kinds=None):
        self.coords = [tuple(c) for c in coords]
        self.kinds = list(kinds) if kinds else ["curve" if len(c) == 3 else "torus" for c in coords]
        self.equations = []
        self.constants = dict(constants or {})
        declared = {n for c in self.coords for n in c}
        if len(declared) != sum(len(c) for c in self.coords):
            raise ConfigError("duplicate coordinate names")
        for eq in equations:
            node = expr.parse(eq) if isinstance(eq, str) else eq
            for kind, names in zip(self.kinds, self.coords):
                if kind == "curve" and len(_homog_degrees(node, set(names))) > 1:
                    raise ConfigError("equation %s is not homogeneous in %s"
                                      % (expr.to_string(node), "/".join(names)))
            self.equations.append(node)

    def check_names(self, extra_constants=()):
        allowed = {n for c in self.coords for n in c} | set(self.constants) | set(extra_constants) | {"t", "u"}
        for node in self.equations:
            bad = expr.names(node) - allowed
            if bad:
                raise ConfigError("undeclared name(s) %s in %s"
                                  % (", ".join(sorted(bad)), expr.to_string(node)))

    def uses(self, name):
        return any(name in expr.names(e) for e in self.equations)

    def __repr__(self):
        return "PolySystem(%s)" % "; ".join(expr.to_string(e) for e in self.equations)


def _homog_degrees(node, names):
    tag = node[0]
    if tag == "var":
        return {1} if node[1] in names else {0}
    if tag == "num":
        return {0}
    if tag == "neg":
        return _homog_degrees(node[1], names)
    if tag == "pow":
        return {d * node[2] for d in _homog_degrees(node[1], names)}
    if tag == "call":
        return {0}
    a, b = _homog_degrees(node[1], names), _homog_degrees(node[2], names)
    if tag in ("add", "sub"):
        return a | b
    if tag == "mul":
        return {x + y for x in a for y in b}
    if tag == "div":
        if b != {0}:
            raise ConfigError("curve coordinates may not appear in denominators")
        return a
    raise ValueError(tag)


def parse_equation_file(text):
    sec = split_sections(text)
    if "coordinates" not in sec or "equations" not in sec:
        raise ConfigError("equation file needs [coordinates] and [equations]")
    coords, kinds = [], []
    for lineno, line in sec["coordinates"]:
        words = line.split()
        if words[0] not in ("torus", "curve"):
            raise ConfigError("line %d: expected 'torus' or 'curve'" % lineno)
        if words[0] == "curve" and len(words) != 4:
            raise ConfigError("line %d: a curve needs three projective coordinate names" % lineno)
        if len(words) < 2:
            raise ConfigError("line %d: no coordinate names" % lineno)
        kinds.append(words[0])
        coords.append(tuple(words[1:]))
    consts = {}
    for lineno, line in sec.get("constants", []):
        name, eq, rhs = line.partition("=")
        if not eq:
            raise ConfigError("line %d: expected NAME = EXPR" % lineno)
        consts[name.strip()] = expr.parse(rhs)
    eqs = []
    for lineno, line in sec["equations"]:
        try:
            eqs.append(expr.parse(line))
        except expr.ExprSyntaxError as exc:
            raise ConfigError("line %d: %s" % (lineno, exc)) from None
    return PolySystem(coords, eqs, consts, kinds)


def check_layout(V, group):
    V.check_names(group.constants)
    if len(V.coords) != len(group.components):
        raise ConfigError("equations declare %d components, the group has %d"
                          % (len(V.coords), len(group.components)))
    for names, kind, comp in zip(V.coords, V.kinds, group.components):
        if kind != comp.kind:
            raise ConfigError("component kinds differ: %s vs %s" % (kind, comp.kind))
        if isinstance(comp, Torus) and len(names) != comp.dim:
            raise ConfigError("torus of dimension %d declared with %d names" % (comp.dim, len(names)))


# -- evaluation ---------------------------------------------------------------

def _constants(V, group, lift):
    env = {}
    field = group.field
    base = poly_env(field, group.constants)
    for name, node in V.constants.items():
        env[name] = expr.evaluate(node, dict(base, **env), lambda n: RatFunc.const(field, n))
    out = {k: lift(v) for k, v in base.items()}
    out.update({k: lift(v) for k, v in env.items()})
    return out


def _resolve_symbolic(c):
    return c.symbolic() if isinstance(c, CurveMultiple) else c


def _projective(P, one, zero):
    if P.infinity:
        return zero, one, zero
    return P.x, P.y, one


def _env_for(V, point, one, zero, curve_map):
    env = {}
    for names, comp, c in zip(V.coords, point.group.components, point.coords):
        if isinstance(comp, Torus):
            env.update(zip(names, c))
        else:
            X, Y, Z = _projective(curve_map(c), one, zero)
            env[names[0]], env[names[2]] = X, Z
            if Y is not None:
                env[names[1]] = Y
    return env


def _eval_all(V, env, lift_int):
    vals = []
    for node in V.equations:
        try:
            vals.append(expr.evaluate(node, env, lift_int))
        except KeyError as exc:
            if any(names[1] in str(exc) for names, k in zip(V.coords, V.kinds) if k == "curve"):
                raise XOnlyError("equation needs a y-coordinate the point does not carry") from None
            raise
    return vals


def contains(V, point, mode="exact", s=5, field_degree=None, seed=0):
    """Decide point in V.  Monte Carlo 'member' verdicts carry an error bound."""
    check_layout(V, point.group)
    if mode == "exact":
        field = point.group.field
        one, zero = RatFunc.const(field, 1), RatFunc.const(field, 0)
        env = _constants(V, point.group, lambda v: v)
        env.update(_env_for(V, point, one, zero, _resolve_symbolic))
        vals = _eval_all(V, env, lambda n: RatFunc.const(field, n))
        for i, v in enumerate(vals):
            if v:
                return Verdict(NON_MEMBER, 0.0, None, "equation %d is nonzero" % (i + 1))
        return Verdict(MEMBER, 0.0)
    if mode != "monte_carlo":
        raise ValueError("mode must be 'exact' or 'monte_carlo'")
    degree = sum(_equation_degree(V, node, point) for node in V.equations)
    return _monte_carlo(point, s, field_degree, seed, degree,
                        lambda spec, sp: _spec_check(V, point, spec, sp))


def _spec_check(V, point, spec, sp):
    T = spec.target
    env = _constants(V, point.group, spec)
    env.update(_env_for(V, sp, T.one(), T.zero(), lambda c: c))
    vals = _eval_all(V, env, lambda n: T(n))
    for i, v in enumerate(vals):
        if v:
            return "equation %d is nonzero at %r" % (i + 1, spec.theta)
    return None


def default_field(coeff_field, field_degree=None, min_size=MIN_FIELD):
    p, j = coeff_field.p, coeff_field.k
    if field_degree is not None:
        if field_degree % j:
            raise ValueError("field degree %d is not a multiple of %d" % (field_degree, j))
        return GF(p, field_degree)
    K = j
    while p ** K < min_size:
        K += j
    return GF(p, K)


def _point_dens(point):
    dens = []
    for c in point.coords:
        if isinstance(c, tuple):
            dens.extend(v.den for v in c if isinstance(v, RatFunc))
        else:
            P = c.base if isinstance(c, CurveMultiple) else c
            if not P.infinity:
                for v in (P.x, P.y):
                    if isinstance(v, RatFunc):
                        dens.append(v.den)
                    elif isinstance(v, QuadElem):
                        dens.extend(w.den for w in (v.a, v.b, v.s) if isinstance(w, RatFunc))
    return dens


def specialize_any(point, spec):
    coords = []
    for c in point.coords:
        if isinstance(c, tuple):
            coords.append(tuple(spec(v) for v in c))
        elif isinstance(c, CurveMultiple):
            coords.append(c.specialize(spec))
        else:
            coords.append(specialize_point(c, spec))
    return GroupPoint(point.group, coords, check=False)


def _monte_carlo(point, s, field_degree, seed, degree, check, extra_points=()):
    if s < 1:
        raise ValueError("need at least one specialization")
    T = default_field(point.group.field, field_degree)
    rng = random.Random(seed)
    dens = _point_dens(point)
    for q in extra_points:
        dens.extend(_point_dens(q))
    poles = sum(max(d.degree(), 0) for d in dens)
    per = min(1.0, degree / max(1, T.order - poles))
    bound = 1.0
    for _ in range(s):
        for _attempt in range(50):
            try:
                spec = Specialization.random(T, point.group.field, rng, avoid=dens)
                failure = check(spec, specialize_any(point, spec))
                break
            except (BadSpecialization, ZeroDivisionError):
                continue
        else:
            raise BadSpecializationExhausted("no good specialization after 50 draws")
        if failure:
            return Verdict(NON_MEMBER, 0.0, None, failure)
        bound *= per
    return Verdict(PROBABLE, bound, None, "%d specializations over GF(%d^%d)" % (s, T.p, T.k))


def _coord_heights(point):
    """Per coordinate name order: degree bounds in t of every ambient coordinate."""
    hs = []
    for c in point.coords:
        if isinstance(c, tuple):
            hs.append([v.degree_bound() if isinstance(v, RatFunc) else 0 for v in c])
        else:
            if isinstance(c, CurveMultiple):
                hx = c.height()
                P = c.base
            else:
                hx, P = x_degree(c), c
            hy = 2 * hx + 3
            if not P.infinity and isinstance(P.y, QuadElem) and isinstance(P.y.s, RatFunc):
                hy += P.y.s.degree_bound()
            hs.append([hx, hy, 0])
    return hs


def _equation_degree(V, node, point):
    """Bound on the number of theta where a nonzero equation value vanishes."""
    dims = expr.degree_bounds(_strip_consts(node, V))
    heights = {}
    uses_y = False
    for names, hs, kind in zip(V.coords, _coord_heights(point), V.kinds):
        heights.update(zip(names, hs))
        if kind == "curve" and names[1] in dims:
            uses_y = True
    heights["t"] = 1
    total = sum(d * heights.get(v, 0) for v, d in dims.items())
    total = max(total, 1)
    return 2 * total if uses_y else total


def _strip_consts(node, V):
    """Constants behave as degree-0 numbers for degree bounds."""
    tag = node[0]
    if tag == "var" and node[1] != "t" and not any(node[1] in c for c in V.coords):
        return ("num", 1)
    if tag in ("num", "var"):
        return node
    if tag in ("neg",):
        return (tag, _strip_consts(node[1], V))
    if tag == "pow":
        return (tag, _strip_consts(node[1], V), node[2])
    if tag == "call":
        return ("num", 1)
    if tag == "div":
        return _strip_consts(node[1], V)
    return (tag, _strip_consts(node[1], V), _strip_consts(node[2], V))


# -- Segre chart of E x E -----------------------------------------------------

SegreCondition = namedtuple("SegreCondition", "holds chart values")


def segre_affine_reduce(V, P, Q):
    """Evaluate V's equations on (P, Q) in E x E with the right chart.

    Both affine: the equations become conditions on affine coordinates
    (for z02 = z20 + z22 this is x(P) = x(Q) + 1).  If either point is O
    its representative (0 : 1 : 0) is used.
    """
    if len(V.coords) != 2 or V.kinds != ["curve", "curve"]:
        raise ValueError("segre_affine_reduce needs a system on exactly two curve factors")
    pts = [P, Q]
    one = zero = None
    for R in pts:
        if not R.infinity:
            one, zero = R.x * 0 + 1, R.x * 0
            break
    if one is None:
        one, zero = 1, 0
    env = {}
    for names, R in zip(V.coords, pts):
        X, Y, Z = _projective(R, one, zero)
        env[names[0]], env[names[2]] = X, Z
        if Y is not None:
            env[names[1]] = Y
    vals = [expr.evaluate(node, env, lambda n: one * n) for node in V.equations]
    chart = "affine" if not (P.infinity or Q.infinity) else "infinity"
    return SegreCondition(all(not v for v in vals), chart, vals)


# -- sum witnesses ------------------------------------------------------------

class SumWitness:
    """Points w_i with w_i in factors[i]; claimed to sum to a target."""

    def __init__(self, points, factors, names=None):
        if len(points) != len(factors):
            raise ValueError("one factor system per witness point")
        self.points = list(points)
        self.factors = list(factors)
        self.names = names or ["C%d" % (i + 1) for i in range(len(points))]


def _sum_height(points, target):
    """Degree budget for the difference sum(w) - target, component by component.

    Torus: degrees add.  Curves: deg_t x(.) is a quadratic form on points of a
    constant curve, so deg x(sum of k points) <= k * sum of degrees.
    """
    total = 0
    allpts = list(points) + [target]
    k = len(allpts)
    for j, comp in enumerate(target.group.components):
        hs = [_coord_heights(q)[j] for q in allpts]
        if isinstance(comp, Torus):
            total += sum(sum(h) for h in hs)
        else:
            total += 2 * k * sum(h[0] for h in hs)
    return max(total, 1)


def _spec_sum(points, target, spec, report):
    sps = [specialize_any(w, spec) for w in points]
    st = specialize_any(target, spec)
    group = target.group
    for j, comp in enumerate(group.components):
        if isinstance(comp, Torus):
            prod = None
            for w in sps:
                prod = w.coords[j] if prod is None else tuple(a * b for a, b in zip(prod, w.coords[j]))
            if any(not a == b for a, b in zip(prod, st.coords[j])):
                return "torus component %d does not match" % (j + 1)
        else:
            parts = [w.coords[j] for w in sps]
            signs = _matching_signs(parts, st.coords[j])
            if not signs:
                return "curve component %d does not match for any sign choice" % (j + 1)
            report.append((j + 1, signs))
    return None


def _matching_signs(parts, target):
    """Sign patterns (+1/-1 per non-identity part) whose signed sum is target."""
    idx = [i for i, P in enumerate(parts) if not P.infinity]
    found = []
    for mask in range(1 << len(idx)):
        acc = parts[0].curve.O()
        signs = []
        for b, i in enumerate(idx):
            neg = (mask >> b) & 1
            acc = ec_add(acc, -parts[i] if neg else parts[i])
            signs.append(-1 if neg else 1)
        if acc == target:
            found.append(tuple(signs))
    return found


def check_sum_witness(w, target, mode="monte_carlo", s=5, field_degree=None, seed=0, log=None):
    """Verify factor memberships, then that the witnesses sum to target.

    Curve summands are accepted up to sign (the defining conditions only see
    x-coordinates); every sign pattern that works is recorded in ``log``.
    """
    bound = 0.0
    for i, (pt, factor) in enumerate(zip(w.points, w.factors)):
        v = contains(factor, pt, mode, s, field_degree, seed + 7919 * (i + 1))
        if v.verdict == NON_MEMBER:
            return Verdict(NON_MEMBER, 0.0, i + 1, "%s: %s" % (w.names[i], v.detail))
        bound += v.error_bound
    if mode == "exact":
        total = w.points[0]
        try:
            for pt in w.points[1:]:
                total = _exact_add(total, pt)
            ok = _exact_equal(total, target)
        except XOnlyError:
            raise XOnlyError("exact sum check needs explicit y-coordinates; use monte_carlo")
        if not ok:
            return Verdict(NON_MEMBER, 0.0, None, "sum differs from target")
        return Verdict(MEMBER, 0.0)
    report = []
    degree = _sum_height(w.points, target)
    v = _monte_carlo(target, s, field_degree, seed, degree,
                     lambda spec, sp: _spec_sum(w.points, target, spec, report),
                     extra_points=w.points)
    if log is not None:
        for comp, signs in report:
            if len(signs) > 1 or any(x < 0 for x in signs[0]):
                log.append("component %d: %d sign patterns match: %s" % (comp, len(signs), signs))
    if v.verdict == NON_MEMBER:
        return Verdict(NON_MEMBER, 0.0, None, "sum: " + v.detail)
    return Verdict(PROBABLE, bound + v.error_bound, None, v.detail)


def _exact_add(a, b):
    coords = []
    for ca, cb in zip(a.coords, b.coords):
        if isinstance(ca, tuple):
            coords.append(tuple(x * y for x, y in zip(ca, cb)))
        else:
            coords.append(ec_add(_resolve_symbolic(ca), _resolve_symbolic(cb)))
    return GroupPoint(a.group, coords, check=False)


def _exact_equal(a, b):
    for ca, cb in zip(a.coords, b.coords):
        if isinstance(ca, tuple):
            if any(not x == y for x, y in zip(ca, cb)):
                return False
        elif not _resolve_symbolic(ca) == _resolve_symbolic(cb):
            return False
    return True
