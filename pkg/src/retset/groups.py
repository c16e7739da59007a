"""Products of tori and constant elliptic curves, and points on them.

Group files are sectioned text::

    [group]
    field p=5 k=2            # coefficient field F_25 (default k=1)
    const alpha = u + 1      # named constants, u generates the field
    torus dim=3
    curve p=5 A=0 B=1

    [point]
    torus t + alpha, t - alpha, t
    curve x = t + 1 adjoin sqrt((t+1)^3 + 1)
    curve O

Point lines are matched to components in order.  ``adjoin sqrt(s)`` sets
y = sqrt(s), with s required to equal x^3 + Ax + B.
"""

import re

from . import expr
from .curves import EllipticCurve, ECPoint, QuadElem, ec_add, ec_scalar_mul, specialize_point
from .fields import GF
from .poly import RatFunc, parse_ratfunc, poly_env


class ConfigError(ValueError):
    pass


class Torus:
    kind = "torus"

    def __init__(self, dim):
        if dim < 1:
            raise ValueError("torus dimension must be positive")
        self.dim = dim

    def __eq__(self, o):
        return isinstance(o, Torus) and o.dim == self.dim

    def __repr__(self):
        return "Torus(%d)" % self.dim


class Curve:
    kind = "curve"

    def __init__(self, curve):
        self.curve = curve

    def __eq__(self, o):
        return isinstance(o, Curve) and o.curve == self.curve

    def __repr__(self):
        return "Curve(%r)" % (self.curve,)


class AmbientGroup:
    def __init__(self, components, coeff_field=None, constants=None):
        if not components:
            raise ValueError("an ambient group needs at least one component")
        self.components = list(components)
        ps = {c.curve.p for c in self.components if isinstance(c, Curve)}
        if coeff_field is None:
            coeff_field = GF(ps.pop() if ps else 5)
        elif ps - {coeff_field.p}:
            raise ValueError("curve characteristic differs from the coefficient field")
        self.field = coeff_field
        self.constants = dict(constants or {})

    @property
    def p(self):
        return self.field.p

    def identity(self):
        coords = []
        for c in self.components:
            if isinstance(c, Torus):
                coords.append(tuple(RatFunc.const(self.field, 1) for _ in range(c.dim)))
            else:
                coords.append(c.curve.O())
        return GroupPoint(self, coords)

    def __eq__(self, o):
        return isinstance(o, AmbientGroup) and o.components == self.components

    def __repr__(self):
        return "AmbientGroup(%r)" % (self.components,)


class GroupPoint:
    """Per-component coordinates: tuples for tori, ECPoints for curves."""

    def __init__(self, group, coords, check=True):
        self.group = group
        self.coords = list(coords)
        if check:
            self._check()

    def _check(self):
        if len(self.coords) != len(self.group.components):
            raise ValueError("point has %d components, group has %d"
                             % (len(self.coords), len(self.group.components)))
        for comp, c in zip(self.group.components, self.coords):
            if isinstance(comp, Torus):
                if len(c) != comp.dim:
                    raise ValueError("torus coordinate count mismatch")
                if any(not v for v in c):
                    raise ValueError("torus coordinates must be nonzero")
            elif not isinstance(c, ECPoint):
                raise ValueError("curve component needs an ECPoint")

    def __mul__(self, o):
        return group_add(self, o)

    def __eq__(self, o):
        if not isinstance(o, GroupPoint):
            return NotImplemented
        for a, b in zip(self.coords, o.coords):
            if isinstance(a, ECPoint):
                if not a == b:
                    return False
            elif any(not x == y for x, y in zip(a, b)):
                return False
        return True

    __hash__ = None

    def torus_coords(self):
        out = []
        for comp, c in zip(self.group.components, self.coords):
            if isinstance(comp, Torus):
                out.extend(c)
        return out

    def curve_points(self):
        return [c for c in self.coords if isinstance(c, ECPoint)]

    def __repr__(self):
        parts = []
        for c in self.coords:
            parts.append(repr(c) if isinstance(c, ECPoint) else "(" + ", ".join(map(str, c)) + ")")
        return "GroupPoint(" + ", ".join(parts) + ")"


def group_mul(n, g):
    """g^n: n-th powers on torus coordinates, n-fold sums on curves."""
    coords = []
    for comp, c in zip(g.group.components, g.coords):
        if isinstance(comp, Torus):
            coords.append(tuple(v ** n for v in c))
        else:
            coords.append(ec_scalar_mul(n, c))
    return GroupPoint(g.group, coords, check=False)


def group_add(g, h):
    if g.group != h.group:
        raise ValueError("points in different ambient groups")
    coords = []
    for comp, a, b in zip(g.group.components, g.coords, h.coords):
        if isinstance(comp, Torus):
            coords.append(tuple(x * y for x, y in zip(a, b)))
        else:
            coords.append(ec_add(a, b))
    return GroupPoint(g.group, coords, check=False)


def specialize_group_point(g, spec):
    coords = []
    for comp, c in zip(g.group.components, g.coords):
        if isinstance(comp, Torus):
            coords.append(tuple(spec(v) for v in c))
        else:
            coords.append(specialize_point(c, spec))
    return GroupPoint(g.group, coords, check=False)


# -- text format -------------------------------------------------------------

_KV = re.compile(r"(\w+)\s*=\s*(-?\d+)")


def split_sections(text):
    sections, current = {}, None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"\[(\w+)\]", line)
        if m:
            current = m.group(1).lower()
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ConfigError("line %d: content before any [section]" % lineno)
        sections[current].append((lineno, line))
    return sections


def _ints(line, lineno):
    vals = {k: int(v) for k, v in _KV.findall(line)}
    return vals


def parse_constants(lines, field, into=None):
    consts = dict(into or {})
    for lineno, line in lines:
        body = line[len("const"):].strip()
        name, eq, rhs = body.partition("=")
        name = name.strip()
        if not eq or not re.fullmatch(r"[A-Za-z_]\w*", name):
            raise ConfigError("line %d: expected 'const NAME = EXPR'" % lineno)
        try:
            consts[name] = parse_ratfunc(rhs, field, consts)
        except (expr.ExprSyntaxError, KeyError) as exc:
            raise ConfigError("line %d: %s" % (lineno, exc)) from None
    return consts


def parse_group_file(text):
    """Return (AmbientGroup, GroupPoint) from a group description."""
    sec = split_sections(text)
    if "group" not in sec:
        raise ConfigError("missing [group] section")
    field = None
    comps, const_lines = [], []
    for lineno, line in sec["group"]:
        word = line.split()[0]
        vals = _ints(line, lineno)
        if word == "field":
            if "p" not in vals:
                raise ConfigError("line %d: field needs p=" % lineno)
            field = GF(vals["p"], vals.get("k", 1))
        elif word == "const":
            const_lines.append((lineno, line))
        elif word == "torus":
            if "dim" not in vals:
                raise ConfigError("line %d: torus needs dim=" % lineno)
            comps.append(Torus(vals["dim"]))
        elif word == "curve":
            if "p" not in vals:
                raise ConfigError("line %d: curve needs p=" % lineno)
            try:
                comps.append(Curve(EllipticCurve(vals["p"], vals.get("A", 0), vals.get("B", 1))))
            except ValueError as exc:
                raise ConfigError("line %d: %s" % (lineno, exc)) from None
        else:
            raise ConfigError("line %d: unknown entry %r" % (lineno, word))
    if field is None:
        ps = [c.curve.p for c in comps if isinstance(c, Curve)]
        field = GF(ps[0] if ps else 5)
    try:
        group = AmbientGroup(comps, field)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    group.constants = parse_constants(const_lines, field)
    point = None
    if "point" in sec:
        point = parse_point_lines(sec["point"], group)
    return group, point


def parse_point_lines(lines, group):
    field, consts = group.field, group.constants
    if len(lines) != len(group.components):
        raise ConfigError("[point] has %d lines, the group has %d components"
                          % (len(lines), len(group.components)))
    coords = []
    for (lineno, line), comp in zip(lines, group.components):
        word, _, rest = line.partition(" ")
        if word != comp.kind:
            raise ConfigError("line %d: expected a %s coordinate line" % (lineno, comp.kind))
        try:
            if isinstance(comp, Torus):
                vals = [parse_ratfunc(piece, field, consts) for piece in rest.split(",")]
                if len(vals) != comp.dim:
                    raise ConfigError("line %d: expected %d coordinates" % (lineno, comp.dim))
                coords.append(tuple(vals))
            else:
                coords.append(_parse_curve_point(rest.strip(), comp.curve, field, consts, lineno))
        except (expr.ExprSyntaxError, KeyError) as exc:
            raise ConfigError("line %d: %s" % (lineno, exc)) from None
    try:
        return GroupPoint(group, coords)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _parse_curve_point(text, curve, field, consts, lineno):
    if text == "O":
        return curve.O()
    m = re.fullmatch(r"x\s*=\s*(.+?)\s+adjoin\s+sqrt\((.+)\)", text)
    if m:
        x = parse_ratfunc(m.group(1), field, consts)
        s = parse_ratfunc(m.group(2), field, consts)
        if not s == curve.rhs(x):
            raise ConfigError("line %d: adjoined radicand is not x^3 + Ax + B" % lineno)
        return ECPoint(curve, x, QuadElem(0 * x, 0 * x + 1, s))
    m = re.fullmatch(r"x\s*=\s*(.+?)\s+y\s*=\s*(.+)", text)
    if m:
        x = parse_ratfunc(m.group(1), field, consts)
        y = parse_ratfunc(m.group(2), field, consts)
        P = ECPoint(curve, x, y)
        if not P.on_curve():
            raise ConfigError("line %d: point is not on the curve" % lineno)
        return P
    raise ConfigError("line %d: expected 'O', 'x=... adjoin sqrt(...)' or 'x=... y=...'" % lineno)


def constant_env(group):
    return poly_env(group.field, group.constants)
