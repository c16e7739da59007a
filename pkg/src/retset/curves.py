"""Elliptic curves y^2 = x^3 + Ax + B with constant coefficients.

Coordinates may live in any ring supporting + - * / and ==: finite field
elements, rational functions over F_q(t), or QuadElem (one adjoined square
root).  A point may also be "x-only" when its y-coordinate is too large to
carry symbolically; such points support negation, Frobenius and scalar
multiplication (through division polynomials) but not general addition.
"""

import numpy as np

from .batch import BatchField, FqVec
from .fields import GF, FqElem, NoSquareRoot, _pdivmod, _pgcd, _pmul, _psub, _trim, sqrt_in_fq
from .poly import BadSpecialization, RatFunc, SparsePoly

# symbolic y-coordinates above this many terms are dropped (point becomes x-only)
Y_TERM_LIMIT = 20000
# symbolic multiples m*P keep their y-coordinate only for m up to this bound;
# unreduced rational functions grow too fast under repeated chord-tangent steps
SYMBOLIC_Y_MAX = 8


class CoordinateFieldMismatch(TypeError):
    pass


class XOnlyError(ValueError):
    """The operation needs a y-coordinate that the point does not carry."""


class TorsionBoundTooSmall(ArithmeticError):
    pass


class QuadElem:
    """a + b*sqrt(s) over a base ring in which s is not a square."""

    __slots__ = ("a", "b", "s")

    def __init__(self, a, b, s):
        self.a, self.b, self.s = a, b, s

    def _lift(self, o):
        if isinstance(o, QuadElem):
            if o.s is not self.s and not _same(o.s, self.s):
                if not o.b:
                    return QuadElem(o.a, 0 * self.a, self.s)
                if not self.b:
                    return o
                raise CoordinateFieldMismatch("different adjoined square roots")
            return o
        if isinstance(o, (int, FqElem, RatFunc, SparsePoly)):
            return QuadElem(o, 0 * self.a, self.s)
        return NotImplemented

    def __add__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return QuadElem(self.a + o.a, self.b + o.b, self.s)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.s)

    def __sub__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return QuadElem(self.a - o.a, self.b - o.b, self.s)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        s = self.s if self.b else o.s
        return QuadElem(self.a * o.a + self.b * o.b * s, self.a * o.b + self.b * o.a, s)

    __rmul__ = __mul__

    def conj(self):
        return QuadElem(self.a, -self.b, self.s)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.s

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero (or a zero divisor) in quadratic extension")
        return QuadElem(self.a / n, -self.b / n, self.s)

    def __truediv__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, o):
        return self._lift(o) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem(self.a * 0 + 1, self.b * 0, self.s)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frob(self, e=1):
        """(a + b sqrt s)^(p^e) = a^q + b^q s^((q-1)/2) sqrt s."""
        q = _char(self.a) ** e
        a, b = _frob(self.a, e), _frob(self.b, e)
        if not b:
            return QuadElem(a, b, self.s)
        return QuadElem(a, b * self.s ** ((q - 1) // 2), self.s)

    def size(self):
        return sum(_size(v) for v in (self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, o):
        o = self._lift(o)
        if o is NotImplemented:
            return o
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        raise TypeError("QuadElem is unhashable")

    def __repr__(self):
        return "QuadElem(%s + (%s)*sqrt(%s))" % (self.a, self.b, self.s)


def _same(x, y):
    try:
        return bool(x == y)
    except TypeError:
        return False


def _char(v):
    if isinstance(v, FqElem):
        return v.field.p
    if isinstance(v, (RatFunc, SparsePoly)):
        return v.field.p
    if isinstance(v, QuadElem):
        return _char(v.a)
    raise TypeError("no characteristic for %r" % (v,))


def _frob(v, e):
    if isinstance(v, int):
        return v
    if isinstance(v, FqElem):
        return v.frob(e)
    if isinstance(v, RatFunc):
        return v.frob(e)
    if isinstance(v, SparsePoly):
        return v.frob_pow(e)
    if isinstance(v, QuadElem):
        return v.frob(e)
    raise TypeError("no Frobenius for %r" % (v,))


def _size(v):
    if isinstance(v, RatFunc):
        return len(v.num) + len(v.den)
    if isinstance(v, SparsePoly):
        return len(v)
    if isinstance(v, QuadElem):
        return v.size()
    return 1


def _base_kind(v):
    k = coord_kind(v)
    return k[1:] if k[0] == "quad" else k


def _collapse(v):
    """Drop a vanishing sqrt part so x-coordinates stay in the base ring;
    cancel common factors of symbolic coordinates."""
    if isinstance(v, QuadElem):
        v = QuadElem(_reduce(v.a), _reduce(v.b), v.s)
        return v.a if not v.b else v
    return _reduce(v)


def _reduce(v):
    return v.reduced() if isinstance(v, RatFunc) else v


def coord_kind(v):
    """Tag describing the ring a coordinate lives in, for mismatch checks."""
    if isinstance(v, FqElem):
        return ("fq", v.field.p, v.field.k)
    if isinstance(v, (RatFunc, SparsePoly)):
        return ("rat", v.field.p)
    if isinstance(v, QuadElem):
        return ("quad",) + coord_kind(v.a)
    return ("int",)


# -- curves ---------------------------------------------------------------

class EllipticCurve:
    """y^2 = x^3 + A x + B over F_p, p >= 5."""

    def __init__(self, p, A=0, B=1):
        if p in (2, 3):
            raise ValueError("characteristic 2 and 3 are not supported")
        self.p = p
        self.F = GF(p)
        self.A = A % p
        self.B = B % p
        if (4 * self.A ** 3 + 27 * self.B ** 2) % p == 0:
            raise ValueError("singular curve: 4A^3 + 27B^2 = 0 mod %d" % p)
        self.trace = p + 1 - self.count_points(1)
        self.supersingular = self.trace % p == 0

    def rhs(self, x):
        return x * x * x + self.A * x + self.B

    def count_points(self, k=1):
        """|E(F_{p^k})| by exhaustive x enumeration (vectorised)."""
        F = GF(self.p, k)
        xs = all_elements(F)
        r = self.rhs(xs)
        chi = r ** ((F.order - 1) // 2)
        zero = r.is_zero()
        one = (chi - 1).is_zero()
        return 1 + int(zero.sum()) + 2 * int((one & ~zero).sum())

    def O(self):
        return ECPoint(self, None, None, infinity=True)

    def point(self, x, y=None):
        return ECPoint(self, x, y)

    def lift_x(self, x):
        """A point with the given x over its field, root chosen deterministically."""
        return ECPoint(self, x, sqrt_in_fq(self.rhs(x)))

    def __eq__(self, o):
        return isinstance(o, EllipticCurve) and (self.p, self.A, self.B) == (o.p, o.A, o.B)

    def __hash__(self):
        return hash((self.p, self.A, self.B))

    def __repr__(self):
        return "EllipticCurve(p=%d, A=%d, B=%d)" % (self.p, self.A, self.B)


def all_elements(F):
    """Every element of F as one FqVec, in integer-code order."""
    codes = np.arange(F.order, dtype=np.int64)
    digits = np.empty((F.order, F.k), dtype=np.int64)
    for i in range(F.k):
        digits[:, i] = codes % F.p
        codes //= F.p
    return FqVec(BatchField(F), digits)


class ECPoint:
    __slots__ = ("curve", "x", "y", "infinity")

    def __init__(self, curve, x, y=None, infinity=False):
        self.curve = curve
        self.infinity = infinity
        self.x = None if infinity else x
        self.y = None if infinity else y

    @property
    def x_only(self):
        return not self.infinity and self.y is None

    def is_zero(self):
        return self.infinity

    def on_curve(self):
        if self.infinity or self.y is None:
            return True
        return self.y * self.y == self.curve.rhs(self.x)

    def __neg__(self):
        if self.infinity or self.y is None:
            return self
        return ECPoint(self.curve, self.x, -self.y)

    def __add__(self, o):
        return ec_add(self, o)

    def __sub__(self, o):
        return ec_add(self, -o)

    def __rmul__(self, n):
        return ec_scalar_mul(n, self)

    def __eq__(self, o):
        if not isinstance(o, ECPoint):
            return NotImplemented
        if self.infinity or o.infinity:
            return self.infinity == o.infinity
        if not self.x == o.x:
            return False
        if self.y is None or o.y is None:
            return self.y is None and o.y is None
        return self.y == o.y

    __hash__ = None

    def __repr__(self):
        if self.infinity:
            return "O"
        if self.y is None:
            return "(x=%s, y=?)" % (self.x,)
        return "(%s, %s)" % (self.x, self.y)


def _check_same(P, Q):
    if P.curve != Q.curve:
        raise CoordinateFieldMismatch("points on different curves")
    kp, kq = _base_kind(P.x), _base_kind(Q.x)
    if kp != kq:
        raise CoordinateFieldMismatch("coordinate fields differ: %r vs %r" % (kp, kq))


def ec_add(P, Q):
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    _check_same(P, Q)
    if P.y is None or Q.y is None:
        raise XOnlyError("addition needs y-coordinates")
    E = P.curve
    if P.x == Q.x:
        if not (P.y + Q.y):
            return E.O()
        lam = (3 * P.x * P.x + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    lam = _collapse(lam)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return ECPoint(E, _collapse(x3), _collapse(y3))


def _double_and_add(n, P):
    R = P.curve.O()
    for bit in bin(n)[2:]:
        R = ec_add(R, R)
        if bit == "1":
            R = ec_add(R, P)
    return R


def ec_frobenius(P, e):
    """Coordinates raised to p^e.  Oversized symbolic y-coordinates are dropped."""
    if P.infinity or e == 0:
        return P
    x = _frob(P.x, e)
    y = None
    if P.y is not None:
        y = _frob_guarded(P.y, e)
    return ECPoint(P.curve, x, y)


def _frob_guarded(y, e):
    if isinstance(y, QuadElem) and isinstance(y.a, RatFunc):
        # the s^((q-1)/2) factor has about size(s)^(digits of q) terms
        q = y.s.num.field.p ** e
        est = len(y.s.num) ** min(60, sum(int(d) for d in _digits(q - 1, y.s.num.field.p)))
        if est > Y_TERM_LIMIT:
            return None
    return _frob(y, e)


def _digits(n, p):
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def ec_scalar_mul(n, P):
    """n*P; on supersingular curves p-power factors go through -F^2."""
    if n < 0:
        return ec_scalar_mul(-n, -P)
    E = P.curve
    if n == 0 or P.infinity:
        return E.O()
    e = 0
    if E.supersingular:
        while n % E.p == 0:
            n //= E.p
            e += 1
    if P.y is None or (n > SYMBOLIC_Y_MAX and _base_kind(P.x)[0] == "rat"):
        R = _xonly_mul(n, ECPoint(E, P.x, None))
    else:
        R = _double_and_add(n, P)
    if e:
        R = ec_frobenius(R, 2 * e)
        if e % 2:
            R = -R
    return R


def _xonly_mul(m, P):
    if m == 1:
        return P
    f, g = division_poly_dense(m, P.curve)
    den = eval_dense(g, P.x)
    if not den:
        return P.curve.O()
    return ECPoint(P.curve, eval_dense(f, P.x) / den, None)


# -- division polynomials -------------------------------------------------

def _padd(a, b, p):
    return _psub(a, [(-c) % p for c in b], p)


def _pscale(a, c, p):
    return _trim([x * c % p for x in a])


class _DivPolys:
    """h_n = psi_n for odd n, psi_n / (2y) for even n, as dense lists mod p."""

    def __init__(self, curve):
        p, A, B = curve.p, curve.A, curve.B
        self.p = p
        self.R = _trim([4 * B % p, 4 * A % p, 0, 4])
        self.h = {
            0: [],
            1: [1],
            2: [1],
            3: _trim([(-A * A) % p, 12 * B % p, 6 * A % p, 0, 3]),
            4: _trim([2 * c % p for c in (-8 * B * B - A ** 3, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1)]),
        }
        self.R2 = _pmul(self.R, self.R, p)

    def __call__(self, n):
        h = self.h
        if n in h:
            return h[n]
        p, mul = self.p, lambda a, b: _pmul(a, b, self.p)
        m = n // 2
        if n % 2:
            a = mul(self(m + 2), mul(self(m), mul(self(m), self(m))))
            b = mul(self(m - 1), mul(self(m + 1), mul(self(m + 1), self(m + 1))))
            if m % 2 == 0:
                a = mul(self.R2, a)
            else:
                b = mul(self.R2, b)
            res = _psub(a, b, p)
        else:
            a = mul(self(m + 2), mul(self(m - 1), self(m - 1)))
            b = mul(self(m - 2), mul(self(m + 1), self(m + 1)))
            res = mul(self(m), _psub(a, b, p))
        h[n] = res
        return res

    def psi_sq(self, n):
        """psi_n^2 as a polynomial in x."""
        hn = self(n)
        sq = _pmul(hn, hn, self.p)
        return _pmul(self.R, sq, self.p) if n % 2 == 0 else sq

    def psi_adj(self, n):
        """psi_{n-1} psi_{n+1} as a polynomial in x."""
        prod = _pmul(self(n - 1), self(n + 1), self.p)
        return _pmul(self.R, prod, self.p) if n % 2 else prod


_DIV_CACHE = {}


def division_poly_dense(m, curve):
    """(f_m, g_m) as coefficient lists (lowest first), coprime, with x(mP) = f/g."""
    if m < 1:
        raise ValueError("m must be positive")
    key = (curve.p, curve.A, curve.B)
    dp = _DIV_CACHE.setdefault(key, _DivPolys(curve))
    p = curve.p
    if m == 1:
        return [0, 1], [1]
    g = dp.psi_sq(m)
    f = _psub(_pmul([0, 1], g, p), dp.psi_adj(m), p)
    common = _pgcd(f, g, p)
    if len(common) > 1:
        f = _pdivmod(f, common, p)[0]
        g = _pdivmod(g, common, p)[0]
        # keep f monic after cancelling
        c = pow(f[-1], -1, p)
        f, g = _pscale(f, c, p), _pscale(g, c, p)
    return f, g


def division_poly(m, curve):
    """(f_m, g_m) as SparsePoly over F_p in the variable of the x-coordinate."""
    f, g = division_poly_dense(m, curve)
    F = curve.F
    return (SparsePoly(F, {i: c for i, c in enumerate(f) if c}),
            SparsePoly(F, {i: c for i, c in enumerate(g) if c}))


def eval_dense(coeffs, x):
    """Horner evaluation of an integer coefficient list at a ring element."""
    acc = x * 0 + (coeffs[-1] if coeffs else 0)
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def torsion_count(m, curve, max_degree=6, max_field=2 * 10 ** 6):
    """|E[m]| found over F_{p^k} for k = 1.. max_degree; must reach m'^2."""
    p = curve.p
    mp = m
    while mp % p == 0:
        mp //= p
    target = mp * mp
    if mp == 1:
        return 1
    _, g = division_poly_dense(m, curve)
    best = None
    for k in range(1, max_degree + 1):
        F = GF(p, k)
        if F.order > max_field:
            break
        xs = all_elements(F)
        vals = eval_dense(g, xs)
        roots = np.nonzero(vals.is_zero())[0]
        count = 1
        for code in roots:
            x = F.from_int(int(code))
            r = curve.rhs(x)
            count += 1 if not r else (2 if r.is_square() else 0)
        best = count
        if count == target:
            return count
    raise TorsionBoundTooSmall("found %s points of order dividing %d; expected %d"
                               % (best, m, target))


# -- x-only (Kummer line) formulas in projective (X : Z) ------------------

def kummer_double(X, Z, A, B):
    XX, ZZ = X * X, Z * Z
    t = XX - A * ZZ
    X2 = t * t - 8 * B * X * Z * ZZ
    Z2 = 4 * Z * (XX * X + A * X * ZZ + B * Z * ZZ)
    return X2, Z2


def kummer_diff_add(Xp, Zp, Xq, Zq, Xd, Zd, A, B):
    """x(P+Q) from x(P), x(Q) and x(P-Q)."""
    xx = Xp * Xq
    zz = Zp * Zq
    cross = Xp * Zq + Xq * Zp
    t = xx - A * zz
    Xs = Zd * (t * t - 4 * B * zz * cross)
    diff = Xp * Zq - Xq * Zp
    Zs = Xd * (diff * diff)
    return Xs, Zs


def kummer_step(Xn, Zn, X1, Z1, Xm, Zm, A, B):
    """x((n+1)P) from x(nP), x(P), x((n-1)P), via x_{n+1} + x_{n-1} = S(x_n, x_1)."""
    diff = Xn * Z1 - X1 * Zn
    D = diff * diff
    zz = Zn * Z1
    N = 2 * (Xn * Z1 + X1 * Zn) * (Xn * X1 + A * zz) + 4 * B * zz * zz
    return N * Zm - Xm * D, D * Zm


def specialize_coord(c, spec):
    """Image of a coordinate under a specialization t -> theta.

    An adjoined root sqrt(s) maps to a root of s(theta) when one exists in
    the target field; otherwise the image stays in the quadratic extension.
    """
    if isinstance(c, QuadElem):
        a, b, s = spec(c.a), spec(c.b), spec(c.s)
        if not s:
            raise BadSpecialization("adjoined square root degenerates")
        try:
            r = sqrt_in_fq(s)
        except NoSquareRoot:
            return QuadElem(a, b, s)
        return a + b * r
    return spec(c)


def specialize_point(P, spec):
    if P.infinity:
        return P
    x = specialize_coord(P.x, spec)
    y = None if P.y is None else specialize_coord(P.y, spec)
    return ECPoint(P.curve, x, y)


class CurveMultiple:
    """The point n*Q, kept lazy until specialized.

    Symbolic multiples by large p-powers are sparse in x but hopeless in y;
    resolving after specialization keeps full coordinates cheap.  With
    ``frobenius=False`` the specialized multiple is computed by plain
    double-and-add, which makes it an independent check of the F^2 route.
    """

    def __init__(self, n, base, frobenius=True):
        self.n = n
        self.base = base
        self.frobenius = frobenius

    @property
    def curve(self):
        return self.base.curve

    def symbolic(self):
        return ec_scalar_mul(self.n, self.base)

    def specialize(self, spec):
        P = specialize_point(self.base, spec)
        if self.frobenius:
            return ec_scalar_mul(self.n, P)
        n = self.n
        if n < 0:
            n, P = -n, -P
        return _double_and_add(n, P) if n else P.curve.O()

    def height(self):
        """Upper bound on deg_t x(nQ): n^2 deg_t x(Q)."""
        if self.base.infinity or self.n == 0:
            return 0
        return self.n * self.n * x_degree(self.base)

    def __neg__(self):
        return CurveMultiple(-self.n, self.base, self.frobenius)

    def __repr__(self):
        return "%d*%r" % (self.n, self.base)


def x_degree(P):
    """deg_t of the x-coordinate (max of numerator and denominator degrees)."""
    if P.infinity:
        return 0
    x = P.x
    if isinstance(x, RatFunc):
        return x.degree_bound()
    if isinstance(x, SparsePoly):
        return max(x.degree(), 0)
    return 0
