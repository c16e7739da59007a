"""Sparse polynomials in t with arbitrary-precision exponents, and fractions of them.

Coefficients live in a finite field ``GF(p, j)``; exponents are Python ints,
so ``t^(5^24)`` costs one dictionary entry.  Rational functions are kept
unreduced and compared by cross-multiplication; above a size threshold the
comparison falls back to evaluation at random points of a large extension
field and says so.
"""

from collections import namedtuple
import random

from . import expr
from .fields import GF, FqElem, NoSquareRoot, _pdivmod, _pgcd, sqrt_in_fq

DENSE_LIMIT = 10 ** 6
# RatFunc.reduced() only cancels common factors below this degree
REDUCE_LIMIT = 5000


class BadSpecialization(ZeroDivisionError):
    """The denominator of a rational function vanishes at the chosen point."""


class SparsePoly:
    """Immutable polynomial sum(c_e * t^e) over a finite field."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        if terms:
            for e, c in terms.items():
                if e < 0:
                    raise ValueError("negative exponent %d" % e)
                c = field(c) if not isinstance(c, FqElem) or c.field is not field else c
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def const(cls, field, c):
        return cls(field, {0: c})

    @classmethod
    def t(cls, field):
        return cls(field, {1: 1})

    @classmethod
    def monomial(cls, field, e, c=1):
        return cls(field, {e: c})

    def _lift(self, other):
        if isinstance(other, SparsePoly):
            if other.field is not self.field:
                if other.field.p != self.field.p:
                    raise TypeError("characteristic mismatch")
                big = self.field if self.field.k >= other.field.k else other.field
                return self.coerce(big), other.coerce(big)
            return self, other
        if isinstance(other, (int, FqElem)):
            return self, SparsePoly(self.field, {0: other})
        return None, NotImplemented

    def coerce(self, field):
        if field is self.field:
            return self
        if self.field.k != 1:
            raise TypeError("can only lift prime-field polynomials")
        return SparsePoly(field, {e: field(c.coeffs[0]) for e, c in self.terms.items()})

    def __add__(self, other):
        a, b = self._lift(other)
        if a is None:
            return b
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out[e] + c if e in out else c
        return SparsePoly(a.field, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._lift(other)
        if a is None:
            return b
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._lift(other)
        if a is None:
            return b
        if len(a.terms) * len(b.terms) > DENSE_LIMIT:
            raise MemoryError("product would exceed %d term multiplications" % DENSE_LIMIT)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = e1 + e2
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return SparsePoly(a.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        if n == 0:
            return SparsePoly(self.field, {0: 1})
        if len(self.terms) == 1:
            (e, c), = self.terms.items()
            return SparsePoly(self.field, {e * n: c ** n})
        # split n in base p: f^(a p^i) = frob_i(f)^a keeps huge powers sparse
        p = self.field.p
        result = SparsePoly(self.field, {0: 1})
        i = 0
        while n:
            n, digit = divmod(n, p)
            if digit:
                base = self.frob_pow(i)
                piece = SparsePoly(self.field, {0: 1})
                for _ in range(digit):
                    piece = piece * base
                result = result * piece
            i += 1
        return result

    def frob_pow(self, e):
        """f^(p^e): each term c*t^m becomes c^(p^e) * t^(m p^e)."""
        if e == 0:
            return self
        q = self.field.p ** e
        F = self.field
        return SparsePoly(F, {m * q: F.frobenius_power(c, e) for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, FqElem)):
            other = SparsePoly(self.field, {0: other})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        a, b = self._lift(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset((e, c.coeffs) for e, c in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max(self.terms) if self.terms else -1

    def __len__(self):
        return len(self.terms)

    def shift(self, a):
        """f(t + a) for a constant a; dense, so guarded by DENSE_LIMIT."""
        if self.degree() > DENSE_LIMIT:
            raise MemoryError("shift of a degree %d polynomial" % self.degree())
        lin = SparsePoly(self.field, {1: 1, 0: a})
        out = SparsePoly(self.field)
        for e, c in self.terms.items():
            out = out + (lin ** e) * c
        return out

    def evaluate(self, theta, embed=None):
        """Value at t = theta, mapping coefficients through ``embed``."""
        F = theta.field
        acc = F.zero()
        for e, c in self.terms.items():
            cc = embed(c) if embed else F(c)
            acc = acc + cc * theta ** e
        return acc

    def dense(self):
        d = self.degree()
        if d > DENSE_LIMIT:
            raise MemoryError("dense form of degree %d" % d)
        out = [0] * (d + 1)
        for e, c in self.terms.items():
            out[e] = c
        return out

    def __repr__(self):
        return "SparsePoly(%s)" % format_sparse(self)

    def __str__(self):
        return format_sparse(self)


def _coef_str(c):
    s = str(c)
    return "(%s)" % s if " " in s or "+" in s else s


def format_sparse(f, var="t"):
    """Serialize as ``3*t^15625 + 2``; extension-field coefficients use u."""
    if not f.terms:
        return "0"
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        cs = _coef_str(c)
        if e == 0:
            parts.append(cs)
        else:
            mono = var if e == 1 else "%s^%d" % (var, e)
            parts.append(mono if c == 1 else "%s*%s" % (cs, mono))
    return " + ".join(parts)


class RatFunc:
    """num/den, unreduced; equality is cross-multiplicative."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = SparsePoly(num.field, {0: 1})
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num.field is not den.field:
            num, den = num._lift(den)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def const(cls, field, c):
        return cls(SparsePoly.const(field, c))

    @classmethod
    def t(cls, field):
        return cls(SparsePoly.t(field))

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, SparsePoly):
            return RatFunc(other)
        if isinstance(other, (int, FqElem)):
            return RatFunc(SparsePoly(self.field, {0: other}))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def frob(self, e=1):
        return RatFunc(self.num.frob_pow(e), self.den.frob_pow(e))

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return ratfunc_eq(self, o).equal

    def __hash__(self):
        raise TypeError("RatFunc is unhashable (no canonical form)")

    def evaluate(self, theta, embed=None):
        d = self.den.evaluate(theta, embed)
        if not d:
            raise BadSpecialization("denominator vanishes at %r" % (theta,))
        return self.num.evaluate(theta, embed) / d

    def degree_bound(self):
        return max(self.num.degree(), self.den.degree(), 0)

    def reduced(self):
        """Cancel the gcd of numerator and denominator; denominator made monic.

        Large operands are returned unchanged (reduction is an optimisation,
        never needed for correctness).
        """
        F = self.field
        if not self.num:
            return RatFunc(SparsePoly(F), SparsePoly(F, {0: 1}))
        if max(self.num.degree(), self.den.degree()) > REDUCE_LIMIT:
            return self
        a, b = _to_list(self.num), _to_list(self.den)
        if F.k == 1:
            g = _pgcd(a, b, F.p)
            if len(g) > 1:
                a, b = _pdivmod(a, g, F.p)[0], _pdivmod(b, g, F.p)[0]
            lead = pow(b[-1], -1, F.p)
            a = [c * lead % F.p for c in a]
            b = [c * lead % F.p for c in b]
            return RatFunc(_from_list(F, [F(c) for c in a]), _from_list(F, [F(c) for c in b]))
        g = _fq_gcd(a, b)
        if len(g) > 1:
            a, b = _fq_divmod(a, g)[0], _fq_divmod(b, g)[0]
        lead = b[-1].inverse()
        return RatFunc(_from_list(F, [c * lead for c in a]), _from_list(F, [c * lead for c in b]))

    def __repr__(self):
        return "RatFunc(%s)" % self

    def __str__(self):
        if self.den == 1:
            return format_sparse(self.num)
        return "(%s)/(%s)" % (format_sparse(self.num), format_sparse(self.den))


def _to_list(f):
    F = f.field
    out = [0] * (f.degree() + 1) if F.k == 1 else [F.zero()] * (f.degree() + 1)
    for e, c in f.terms.items():
        out[e] = c.coeffs[0] if F.k == 1 else c
    return out


def _from_list(F, coeffs):
    return SparsePoly(F, {i: c for i, c in enumerate(coeffs) if c})


def _fq_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _fq_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    zero = inv * 0
    q = [zero] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] = a[i - db + j] - c * b[j]
    return _fq_trim(q), _fq_trim(a[:db])


def _fq_gcd(a, b):
    a, b = _fq_trim(list(a)), _fq_trim(list(b))
    while b:
        a, b = b, _fq_divmod(a, b)[1]
    return a


EqVerdict = namedtuple("EqVerdict", "equal probabilistic error_bound")


def ratfunc_eq(a, b, threshold=DENSE_LIMIT, s=8, seed=0):
    """Decide a == b as rational functions.

    Exact when the cross products have at most ``threshold`` term
    multiplications; otherwise ``s`` random specializations in a large
    extension field, with ``error_bound`` the false-accept probability.
    """
    work = len(a.num) * len(b.den) + len(b.num) * len(a.den)
    if work <= threshold:
        return EqVerdict(a.num * b.den == b.num * a.den, False, 0.0)
    field = a.field
    target = specialization_field(field, 2 ** 64)
    degree = max(a.num.degree() + b.den.degree(), b.num.degree() + a.den.degree())
    poles = a.den.degree() + b.den.degree()
    rng = random.Random(seed)
    bound = 1.0
    for _ in range(s):
        spec = Specialization.random(target, field, rng, avoid=[a.den, b.den])
        if spec(a) != spec(b):
            return EqVerdict(False, False, 0.0)
        bound *= min(1.0, degree / max(1, target.order - poles))
    return EqVerdict(True, True, bound)


def specialization_field(coeff_field, min_size):
    """Smallest GF(p, K) with coeff degree dividing K and p^K >= min_size."""
    p, j = coeff_field.p, coeff_field.k
    K = j
    while p ** K < min_size:
        K += j
    return GF(p, K)


class Specialization:
    """The ring homomorphism t -> theta from F_q[t] into a finite field.

    ``coeff_field`` (the field of polynomial coefficients, e.g. F_25 holding
    alpha) is embedded by sending its generator u to a fixed root of its
    modulus in the target field.
    """

    def __init__(self, target, theta, coeff_field=None):
        self.target = target
        self.theta = target(theta) if not isinstance(theta, FqElem) else theta
        self.coeff_field = coeff_field or GF(target.p)
        self._u_image = embed_generator(self.coeff_field, target)
        self._cache = {}

    @classmethod
    def random(cls, target, coeff_field, rng, avoid=()):
        for _ in range(1000):
            theta = target.random(rng)
            spec = cls(target, theta, coeff_field)
            if all(spec.poly(d) for d in avoid):
                return spec
        raise BadSpecialization("could not avoid poles")

    def embed(self, c):
        if c.field is self.target:
            return c
        hit = self._cache.get(c.coeffs)
        if hit is None:
            acc = self.target.zero()
            power = self.target.one()
            for a in c.coeffs:
                if a:
                    acc = acc + power * a
                power = power * self._u_image
            self._cache[c.coeffs] = hit = acc
        return hit

    def poly(self, f):
        return f.evaluate(self.theta, self.embed)

    def __call__(self, f):
        if isinstance(f, RatFunc):
            return f.evaluate(self.theta, self.embed)
        if isinstance(f, SparsePoly):
            return self.poly(f)
        if isinstance(f, FqElem):
            return self.embed(f)
        if isinstance(f, int):
            return self.target(f)
        raise TypeError("cannot specialize %r" % (f,))

    def __repr__(self):
        return "Specialization(t -> %r)" % (self.theta,)


def specialize(f, spec):
    return spec(f)


def embed_generator(small, big):
    """A root of small.modulus in big, chosen deterministically."""
    if small.p != big.p or big.k % small.k:
        raise ValueError("%r does not embed in %r" % (small, big))
    m = small.modulus
    if small.k == 1:
        return big(-m[0])
    if small.k == 2:
        # u^2 + b u + c = 0  ->  u = (-b + sqrt(b^2 - 4c)) / 2
        b, c = big(m[1]), big(m[0])
        disc = b * b - 4 * c
        return (-b + sqrt_in_fq(disc)) / 2
    raise ValueError("only coefficient fields of degree <= 2 are supported; got %r" % small)


# -- text format -----------------------------------------------------------

def poly_env(field, extra=None):
    env = {"t": RatFunc.t(field)}
    if field.k > 1:
        g = field.gen()
        env["u"] = RatFunc.const(field, g)
    if extra:
        env.update(extra)
    return env


def parse_ratfunc(text, field, names=None):
    """Parse ``3*t^15625 + 2`` (or a quotient) into a RatFunc over ``field``."""
    node = expr.parse(text)
    env = poly_env(field, names)
    return expr.evaluate(node, env, lambda n: RatFunc.const(field, n))


def parse_sparse(text, field, names=None):
    f = parse_ratfunc(text, field, names)
    if f.den.degree() != 0:
        raise ValueError("%r is not a polynomial" % text)
    return f.num * f.den.terms[0].inverse()

