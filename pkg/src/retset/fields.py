"""Prime fields and their finite extensions.

Elements of ``GF(p, k)`` are stored as coefficient tuples with respect to a
fixed monic irreducible modulus of degree ``k``.  The default modulus is the
first irreducible polynomial in the enumeration order used by
:func:`default_modulus`, so serialized elements are portable between runs.
"""

from functools import lru_cache
import random


class NoSquareRoot(ArithmeticError):
    """Raised when an element has no square root in the current field."""


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n):
    """Prime factorisation by trial division; returns {prime: exponent}."""
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_of_power(q):
    """Return (p, e) with q = p**e, or raise ValueError."""
    if q < 2:
        raise ValueError("%d is not a prime power" % q)
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError("%d is not a prime power" % q)
    (p, e), = fac.items()
    return p, e


# -- dense polynomials over F_p as lists, lowest degree first ---------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim([x % p for x in a[:dm]] if len(a) > dm else [x % p for x in a])


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible(m, p):
    """Rabin's test for a monic polynomial m (list, low degree first)."""
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p ** k, m, p) != _pmod(x, m, p):
        return False
    for r in factorize(k):
        h = _ppowmod(x, p ** (k // r), m, p)
        h = h + [0] * (2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_pgcd(m, _trim(h), p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p, k):
    """First monic irreducible of degree k, enumerating c0 + c1*p + ... upward."""
    if k == 1:
        return (0, 1)
    for code in range(p ** k):
        coeffs = []
        c = code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        m = coeffs + [1]
        if m[0] != 0 and is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")


def format_poly(coeffs, var="u"):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else "%s^%d" % (var, i)
            terms.append(mono if c == 1 else "%d*%s" % (c, mono))
    return " + ".join(terms) if terms else "0"


class GF:
    """The finite field F_{p^k} with a fixed modulus.

    >>> F = GF(5, 2)
    >>> F.modulus
    (2, 0, 1)
    """

    _cache = {}

    def __new__(cls, p, k=1, modulus=None):
        if modulus is None:
            modulus = default_modulus(p, k)
        key = (p, k, tuple(modulus))
        obj = cls._cache.get(key)
        if obj is None:
            obj = super().__new__(cls)
            obj._init(p, k, tuple(modulus))
            cls._cache[key] = obj
        return obj

    def _init(self, p, k, modulus):
        if not is_prime(p):
            raise ValueError("p = %d is not prime" % p)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree %d" % k)
        if not is_irreducible(list(modulus), p):
            raise ValueError("modulus %s is reducible" % format_poly(modulus))
        self.p = p
        self.k = k
        self.modulus = modulus
        self.order = p ** k
        self._nonresidue = None
        self._generator = None

    def __reduce__(self):
        return (GF, (self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return "GF(%d)" % self.p
        return "GF(%d^%d, %s)" % (self.p, self.k, format_poly(self.modulus))

    # -- construction ------------------------------------------------------
    def __call__(self, value):
        if isinstance(value, FqElem):
            if value.field is self:
                return value
            if value.field.p == self.p and value.field.k == 1:
                return FqElem(self, (value.coeffs[0],) + (0,) * (self.k - 1))
            raise ValueError("cannot coerce %r into %r" % (value, self))
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.k:
            coeffs = tuple(_pmod(list(coeffs), list(self.modulus), self.p))
        return FqElem(self, coeffs + (0,) * (self.k - len(coeffs)))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        """The class of u, a root of the modulus."""
        if self.k == 1:
            return self(-self.modulus[0])
        return self((0, 1))

    def from_int(self, code):
        """Element whose base-p digits are its coordinates."""
        coeffs = []
        for _ in range(self.k):
            coeffs.append(code % self.p)
            code //= self.p
        return FqElem(self, tuple(coeffs))

    def elements(self):
        for code in range(self.order):
            yield self.from_int(code)

    def random(self, rng):
        return self.from_int(rng.randrange(self.order))

    def random_nonzero(self, rng):
        return self.from_int(rng.randrange(1, self.order))

    # -- structure ---------------------------------------------------------
    def nonresidue(self):
        if self._nonresidue is None:
            half = (self.order - 1) // 2
            for code in range(1, self.order):
                z = self.from_int(code)
                if z ** half == -self.one():
                    self._nonresidue = z
                    break
        return self._nonresidue

    def primitive_element(self):
        """Smallest generator of the multiplicative group (by integer code)."""
        if self._generator is None:
            n = self.order - 1
            primes = list(factorize(n))
            for code in range(1, self.order):
                g = self.from_int(code)
                if all(g ** (n // r) != self.one() for r in primes):
                    self._generator = g
                    break
        return self._generator

    def frobenius_power(self, x, e):
        """x^(p^e), using that the multiplicative order divides p^k - 1."""
        if not x:
            return x
        exp = pow(self.p, e % self.k, self.order - 1) if self.k > 1 else 1
        return x ** exp

    def sqrt(self, x):
        return sqrt_in_fq(x)


class FqElem:
    """An element of GF(p, k); immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field is not self.field:
                if other.field.p == self.field.p and other.field.k == 1:
                    return self.field(other)
                if self.field.k == 1 and other.field.p == self.field.p:
                    raise TypeError("mixed fields")
                raise TypeError("field mismatch: %r vs %r" % (self.field, other.field))
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        if F.k == 1:
            return FqElem(F, (self.coeffs[0] * other.coeffs[0] % F.p,))
        prod = _pmulmod(_trim(list(self.coeffs)), _trim(list(other.coeffs)), list(F.modulus), F.p)
        return FqElem(F, tuple(prod) + (0,) * (F.k - len(prod)))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; extended Euclid against the modulus."""
        F = self.field
        if not self:
            raise ZeroDivisionError("inverse of zero in %r" % F)
        if F.k == 1:
            return FqElem(F, (pow(self.coeffs[0], -1, F.p),))
        p = F.p
        r0, r1 = list(F.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        c = pow(r1[0], -1, p)
        res = [x * c % p for x in s1]
        res = _pmod(res, list(F.modulus), p)
        return FqElem(F, tuple(res) + (0,) * (F.k - len(res)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        F = self.field
        if F.k == 1:
            return FqElem(F, (pow(self.coeffs[0], e, F.p),))
        if self and e >= F.order:
            e = e % (F.order - 1) or (F.order - 1)
        res = _ppowmod(_trim(list(self.coeffs)), e, list(F.modulus), F.p) if e else [1]
        return FqElem(F, tuple(res) + (0,) * (F.k - len(res)))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FqElem):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def to_int(self):
        p = self.field.p
        code = 0
        for c in reversed(self.coeffs):
            code = code * p + c
        return code

    def frob(self, e=1):
        return self.field.frobenius_power(self, e)

    def is_square(self):
        if not self:
            return True
        return self ** ((self.field.order - 1) // 2) == self.field.one()

    def __repr__(self):
        F = self.field
        if F.k == 1:
            return "%d mod %d" % (self.coeffs[0], F.p)
        return "[%s] mod %s" % (",".join(str(c) for c in self.coeffs), format_poly(F.modulus))

    def __str__(self):
        F = self.field
        if F.k == 1:
            return str(self.coeffs[0])
        return format_poly(self.coeffs)


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim(a[:db])


def parse_fq(text, field=None):
    """Inverse of ``repr`` for field elements: ``[a0,...] mod <poly>`` or ``a mod p``."""
    text = text.strip()
    if text.startswith("["):
        body, _, mod = text.partition("] mod ")
        coeffs = [int(c) for c in body[1:].split(",")]
        if field is None:
            raise ValueError("field required to parse %r" % text)
        return field(coeffs)
    val, _, p = text.partition(" mod ")
    if field is None:
        field = GF(int(p))
    return field(int(val))


def sqrt_in_fq(x):
    """Square root of x in its field, or raise NoSquareRoot.

    Tonelli-Shanks; of the two roots the one with the smaller integer code is
    returned so that repeated calls agree.
    """
    F = x.field
    if not x:
        return x
    if F.p == 2:
        return x ** (F.order // 2)
    q = F.order
    if x ** ((q - 1) // 2) != F.one():
        raise NoSquareRoot("%r is not a square in %r" % (x, F))
    s, t = 0, q - 1
    while t % 2 == 0:
        s += 1
        t //= 2
    z = F.nonresidue()
    m, c, r, tt = s, z ** t, x ** ((t + 1) // 2), x ** t
    one = F.one()
    while tt != one:
        i, t2 = 0, tt
        while t2 != one:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (m - i - 1))
        m, c = i, b * b
        r, tt = r * b, tt * c
    other = -r
    return r if r.to_int() <= other.to_int() else other


def field_inv(x):
    return x.inverse()


def make_rng(seed):
    return random.Random(seed)
