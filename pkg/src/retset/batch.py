"""Vectorised arithmetic in GF(p, k): many field elements per numpy array.

Orbit scans step thousands of independent lanes at once; each lane holds a
field element as a row of ``k`` coordinates.  Only ring operations are
provided, which is all the inversion-free scan formulas need.
"""

import numpy as np

from .fields import FqElem


class BatchField:
    def __init__(self, field):
        self.field = field
        self.p = field.p
        self.k = field.k
        # x^k = -sum m_i x^i
        self._tail = np.array([(-c) % field.p for c in field.modulus[:-1]], dtype=np.int64)

    def zeros(self, n):
        return FqVec(self, np.zeros((n, self.k), dtype=np.int64))

    def const(self, x, n=1):
        x = self.field(x)
        arr = np.tile(np.array(x.coeffs, dtype=np.int64), (n, 1))
        return FqVec(self, arr)

    def from_elems(self, elems):
        arr = np.array([self.field(e).coeffs for e in elems], dtype=np.int64).reshape(-1, self.k)
        return FqVec(self, arr)

    def _mul(self, a, b):
        k, p = self.k, self.p
        if k == 1:
            return (a * b) % p
        # u^i * u^j reduced mod the modulus, one row per (i, j); products
        # stay below 2^53, so a float matmul is exact and runs through BLAS
        n = max(a.shape[0], b.shape[0])
        outer = (a[:, :, None] * b[:, None, :]).reshape(n, k * k).astype(np.float64)
        return (outer @ self._W).astype(np.int64) % p

    def scalar_matrix(self, c):
        """k x k integer matrix M with coeffs(a * c) = coeffs(a) @ M mod p."""
        key = tuple(int(v) for v in c)
        cache = self.__dict__.setdefault("_smcache", {})
        M = cache.get(key)
        if M is None:
            c = np.asarray(key, dtype=np.int64).reshape(1, self.k)
            M = cache[key] = self._mul(np.eye(self.k, dtype=np.int64), np.repeat(c, self.k, axis=0))
        return M

    @property
    def _W(self):
        W = getattr(self, "_Wcache", None)
        if W is None:
            k, p = self.k, self.p
            F = self.field
            rows = []
            for i in range(k):
                for j in range(k):
                    rows.append((F.gen() ** (i + j)).coeffs if k > 1 else (1,))
            W = np.array(rows, dtype=np.float64)
            assert (p - 1) ** 2 * (p - 1) * k * k < 2 ** 53
            self._Wcache = W
        return W


class FqVec:
    """A column of field elements (shape (n, k)), with ring operators."""

    __slots__ = ("bf", "a")

    def __init__(self, bf, a):
        self.bf = bf
        self.a = a

    def __len__(self):
        return self.a.shape[0]

    def _other(self, o):
        if isinstance(o, FqVec):
            return o.a
        if isinstance(o, (int, FqElem)):
            return self.bf.const(o).a
        return None

    def __add__(self, o):
        b = self._other(o)
        if b is None:
            return NotImplemented
        return FqVec(self.bf, (self.a + b) % self.bf.p)

    __radd__ = __add__

    def __sub__(self, o):
        b = self._other(o)
        if b is None:
            return NotImplemented
        return FqVec(self.bf, (self.a - b) % self.bf.p)

    def __rsub__(self, o):
        return (-self) + o

    def __neg__(self):
        return FqVec(self.bf, (-self.a) % self.bf.p)

    def __mul__(self, o):
        if isinstance(o, int):
            return FqVec(self.bf, (self.a * (o % self.bf.p)) % self.bf.p)
        b = self._other(o)
        if b is None:
            return NotImplemented
        return FqVec(self.bf, self.bf._mul(self.a, b))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative powers are not supported in batch arithmetic")
        result = self.bf.const(1, len(self))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def pow_lanes(self, exps):
        """Per-lane exponents (non-negative int array)."""
        exps = np.asarray(exps, dtype=object)
        result = self.bf.const(1, len(self))
        base = self
        exps = exps.copy()
        while any(exps):
            bits = np.array([int(e) & 1 for e in exps], dtype=bool)
            prod = result * base
            result = FqVec(self.bf, np.where(bits[:, None], prod.a, result.a))
            base = base * base
            exps = np.array([int(e) >> 1 for e in exps], dtype=object)
        return result

    def is_zero(self):
        return ~self.a.any(axis=1)

    def where(self, mask, other):
        """Lanes from self where mask holds, else from other."""
        b = self._other(other)
        b = np.broadcast_to(b, self.a.shape)
        return FqVec(self.bf, np.where(mask[:, None], self.a, b))

    def take(self, idx):
        return FqVec(self.bf, self.a[idx])

    def elems(self):
        F = self.bf.field
        return [FqElem(F, tuple(int(c) for c in row)) for row in self.a]

    def __repr__(self):
        return "FqVec(%d x %r)" % (len(self), self.bf.field)


def concat(vecs):
    return FqVec(vecs[0].bf, np.concatenate([v.a for v in vecs]))


class DensePoly:
    """Polynomial in t over GF(p, k) as an (n, k) coefficient array, lowest first."""

    __slots__ = ("bf", "c")

    def __init__(self, bf, c):
        self.bf = bf
        if len(c) and c[-1].any():
            self.c = c
        else:
            nz = np.nonzero(c.any(axis=1))[0]
            self.c = c[: nz[-1] + 1] if len(nz) else c[:0]

    @classmethod
    def const(cls, bf, x):
        return cls(bf, bf.const(x).a.copy())

    @classmethod
    def t(cls, bf):
        c = np.zeros((2, bf.k), dtype=np.int64)
        c[1, 0] = 1
        return cls(bf, c)

    @classmethod
    def from_sparse(cls, bf, f):
        d = f.degree()
        c = np.zeros((max(d + 1, 0), bf.k), dtype=np.int64)
        for e, v in f.terms.items():
            c[e] = bf.field(v).coeffs
        return cls(bf, c)

    def degree(self):
        return len(self.c) - 1

    def _other(self, o):
        if isinstance(o, DensePoly):
            return o
        if isinstance(o, (int, FqElem)):
            return DensePoly.const(self.bf, o)
        return None

    def __add__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = a.copy()
        out[: len(b)] += b
        return DensePoly(self.bf, out % self.bf.p)

    __radd__ = __add__

    def __neg__(self):
        return DensePoly(self.bf, (-self.c) % self.bf.p)

    def __sub__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        o = self._other(o)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if not len(a) or not len(b):
            return DensePoly(self.bf, a[:0])
        if len(a) < len(b):
            a, b = b, a
        out = np.zeros((len(a) + len(b) - 1, self.bf.k), dtype=np.int64)
        if len(b) <= 16:
            for j in range(len(b)):
                if b[j].any():
                    out[j:j + len(a)] += a @ self.bf.scalar_matrix(b[j])
            return DensePoly(self.bf, out % self.bf.p)
        # long x long: convolve coordinate pairs, then fold u^i u^j back into the field
        k, p = self.bf.k, self.bf.p
        for i in range(k):
            for j in range(k):
                conv = np.convolve(a[:, i], b[:, j]) % p
                if k == 1:
                    out[:, 0] += conv
                else:
                    out += np.outer(conv, self._power_row(i + j)) % p
                out %= p
        return DensePoly(self.bf, out)

    def _power_row(self, e):
        x = self.bf.field.gen() ** e
        return np.array(x.coeffs, dtype=np.int64)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = DensePoly.const(self.bf, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(len(self.c))

    def __repr__(self):
        return "DensePoly(deg %d over %r)" % (self.degree(), self.bf.field)
