"""Widely p-normal sets: S_{q,d,r} terms, progressions, windows, classification.

A term S_{q,d,r}(c0; c_ij) is the set of values

    c0 + sum_i f_i(n_i),   f_i(m) = sum_j c_ij q^(2^j m),   n_i >= 0.

Membership is three-valued.  When every nonzero row has a positive leading
coefficient (or every one a negative one), each f_i is bounded on one side
and eventually dominated by its leading term, which confines witnesses to a
computable box; "no" is then certified.  Mixed signs allow cancellation and
only a bounded search is possible.

Text grammar (one expression per line)::

    [Z:|N:] term + term + ... [add{n,...}] [del{n,...}]
    term := AP(a,d) | PS(q;c0;[c10,...,c1r|...|cd0,...,cdr]) | A(q;q1,q2) | B(q;c0,c1)

Coefficients are integers or fractions a/b.
"""

import itertools
import math
import re
from fractions import Fraction

YES, NO, UNKNOWN = "yes", "no", "unknown"
P_NORMAL, WIDELY_ONLY, INVALID = "p-normal", "widely-p-normal-only", "invalid"

# box used to test that a term takes integer values
INTEGRALITY_BOX = 3
DEFAULT_SEARCH = 12


class InvalidTerm(ValueError):
    pass


class DomainError(ValueError):
    pass


class UndecidedElement(RuntimeError):
    def __init__(self, elements):
        self.elements = sorted(elements)
        shown = ", ".join(map(str, self.elements[:10]))
        more = " ..." if len(self.elements) > 10 else ""
        super().__init__("undecided element(s): %s%s" % (shown, more))


class Membership:
    def __init__(self, verdict, witness=None, searched=None):
        self.verdict = verdict
        self.witness = witness
        self.searched = searched

    def __bool__(self):
        return self.verdict == YES

    def __repr__(self):
        if self.verdict == YES:
            return "yes(%s)" % (self.witness,)
        if self.verdict == NO:
            return "no(certified)"
        return "unknown(searched n_i <= %s)" % self.searched


def prime_base(q):
    """(p, e) with q = p^e, or InvalidTerm."""
    if q < 2:
        raise InvalidTerm("q must be at least 2")
    p = next(f for f in itertools.count(2) if q % f == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise InvalidTerm("q = %d is not a prime power" % q)
    return p, e


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def _ilog_ceil(x, q):
    """Smallest m >= 0 with q^m >= x (x > 0 rational)."""
    m, v = 0, 1
    while v < x:
        v *= q
        m += 1
    return m


class AP:
    """Two-sided progression {a + k*delta : k in Z}; delta = 0 is {a}."""

    def __init__(self, a, delta):
        self.a = int(a)
        self.delta = abs(int(delta))

    def member(self, n, bound=None):
        if self.delta == 0:
            ok = n == self.a
        else:
            ok = (n - self.a) % self.delta == 0
        if ok:
            w = (n - self.a) // self.delta if self.delta else 0
            return Membership(YES, (w,))
        return Membership(NO)

    def elements(self, lo, hi, bound=None):
        if self.delta == 0:
            return {self.a} if lo <= self.a <= hi else set()
        start = lo + (self.a - lo) % self.delta
        return set(range(start, hi + 1, self.delta))

    def affine(self, a, b):
        return AP(a * self.a + b, a * self.delta)

    def validate(self, p=None):
        return self

    def __eq__(self, o):
        if not isinstance(o, AP) or o.delta != self.delta:
            return False
        return (o.a - self.a) % self.delta == 0 if self.delta else o.a == self.a

    def __str__(self):
        return "AP(%d,%d)" % (self.a, self.delta)

    __repr__ = __str__


class PSetTerm:
    """S_{q,d,r}(c0; c_ij) with rational coefficients; c is a d x (r+1) matrix."""

    def __init__(self, q, c0, c, p=None, check=True):
        self.q = int(q)
        self.c0 = _frac(c0)
        self.c = tuple(tuple(_frac(x) for x in row) for row in c)
        self.p = p
        if check:
            self.validate(p)

    @property
    def d(self):
        return len(self.c)

    @property
    def r(self):
        return len(self.c[0]) - 1

    def validate(self, p=None):
        qp, _ = prime_base(self.q)
        if p is not None and qp != p:
            raise InvalidTerm("q = %d is not a power of p = %d" % (self.q, p))
        self.p = qp
        if not self.c or not self.c[0]:
            raise InvalidTerm("coefficient matrix must be non-empty")
        if len({len(row) for row in self.c}) != 1:
            raise InvalidTerm("rows of the coefficient matrix differ in length")
        q, r = self.q, self.r
        for i, row in enumerate(self.c, 1):
            for j, cij in enumerate(row):
                bound = q ** (2 ** j) - 1
                for s in range(r + 1):
                    if s != j:
                        bound *= q ** (2 ** j) - q ** (2 ** s)
                if (bound * cij).denominator != 1:
                    raise InvalidTerm("c_%d%d = %s violates the denominator bound" % (i, j, cij))
        for ns in itertools.product(range(INTEGRALITY_BOX + 1), repeat=self.d):
            if self.value(ns).denominator != 1:
                raise InvalidTerm("term takes the non-integer value %s at %s" % (self.value(ns), ns))
        return self

    def row_value(self, i, m):
        q = self.q
        return sum(cij * q ** (2 ** j * m) for j, cij in enumerate(self.c[i]) if cij)

    def value(self, ns):
        return self.c0 + sum(self.row_value(i, m) for i, m in enumerate(ns))

    def _lead(self, i):
        for j in range(self.r, -1, -1):
            if self.c[i][j]:
                return j, self.c[i][j]
        return None, Fraction(0)

    def signs(self):
        return {(self._lead(i)[1] > 0) - (self._lead(i)[1] < 0) for i in range(self.d)} - {0}

    def dominant(self):
        """+1 / -1 if all nonzero rows lead with that sign, else 0 (mixed)."""
        s = self.signs()
        if len(s) > 1:
            return 0
        return s.pop() if s else 1

    def _row_bounds(self, sign):
        """Per row: (m0, lower) with sign*f_i(m) >= lower for all m and
        sign*f_i(m) >= lead*q^(2^r m)/2 once m >= m0."""
        out = []
        for i in range(self.d):
            jr, lead = self._lead(i)
            if jr is None:
                out.append((0, Fraction(0), None, Fraction(0)))
                continue
            lead = abs(lead)
            rest = [abs(self.c[i][j]) for j in range(jr)]
            m0 = 0
            while lead * self.q ** (2 ** jr * m0) < 2 * sum(
                    cj * self.q ** (2 ** j * m0) for j, cj in enumerate(rest)):
                m0 += 1
            lower = min([sign * self.row_value(i, m) for m in range(m0)] + [Fraction(0)])
            out.append((m0, lower, jr, lead))
        return out

    def box(self, hi):
        """Per-row exponent limits covering every witness of a value <= hi
        (after orienting by the dominant sign); None when signs are mixed."""
        sign = self.dominant()
        if sign == 0:
            return None
        rows = self._row_bounds(sign)
        total_lower = sum(lo for _, lo, _, _ in rows)
        limits = []
        for m0, lower, jr, lead in rows:
            if jr is None:
                limits.append(0)
                continue
            room = hi - sign * self.c0 - (total_lower - lower)
            if room <= 0:
                limits.append(max(m0 - 1, 0))
                continue
            # lead*q^(2^jr m)/2 <= room  =>  q^(2^jr m) <= 2 room / lead
            k = _ilog_ceil(2 * room / lead + 1, self.q)
            limits.append(max(m0 - 1, k // (2 ** jr) + 1))
        return sign, limits

    def member(self, n, bound=DEFAULT_SEARCH):
        n = Fraction(n)
        sign = self.dominant()
        if sign:
            _, limits = self.box(sign * n)
            for ns in itertools.product(*[range(m + 1) for m in limits]):
                if self.value(ns) == n:
                    return Membership(YES, ns)
            return Membership(NO)
        for ns in itertools.product(range(bound + 1), repeat=self.d):
            if self.value(ns) == n:
                return Membership(YES, ns)
        return Membership(UNKNOWN, searched=bound)

    def elements(self, lo, hi, bound=DEFAULT_SEARCH):
        """Certified elements in [lo, hi]; UndecidedElement when signs are mixed."""
        bx = self.box(hi if self.dominant() >= 0 else -lo)
        if bx is None:
            raise UndecidedElement(sorted(set(range(lo, hi + 1)) - self.searched_values(lo, hi, bound)))
        _, limits = bx
        rows = [[self.row_value(i, m) for m in range(lim + 1)] for i, lim in enumerate(limits)]
        out = set()
        for combo in itertools.product(*rows):
            v = self.c0 + sum(combo)
            if lo <= v <= hi:
                out.add(int(v))
        return out

    def searched_values(self, lo, hi, bound):
        """Elements in [lo, hi] reached with every n_i <= bound."""
        rows = [[self.row_value(i, m) for m in range(bound + 1)] for i in range(self.d)]
        found = set()
        for combo in itertools.product(*rows):
            v = self.c0 + sum(combo)
            if lo <= v <= hi:
                found.add(int(v))
        return found

    def affine(self, a, b):
        return PSetTerm(self.q, a * self.c0 + b, [[a * x for x in row] for row in self.c], self.p)

    def trimmed(self):
        """Drop trailing all-zero columns (they do not change the set)."""
        r = self.r
        while r > 0 and all(row[r] == 0 for row in self.c):
            r -= 1
        return PSetTerm(self.q, self.c0, [row[: r + 1] for row in self.c], self.p, check=False)

    def __eq__(self, o):
        return isinstance(o, PSetTerm) and (o.q, o.c0, o.c) == (self.q, self.c0, self.c)

    def __str__(self):
        rows = "|".join(",".join(map(str, row)) for row in self.c)
        return "PS(%d;%s;[%s])" % (self.q, self.c0, rows)

    __repr__ = __str__


class ABTerm:
    """A(q; q1, q2) = {q1 q^n1 + q2 q^n2} and B(q; c0, c1) = {c0 + c1 q^n}, q a power of p0 = p^2."""

    def __init__(self, kind, q, a, b, p=None):
        if kind not in ("A", "B"):
            raise InvalidTerm("AB term kind must be A or B")
        self.kind, self.q, self.a, self.b = kind, int(q), int(a), int(b)
        self.p = p
        self.validate(p)

    def validate(self, p=None):
        qp, e = prime_base(self.q)
        if p is not None and qp != p:
            raise InvalidTerm("q = %d is not a power of p = %d" % (self.q, p))
        if e % 2:
            raise InvalidTerm("q = %d is not a positive power of p0 = %d" % (self.q, qp * qp))
        p0 = qp * qp
        if self.kind == "A":
            for x in (self.a, self.b):
                if x == 1:
                    continue
                if x < 1 or prime_base(x)[0] != qp or prime_base(x)[1] % 2:
                    raise InvalidTerm("q1, q2 must be powers of p0 = %d" % p0)
        else:
            if self.a < 0 or self.b < 1:
                raise InvalidTerm("B(q; c0, c1) needs c0 >= 0 and c1 >= 1")
        self.p = qp
        return self

    def pset(self):
        if self.kind == "A":
            return PSetTerm(self.q, 0, [[self.a], [self.b]], self.p)
        return PSetTerm(self.q, self.a, [[self.b]], self.p)

    def member(self, n, bound=DEFAULT_SEARCH):
        return self.pset().member(n, bound)

    def elements(self, lo, hi, bound=DEFAULT_SEARCH):
        return self.pset().elements(lo, hi, bound)

    def affine(self, a, b):
        if (a, b) == (1, 0):
            return self
        return self.pset().affine(a, b)

    def __eq__(self, o):
        return isinstance(o, ABTerm) and (o.kind, o.q, o.a, o.b) == (self.kind, self.q, self.a, self.b)

    def __str__(self):
        return "%s(%d;%d,%d)" % (self.kind, self.q, self.a, self.b)

    __repr__ = __str__


class SetExpr:
    """Finite union of terms, a domain tag ("Z" or "N") and finite exceptions.

    Elements: (union of terms, intersected with N for the N domain) minus
    `removed`, plus `added`.
    """

    def __init__(self, terms=(), domain="Z", added=(), removed=()):
        if domain not in ("Z", "N"):
            raise ValueError("domain must be 'Z' or 'N'")
        self.terms = list(terms)
        self.domain = domain
        self.added = frozenset(int(x) for x in added)
        self.removed = frozenset(int(x) for x in removed)
        if self.added & self.removed:
            raise ValueError("exception sets overlap: %s" % sorted(self.added & self.removed))
        if domain == "N" and any(x < 0 for x in self.added):
            raise DomainError("added elements of an N-domain set must be non-negative")

    def member(self, n, bound=DEFAULT_SEARCH):
        if n in self.removed:
            return Membership(NO)
        if n in self.added:
            return Membership(YES, ("added",))
        if self.domain == "N" and n < 0:
            return Membership(NO)
        unknown = False
        for term in self.terms:
            m = term.member(n, bound)
            if m.verdict == YES:
                return m
            unknown |= m.verdict == UNKNOWN
        return Membership(UNKNOWN, searched=bound) if unknown else Membership(NO)

    def __contains__(self, n):
        m = self.member(n)
        if m.verdict == UNKNOWN:
            raise UndecidedElement([n])
        return m.verdict == YES

    def elements(self, lo, hi, bound=DEFAULT_SEARCH):
        if self.domain == "N":
            lo = max(lo, 0)
        out, mixed = set(), []
        for term in self.terms:
            try:
                out |= term.elements(lo, hi, bound)
            except UndecidedElement:
                mixed.append(term)
        if mixed:
            for term in mixed:
                out |= term.searched_values(lo, hi, bound)
            undecided = set(range(lo, hi + 1)) - out - self.removed - self.added
            if undecided:
                raise UndecidedElement(undecided)
        out -= self.removed
        out |= {x for x in self.added if lo <= x <= hi}
        return out

    def validate(self, p=None):
        for term in self.terms:
            term.validate(p)
        return self

    def __str__(self):
        parts = " + ".join(map(str, self.terms))
        if self.domain == "N":
            parts = "N: " + parts
        if self.added:
            parts += " add{%s}" % ",".join(map(str, sorted(self.added)))
        if self.removed:
            parts += " del{%s}" % ",".join(map(str, sorted(self.removed)))
        return parts.strip()

    __repr__ = __str__


def _as_expr(E):
    if isinstance(E, SetExpr):
        return E
    return SetExpr([E])


def window(E, N, bound=DEFAULT_SEARCH):
    """Sorted elements of E in [0, N]; raises UndecidedElement if any n is undecided."""
    if N < 0:
        return []
    return sorted(_as_expr(E).elements(0, N, bound))


def union(E1, E2):
    E1, E2 = _as_expr(E1), _as_expr(E2)
    if E1.domain != E2.domain:
        raise DomainError("union of a Z-domain and an N-domain expression")
    removed = (E1.removed | E2.removed) - E1.added - E2.added
    # an element removed from one side but still produced by the other stays in
    keep = set()
    for x in removed:
        if (x not in E1.removed and E1.member(x).verdict == YES) or (
                x not in E2.removed and E2.member(x).verdict == YES):
            keep.add(x)
        elif (x not in E1.removed and E1.member(x).verdict == UNKNOWN) or (
                x not in E2.removed and E2.member(x).verdict == UNKNOWN):
            raise UndecidedElement([x])
    return SetExpr(E1.terms + E2.terms, E1.domain, E1.added | E2.added | keep, removed - keep)


def intersect_nat(E):
    E = _as_expr(E)
    return SetExpr(E.terms, "N", [x for x in E.added if x >= 0], [x for x in E.removed if x >= 0])


def affine(a, b, E):
    """a*E + b, rewriting each term."""
    E = _as_expr(E)
    if E.domain == "N" and (a < 0 or b < 0):
        raise DomainError("affine maps on N-domain sets need a, b >= 0")
    if a == 0:
        return SetExpr([AP(b, 0)], E.domain)
    terms = [t.affine(a, b) for t in E.terms]
    added = {a * x + b for x in E.added}
    removed = {a * x + b for x in E.removed}
    if E.domain == "N" and b > 0:
        # term elements t < 0 land in [0, b) after the map but are not in a*E + b
        lo = -(b // a)
        for t in range(lo, 0):
            v = a * t + b
            if v in added:
                continue
            hit = [term.member(t).verdict for term in E.terms]
            if UNKNOWN in hit and YES not in hit:
                raise UndecidedElement([t])
            if YES in hit:
                removed.add(v)
    return SetExpr(terms, E.domain, added, removed - added)


def classify(E):
    """P_NORMAL, WIDELY_ONLY or INVALID (syntactic, per term)."""
    E = _as_expr(E)
    try:
        E.validate()
    except InvalidTerm:
        return INVALID
    for term in E.terms:
        if isinstance(term, (AP, ABTerm)):
            continue
        t = term.trimmed()
        if t.r != 0:
            return WIDELY_ONLY
        q1 = t.q - 1
        c0 = t.c0 * q1
        cs = [row[0] * q1 for row in t.c]
        if any(x.denominator != 1 for x in [c0] + cs):
            return WIDELY_ONLY
        if (c0 + sum(cs)) % q1:
            return WIDELY_ONLY
    return P_NORMAL


class DiffReport:
    def __init__(self, differences, W0, W1, threshold):
        self.differences = differences
        self.W0, self.W1, self.threshold = W0, W1, threshold

    @property
    def consistent(self):
        return all(n < self.threshold for n in self.differences)

    def __str__(self):
        status = ("consistent with equality up to a finite set" if self.consistent
                  else "not consistent with equality up to a finite set")
        return "%d difference(s) on [%d, %d]: %s" % (len(self.differences), self.W0, self.W1, status)


def equal_up_to_finite(E1, E2, W0, W1, threshold=None):
    """Symmetric difference on [W0, W1]; consistent when all of it lies below threshold
    (default: the midpoint of the window).  This is evidence, not proof."""
    if W0 >= W1:
        raise ValueError("need W0 < W1")
    if threshold is None:
        threshold = (W0 + W1) // 2
    a = _as_expr(E1).elements(W0, W1)
    b = _as_expr(E2).elements(W0, W1)
    return DiffReport(sorted(a ^ b), W0, W1, threshold)


# -- text grammar ------------------------------------------------------------

_TERM = re.compile(r"\s*(AP|PS|A|B)\s*\((.*?)\)\s*$", re.S)


def _split_top(text, sep):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _num(s):
    s = s.strip()
    try:
        return Fraction(s)
    except ValueError:
        raise InvalidTerm("bad number %r" % s) from None


def _int(s):
    x = _num(s)
    if x.denominator != 1:
        raise InvalidTerm("expected an integer, got %s" % s.strip())
    return int(x)


def parse_term(text, p=None):
    m = _TERM.match(text)
    if not m:
        raise InvalidTerm("cannot parse term %r" % text.strip())
    kind, body = m.group(1), m.group(2)
    if kind == "AP":
        a, d = body.split(",")
        return AP(_int(a), _int(d))
    if kind == "PS":
        fields = body.split(";")
        if len(fields) != 3:
            raise InvalidTerm("PS needs q;c0;[rows]")
        q, c0, rows = fields
        rows = rows.strip()
        if not (rows.startswith("[") and rows.endswith("]")):
            raise InvalidTerm("PS coefficient rows must be in brackets")
        mat = [[_num(x) for x in row.split(",")] for row in rows[1:-1].split("|")]
        return PSetTerm(_int(q), _num(c0), mat, p)
    q, rest = body.split(";")
    a, b = rest.split(",")
    return ABTerm(kind, _int(q), _int(a), _int(b), p)


def parse_setexpr(text, p=None):
    text = text.strip()
    domain = "Z"
    m = re.match(r"([ZN])\s*:", text)
    if m:
        domain = m.group(1)
        text = text[m.end():]
    added, removed = set(), set()
    for key, target in (("add", added), ("del", removed)):
        mm = re.search(key + r"\s*\{([^}]*)\}", text)
        if mm:
            body = mm.group(1).strip()
            target.update(_int(x) for x in body.split(",") if x.strip()) if body else None
            text = text[:mm.start()] + text[mm.end():]
    text = text.strip()
    terms = [parse_term(part, p) for part in _split_top(text, "+")] if text else []
    return SetExpr(terms, domain, added, removed)


# -- Lemma 5.6 ---------------------------------------------------------------

FORMS = {1: "singleton", 2: "(n+n1, n2)", 3: "(n1, n+n2)", 4: "(n+n1, n+n2)", 5: "(n1+n10, n2+n20)"}


class Component:
    """One of the five forms; `offset` is (n1, n2) (or (n10, n20) for form 5)."""

    def __init__(self, form, offset):
        self.form = form
        self.offset = tuple(offset)

    def contains(self, pt):
        a, b = self.offset
        x, y = pt
        if self.form == 1:
            return (x, y) == (a, b)
        if self.form == 2:
            return y == b and x >= a
        if self.form == 3:
            return x == a and y >= b
        if self.form == 4:
            return x - a == y - b and x >= a
        return x >= a and y >= b

    def points(self, N):
        return {(x, y) for x in range(N + 1) for y in range(N + 1) if self.contains((x, y))}

    def to_dict(self):
        return {"form": self.form, "shape": FORMS[self.form], "offset": list(self.offset)}

    def __eq__(self, o):
        return isinstance(o, Component) and (o.form, o.offset) == (self.form, self.offset)

    def __repr__(self):
        return "Component(form=%d, offset=%s)" % (self.form, self.offset)


class DecompositionError(RuntimeError):
    pass


class Decomposition:
    def __init__(self, components, N, certified_to):
        self.components = components
        self.N = N
        self.certified_to = certified_to
        self.status = "window-certified"

    def to_dict(self):
        return {"status": self.status, "fit_window": self.N, "certified_to": self.certified_to,
                "components": [c.to_dict() for c in self.components]}


def representable(v, coeffs, q, limit):
    """Is v = sum_i coeffs[i] * q^m_i for some m_i in [0, limit]?"""
    vals = [_frac(v)] + [_frac(c) for c in coeffs]
    den = 1
    for x in vals:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in vals]
    powers = [q ** m for m in range(limit + 1)]
    return _rep_int(ints[0], ints[1:], q, powers)


def _rep_int(v, coeffs, q, powers):
    if not coeffs:
        return v == 0
    c = coeffs[0]
    if len(coeffs) == 1:
        if c == 0:
            return v == 0
        if v % c:
            return False
        x = v // c
        if x < 1:
            return False
        m = 0
        while x % q == 0:
            x //= q
            m += 1
        return x == 1 and m < len(powers)
    tail = coeffs[1:]
    return any(_rep_int(v - c * qm, tail, q, powers) for qm in powers)


def default_slack(c1, c2, e0, e, q):
    """Growth allowance for the m_i search beyond max(n1, n2)."""
    total = abs(c1) + abs(c2) + abs(e0) + sum(abs(x) for x in e) + 1
    return int(math.ceil(math.log(float(total), q))) + 2


def _solutions(c1, c2, e0, e, q, N, slack):
    vals = [c1, c2, e0] + list(e)
    den = 1
    for x in vals:
        den = den * x.denominator // math.gcd(den, x.denominator)
    c1, c2, e0, *e = [int(x * den) for x in vals]
    powers = [q ** m for m in range(N + slack + 1)]
    out = set()
    for n1 in range(N + 1):
        for n2 in range(N + 1):
            v = c1 * powers[n1] + c2 * powers[n2] - e0
            if _rep_int(v, e, q, powers[: max(n1, n2) + slack + 1]):
                out.add((n1, n2))
    return out


def _fit(S, N):
    comps, covered = [], set()
    # form 5: quadrants, minimal corners first
    for a in range(N):
        for b in range(N):
            if (a, b) in covered:
                continue
            quad = {(x, y) for x in range(a, N + 1) for y in range(b, N + 1)}
            if quad <= S:
                comps.append(Component(5, (a, b)))
                covered |= quad
    for form, step in ((4, (1, 1)), (2, (1, 0)), (3, (0, 1))):
        for a, b in sorted(S - covered):
            if (a, b) in covered:
                continue
            # walk back to where the run enters S (it may start on covered points)
            while min(a - step[0], b - step[1]) >= 0 and (a - step[0], b - step[1]) in S:
                a, b = a - step[0], b - step[1]
            run, x, y = [], a, b
            while x <= N and y <= N and (x, y) in S:
                run.append((x, y))
                x, y = x + step[0], y + step[1]
            reaches_edge = x > N or y > N
            if reaches_edge and len(run) >= 2 and not set(run) <= covered:
                comps.append(Component(form, (a, b)))
                covered |= set(run)
    for pt in sorted(S - covered):
        comps.append(Component(1, pt))
    return comps


def two_exponential_decompose(c1, c2, e0, e, q, N=8, slack=None):
    """Solutions of c1 q^n1 + c2 q^n2 = e0 + sum e_i q^m_i as Lemma 5.6 components.

    Fitted on [0, N]^2, then re-checked on [0, 2N]^2; m_i are searched up to
    max(n1, n2) + slack (default: log_q of the coefficient mass, plus 2).
    """
    if q <= 1:
        raise ValueError("q must exceed 1")
    c1, c2, e0 = _frac(c1), _frac(c2), _frac(e0)
    e = [_frac(x) for x in e]
    if slack is None:
        slack = default_slack(c1, c2, e0, e, q)
    S = _solutions(c1, c2, e0, e, q, N, slack)
    comps = _fit(S, N)
    M = 2 * N
    S2 = _solutions(c1, c2, e0, e, q, M, slack)
    predicted = set().union(*[c.points(M) for c in comps]) if comps else set()
    if predicted != S2:
        extra = sorted(S2 ^ predicted)[:5]
        raise DecompositionError("no consistent decomposition on window: fit on [0,%d]^2 "
                                 "disagrees on [0,%d]^2 at %s" % (N, M, extra))
    return Decomposition(comps, N, M)
