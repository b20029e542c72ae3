"""Sparse Laurent polynomials and truncated series in ``q^-1``.

``LaurentInt`` is used both for ``Z[q, q^-1]`` and for ``A = Z[v, v^-1]``;
the variable name only matters when printing.
"""

import re
from itertools import product


class TruncationError(ArithmeticError):
    """A requested coefficient lies below the exactness floor of a series."""


class LaurentInt:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self._terms = {int(k): int(c) for k, c in terms.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def const(cls, n):
        return cls({0: n})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, LaurentInt):
            return x
        if isinstance(x, int):
            return cls({0: x})
        raise TypeError("cannot coerce %r to LaurentInt" % (x,))

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def __getitem__(self, k):
        return self._terms.get(k, 0)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt.const(other)
        if not isinstance(other, LaurentInt):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = LaurentInt.coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentInt(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-LaurentInt.coerce(other))

    def __rsub__(self, other):
        return LaurentInt.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentInt({k: c * other for k, c in self._terms.items()})
        other = LaurentInt.coerce(other)
        out = {}
        for (a, x), (b, y) in product(self._terms.items(), other._terms.items()):
            out[a + b] = out.get(a + b, 0) + x * y
        return LaurentInt(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            (k, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentInt({-k * -n: c ** -n})
        out = LaurentInt.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, m):
        """Multiply by the monomial of degree ``m``."""
        return LaurentInt({k + m: c for k, c in self._terms.items()})

    def bar(self):
        return LaurentInt({-k: c for k, c in self._terms.items()})

    def at_one(self):
        return sum(self._terms.values())

    def top(self):
        return max(self._terms) if self._terms else None

    def bottom(self):
        return min(self._terms) if self._terms else None

    def is_nonneg(self):
        return all(c >= 0 for c in self._terms.values())

    def is_monomial(self):
        return len(self._terms) == 1

    def format(self, var="v"):
        return format_laurent(self, var)

    def __str__(self):
        return self.format("v")

    def __repr__(self):
        return "LaurentInt(%r)" % (self.format("v"),)


ZERO = LaurentInt()
ONE = LaurentInt.const(1)


def format_laurent(p, var="v"):
    """Canonical text, decreasing exponents, no spaces: ``3v^2+1-v^-3``."""
    if not p:
        return "0"
    out = []
    for k, c in p.items():
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else "%s^%d" % (var, k)
            body = mono if a == 1 else "%d%s" % (a, mono)
        out.append(sign + body)
    s = "".join(out)
    return s[1:] if s[0] == "+" else s


_TERM = re.compile(r"([+-]?)(\d*)(?:([a-z])(?:\^(-?\d+))?)?")


def parse_laurent(text, var="v"):
    """Parse the grammar produced by :func:`format_laurent`."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    pos = 0
    out = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError("bad Laurent polynomial %r at offset %d" % (text, pos))
        if pos > 0 and not m.group(1):
            raise ValueError("missing sign in %r at offset %d" % (text, pos))
        sign, digits, name, exp = m.groups()
        if name is not None and name != var:
            raise ValueError("unexpected variable %r in %r at offset %d" % (name, text, pos))
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        k = 0 if name is None else (int(exp) if exp is not None else 1)
        out[k] = out.get(k, 0) + coeff
        pos = m.end()
    return LaurentInt(out)


def v_int(n):
    """Symmetric quantum integer ``[n] = (v^n - v^-n)/(v - v^-1)``."""
    if n == 0:
        return ZERO
    sign = 1 if n > 0 else -1
    n = abs(n)
    return LaurentInt({n - 1 - 2 * j: sign for j in range(n)})


def v_factorial(n):
    out = ONE
    for k in range(1, n + 1):
        out = out * v_int(k)
    return out


def exact_div(num, den):
    """Exact division of Laurent polynomials; raises if there is a remainder."""
    if not den:
        raise ZeroDivisionError("division by zero polynomial")
    if not num:
        return ZERO
    dt, db = den.top(), den.bottom()
    lowest = num.bottom() - db
    rem = num
    quot = {}
    while rem and rem.top() - dt >= lowest:
        rt = rem.top()
        c, r = divmod(rem[rt], den[dt])
        if r:
            raise ArithmeticError("inexact division")
        quot[rt - dt] = c
        rem = rem - den.shift(rt - dt) * c
    if rem:
        raise ArithmeticError("inexact division")
    return LaurentInt(quot)


def v_binomial(m, p):
    """Symmetric Gaussian binomial ``[m choose p]`` in ``v``.

    Computed with the Pascal-type recursion
    ``[m, p] = v^-p [m-1, p] + v^(m-p) [m-1, p-1]`` so no division is needed.
    """
    if p < 0 or p > m or m < 0:
        return ZERO
    row = [ONE]
    for n in range(1, m + 1):
        new = []
        for k in range(n + 1):
            left = row[k - 1].shift(n - k) if k >= 1 else ZERO
            right = row[k].shift(-k) if k < n else ZERO
            new.append(left + right)
        row = new
    return row[p]


class TruncSeries:
    """Formal series in ``q^-1`` known exactly at exponents ``>= floor``.

    ``floor is None`` means the series is an exact Laurent polynomial.
    Terms below the floor are never stored.
    """

    __slots__ = ("terms", "floor")

    def __init__(self, terms=None, floor=None):
        terms = dict(terms or {})
        if floor is not None:
            terms = {k: c for k, c in terms.items() if k >= floor}
        self.terms = {k: c for k, c in terms.items() if c}
        self.floor = floor

    @classmethod
    def from_laurent(cls, p, floor=None):
        return cls(p.terms, floor)

    def top(self):
        return max(self.terms) if self.terms else None

    def _top_or(self, default):
        return max(self.terms) if self.terms else default

    def __add__(self, other):
        if isinstance(other, LaurentInt):
            other = TruncSeries.from_laurent(other)
        floor = _max_floor(self.floor, other.floor)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TruncSeries(out, floor)

    def __neg__(self):
        return TruncSeries({k: -c for k, c in self.terms.items()}, self.floor)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncSeries({k: c * other for k, c in self.terms.items()}, self.floor)
        if isinstance(other, LaurentInt):
            other = TruncSeries.from_laurent(other)
        floor = None
        # an unknown tail below floor_x contributes at most top_y + floor_x - 1
        if self.floor is not None and other.terms:
            floor = self.floor + other.top()
        if other.floor is not None and self.terms:
            f2 = other.floor + self.top()
            floor = f2 if floor is None else max(floor, f2)
        if self.floor is not None and other.floor is not None and floor is None:
            floor = self.floor + other.floor
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] = out.get(a + b, 0) + x * y
        return TruncSeries(out, floor)

    def truncate(self, floor):
        return TruncSeries(self.terms, _max_floor(self.floor, floor))

    def coeff(self, k):
        if self.floor is not None and k < self.floor:
            raise TruncationError("coefficient of q^%d requested below floor %d" % (k, self.floor))
        return self.terms.get(k, 0)

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.terms == other.terms and self.floor == other.floor

    def __repr__(self):
        body = format_laurent(LaurentInt(self.terms), "q")
        tail = "" if self.floor is None else " + O(q^%d)" % (self.floor - 1)
        return "TruncSeries(%s%s)" % (body, tail)


def _max_floor(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


def ts_const_term(s):
    """Exact constant term; raises :class:`TruncationError` if not certified."""
    return s.coeff(0)


def ts_neumann_inv(x, trunc):
    """Inverse of ``I + x`` as a matrix of series exact down to ``q^-trunc``.

    ``x`` is a square matrix of :class:`LaurentInt` or :class:`TruncSeries`
    whose entries only have strictly negative exponents.
    """
    n = len(x)
    floor = -trunc
    mat = []
    for row in x:
        r = []
        for e in row:
            terms = e.terms if isinstance(e, (LaurentInt, TruncSeries)) else dict(e)
            if any(k >= 0 for k, c in terms.items() if c):
                raise ValueError("Neumann series does not converge: entry has exponent >= 0")
            r.append({k: c for k, c in terms.items() if c and k >= floor})
        mat.append(r)
    result = [[({0: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    power = [[({0: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    sign = 1
    for _ in range(trunc):
        power = _mat_mul_trunc(power, mat, floor)
        sign = -sign
        if not any(power[i][j] for i in range(n) for j in range(n)):
            break
        for i in range(n):
            for j in range(n):
                tgt = result[i][j]
                for k, c in power[i][j].items():
                    tgt[k] = tgt.get(k, 0) + sign * c
    return [[TruncSeries(result[i][j], floor) for j in range(n)] for i in range(n)]


def _mat_mul_trunc(a, b, floor):
    n = len(a)
    m = len(b[0])
    out = [[{} for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for k in range(len(b)):
            aik = a[i][k]
            if not aik:
                continue
            for j in range(m):
                bkj = b[k][j]
                if not bkj:
                    continue
                tgt = out[i][j]
                for e1, c1 in aik.items():
                    for e2, c2 in bkj.items():
                        e = e1 + e2
                        if e >= floor:
                            tgt[e] = tgt.get(e, 0) + c1 * c2
    for row in out:
        for d in row:
            for e in [e for e, c in d.items() if c == 0]:
                del d[e]
    return out


def series_mat_mul(a, b):
    """Product of two matrices of series (or Laurent polynomials)."""
    n, m, inner = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = TruncSeries()
            for k in range(inner):
                acc = acc + _as_series(a[i][k]) * _as_series(b[k][j])
            row.append(acc)
        out.append(row)
    return out


def _as_series(x):
    return x if isinstance(x, TruncSeries) else TruncSeries.from_laurent(x)
