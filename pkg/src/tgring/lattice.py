"""The graded lattices X and Y, the map Omega and its series inverse, and the
integer cocycle ``epsilon`` with its skew-symmetrisation ``bracket``.

An element of X is ``sum g[i, k] q^k omega_i`` and an element of Y is
``sum h[i, k] q^k alpha_i``; both are stored sparsely on ``(node, exponent)``.
"""

import threading

from .cartan import Weight
from .polyseries import LaurentInt, TruncSeries, TruncationError, ts_neumann_inv


class _Graded:
    __slots__ = ("_items", "_hash")
    _tag = "?"

    def __init__(self, coords=()):
        if isinstance(coords, dict):
            coords = coords.items()
        acc = {}
        for (i, k), c in coords:
            if c:
                key = (int(i), int(k))
                acc[key] = acc.get(key, 0) + int(c)
        self._items = tuple(sorted((key, c) for key, c in acc.items() if c))
        self._hash = hash((self._tag, self._items))

    @classmethod
    def mono(cls, i, k, c=1):
        return cls({(i, k): c})

    @classmethod
    def from_node_polys(cls, polys):
        """Build from ``{node: LaurentInt in q}``."""
        return cls({(i, k): c for i, p in polys.items() for k, c in p.terms.items()})

    def items(self):
        return self._items

    def as_dict(self):
        return dict(self._items)

    def __getitem__(self, key):
        return self.as_dict().get(key, 0)

    def node_poly(self, i):
        return LaurentInt({k: c for (j, k), c in self._items if j == i})

    def node_polys(self):
        out = {}
        for (i, k), c in self._items:
            out.setdefault(i, {})[k] = c
        return {i: LaurentInt(t) for i, t in out.items()}

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(self._items + other._items)

    def __neg__(self):
        return type(self)(tuple((key, -c) for key, c in self._items))

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n):
        return type(self)(tuple((key, n * c) for key, c in self._items))

    __rmul__ = __mul__

    def shift(self, m):
        return type(self)(tuple(((i, k + m), c) for (i, k), c in self._items))

    def bar(self):
        return type(self)(tuple(((i, -k), c) for (i, k), c in self._items))

    def is_nonnegative(self):
        return all(c >= 0 for _, c in self._items)

    def exponents(self):
        return [k for (_, k), _ in self._items]

    def size(self):
        """Sum of coefficients (number of factors for elements of X+)."""
        return sum(c for _, c in self._items)

    def __eq__(self, other):
        return type(self) is type(other) and self._items == other._items

    def __lt__(self, other):
        return self._items < other._items

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._items)

    def __repr__(self):
        body = ", ".join("%d:%d:%d" % (i, k, c) for (i, k), c in self._items)
        return "%s{%s}" % (self._tag, body)

    __str__ = __repr__


class XElem(_Graded):
    __slots__ = ()
    _tag = "x"


class YElem(_Graded):
    __slots__ = ()
    _tag = "y"


def _require_simply_laced(c):
    if not c.simply_laced:
        raise ValueError("Omega is only defined for simply-laced types")


def omega(c, eta):
    """``alpha_i -> [2] omega_i - sum_{j ~ i} omega_j``, extended Z[q, q^-1]-linearly."""
    _require_simply_laced(c)
    out = {}
    for (i, k), h in eta.items():
        for key, val in (((i, k + 1), h), ((i, k - 1), h)):
            out[key] = out.get(key, 0) + val
        for j in c.neighbors(i):
            out[(j, k)] = out.get((j, k), 0) - h
    return XElem(out)


def add_xy(c, gamma, eta):
    return gamma + omega(c, eta)


def sub_xy(c, gamma, eta):
    return gamma - omega(c, eta)


def is_dominant(gamma):
    return gamma.is_nonnegative()


def succeq_xy(c, gamma, eta):
    return sub_xy(c, gamma, eta).is_nonnegative()


def succeq_yy(eta, delta):
    return (eta - delta).is_nonnegative()


def spec_q1(gamma):
    """Specialise ``q = 1``: ``X -> P``."""
    out = {}
    for (i, _), g in gamma.items():
        out[i] = out.get(i, 0) + g
    return Weight(out)


def spec_q1_root(eta):
    from .cartan import Root
    out = {}
    for (i, _), h in eta.items():
        out[i] = out.get(i, 0) + h
    return Root(out)


class _InverseCache:
    """Write-once table of the entries of Omega^-1 in alpha/omega coordinates.

    ``entry(i, j)`` is the series ``R_ij`` with ``Omega^-1(omega_j) =
    sum_i R_ij alpha_i``.  Tables are replaced wholesale when a deeper
    truncation is needed, so readers never observe a partial table.
    """

    def __init__(self, c):
        self.c = c
        self.trunc = 0
        self.table = None
        self.lock = threading.Lock()

    def ensure(self, trunc):
        if self.table is not None and self.trunc >= trunc:
            return self.table, self.trunc
        with self.lock:
            if self.table is None or self.trunc < trunc:
                trunc = max(trunc, 2 * self.trunc, 8)
                inv = ts_neumann_inv(_neumann_matrix(self.c), trunc)
                # Omega^-1 = q^-1 (I + X)^-1 ; a shift lowers the exact window
                self.table = [[(dict((k - 1, v) for k, v in s.terms.items()), s.floor - 1)
                               for s in row] for row in inv]
                self.trunc = trunc
        return self.table, self.trunc


_CACHES = {}
_CACHES_LOCK = threading.Lock()


def _cache_for(c):
    cache = _CACHES.get(c)
    if cache is None:
        with _CACHES_LOCK:
            cache = _CACHES.setdefault(c, _InverseCache(c))
    return cache


def _neumann_matrix(c):
    """``X = q^-2 I + q^-1 N`` with ``N`` the negated adjacency matrix."""
    n = c.rank
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(LaurentInt({-2: 1}))
            elif c.a[i][j]:
                row.append(LaurentInt({-1: c.a[i][j]}))
            else:
                row.append(LaurentInt())
        mat.append(row)
    return mat


def default_trunc(*elems):
    ks = [k for e in elems for k in e.exponents()]
    if not ks:
        return 4
    return max(ks) - min(ks) + 4


def omega_inv(c, gamma, trunc=None):
    """``Omega^-1(gamma)`` as ``{node: TruncSeries}`` exact down to ``q^-trunc``."""
    _require_simply_laced(c)
    if trunc is None:
        trunc = default_trunc(gamma)
    polys = gamma.node_polys()
    ks = gamma.exponents()
    top = max(ks) if ks else 0
    # R_ij is needed exactly down to -trunc - top
    table, _ = _cache_for(c).ensure(trunc + max(top, 0) + 1)
    out = {}
    for i in c.nodes:
        acc = TruncSeries(floor=-trunc)
        for j, p in polys.items():
            terms, floor = table[i - 1][j - 1]
            acc = acc + TruncSeries(terms, floor) * p
        out[i] = acc.truncate(-trunc)
    return out


def pair_series(xi, gamma):
    """``(xi | gamma)`` for ``xi = {node: series}`` and ``gamma`` in X."""
    acc = TruncSeries()
    for i, p in gamma.node_polys().items():
        s = xi.get(i)
        if s is None:
            continue
        if isinstance(s, LaurentInt):
            s = TruncSeries.from_laurent(s)
        acc = acc + s * p
    return acc


def pair_const(xi, gamma):
    """Constant term of ``(xi | gamma)``, certified exact."""
    return pair_series(xi, gamma).coeff(0)


def pair_laurent(eta, gamma):
    """``(eta | gamma)_0`` for ``eta`` in Y and ``gamma`` in X (finite sum)."""
    g = gamma.as_dict()
    return sum(h * g.get((i, -k), 0) for (i, k), h in eta.items())


def _inverse_coeff(c, i, j, e):
    """Coefficient of ``q^e`` in ``R_ij``, growing the table as needed."""
    if e >= 0:
        return 0
    cache = _cache_for(c)
    table, trunc = cache.ensure(0)
    terms, floor = table[i - 1][j - 1]
    if e < floor:
        table, trunc = cache.ensure(-e + 1)
        terms, floor = table[i - 1][j - 1]
        if e < floor:
            raise TruncationError("Omega^-1 entry below certified floor")
    return terms.get(e, 0)


def epsilon(c, gamma, gamma2):
    """``eps = (q^-1 Omega^-1(bar gamma) | gamma2)_0``.

    Evaluated bilinearly: the monomial pair ``(q^k omega_j, q^l omega_i)``
    contributes the coefficient of ``q^(k + 1 - l)`` in ``R_ij``.
    """
    _require_simply_laced(c)
    total = 0
    for (j, k), g in gamma.items():
        for (i, l), g2 in gamma2.items():
            e = k + 1 - l
            if e < 0:
                total += g * g2 * _inverse_coeff(c, i, j, e)
    return total


def epsilon_series(c, gamma, gamma2, trunc=None):
    """Same value as :func:`epsilon`, routed through ``omega_inv`` and
    ``pair_const`` with automatic growth of the truncation order."""
    if trunc is None:
        trunc = default_trunc(gamma, gamma2)
    while True:
        xi = omega_inv(c, gamma.bar(), trunc)
        xi = {i: s * LaurentInt({-1: 1}) for i, s in xi.items()}
        try:
            return pair_const(xi, gamma2)
        except TruncationError:
            trunc *= 2


def bracket(c, gamma, gamma2):
    return epsilon(c, gamma, gamma2) - epsilon(c, gamma2, gamma)


def epsilon_gamma(c, gamma):
    return epsilon(c, gamma, gamma)


def solve_omega(c, gamma):
    """The unique ``eta`` in Y with ``Omega(eta) = gamma``, or ``None`` if
    ``gamma`` is not in the image of Y."""
    _require_simply_laced(c)
    if not gamma:
        return YElem()
    hi = max(gamma.exponents())
    # the lowest term q^(k-1) omega_i of Omega(q^k alpha_i) cannot cancel
    rem = gamma
    eta = {}
    while rem:
        (i, k), g = min(rem.items(), key=lambda t: (t[0][1], t[0][0]))
        if k + 1 > hi - 1:
            return None
        eta[(i, k + 1)] = eta.get((i, k + 1), 0) + g
        rem = rem - omega(c, YElem.mono(i, k + 1, g))
    return YElem(eta)
