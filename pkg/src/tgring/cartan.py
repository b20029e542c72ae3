"""Cartan data of finite type, the lattices P and Q, and diagram folding.

Nodes are labelled ``1..rank`` with Bourbaki numbering.  The matrix follows
the convention ``a[i][j] = <alpha_i^vee, alpha_j>`` so that a simple root has
weight coordinates ``alpha_i = sum_j a[j][i] omega_j``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations


class CartanError(ValueError):
    pass


def _sparse(coords):
    return tuple(sorted((int(k), int(v)) for k, v in dict(coords).items() if v))


class _Vec:
    """Finitely supported integer vector on the node set."""

    __slots__ = ("_items", "_hash")

    def __init__(self, coords=()):
        self._items = _sparse(coords)
        self._hash = hash((type(self).__name__, self._items))

    @classmethod
    def from_list(cls, values):
        return cls({i + 1: v for i, v in enumerate(values)})

    def __getitem__(self, i):
        for k, v in self._items:
            if k == i:
                return v
        return 0

    def items(self):
        return self._items

    def as_dict(self):
        return dict(self._items)

    def to_list(self, rank):
        d = self.as_dict()
        return [d.get(i, 0) for i in range(1, rank + 1)]

    def __add__(self, other):
        d = self.as_dict()
        for k, v in other.items():
            d[k] = d.get(k, 0) + v
        return type(self)(d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._items})

    def __mul__(self, n):
        return type(self)({k: n * v for k, v in self._items})

    __rmul__ = __mul__

    def __eq__(self, other):
        return type(self) is type(other) and self._items == other._items

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self._items)

    def is_nonnegative(self):
        return all(v >= 0 for _, v in self._items)

    def height(self):
        return sum(v for _, v in self._items)

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, dict(self._items))


class Weight(_Vec):
    """Element of P, coordinates on the fundamental weights."""

    __slots__ = ()


class Root(_Vec):
    """Element of Q, coordinates on the simple roots."""

    __slots__ = ()


@dataclass(frozen=True)
class CartanDatum:
    nodes: tuple
    a: tuple
    simply_laced: bool = True
    name: str = ""
    sym: tuple = field(default=(), compare=False)

    def __post_init__(self):
        n = len(self.nodes)
        if n == 0 or len(self.a) != n or any(len(row) != n for row in self.a):
            raise CartanError("Cartan matrix must be square and non-empty")
        for i in range(n):
            if self.a[i][i] != 2:
                raise CartanError("diagonal entries must equal 2")
            for j in range(n):
                if i == j:
                    continue
                if self.a[i][j] > 0:
                    raise CartanError("off-diagonal entries must be <= 0")
                if (self.a[i][j] == 0) != (self.a[j][i] == 0):
                    raise CartanError("a_ij = 0 must imply a_ji = 0")
        if self.simply_laced:
            for i in range(n):
                for j in range(n):
                    if self.a[i][j] != self.a[j][i] or (i != j and self.a[i][j] not in (0, -1)):
                        raise CartanError("simply-laced matrix must be symmetric with entries 0/-1")
        d = _symmetrizer(self.a)
        if d is None:
            raise CartanError("Cartan matrix is not symmetrizable")
        object.__setattr__(self, "sym", d)
        b = [[d[i] * self.a[i][j] for j in range(n)] for i in range(n)]
        if not _positive_definite(b):
            raise CartanError("Cartan matrix is not of finite type")

    @property
    def rank(self):
        return len(self.nodes)

    def entry(self, i, j):
        return self.a[i - 1][j - 1]

    def neighbors(self, i):
        return [j for j in self.nodes if j != i and self.entry(i, j) != 0]

    def __str__(self):
        return self.name or "Cartan%s" % (self.a,)


def _symmetrizer(a):
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and a[i][j] != 0:
                    # d_i a_ij = d_j a_ji
                    val = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        return None
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            for k in range(col, n):
                m[r][k] -= f * m[col][k]
    return det


def _positive_definite(b):
    # Sylvester's criterion on leading principal minors
    n = len(b)
    return all(_det([row[:k] for row in b[:k]]) > 0 for k in range(1, n + 1))


def _from_edges(rank, edges, name):
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return CartanDatum(tuple(range(1, rank + 1)), tuple(tuple(r) for r in a), True, name)


def build_cartan(family, rank):
    """Standard simply-laced Cartan matrix of type ``family`` and ``rank``."""
    family = str(family).upper()
    rank = int(rank)
    if family == "A" and rank >= 1:
        edges = [(i, i + 1) for i in range(1, rank)]
    elif family == "D" and rank >= 4:
        edges = [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    elif family == "E" and rank in (6, 7, 8):
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, rank)]
    else:
        raise CartanError("no finite type %s%d" % (family, rank))
    return _from_edges(rank, edges, "%s%d" % (family, rank))


def parse_type(text):
    """Parse a type literal such as ``A2`` or ``D4``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise CartanError("bad type literal %r" % text)
    return build_cartan(text[0], int(text[1:]))


def root_to_weight(c, alpha):
    out = {}
    for i, coef in alpha.items():
        for j in c.nodes:
            aji = c.entry(j, i)
            if aji:
                out[j] = out.get(j, 0) + coef * aji
    return Weight(out)


def weight_to_root(c, lam):
    """Rational root coordinates of a weight (inverse of ``root_to_weight``)."""
    n = c.rank
    # solve A^T x = lam, i.e. sum_i a[j][i] x_i = lam_j
    m = [[Fraction(c.a[j][i]) for i in range(n)] + [Fraction(lam[j + 1])] for j in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def geq(c, x, y):
    """``x >= y`` where ``y`` is a root and ``x`` is a root or a weight.

    For two roots this tests ``x - y`` in Q+; for a weight ``x`` it tests
    ``x - y`` in P+ after embedding ``y`` into P.
    """
    if isinstance(x, Weight):
        return geq_pp(c, x, y)
    return (x - y).is_nonnegative()


def geq_pp(c, lam, alpha):
    return (lam - root_to_weight(c, alpha)).is_nonnegative()


def parse_orbits(text):
    """``"1,3|2"`` -> ``[[1, 3], [2]]``."""
    return [[int(t) for t in part.split(",") if t.strip()] for part in text.split("|")]


def fold_cartan(c, orbits):
    """Fold ``c`` along a partition of its nodes into automorphism orbits."""
    orbits = [sorted(int(i) for i in o) for o in orbits]
    flat = sorted(i for o in orbits for i in o)
    if flat != list(c.nodes) or any(not o for o in orbits):
        raise CartanError("orbits must partition the node set")
    for o in orbits:
        for i, j in combinations(o, 2):
            if c.entry(i, j) != 0:
                raise CartanError("nodes %d and %d of one orbit are adjacent" % (i, j))
    m = len(orbits)
    a = [[0] * m for _ in range(m)]
    for p, op in enumerate(orbits):
        for r, orr in enumerate(orbits):
            vals = {sum(c.entry(i, j) for i in op) for j in orr}
            if len(vals) != 1:
                raise CartanError("partition is not compatible with a diagram automorphism")
            a[p][r] = vals.pop()
    singletons = all(len(o) == 1 for o in orbits)
    name = "%s/%s" % (c.name, "|".join(",".join(map(str, o)) for o in orbits))
    return CartanDatum(tuple(range(1, m + 1)), tuple(tuple(r) for r in a), singletons, name)


def pairing_matrix(c):
    """The invariant form on simple roots, ``(alpha_i, alpha_j) = d_i a_ij``."""
    return [[c.sym[i] * c.a[i][j] for j in range(c.rank)] for i in range(c.rank)]


def positive_roots(c):
    """Positive roots by string closure from the simple roots."""
    n = c.rank
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee>
                pairing = sum(c.a[i][j] * beta[j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return [Root.from_list(r) for r in sorted(roots, key=lambda r: (sum(r), r))]
