"""The classical shadow: weight multiplicities, the irreducible / orbit-sum
transition, tensor product multiplicities, folded types, and the v-graded
restriction of A_X to the classical character ring.

Weights are :class:`~tgring.cartan.Weight` objects in fundamental-weight
coordinates.  Inner products use ``(alpha_i, alpha_j) = d_i a_ij`` so that
folded (non simply-laced) data are handled uniformly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cartan import Weight, positive_roots, root_to_weight, weight_to_root
from .lattice import epsilon_gamma, spec_q1
from .polyseries import ONE, ZERO, LaurentInt


class ClassicalError(ArithmeticError):
    pass


class _Data:
    """Precomputed tuple-level data for one Cartan datum."""

    def __init__(self, c):
        n = c.rank
        self.c = c
        self.n = n
        # gram[i][j] = (omega_i, omega_j) = x^(i)_j d_j with x^(i) root coords of omega_i
        cols = [weight_to_root(c, Weight({i + 1: 1})) for i in range(n)]
        self.gram = [[cols[i][j] * c.sym[j] for j in range(n)] for i in range(n)]
        self.inv = cols
        self.simple = [tuple(c.a[j][i] for j in range(n)) for i in range(n)]
        self.proots = [(r.to_list(n), tuple(root_to_weight(c, r).to_list(n)))
                       for r in positive_roots(c)]
        self._orbit = {}

    def inner(self, x, y):
        g = self.gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.n) if x[i] for j in range(self.n) if y[j])

    def depth(self, x):
        """Height of ``x`` in root coordinates (rational)."""
        return sum(x[i] * self.inv[i][j] for i in range(self.n) if x[i] for j in range(self.n))

    def reflect(self, mu, i):
        m = mu[i]
        s = self.simple[i]
        return tuple(a - m * b for a, b in zip(mu, s))

    def to_dominant(self, mu):
        while True:
            i = next((k for k in range(self.n) if mu[k] < 0), None)
            if i is None:
                return mu
            mu = self.reflect(mu, i)

    def orbit(self, mu):
        hit = self._orbit.get(mu)
        if hit is not None:
            return hit
        seen = {mu}
        stack = [mu]
        while stack:
            w = stack.pop()
            for i in range(self.n):
                if w[i]:
                    r = self.reflect(w, i)
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
        hit = frozenset(seen)
        self._orbit[mu] = hit
        return hit


@lru_cache(maxsize=None)
def _data(c):
    return _Data(c)


def _t(c, w):
    return tuple(w.to_list(c.rank))


def _w(x):
    return Weight.from_list(x)


def inner(c, lam, mu):
    """``(lam, mu)`` for weights, using ``(alpha_i, alpha_j) = d_i a_ij``."""
    return _data(c).inner(_t(c, lam), _t(c, mu))


def weyl_dim(c, lam):
    """Weyl dimension formula, exact."""
    d = _data(c)
    lr = tuple(a + 1 for a in _t(c, lam))
    num = Fraction(1)
    for beta, _ in d.proots:
        # (mu, beta) = sum_i beta_i d_i mu_i
        a = sum(b * c.sym[i] * lr[i] for i, b in enumerate(beta))
        b_ = sum(b * c.sym[i] for i, b in enumerate(beta))
        num *= Fraction(a, b_)
    if num.denominator != 1:
        raise ClassicalError("non-integral Weyl dimension")
    return int(num)


def to_dominant(c, mu):
    """Dominant representative of the Weyl orbit of ``mu``."""
    return _w(_data(c).to_dominant(_t(c, mu)))


def orbit(c, mu):
    """The Weyl orbit of ``mu``, by closure under simple reflections."""
    return {_w(x) for x in _data(c).orbit(_t(c, mu))}


def orbit_size(c, mu):
    return len(_data(c).orbit(_t(c, mu)))


def _dominant_below(d, lam):
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for _, w in d.proots:
            nu = tuple(a - b for a, b in zip(mu, w))
            if nu not in seen and min(nu) >= 0:
                seen.add(nu)
                stack.append(nu)
    return seen


def dominant_below(c, lam):
    """Dominant weights ``mu <= lam`` (``lam - mu`` in Q+)."""
    return {_w(x) for x in _dominant_below(_data(c), _t(c, lam))}


@dataclass
class MultTable:
    lam: Weight
    mult: dict = field(default_factory=dict)

    def __getitem__(self, mu):
        return self.mult.get(mu, 0)

    def dimension(self, c):
        return sum(m * orbit_size(c, mu) for mu, m in self.mult.items())


@lru_cache(maxsize=None)
def _freudenthal(c, lam):
    d = _data(c)
    lr = tuple(a + 1 for a in lam)
    norm_top = d.inner(lr, lr)
    dom = sorted(_dominant_below(d, lam), key=lambda mu: d.depth(tuple(a - b for a, b in zip(lam, mu))))
    mult = {}
    for mu in dom:
        if mu == lam:
            mult[mu] = 1
            continue
        total = Fraction(0)
        for _, bw in d.proots:
            k = 1
            while True:
                nu = tuple(a + k * b for a, b in zip(mu, bw))
                m = mult.get(d.to_dominant(nu), 0)
                if not m:
                    break
                total += m * d.inner(nu, bw)
                k += 1
        mr = tuple(a + 1 for a in mu)
        val = 2 * total / (norm_top - d.inner(mr, mr))
        if val.denominator != 1 or val < 0:
            raise ClassicalError("non-integral multiplicity at %r" % (mu,))
        if val:
            mult[mu] = int(val)
    return mult


def freudenthal(c, lam):
    """Dominant weight multiplicities of the irreducible module ``V(lam)``."""
    if not lam.is_nonnegative():
        raise ValueError("highest weight must be dominant")
    mult = _freudenthal(c, _t(c, lam))
    return MultTable(lam, {_w(mu): m for mu, m in mult.items()})


def full_character(c, lam):
    """All weight multiplicities ``{mu: dim V(lam)_mu}``."""
    d = _data(c)
    out = {}
    for mu, m in _freudenthal(c, _t(c, lam)).items():
        for w in d.orbit(mu):
            out[_w(w)] = m
    return out


# ---- classical graded elements ----------------------------------------------

BASES = ("weight", "m", "chi")


@dataclass
class ClassicalGraded:
    terms: dict = field(default_factory=dict)
    basis: str = "weight"

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError("unknown basis %r" % self.basis)
        self.terms = {k: LaurentInt.coerce(v) for k, v in self.terms.items() if v}
        if self.basis != "weight" and not all(k.is_nonnegative() for k in self.terms):
            raise ValueError("%s-basis keys must be dominant" % self.basis)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (-t[0].height(), t[0].items()))

    def __eq__(self, other):
        return isinstance(other, ClassicalGraded) and self.basis == other.basis and self.terms == other.terms

    def at_one(self):
        return {k: v.at_one() for k, v in self.terms.items() if v.at_one()}

    def __str__(self):
        from .polyseries import format_laurent
        sym = {"weight": "e", "m": "m", "chi": "chi"}[self.basis]
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.items():
            head = "" if v == ONE else "(%s)*" % format_laurent(v)
            parts.append("%s%s[%s]" % (head, sym, format_weight(k)))
        return " + ".join(parts)


def format_weight(mu):
    return ",".join("%d:%d" % kv for kv in mu.items())


def _add(acc, key, val):
    s = acc.get(key, ZERO) + val
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


def _dominance_key(c, mu):
    return (_data(c).depth(_t(c, mu)), mu.items())


def chi_m_convert(c, x, target):
    """Exact change of basis between ``chi`` (irreducible) and ``m`` (orbit sum)."""
    if x.basis == target:
        return ClassicalGraded(dict(x.terms), target)
    if x.basis == "chi" and target == "m":
        out = {}
        for lam, coeff in x.terms.items():
            for mu, m in freudenthal(c, lam).mult.items():
                _add(out, mu, coeff * m)
        return ClassicalGraded(out, "m")
    if x.basis == "m" and target == "chi":
        rem = dict(x.terms)
        out = {}
        while rem:
            top = max(rem, key=lambda mu: _dominance_key(c, mu))
            coeff = rem[top]
            _add(out, top, coeff)
            for mu, m in freudenthal(c, top).mult.items():
                _add(rem, mu, -(coeff * m))
        return ClassicalGraded(out, "chi")
    if x.basis == "weight":
        return chi_m_convert(c, weight_to_m(c, x), target)
    if target == "weight":
        m = chi_m_convert(c, x, "m")
        out = {}
        for mu, coeff in m.terms.items():
            for w in orbit(c, mu):
                _add(out, w, coeff)
        return ClassicalGraded(out, "weight")
    raise ValueError("unsupported conversion %s -> %s" % (x.basis, target))


def weight_to_m(c, x):
    """Orbit-sum view of a weight-basis element; requires Weyl invariance."""
    out = {}
    for mu in x.terms:
        dom = to_dominant(c, mu)
        if dom in out:
            continue
        coeff = x.terms.get(dom, ZERO)
        for w in orbit(c, dom):
            if x.terms.get(w, ZERO) != coeff:
                raise ClassicalError("element is not Weyl-invariant at %s" % format_weight(w))
        if coeff:
            out[dom] = coeff
    return ClassicalGraded(out, "m")


def expand_in_chi(c, x):
    """Expansion in irreducible characters, coefficients in ``Z[v, v^-1]``."""
    if x.basis == "chi":
        return ClassicalGraded(dict(x.terms), "chi")
    return chi_m_convert(c, x, "chi")


def _dot_dominant(d, x):
    """Reflect the rho-shifted weight ``x`` to the dominant chamber.

    Returns ``(sign, x')`` or ``None`` when ``x`` lies on a wall.
    """
    sign = 1
    while True:
        i = next((k for k in range(d.n) if x[k] <= 0), None)
        if i is None:
            return sign, x
        if x[i] == 0:
            return None
        x = d.reflect(x, i)
        sign = -sign


def tensor_mult(c, lam1, lam2):
    """``{mu: dim Hom(V(mu), V(lam1) (x) V(lam2))}`` by Brauer-Klimyk,
    summing over the weights of the smaller factor."""
    d = _data(c)
    if weyl_dim(c, lam1) < weyl_dim(c, lam2):
        lam1, lam2 = lam2, lam1
    top = tuple(a + 1 for a in _t(c, lam1))
    acc = {}
    for mu, m in _freudenthal(c, _t(c, lam2)).items():
        for w in d.orbit(mu):
            hit = _dot_dominant(d, tuple(a + b for a, b in zip(top, w)))
            if hit is None:
                continue
            sign, x = hit
            key = tuple(a - 1 for a in x)
            acc[key] = acc.get(key, 0) + sign * m
    out = {}
    for key, k in acc.items():
        if k < 0:
            raise ClassicalError("negative tensor multiplicity at %r" % (key,))
        if k:
            out[_w(key)] = k
    return out


def folded_transition(cf, lam):
    """``b_lam -> sum_mu dim V(lam)_mu c_mu`` for a folded datum."""
    return freudenthal(cf, lam).mult


def restrict_ax(c, x):
    """``e^gamma -> v^eps_gamma e^gamma(1)`` extended linearly."""
    out = {}
    for g, coeff in x.terms.items():
        _add(out, spec_q1(g), coeff.shift(epsilon_gamma(c, g)))
    return ClassicalGraded(out, "weight")


def chi(lam, coeff=ONE):
    return ClassicalGraded({lam: coeff}, "chi")
