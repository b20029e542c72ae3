"""Shared fixtures: small random generators and the A1 oracle for Omega^-1."""

import random

from tgring.lattice import XElem, YElem


def q(*exps, node=1):
    """Rank-1 shorthand: ``q(2, 0)`` is ``q^2 omega_1 + q^0 omega_1``."""
    d = {}
    for k in exps:
        d[(node, k)] = d.get((node, k), 0) + 1
    return XElem(d)


def rand_x(rng, c, lo=-6, hi=6, cmin=-3, cmax=3, terms=3):
    d = {}
    for _ in range(rng.randint(1, terms)):
        key = (rng.choice(c.nodes), rng.randint(lo, hi))
        d[key] = d.get(key, 0) + rng.randint(cmin, cmax)
    return XElem(d)


def rand_y(rng, c, lo=-6, hi=6, cmax=3, terms=3):
    d = {}
    for _ in range(rng.randint(1, terms)):
        key = (rng.choice(c.nodes), rng.randint(lo, hi))
        d[key] = d.get(key, 0) + rng.randint(0, cmax)
    return YElem(d)


def a1_eps_oracle(m, n):
    """eps(q^m omega, q^n omega) in A1 from 1/(q + q^-1) = sum_j (-1)^j q^(-1-2j)."""
    d = n - m
    if d >= 2 and d % 2 == 0:
        j = d // 2
        return (-1) ** (j + 1)
    return 0


def a1_bracket_rule(m, n):
    """Closed rule for <q^m, q^n>: 0 if n-m is zero or odd, (-1)^l for
    n-m = 2l with l < 0, and -(-1)^l for l > 0."""
    d = n - m
    if d == 0 or d % 2:
        return 0
    l = d // 2
    return (-1) ** l if l < 0 else -(-1) ** l


def rng(seed):
    return random.Random(seed)


def gauss_oracle(n, k):
    """Balanced Gaussian binomial by counting inversions of 0/1 words."""
    import itertools
    from tgring.polyseries import LaurentInt
    if not 0 <= k <= n:
        return LaurentInt()
    out = {}
    for ones in itertools.combinations(range(n), k):
        inv = sum(1 for a in ones for b in range(n) if b not in ones and b < a)
        e = 2 * inv - k * (n - k)
        out[e] = out.get(e, 0) + 1
    return LaurentInt(out)


def rand_ax(rng, c, lo=-4, hi=4, terms=3):
    from tgring.axring import AXElem
    from tgring.polyseries import LaurentInt
    out = {}
    for _ in range(rng.randint(1, terms)):
        g = rand_x(rng, c, lo, hi, -2, 2, 2)
        coeff = LaurentInt({rng.randint(-2, 2): rng.choice([-2, -1, 1, 2])})
        out[g] = out.get(g, LaurentInt()) + coeff
    return AXElem(out)
