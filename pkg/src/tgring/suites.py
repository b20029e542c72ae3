"""Deterministic property suites.

Every suite draws from one ``random.Random(seed)`` and produces a plain-text
report; identical ``(name, n, seed)`` give byte-identical reports.
"""

import itertools
import random
from dataclasses import dataclass, field

from .axring import AXElem, ax_bar, ax_mul
from .cartan import Weight, build_cartan, fold_cartan, parse_type
from .chartab import CharTable, simple_char, standard_char
from .classical import (chi_m_convert, expand_in_chi, freudenthal, restrict_ax,
                        ClassicalGraded, tensor_mult, weyl_dim)
from .decompose import conjecture_probe, expand_in_simples, positivity_check, reconstruct
from .lattice import XElem, YElem, epsilon, epsilon_gamma, omega, spec_q1, spec_q1_root
from .polyseries import ONE, LaurentInt
from .quiverdim import d_gamma_eta, d_lambda_alpha, kappa_eta, kappa_pm


class UnknownSuite(KeyError):
    pass


@dataclass
class SuiteReport:
    name: str
    n: int
    seed: int
    lines: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def text(self):
        out = ["suite %s n=%d seed=%d" % (self.name, self.n, self.seed)]
        out.extend("  " + line for line in self.lines)
        if self.failures:
            out.append("  first failure: %s" % self.failures[0])
        out.append("result: %s" % ("PASS" if self.ok else "FAIL"))
        return "\n".join(out) + "\n"


# ---- random generators ------------------------------------------------------

def rand_x(rng, c, lo=-6, hi=6, dominant=True, terms=3, cmax=3):
    d = {}
    for _ in range(rng.randint(1, terms)):
        key = (rng.choice(c.nodes), rng.randint(lo, hi))
        val = rng.randint(0 if dominant else -cmax, cmax)
        d[key] = d.get(key, 0) + val
    return XElem(d)


def rand_y(rng, c, lo=-6, hi=6, terms=3, cmax=3):
    d = {}
    for _ in range(rng.randint(1, terms)):
        key = (rng.choice(c.nodes), rng.randint(lo, hi))
        d[key] = d.get(key, 0) + rng.randint(0, cmax)
    return YElem(d)


def rand_sub(rng, eta):
    """A random ``delta`` with ``eta - delta`` in Y+."""
    return YElem({key: rng.randint(0, h) for key, h in eta.items()})


def rand_ax(rng, c, lo=-4, hi=4, terms=3):
    out = {}
    for _ in range(rng.randint(1, terms)):
        g = rand_x(rng, c, lo, hi, dominant=False, terms=2, cmax=2)
        coeff = LaurentInt({rng.randint(-2, 2): rng.choice([-2, -1, 1, 2])})
        out[g] = out.get(g, LaurentInt()) + coeff
    return AXElem(out)


# ---- A1 window --------------------------------------------------------------

def a1_window(lo=-4, hi=4, max_factors=3, step=2):
    """Dominant A1 elements with 1..max_factors factors, exponents in
    ``range(lo, hi + 1, step)``."""
    exps = list(range(lo, hi + 1, step))
    out = []
    for k in range(1, max_factors + 1):
        for combo in itertools.combinations_with_replacement(exps, k):
            d = {}
            for e in combo:
                d[(1, e)] = d.get((1, e), 0) + 1
            out.append(XElem(d))
    return out


def _sample(rng, items, n):
    if n <= 0 or n >= len(items):
        return list(items)
    idx = sorted(rng.sample(range(len(items)), n))
    return [items[i] for i in idx]


# ---- suites -----------------------------------------------------------------

TYPES = ("A1", "A2", "A3", "D4")


def _cocycle(rep, rng, n):
    for name in TYPES:
        c = parse_type(name)
        bad = 0
        for case in range(n):
            g1, g2, g3 = (rand_x(rng, c, -8, 8) for _ in range(3))
            lhs = epsilon(c, g1 + g2, g3) + epsilon(c, g1, g2)
            rhs = epsilon(c, g1, g2 + g3) + epsilon(c, g2, g3)
            if lhs != rhs:
                bad += 1
                rep.failures.append("%s case %d: %s %s %s" % (name, case, g1, g2, g3))
        rep.lines.append("%s: %d triples, %d failures" % (name, n, bad))


def _associativity(rep, rng, n):
    for name in TYPES:
        c = parse_type(name)
        bad = 0
        for case in range(n):
            x, y, z = (rand_ax(rng, c) for _ in range(3))
            if ax_mul(c, ax_mul(c, x, y), z) != ax_mul(c, x, ax_mul(c, y, z)):
                bad += 1
                rep.failures.append("%s case %d: %r %r %r" % (name, case, x, y, z))
        rep.lines.append("%s: %d triples, %d failures" % (name, n, bad))


def lemma352_case(c, g1, g2, e1, e2, d1, d2):
    """Return the list of violated parts of the splitting lemma (empty if ok)."""
    bad = []
    kp, km = kappa_pm(c, g1, g2, e1, e2)
    g, e = g1 + g2, e1 + e2
    if kp + km != d_gamma_eta(c, g, e) - d_gamma_eta(c, g1, e1) - d_gamma_eta(c, g2, e2):
        bad.append("a")
    rp, rm = kappa_pm(c, g2, g1, e2, e1)
    if (kp, km) != (rm, rp):
        bad.append("b")
    s1, s2 = g1 - omega(c, d1), g2 - omega(c, d2)
    dp, dm = kappa_pm(c, g1, g2, d1, d2)
    sp, sm = kappa_pm(c, s1, s2, e1 - d1, e2 - d2)
    if (kp - sp, km - sm) != (dp, dm):
        bad.append("c-kappa")
    if epsilon(c, g1, g2) - epsilon(c, s1, s2) != dp:
        bad.append("c-eps+")
    if epsilon(c, g2, g1) - epsilon(c, s2, s1) != dm:
        bad.append("c-eps-")
    return bad


def _lemma352(rep, rng, n):
    for name in ("A1", "A2", "D4"):
        c = parse_type(name)
        bad = 0
        for case in range(n):
            g1, g2 = rand_x(rng, c), rand_x(rng, c)
            e1, e2 = rand_y(rng, c), rand_y(rng, c)
            d1, d2 = rand_sub(rng, e1), rand_sub(rng, e2)
            parts = lemma352_case(c, g1, g2, e1, e2, d1, d2)
            if parts:
                bad += 1
                rep.failures.append("%s case %d (%s): %s %s %s %s %s %s"
                                    % (name, case, ",".join(parts), g1, g2, e1, e2, d1, d2))
        rep.lines.append("%s: %d decompositions, %d failures" % (name, n, bad))


def sec53_case(c, gamma, delta, eta):
    bad = []
    d_gd = d_gamma_eta(c, gamma, delta)
    shifted = gamma - omega(c, delta)
    if epsilon_gamma(c, gamma) - epsilon_gamma(c, shifted) != d_gd:
        bad.append("eps")
    if d_gamma_eta(c, gamma, eta) - d_gamma_eta(c, shifted, eta - delta) != d_gd:
        bad.append("d")
    lam, alpha = spec_q1(gamma), spec_q1_root(eta)
    dla = d_lambda_alpha(c, lam, alpha)
    if dla % 2:
        bad.append("parity")
    else:
        kp, km = kappa_eta(c, lam, alpha, gamma, eta)
        if kp != dla // 2 or kp - km != d_gamma_eta(c, gamma, eta):
            bad.append("kappa")
    return bad


def rand_sec53(rng, c):
    delta = rand_y(rng, c, -4, 4)
    eta = delta + rand_y(rng, c, -4, 4)
    gamma = omega(c, delta) + rand_x(rng, c, -5, 5)
    fix = XElem({key: -v for key, v in gamma.items() if v < 0})
    return gamma + fix, delta, eta


def _sec53(rep, rng, n):
    for name in ("A1", "A2", "D4"):
        c = parse_type(name)
        bad = 0
        for case in range(n):
            gamma, delta, eta = rand_sec53(rng, c)
            parts = sec53_case(c, gamma, delta, eta)
            if parts:
                bad += 1
                rep.failures.append("%s case %d (%s): %s %s %s" % (name, case, ",".join(parts), gamma, delta, eta))
        rep.lines.append("%s: %d instances, %d failures" % (name, n, bad))


def _pairs(rng, n):
    window = a1_window()
    pairs = [(a, b) for a in window for b in window]
    return _sample(rng, pairs, n)


def _positivity(rep, rng, n):
    t = CharTable.builtin()
    c = t.cartan
    bad = 0
    pairs = _pairs(rng, n)
    for g1, g2 in pairs:
        x = ax_mul(c, simple_char(t, g1), simple_char(t, g2))
        e = expand_in_simples(t, x)
        ok, off = positivity_check(e)
        if not ok or e.residual or reconstruct(t, e) != x:
            bad += 1
            rep.failures.append("b[%s]*b[%s] offending %s" % (g1, g2, off))
    rep.lines.append("A1: %d products, %d failures" % (len(pairs), bad))


def _palindromicity(rep, rng, n):
    t = CharTable.builtin()
    window = _sample(rng, a1_window(), n)
    bad = 0
    for g in window:
        s = simple_char(t, g)
        w = standard_char(t, g)
        if ax_bar(s) != s or w.terms.get(g) != ONE:
            bad += 1
            rep.failures.append("gamma=%s" % (g,))
    rep.lines.append("A1: %d simples, %d failures" % (len(window), bad))


def _conjecture(rep, rng, n):
    t = CharTable.builtin()
    pairs = _pairs(rng, n)
    bad = 0
    for g1, g2 in pairs:
        r = conjecture_probe(t, g1, g2)
        if not r.coherent:
            bad += 1
            rep.failures.append("mixed verdict (%s,%s,%s) for %s, %s"
                                % (r.single, r.commute_up_to_power, r.simple_tensor, g1, g2))
    rep.lines.append("A1: %d pairs, %d mixed verdicts" % (len(pairs), bad))


def folded_types():
    return {
        "B2": fold_cartan(build_cartan("A", 3), [[1, 3], [2]]),
        "G2": fold_cartan(build_cartan("D", 4), [[1, 3, 4], [2]]),
    }


def classical_types():
    out = {name: parse_type(name) for name in ("A2", "A3", "D4")}
    out.update(folded_types())
    return out


def dominant_of_height(c, h):
    for lam in itertools.product(range(h + 1), repeat=c.rank):
        if sum(lam) <= h:
            yield Weight.from_list(list(lam))


def _classical(rep, rng, n):
    bad = 0
    count = 0
    for name, c in classical_types().items():
        for lam in dominant_of_height(c, 6):
            count += 1
            if freudenthal(c, lam).dimension(c) != weyl_dim(c, lam):
                bad += 1
                rep.failures.append("%s lambda=%s dimension mismatch" % (name, lam))
    rep.lines.append("freudenthal vs weyl: %d weights, %d failures" % (count, bad))
    bad = 0
    names = sorted(classical_types())
    for case in range(n):
        c = classical_types()[rng.choice(names)]
        l1 = Weight.from_list([rng.randint(0, 2) for _ in c.nodes])
        l2 = Weight.from_list([rng.randint(0, 2) for _ in c.nodes])
        mult = tensor_mult(c, l1, l2)
        if sum(m * weyl_dim(c, mu) for mu, m in mult.items()) != weyl_dim(c, l1) * weyl_dim(c, l2):
            bad += 1
            rep.failures.append("%s tensor %s x %s" % (c, l1, l2))
        x = ClassicalGraded({l1: LaurentInt({1: 1}), l2: LaurentInt({0: 2, -1: 1})}, "chi")
        if chi_m_convert(c, chi_m_convert(c, x, "m"), "chi") != x:
            bad += 1
            rep.failures.append("%s chi/m round trip %s" % (c, x))
    rep.lines.append("tensor/round-trip: %d cases, %d failures" % (n, bad))


def _folding(rep, rng, n):
    bad = []
    ft = folded_types()
    if [list(r) for r in ft["B2"].a] != [[2, -2], [-1, 2]]:
        bad.append("A3 fold matrix")
    if [list(r) for r in ft["G2"].a] != [[2, -3], [-1, 2]]:
        bad.append("D4 fold matrix")
    for name, c in ft.items():
        for lam in dominant_of_height(c, 6):
            if freudenthal(c, lam).dimension(c) != weyl_dim(c, lam):
                bad.append("%s %s" % (name, lam))
    g2 = ft["G2"]
    adj = max((Weight.from_list(v) for v in ([1, 0], [0, 1])), key=lambda w: weyl_dim(g2, w))
    if freudenthal(g2, adj)[Weight()] != 2:
        bad.append("G2 adjoint zero weight")
    rep.failures.extend(bad)
    rep.lines.append("folded B2, G2: %d failures" % len(bad))


def _restriction(rep, rng, n):
    t = CharTable.builtin()
    c = t.cartan
    window = _sample(rng, a1_window(), n)
    bad = 0
    for g in window:
        e = expand_in_chi(c, restrict_ax(c, simple_char(t, g)))
        if not all(v.is_nonneg() for v in e.terms.values()):
            bad += 1
            rep.failures.append("restrict b[%s] = %s" % (g, e))
    rep.lines.append("A1: %d restrictions, %d failures" % (len(window), bad))


SUITES = {
    "cocycle": _cocycle,
    "associativity": _associativity,
    "lemma352": _lemma352,
    "sec53-identities": _sec53,
    "positivity": _positivity,
    "palindromicity": _palindromicity,
    "conjecture": _conjecture,
    "classical": _classical,
    "folding": _folding,
    "restriction": _restriction,
}


def run_suite(name, n=100, seed=0):
    fn = SUITES.get(name)
    if fn is None:
        raise UnknownSuite("unknown suite %r; choose from %s" % (name, ", ".join(sorted(SUITES))))
    rep = SuiteReport(name, n, seed)
    fn(rep, random.Random(seed), n)
    return rep
