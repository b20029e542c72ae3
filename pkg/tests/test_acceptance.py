"""Acceptance criteria 1-12, each under its stated time limit.

Run with pytest (a per-criterion summary is printed at the end) or directly:
``python3 tests/test_acceptance.py``.
"""

import itertools
import os
import sys
import time
from contextlib import contextmanager

sys.path.insert(0, os.path.dirname(__file__))

from helpers import a1_bracket_rule, gauss_oracle, q  # noqa: E402
from tgring import classical, lattice  # noqa: E402
from tgring.axring import AXElem, ax_bar, ax_mul  # noqa: E402
from tgring.cartan import Weight, fold_cartan, parse_type  # noqa: E402
from tgring.chartab import CharTable, simple_char, sl2_fundamental, standard_char, string_decompose  # noqa: E402
from tgring.classical import (ClassicalGraded, chi, expand_in_chi, freudenthal, restrict_ax,  # noqa: E402
                              tensor_mult, weyl_dim)
from tgring.decompose import (expand_in_simples, positivity_check, product_expansion,  # noqa: E402
                              reconstruct, selection_key)
from tgring.lattice import XElem, YElem, bracket, epsilon_gamma, omega  # noqa: E402
from tgring.polyseries import ONE, LaurentInt  # noqa: E402
from tgring.quiverdim import d_gamma_eta, kappa_pm  # noqa: E402
from tgring.suites import a1_window, run_suite  # noqa: E402

A1 = parse_type("A1")
V = LaurentInt({1: 1})
ZERO_X = XElem()

RESULTS = {}

TITLES = {
    1: "sl2 closed forms",
    2: "bracket closed rule",
    3: "cocycle identity and associativity",
    4: "splitting lemma (a), (b), (c)",
    5: "epsilon/d identities and kappa_eta",
    6: "positivity of b-products",
    7: "unitriangularity of standard characters",
    8: "palindromicity",
    9: "classical suite",
    10: "folding",
    11: "restriction positivity",
    12: "conjecture probe coherence",
}

LIMITS = {1: 1, 2: 1, 3: 10, 4: 10, 5: 10, 6: 60, 7: 30, 8: 10, 9: 30, 10: 10, 11: 30, 12: 60}


def _fresh_caches():
    lattice._CACHES.clear()
    classical._data.cache_clear()
    classical._freudenthal.cache_clear()


@contextmanager
def criterion(k):
    _fresh_caches()
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        in_time = elapsed < LIMITS[k]
        RESULTS[k] = (ok and in_time, elapsed)
    assert in_time, "criterion %d took %.2fs, limit %ds" % (k, elapsed, LIMITS[k])


def summary_lines():
    lines = []
    for k in sorted(TITLES):
        if k not in RESULTS:
            lines.append("acceptance %2d: NOT RUN  %s" % (k, TITLES[k]))
            continue
        ok, elapsed = RESULTS[k]
        lines.append("acceptance %2d: %s  %-42s %6.2fs (limit %ds)"
                     % (k, "PASS" if ok else "FAIL", TITLES[k], elapsed, LIMITS[k]))
    return lines


def test_01_sl2_closed_forms():
    with criterion(1):
        t = CharTable.builtin()
        for n in (0, 2):
            assert sl2_fundamental(n) == AXElem({q(n): ONE, XElem({(1, n + 2): -1}): ONE})
        for n in (0, 2, 4):
            want = AXElem({
                q(n, n - 2): ONE,
                XElem({(1, n - 2): 1, (1, n + 2): -1}): ONE,
                XElem({(1, n): -1, (1, n + 2): -1}): ONE,
                ZERO_X: V,
            })
            assert standard_char(t, q(n, n - 2)) == want
        for k in range(1, 6):
            for n in (-2, 0, 2):
                want = AXElem({XElem({(1, n): i, (1, n + 2): -(k - i)}): gauss_oracle(k, i)
                               for i in range(k + 1)})
                assert standard_char(t, q(*[n] * k)) == want


def test_02_bracket_closed_rule():
    with criterion(2):
        for m in range(-10, 11):
            for n in range(-10, 11):
                assert bracket(A1, q(m), q(n)) == a1_bracket_rule(m, n)


def test_03_cocycle_and_associativity():
    with criterion(3):
        for name in ("cocycle", "associativity"):
            rep = run_suite(name, 1000, 2024)
            assert rep.ok, rep.text()


def test_04_lemma352():
    with criterion(4):
        g1, g2, e1, e2 = q(2), q(0), YElem(), YElem.mono(1, 1)
        kp, km = kappa_pm(A1, g1, g2, e1, e2)
        d_sum = d_gamma_eta(A1, g1 + g2, e1 + e2) - d_gamma_eta(A1, g1, e1) - d_gamma_eta(A1, g2, e2)
        assert (kp, km, d_sum) == (0, 1, 1)
        rep = run_suite("lemma352", 500, 7)
        assert rep.ok, rep.text()


def test_05_sec53_identities():
    with criterion(5):
        g, delta = q(2, 0), YElem.mono(1, 1)
        assert epsilon_gamma(A1, g) - epsilon_gamma(A1, g - omega(A1, delta)) == 1
        assert d_gamma_eta(A1, g, delta) == 1
        rep = run_suite("sec53-identities", 500, 11)
        assert rep.ok, rep.text()


def test_06_positivity():
    with criterion(6):
        t = CharTable.builtin()
        assert product_expansion(t, q(0), q(0)) == {q(0, 0): ONE}
        assert product_expansion(t, q(2), q(0)) == {q(2, 0): V ** -1, ZERO_X: ONE}
        window = a1_window()
        assert len(window) == 55
        for g, h in itertools.product(window, window):
            x = ax_mul(A1, simple_char(t, g), simple_char(t, h))
            e = expand_in_simples(t, x)
            assert not e.residual
            assert positivity_check(e)[0], (g, h)
            assert reconstruct(t, e) == x


def test_07_unitriangularity():
    with criterion(7):
        t = CharTable.builtin()
        assert expand_in_simples(t, standard_char(t, q(2, 0))) == {q(2, 0): ONE, ZERO_X: V}
        for g in a1_window():
            e = expand_in_simples(t, standard_char(t, g))
            assert e.terms[g] == ONE
            assert all(selection_key(h) < selection_key(g) for h in e.terms if h != g)
            assert positivity_check(e)[0]


def test_08_palindromicity():
    with criterion(8):
        t = CharTable.builtin()
        for g in a1_window():
            s = simple_char(t, g)
            assert ax_bar(s) == s
            assert standard_char(t, g).terms[g] == ONE


def test_09_classical():
    with criterion(9):
        rep = run_suite("classical", 50, 9)
        assert rep.ok, rep.text()
        assert "378 weights" in rep.text()


def test_10_folding():
    with criterion(10):
        b2 = fold_cartan(parse_type("A3"), [[1, 3], [2]])
        g2 = fold_cartan(parse_type("D4"), [[1, 3, 4], [2]])
        assert [list(r) for r in b2.a] == [[2, -2], [-1, 2]]
        assert [list(r) for r in g2.a] == [[2, -3], [-1, 2]]
        adj = max((Weight({1: 1}), Weight({2: 1})), key=lambda w: weyl_dim(g2, w))
        assert weyl_dim(g2, adj) == 14
        assert freudenthal(g2, adj)[Weight()] == 2
        rep = run_suite("folding", 0, 0)
        assert rep.ok, rep.text()


def test_11_restriction():
    with criterion(11):
        t = CharTable.builtin()
        assert expand_in_chi(A1, restrict_ax(A1, simple_char(t, q(0)))) == chi(Weight({1: 1}))
        assert expand_in_chi(A1, restrict_ax(A1, simple_char(t, q(0, 0)))) == \
            ClassicalGraded({Weight({1: 2}): ONE, Weight(): V ** -2}, "chi")
        for g in a1_window():
            e = expand_in_chi(A1, restrict_ax(A1, simple_char(t, g)))
            assert all(c.is_nonneg() for c in e.terms.values()), g
            want = {Weight(): 1}
            for run in string_decompose(g):
                nxt = {}
                for mu, m in want.items():
                    for nu, n in tensor_mult(A1, mu, Weight({1: len(run)})).items():
                        nxt[nu] = nxt.get(nu, 0) + m * n
                want = nxt
            assert e.at_one() == want, g


def test_12_conjecture_coherence():
    with criterion(12):
        rep = run_suite("conjecture", 0, 0)
        assert "3025 pairs, 0 mixed verdicts" in rep.text(), rep.text()
        assert rep.ok


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError as exc:
                failed += 1
                print("%s failed: %s" % (name, str(exc)[:300]))
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)
