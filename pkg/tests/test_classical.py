import itertools

import pytest

from helpers import q, rng
from tgring.cartan import Weight, fold_cartan, parse_type, root_to_weight, positive_roots
from tgring.chartab import CharTable, simple_char, sl2_fundamental, string_decompose
from tgring.classical import (ClassicalError, ClassicalGraded, chi, chi_m_convert, dominant_below,
                              expand_in_chi, folded_transition, freudenthal, full_character,
                              orbit, orbit_size, restrict_ax, tensor_mult, to_dominant, weyl_dim)
from tgring.polyseries import ONE, LaurentInt

A1, A2, A3 = parse_type("A1"), parse_type("A2"), parse_type("A3")
B2 = fold_cartan(A3, [[1, 3], [2]])
G2 = fold_cartan(parse_type("D4"), [[1, 3, 4], [2]])
W = Weight.from_list


def ssyt_weight_mults(lam):
    """Type A_n weight multiplicities of V(lam) by counting semistandard
    tableaux; returns {weight: mult} in fundamental coordinates."""
    n = len(lam)
    shape = [sum(lam[i:]) for i in range(n)]
    cells = [(r, col) for r in range(n) for col in range(shape[r])]
    out = {}

    def fill(idx, tab):
        if idx == len(cells):
            content = [0] * (n + 1)
            for v in tab.values():
                content[v] += 1
            w = tuple(content[i] - content[i + 1] for i in range(n))
            out[w] = out.get(w, 0) + 1
            return
        r, col = cells[idx]
        lo = 0
        if col > 0:
            lo = max(lo, tab[(r, col - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, col)] + 1)
        for v in range(lo, n + 1):
            tab[(r, col)] = v
            fill(idx + 1, tab)
            del tab[(r, col)]

    fill(0, {})
    return out


@pytest.mark.parametrize("c,lam", [(A2, (1, 1)), (A2, (2, 1)), (A2, (3, 0)), (A3, (1, 1, 0)),
                                   (A3, (0, 2, 1)), (A3, (1, 0, 1))])
def test_freudenthal_matches_tableaux(c, lam):
    want = ssyt_weight_mults(lam)
    got = full_character(c, W(list(lam)))
    assert {tuple(w.to_list(c.rank)): m for w, m in got.items()} == want


def test_freudenthal_examples():
    assert freudenthal(A1, W([2])).mult == {W([2]): 1, Weight(): 1}
    assert freudenthal(A2, W([1, 1])).mult == {W([1, 1]): 1, Weight(): 2}
    for c in (A1, A2, G2):
        assert freudenthal(c, Weight()).mult == {Weight(): 1}
    with pytest.raises(ValueError):
        freudenthal(A2, W([1, -1]))


def test_weyl_dim_examples():
    assert weyl_dim(A1, W([2])) == 3
    assert weyl_dim(A2, Weight()) == 1
    assert {weyl_dim(G2, W([1, 0])), weyl_dim(G2, W([0, 1]))} == {7, 14}
    assert {weyl_dim(B2, W([1, 0])), weyl_dim(B2, W([0, 1]))} == {4, 5}
    assert weyl_dim(parse_type("E8"), W([0, 0, 0, 0, 0, 0, 0, 1])) == 248


def _heights(c, h):
    for lam in itertools.product(range(h + 1), repeat=c.rank):
        if sum(lam) <= h:
            yield W(list(lam))


@pytest.mark.parametrize("c", [A2, B2, G2])
def test_dimension_identity(c):
    for lam in _heights(c, 4):
        assert freudenthal(c, lam).dimension(c) == weyl_dim(c, lam)


def test_orbits():
    assert orbit_size(A1, W([1])) == 2
    assert orbit_size(A2, W([1, 1])) == 6
    assert orbit_size(G2, W([1, 0])) == 6
    assert to_dominant(A2, W([-1, 0])) == W([0, 1])
    adj = {root_to_weight(A2, r) for r in positive_roots(A2)}
    assert adj | {Weight() - w for w in adj} == orbit(A2, W([1, 1]))
    assert dominant_below(A2, W([1, 1])) == {W([1, 1]), Weight()}


def test_chi_m_examples():
    x = chi(W([2]))
    m = chi_m_convert(A1, x, "m")
    assert m == ClassicalGraded({W([2]): ONE, Weight(): ONE}, "m")
    assert chi_m_convert(A1, chi(Weight()), "m") == ClassicalGraded({Weight(): ONE}, "m")
    assert chi_m_convert(A1, ClassicalGraded({W([2]): ONE}, "m"), "chi") == \
        ClassicalGraded({W([2]): ONE, Weight(): -ONE}, "chi")


@pytest.mark.parametrize("c", [A2, A3, B2, G2])
def test_chi_m_round_trip_unitriangular(c):
    r = rng(53)
    for _ in range(10):
        terms = {W([r.randint(0, 2) for _ in c.nodes]): LaurentInt({r.randint(-2, 2): r.randint(1, 3)})
                 for _ in range(3)}
        x = ClassicalGraded(terms, "chi")
        assert chi_m_convert(c, chi_m_convert(c, x, "m"), "chi") == x
        assert chi_m_convert(c, chi_m_convert(c, x, "weight"), "chi") == x
    for lam in _heights(c, 3):
        row = freudenthal(c, lam).mult
        assert row[lam] == 1 and all(m > 0 for m in row.values())


def tensor_oracle(c, l1, l2):
    """Brute force: multiply full characters, peel irreducibles from the top."""
    ch1, ch2 = full_character(c, l1), full_character(c, l2)
    prod = {}
    for a, m in ch1.items():
        for b, n in ch2.items():
            prod[a + b] = prod.get(a + b, 0) + m * n
    out = {}
    while prod:
        top = max((w for w in prod if w.is_nonnegative()), key=lambda w: (sum(
            x * y for x, y in zip(w.to_list(c.rank), range(1, 99))), w.items()))
        # pick a weight not below any other remaining dominant weight
        for w in prod:
            if w.is_nonnegative() and w != top and top in dominant_below(c, w):
                top = w
        k = prod[top]
        out[top] = k
        for w, m in full_character(c, top).items():
            prod[w] = prod.get(w, 0) - k * m
            if not prod[w]:
                del prod[w]
    return out


def test_tensor_examples():
    assert tensor_mult(A1, W([1]), W([1])) == {W([2]): 1, Weight(): 1}
    assert tensor_mult(A2, W([1, 0]), W([0, 1])) == {W([1, 1]): 1, Weight(): 1}
    assert tensor_mult(A2, W([2, 1]), Weight()) == {W([2, 1]): 1}


@pytest.mark.parametrize("c", [A2, A3, B2, G2])
def test_tensor_against_oracle(c):
    r = rng(59)
    for _ in range(6):
        l1 = W([r.randint(0, 2) for _ in c.nodes])
        l2 = W([r.randint(0, 1) for _ in c.nodes])
        got = tensor_mult(c, l1, l2)
        assert got == tensor_oracle(c, l1, l2)
        assert sum(m * weyl_dim(c, mu) for mu, m in got.items()) == weyl_dim(c, l1) * weyl_dim(c, l2)


def test_restrict_examples():
    t = CharTable.builtin()
    V = LaurentInt({1: 1})
    r1 = restrict_ax(A1, sl2_fundamental(0))
    assert r1 == ClassicalGraded({W([1]): ONE, W([-1]): ONE}, "weight")
    r2 = restrict_ax(A1, simple_char(t, q(0, 0)))
    assert r2 == ClassicalGraded({W([2]): ONE, Weight(): ONE + V ** -2, W([-2]): ONE}, "weight")
    assert expand_in_chi(A1, r2) == ClassicalGraded({W([2]): ONE, Weight(): V ** -2}, "chi")
    assert expand_in_chi(A1, r1) == chi(W([1]))
    assert expand_in_chi(A1, chi(W([3]))) == chi(W([3]))
    from tgring.axring import AXElem
    assert not restrict_ax(A1, AXElem()).terms


def test_expand_in_chi_rejects_noninvariant():
    with pytest.raises(ClassicalError):
        expand_in_chi(A1, ClassicalGraded({W([1]): ONE}, "weight"))


def test_restriction_at_one_matches_tensor():
    t = CharTable.builtin()
    for k in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(range(-4, 5, 2), k):
            g = q(*combo)
            e = expand_in_chi(A1, restrict_ax(A1, simple_char(t, g)))
            assert all(v.is_nonneg() for v in e.terms.values())
            want = {Weight(): 1}
            for run in string_decompose(g):
                nxt = {}
                for mu, m in want.items():
                    for nu, n in tensor_mult(A1, mu, W([len(run)])).items():
                        nxt[nu] = nxt.get(nu, 0) + m * n
                want = nxt
            assert e.at_one() == want


def test_folded_transition():
    row = folded_transition(B2, W([1, 0]))
    assert sum(m * orbit_size(B2, mu) for mu, m in row.items()) == weyl_dim(B2, W([1, 0]))
    assert folded_transition(G2, Weight()) == {Weight(): 1}
    adj = W([0, 1]) if weyl_dim(G2, W([0, 1])) == 14 else W([1, 0])
    assert folded_transition(G2, adj)[Weight()] == 2


def test_str_format():
    x = ClassicalGraded({W([2]): ONE, Weight(): LaurentInt({-2: 1})}, "chi")
    assert str(x) == "chi[1:2] + (v^-2)*chi[]"
