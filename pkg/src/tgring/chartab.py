"""Tables of graded (t-)characters.

Fundamental characters ``gch V(q^n omega_i)`` come from the built-in sl2
closed form or from a table file; standard characters are twisted ordered
products of fundamentals; sl2 simple characters are products of string
(Kirillov-Reshetikhin) characters.
"""

import threading

from .axring import AXElem, ax_prod
from .cartan import build_cartan
from .lattice import XElem, bracket, is_dominant, solve_omega, succeq_xy
from .polyseries import ONE


class TableError(ValueError):
    pass


def _is_a1(c):
    return c.rank == 1 and c.simply_laced


def sl2_fundamental(n):
    """``gch V(q^n) = e^(q^n) + e^(-q^(n+2))``."""
    return AXElem({XElem.mono(1, n): ONE, XElem.mono(1, n + 2, -1): ONE})


def shift_spectral(x, m):
    return AXElem({g.shift(m): c for g, c in x.terms.items()})


def factors(gamma):
    """Fundamental factors of a dominant ``gamma``, ordered by exponent
    descending and then node ascending."""
    if not is_dominant(gamma):
        raise ValueError("%s is not dominant" % (gamma,))
    out = []
    for (i, k), g in sorted(gamma.items(), key=lambda t: (-t[0][1], t[0][0])):
        out.extend([XElem.mono(i, k)] * g)
    return out


def twist_exponent(c, parts):
    """``-sum_{k<l} <parts_k, parts_l>``."""
    total = 0
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            total -= bracket(c, parts[a], parts[b])
    return total


class CharTable:
    """Store of fundamental and simple characters for one Cartan datum.

    Entries are append-only; concurrent insertion of the same key stores the
    same value, so a lock only guards the dict update itself.
    """

    def __init__(self, cartan, fund=None, simples=None):
        self.cartan = cartan
        self.fund = {}
        self.simples = {}
        self.provenance = {}
        self._lock = threading.Lock()
        for key, val in (fund or {}).items():
            self.add_fund(key[0], key[1], val, "file")
        for key, val in (simples or {}).items():
            self.add_simple(key, val, "file")

    @classmethod
    def builtin(cls, cartan=None):
        return cls(cartan or build_cartan("A", 1))

    def _store(self, table, key, value, tag):
        with self._lock:
            table[key] = value
            kind = "fund" if table is self.fund else "simple"
            self.provenance.setdefault((kind, key), tag)

    def add_fund(self, i, n, value, tag="file"):
        validate_character(self.cartan, XElem.mono(i, n), value)
        self._store(self.fund, (i, n), value, tag)

    def add_simple(self, gamma, value, tag="file"):
        validate_character(self.cartan, gamma, value)
        self._store(self.simples, gamma, value, tag)

    def fundamental(self, i, n):
        x = self.fund.get((i, n))
        if x is not None:
            return x
        if _is_a1(self.cartan):
            x = sl2_fundamental(n)
            self._store(self.fund, (i, n), x, "builtin")
            return x
        # any stored spectral parameter of the same node generates the rest
        for (j, m), val in sorted(self.fund.items()):
            if j == i:
                x = shift_spectral(val, n - m)
                self._store(self.fund, (i, n), x, "computed")
                return x
        raise TableError("no fundamental character for node %d, q^%d" % (i, n))

    def standard(self, gamma):
        return standard_char(self, gamma)

    def simple(self, gamma):
        return simple_char(self, gamma)


def validate_character(c, gamma, x):
    """Check top-normalisation, support shape and positivity of a character."""
    if x.terms.get(gamma) != ONE:
        raise TableError("character of %s must have coefficient 1 at its top term" % (gamma,))
    for g, coeff in x.terms.items():
        if not coeff.is_nonneg():
            raise TableError("negative coefficient %s at %s in character of %s" % (coeff, g, gamma))
        if g == gamma:
            continue
        eta = solve_omega(c, gamma - g)
        if eta is None or not eta.is_nonnegative() or not eta:
            raise TableError("term %s of character of %s is not gamma - Omega(eta), eta in Y+" % (g, gamma))


def standard_char(t, gamma):
    c = t.cartan
    parts = factors(gamma)
    if not parts:
        return AXElem.one()
    chars = [t.fundamental(i, k) for p in parts for (i, k), _ in p.items()]
    return ax_prod(c, chars).scale(ONE.shift(twist_exponent(c, parts)))


def string_decompose(gamma):
    """Greedy maximal q-strings ``n, n-2, ...`` of a rank-1 dominant element."""
    counts = {}
    for (i, k), g in gamma.items():
        if i != 1 or g < 0:
            raise ValueError("string decomposition needs a rank-1 dominant element")
        counts[k] = g
    strings = []
    while counts:
        top = max(counts)
        run = []
        k = top
        while counts.get(k, 0) > 0:
            run.append(k)
            counts[k] -= 1
            if counts[k] == 0:
                del counts[k]
            k -= 2
        strings.append(run)
    strings.sort(key=lambda s: -s[0])
    return strings


def string_char(run):
    """Character of the string ``n, n-2, ..., n-2(k-1)``: the ``i`` largest
    entries ``q^m`` flipped to ``-q^(m+2)``, for ``i = 0..k``."""
    out = {}
    for i in range(len(run) + 1):
        g = {}
        for pos, m in enumerate(run):
            key, val = ((1, m + 2), -1) if pos < i else ((1, m), 1)
            g[key] = g.get(key, 0) + val
        out[XElem(g)] = ONE
    return AXElem(out)


def simple_char(t, gamma):
    hit = t.simples.get(gamma)
    if hit is not None:
        return hit
    if not is_dominant(gamma):
        raise ValueError("%s is not dominant" % (gamma,))
    if not _is_a1(t.cartan):
        raise TableError("simple character of %s not available for type %s" % (gamma, t.cartan))
    c = t.cartan
    runs = string_decompose(gamma)
    parts = [XElem({(1, m): 1 for m in run}) for run in runs]
    x = ax_prod(c, [string_char(run) for run in runs]).scale(ONE.shift(twist_exponent(c, parts)))
    t._store(t.simples, gamma, x, "computed")
    return x


def lambda_sets(t, gamma):
    """``(Lambda(gamma), Lambda+(gamma))`` read off the standard character."""
    c = t.cartan
    lam, lam_plus = set(), set()
    for g in standard_char(t, gamma).keys():
        eta = solve_omega(c, gamma - g)
        if eta is None:
            raise TableError("support element %s has no integral eta" % (g,))
        lam.add(eta)
        if succeq_xy(c, gamma, eta):
            lam_plus.add(eta)
    return lam, lam_plus


# ---- file format -----------------------------------------------------------

def table_save(t, path):
    from .literals import format_ax, format_graded
    name = t.cartan.name
    lines = ["# character table for type %s" % name]
    for (i, n), x in sorted(t.fund.items()):
        lines.append("fund %s %d %d := %s" % (name, i, n, format_ax(x)))
    for g, x in sorted(t.simples.items()):
        lines.append("simple %s %s := %s" % (name, format_graded(g), format_ax(x)))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def table_load(path, cartan=None):
    from .cartan import parse_type
    from .literals import parse_ax, parse_x
    t = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, sep, body = line.partition(":=")
            if not sep:
                raise TableError("line %d: missing ':='" % lineno)
            words = head.split()
            if len(words) < 3 or words[0] not in ("fund", "simple"):
                raise TableError("line %d: expected 'fund' or 'simple' entry" % lineno)
            if t is None:
                t = CharTable(cartan or parse_type(words[1]))
            elif words[1] != t.cartan.name:
                raise TableError("line %d: type %s differs from %s" % (lineno, words[1], t.cartan.name))
            try:
                x = parse_ax(body, rank1=t.cartan.rank == 1, cartan=t.cartan)
                if words[0] == "fund":
                    if len(words) != 4:
                        raise TableError("line %d: expected 'fund <type> <i> <n>'" % lineno)
                    t.add_fund(int(words[2]), int(words[3]), x)
                else:
                    g = parse_x(" ".join(words[2:]), rank1=t.cartan.rank == 1, cartan=t.cartan)
                    t.add_simple(g, x)
            except TableError as exc:
                raise TableError("line %d: %s" % (lineno, exc)) from None
    if t is None:
        if cartan is None:
            raise TableError("empty table file and no type given")
        t = CharTable(cartan)
    return t
