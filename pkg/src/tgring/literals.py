"""Text literals for X, Y and A_X elements.

Grammar::

    xelem  := 'x{' [entry (',' entry)*] '}'      entry := node ':' exp ':' coeff
    yelem  := 'y{' ... '}'                       (same entries)
    qshort := ['+'|'-'] [int] 'q^' int ...       (rank 1 only, node 1 implied)
    ax     := term (('+'|'-') term)*
    term   := [coeff '*'] factor ('*' factor)*
    coeff  := '(' laurent ')' | laurent-monomial
    factor := 'e[' xelem|qshort|'' ']'  |  'b[' ... ']'  |  'w[' ... ']'

``b[...]`` and ``w[...]`` denote simple and standard characters and are only
available when an evaluator for them is supplied.
"""

import re

from .axring import AXElem, ax_mul
from .lattice import XElem, YElem
from .polyseries import ONE, format_laurent, parse_laurent


class ParseError(ValueError):
    def __init__(self, msg, text, pos):
        super().__init__("%s at offset %d in %r" % (msg, pos, text))
        self.pos = pos


def format_graded(e):
    return repr(e)


def format_ax(x):
    if not x:
        return "0"
    parts = []
    for g, c in x.items():
        if c == ONE:
            parts.append("e[%s]" % format_graded(g))
        else:
            parts.append("(%s)*e[%s]" % (format_laurent(c, "v"), format_graded(g)))
    return " + ".join(parts)


def format_q_short(g):
    """Rank-1 rendering ``q^2+q^0``, node index dropped."""
    if not g:
        return "0"
    out = []
    for (_, k), c in sorted(g.items(), key=lambda t: -t[0][1]):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        out.append("%s%sq^%d" % (sign, "" if a == 1 else a, k))
    s = "".join(out)
    return s[1:] if s[0] == "+" else s


class _Parser:
    def __init__(self, text, rank1=False, atoms=None, cartan=None):
        self.text = text
        self.s = text
        self.pos = 0
        self.rank1 = rank1
        self.atoms = atoms or {}
        self.cartan = cartan

    def error(self, msg):
        raise ParseError(msg, self.text, self.pos)

    def ws(self):
        while self.pos < len(self.s) and self.s[self.pos].isspace():
            self.pos += 1

    def peek(self, lit):
        self.ws()
        return self.s.startswith(lit, self.pos)

    def expect(self, lit):
        self.ws()
        if not self.s.startswith(lit, self.pos):
            self.error("expected %r" % lit)
        self.pos += len(lit)

    def integer(self):
        self.ws()
        m = re.compile(r"[+-]?\d+").match(self.s, self.pos)
        if not m:
            self.error("expected integer")
        self.pos = m.end()
        return int(m.group())

    def done(self):
        self.ws()
        if self.pos != len(self.s):
            self.error("unexpected trailing input")

    def graded(self, cls, tag):
        self.expect(tag + "{")
        entries = {}
        if self.peek("}"):
            self.pos += 1
            return cls(entries)
        while True:
            i = self.integer()
            self.expect(":")
            k = self.integer()
            self.expect(":")
            c = self.integer()
            if self.cartan is not None and i not in self.cartan.nodes:
                self.error("node %d not in type %s" % (i, self.cartan))
            entries[(i, k)] = entries.get((i, k), 0) + c
            if self.peek(","):
                self.pos += 1
                continue
            self.expect("}")
            return cls(entries)

    def q_short(self):
        if not self.rank1:
            self.error("q^n shorthand is only accepted for rank-1 types")
        entries = {}
        first = True
        while True:
            self.ws()
            sign = 1
            if self.peek("+") or self.peek("-"):
                sign = -1 if self.s[self.pos] == "-" else 1
                self.pos += 1
            elif not first:
                break
            self.ws()
            m = re.compile(r"\d*").match(self.s, self.pos)
            coeff = int(m.group()) if m.group() else 1
            self.pos = m.end()
            if not self.peek("q"):
                if m.group() == "0" and first:
                    return XElem()
                self.error("expected 'q'")
            self.pos += 1
            k = 1
            if self.peek("^"):
                self.pos += 1
                k = self.integer()
            entries[(1, k)] = entries.get((1, k), 0) + sign * coeff
            first = False
            if not (self.peek("+") or self.peek("-")):
                break
        return XElem(entries)

    def x_or_q(self):
        if self.peek("x{"):
            return self.graded(XElem, "x")
        if self.peek("]") or self.peek(")"):
            return XElem()
        return self.q_short()

    def coeff(self):
        self.ws()
        if self.peek("("):
            start = self.pos + 1
            depth = 0
            while self.pos < len(self.s):
                ch = self.s[self.pos]
                depth += ch == "("
                depth -= ch == ")"
                self.pos += 1
                if depth == 0:
                    break
            else:
                self.error("unbalanced parenthesis")
            try:
                return parse_laurent(self.s[start:self.pos - 1], "v")
            except ValueError as exc:
                self.pos = start
                self.error(str(exc))
        m = re.compile(r"\d*(?:v(?:\^-?\d+)?)?").match(self.s, self.pos)
        if not m.group():
            return None
        self.pos = m.end()
        return parse_laurent(m.group(), "v")

    def factor(self):
        self.ws()
        for tag in ("e", "b", "w"):
            if self.peek(tag + "["):
                start = self.pos
                self.pos += 2
                g = self.x_or_q()
                self.expect("]")
                if tag == "e":
                    return AXElem.mono(g)
                fn = self.atoms.get(tag)
                if fn is None:
                    self.pos = start
                    self.error("%s[...] needs a character table" % tag)
                return fn(g)
        self.error("expected e[...], b[...] or w[...]")

    def term(self):
        save = self.pos
        coeff = self.coeff()
        if coeff is not None:
            if self.peek("*"):
                self.pos += 1
            else:
                self.ws()
                if self.pos >= len(self.s) or self.s[self.pos] in "+-":
                    return AXElem.mono(XElem(), coeff)
                self.pos = save
                coeff = None
        value = self.factor()
        while self.peek("*"):
            self.pos += 1
            value = self._mul(value, self.factor())
        if coeff is not None:
            value = value.scale(coeff)
        return value

    def _mul(self, x, y):
        if self.cartan is None:
            self.error("products need a Cartan type")
        return ax_mul(self.cartan, x, y)

    def ax(self):
        self.ws()
        sign = 1
        if self.peek("-"):
            sign = -1
            self.pos += 1
        elif self.peek("+"):
            self.pos += 1
        total = self.term().scale(sign)
        while True:
            self.ws()
            if self.peek("+"):
                self.pos += 1
                total = total + self.term()
            elif self.peek("-"):
                self.pos += 1
                total = total - self.term()
            else:
                break
        return total


def parse_x(text, rank1=False, cartan=None):
    p = _Parser(text, rank1=rank1, cartan=cartan)
    p.ws()
    g = p.x_or_q() if not p.peek("x{") else p.graded(XElem, "x")
    p.done()
    return g


def parse_y(text, cartan=None):
    p = _Parser(text, cartan=cartan)
    g = p.graded(YElem, "y")
    p.done()
    return g


def parse_ax(text, rank1=False, cartan=None, atoms=None):
    p = _Parser(text, rank1=rank1, atoms=atoms, cartan=cartan)
    if p.s.strip() == "0":
        return AXElem()
    x = p.ax()
    p.done()
    return x


def parse_expr(text, rank1=False, cartan=None, atoms=None):
    """Dispatch on the literal kind: X, Y, or an A_X expression."""
    s = text.strip()
    if s.startswith("x{") and "e[" not in s:
        return parse_x(s, cartan=cartan)
    if s.startswith("y{"):
        return parse_y(s, cartan=cartan)
    return parse_ax(s, rank1=rank1, cartan=cartan, atoms=atoms)
