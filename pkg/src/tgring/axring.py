"""The twisted group algebra A_X over ``Z[v, v^-1]``.

Product rule on monomials: ``e^g . e^h = v^<g, h> e^(g + h)``.
"""

from .lattice import XElem, bracket, is_dominant
from .polyseries import ONE, ZERO, LaurentInt


class AXElem:
    """Finite sum ``sum_g coeff(g) e^g`` with coefficients in ``Z[v, v^-1]``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        terms = terms or {}
        self.terms = {k: LaurentInt.coerce(c) for k, c in terms.items() if c}

    @classmethod
    def mono(cls, gamma, coeff=ONE):
        return cls({gamma: coeff})

    @classmethod
    def one(cls):
        return cls({XElem(): ONE})

    def items(self):
        return sorted(self.terms.items())

    def keys(self):
        return self.terms.keys()

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, AXElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return AXElem(out)

    def __neg__(self):
        return AXElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = LaurentInt.coerce(coeff)
        return AXElem({k: c * coeff for k, c in self.terms.items()})

    def __repr__(self):
        from .literals import format_ax
        return "AXElem(%s)" % format_ax(self)


def ax_mul(c, x, y):
    out = {}
    for g, a in x.terms.items():
        for h, b in y.terms.items():
            key = g + h
            coeff = (a * b).shift(bracket(c, g, h))
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
    return AXElem(out)


def ax_prod(c, factors):
    out = AXElem.one()
    for f in factors:
        out = ax_mul(c, out, f)
    return out


def ax_bar(x):
    return AXElem({k: c.bar() for k, c in x.terms.items()})


def ax_coeff(x, gamma):
    return x.terms.get(gamma, ZERO)


def dominant_terms(x):
    return [(g, c) for g, c in x.items() if is_dominant(g)]


def ax_at_one(x):
    """Specialise ``v = 1`` (the ordinary q-character), as ``{gamma: int}``."""
    return {g: c.at_one() for g, c in x.items() if c.at_one()}
