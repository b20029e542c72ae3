"""Expansion of A_X elements in the basis of simple characters."""

from dataclasses import dataclass, field

from .axring import AXElem, ax_mul
from .chartab import simple_char
from .lattice import bracket, is_dominant, spec_q1
from .polyseries import ONE, LaurentInt


class DecompositionError(ArithmeticError):
    pass


class IterationCapError(DecompositionError):
    pass


DEFAULT_MAX_ITER = 10_000


@dataclass
class BExpansion:
    terms: dict = field(default_factory=dict)
    residual: AXElem = field(default_factory=AXElem)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: selection_key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.terms == {k: LaurentInt.coerce(v) for k, v in other.items()} and not self.residual
        return isinstance(other, BExpansion) and self.terms == other.terms and self.residual == other.residual


def selection_key(gamma):
    """Height of ``gamma(1)``, then total q-degree, then the key itself."""
    return (spec_q1(gamma).height(), sum(k * g for (_, k), g in gamma.items()), gamma.items())


def expand_in_simples(t, x, max_iter=DEFAULT_MAX_ITER):
    """Peel simple characters off ``x`` at its maximal dominant terms."""
    residual = x
    terms = {}
    for _ in range(max_iter):
        if not residual:
            return BExpansion(terms, residual)
        dom = [g for g in residual.keys() if is_dominant(g)]
        if not dom:
            raise DecompositionError(
                "residual has no dominant term; input is not in the span of the table")
        top = max(dom, key=selection_key)
        coeff = residual.terms[top]
        simple = simple_char(t, top)
        residual = residual - simple.scale(coeff)
        terms[top] = terms.get(top, LaurentInt()) + coeff
        if not terms[top]:
            del terms[top]
    raise IterationCapError("expansion did not terminate within %d steps" % max_iter)


def reconstruct(t, e):
    out = AXElem()
    for g, coeff in e.terms.items():
        out = out + simple_char(t, g).scale(coeff)
    return out


def positivity_check(e):
    """``(ok, offending)``: ``ok`` iff every coefficient lies in ``N[v, v^-1]``."""
    bad = [g for g, coeff in sorted(e.terms.items()) if not coeff.is_nonneg()]
    return not bad, bad


def product_expansion(t, gamma, gamma2, max_iter=DEFAULT_MAX_ITER):
    c = t.cartan
    return expand_in_simples(t, ax_mul(c, simple_char(t, gamma), simple_char(t, gamma2)), max_iter)


@dataclass
class ConjectureReport:
    gamma: object
    gamma2: object
    single: bool
    commute_up_to_power: bool
    simple_tensor: bool
    expansion: BExpansion
    reversed_expansion: BExpansion

    @property
    def coherent(self):
        return self.single == self.commute_up_to_power == self.simple_tensor


def conjecture_probe(t, gamma, gamma2, max_iter=DEFAULT_MAX_ITER):
    """Evaluate the three conditions of the product conjecture for ``b_g b_h``."""
    c = t.cartan
    e = product_expansion(t, gamma, gamma2, max_iter)
    r = product_expansion(t, gamma2, gamma, max_iter)
    single = len(e.terms) == 1 and next(iter(e.terms.values())).is_monomial()
    commute = False
    if set(e.terms) == set(r.terms):
        shifts = set()
        for g, coeff in e.terms.items():
            other = r.terms[g]
            d = other.top() - coeff.top()
            if coeff.shift(d) != other:
                break
            shifts.add(d)
        else:
            commute = len(shifts) <= 1
    want = {gamma + gamma2: ONE.shift(bracket(c, gamma, gamma2))}
    simple_tensor = e.terms == want
    return ConjectureReport(gamma, gamma2, single, commute, simple_tensor, e, r)
