"""Dimension formulas for (graded) quiver varieties and the identities
relating them to the cocycle ``epsilon``.

All pairings here are finite: ``(q^s bar(eta) | x)_0`` for ``eta`` in Y and
``x`` in X is a dot product of coefficient arrays with an exponent offset.
"""

from dataclasses import dataclass, field

from .cartan import root_to_weight
from .lattice import YElem, omega, spec_q1, spec_q1_root


@dataclass(frozen=True)
class DimReport:
    name: str
    value: int
    inputs: dict = field(default_factory=dict)

    def __str__(self):
        args = ", ".join("%s=%s" % kv for kv in self.inputs.items())
        return "%s(%s) = %d" % (self.name, args, self.value)


def pair_bar(eta, x, s=0):
    """``(q^s bar(eta) | x)_0``."""
    xd = x.as_dict()
    return sum(h * xd.get((i, k - s), 0) for (i, k), h in eta.items())


def d_lambda_alpha(c, lam, alpha):
    """``(alpha | 2 lam - alpha)`` with ``(alpha_i | omega_j) = delta_ij``."""
    w = lam * 2 - root_to_weight(c, alpha)
    return sum(a * w[i] for i, a in alpha.items())


def _two_gamma(gamma):
    return gamma.shift(1) + gamma.shift(-1)


def d_gamma_eta(c, gamma, eta):
    """``(bar(eta) | [2] gamma - q Omega(eta))_0``."""
    return pair_bar(eta, _two_gamma(gamma) - omega(c, eta).shift(1))


def kappa_plus(c, gamma1, gamma2, eta1, eta2):
    return (pair_bar(eta1, gamma2.shift(-1))
            + pair_bar(eta2, gamma1.shift(1))
            - pair_bar(eta2, omega(c, eta1).shift(1)))


def kappa_pm(c, gamma1, gamma2, eta1, eta2):
    """``(kappa+, kappa-)`` for the splitting ``gamma = gamma1 + gamma2``,
    ``eta = eta1 + eta2``; ``kappa-`` swaps both pairs."""
    return kappa_plus(c, gamma1, gamma2, eta1, eta2), kappa_plus(c, gamma2, gamma1, eta2, eta1)


def kappa_eta(c, lam, alpha, gamma, eta):
    """``(kappa+_eta, kappa-_eta) = (d/2, d/2 - d_{gamma eta})`` with ``d = d_{lam alpha}``.

    ``lam`` and ``alpha`` default to ``gamma(1)`` and ``eta(1)``.
    """
    if lam is None:
        lam = spec_q1(gamma)
    if alpha is None:
        alpha = spec_q1_root(eta)
    d = d_lambda_alpha(c, lam, alpha)
    if d % 2:
        raise ValueError("d_lambda_alpha = %d is odd; inconsistent inputs" % d)
    return d // 2, d // 2 - d_gamma_eta(c, gamma, eta)


def _step(eta, eta2):
    diff = (eta2 - eta).items()
    if len(diff) != 1 or diff[0][1] != 1:
        raise ValueError("eta' must equal eta + q^t alpha_i")
    (i, t), _ = diff[0]
    return i, t


def c_dim_pair(c, gamma, eta, eta2):
    """``d_{eta' eta}`` from
    ``d_{g eta} + d_{g eta'} - d_{eta' eta} = (q bar(eta) + q^-1 bar(eta') | g)_0 - (q bar(eta) | Omega(eta'))_0``."""
    _step(eta, eta2)
    rhs = pair_bar(eta, gamma, 1) + pair_bar(eta2, gamma, -1) - pair_bar(eta, omega(c, eta2), 1)
    return d_gamma_eta(c, gamma, eta) + d_gamma_eta(c, gamma, eta2) - rhs


def c_dim(c, gamma, eta, i, t):
    return c_dim_pair(c, gamma, eta, eta + YElem.mono(i, t))


def e_dim(c, gamma, eta, i, t):
    """``1 + (alpha_i | q^-t (q^-1 - q)(gamma - Omega(eta')))_0``, ``eta' = eta + q^t alpha_i``."""
    z = (gamma - omega(c, eta + YElem.mono(i, t))).as_dict()
    return 1 + z.get((i, t + 1), 0) - z.get((i, t - 1), 0)


def e_dim_direct(c, gamma, eta, i, t):
    """``(bar(eta') - bar(eta) | q^-1 (gamma - eta) - q (gamma - eta'))_0``."""
    eta2 = eta + YElem.mono(i, t)
    x = (gamma - omega(c, eta)).shift(-1) - (gamma - omega(c, eta2)).shift(1)
    return pair_bar(eta2 - eta, x)
