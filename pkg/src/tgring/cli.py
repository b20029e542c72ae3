"""Command-line entry point: ``tgring <verb> [flags]``.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical
inconsistency (positivity or identity failure), 3 resource cap.
"""

import argparse
import sys

from .axring import ax_mul
from .cartan import CartanError, Weight, fold_cartan, parse_orbits, parse_type
from .chartab import CharTable, TableError, simple_char, standard_char, table_load, table_save
from .classical import (ClassicalError, expand_in_chi, folded_transition,
                        format_weight, orbit_size, restrict_ax, tensor_mult, weyl_dim)
from .decompose import (DEFAULT_MAX_ITER, DecompositionError, IterationCapError,
                        expand_in_simples, positivity_check)
from .lattice import _cache_for, is_dominant, spec_q1, spec_q1_root
from .literals import ParseError, format_ax, format_graded, parse_ax, parse_x, parse_y
from .polyseries import format_laurent
from .quiverdim import DimReport, d_gamma_eta, d_lambda_alpha, kappa_eta, kappa_pm
from .suites import UnknownSuite, run_suite

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


class MathFailure(Exception):
    pass


def parse_weight(text, c):
    """``"1,0,2"`` in fundamental-weight coordinates; ``"0"`` is the zero weight."""
    s = text.strip()
    if s == "0":
        return Weight()
    try:
        vals = [int(p) for p in s.split(",")]
    except ValueError:
        raise UsageError("bad weight literal %r; expected comma-separated integers" % text) from None
    if len(vals) != c.rank:
        raise UsageError("weight %r has %d entries, type %s has rank %d" % (text, len(vals), c, c.rank))
    return Weight.from_list(vals)


class Context:
    def __init__(self, args):
        self.args = args
        if not args.type:
            raise UsageError("--type is required")
        try:
            self.cartan = parse_type(args.type)
        except (CartanError, ValueError) as exc:
            raise UsageError("bad --type: %s" % exc) from None
        if getattr(args, "fold", None):
            self.cartan = fold_cartan(self.cartan, parse_orbits(args.fold))
        if args.trunc:
            _cache_for(self.cartan).ensure(args.trunc)
        self._table = None

    @property
    def rank1(self):
        return self.cartan.rank == 1

    @property
    def table(self):
        if self._table is None:
            if self.args.table:
                self._table = table_load(self.args.table, self.cartan)
            else:
                self._table = CharTable(self.cartan)
        return self._table

    def x(self, text):
        return parse_x(text, rank1=self.rank1, cartan=self.cartan)

    def y(self, text):
        return parse_y(text, cartan=self.cartan)

    def ax(self, text):
        atoms = {"b": lambda g: simple_char(self.table, g),
                 "w": lambda g: standard_char(self.table, g)}
        return parse_ax(text, rank1=self.rank1, cartan=self.cartan, atoms=atoms)

    def gamma(self):
        if not self.args.gamma:
            raise UsageError("--gamma is required")
        g = self.x(self.args.gamma)
        if not is_dominant(g):
            raise UsageError("--gamma must be dominant")
        return g


def _need(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError("--%s is required" % name.replace("_", "-"))
    return val


def cmd_mul(ctx, out):
    args = ctx.args
    lhs = ctx.ax(_need(args, "lhs"))
    rhs = ctx.ax(_need(args, "rhs"))
    out.write(format_ax(ax_mul(ctx.cartan, lhs, rhs)) + "\n")


def cmd_standard(ctx, out):
    out.write(format_ax(standard_char(ctx.table, ctx.gamma())) + "\n")


def cmd_simple(ctx, out):
    out.write(format_ax(simple_char(ctx.table, ctx.gamma())) + "\n")


def cmd_decompose(ctx, out):
    x = ctx.ax(_need(ctx.args, "expr"))
    e = expand_in_simples(ctx.table, x, ctx.args.max_iter)
    for g, coeff in e.items():
        out.write("%s : %s\n" % (format_graded(g), format_laurent(coeff)))
    ok, bad = positivity_check(e)
    if not ok:
        raise MathFailure("positivity fails at %s" % ", ".join(format_graded(g) for g in bad))


def cmd_dims(ctx, out):
    c = ctx.cartan
    args = ctx.args
    gamma, eta = ctx.x(_need(args, "gamma")), ctx.y(_need(args, "eta"))
    lam, alpha = spec_q1(gamma), spec_q1_root(eta)
    inputs = {"gamma": format_graded(gamma), "eta": format_graded(eta)}
    reports = [
        DimReport("d_gamma_eta", d_gamma_eta(c, gamma, eta), inputs),
        DimReport("d_lambda_alpha", d_lambda_alpha(c, lam, alpha), inputs),
    ]
    if reports[1].value % 2 == 0:
        kp, km = kappa_eta(c, lam, alpha, gamma, eta)
        reports += [DimReport("kappa+_eta", kp, inputs), DimReport("kappa-_eta", km, inputs)]
    if args.gamma2 or args.eta2:
        g2, e2 = ctx.x(_need(args, "gamma2")), ctx.y(_need(args, "eta2"))
        kp, km = kappa_pm(c, gamma, g2, eta, e2)
        split = dict(inputs, gamma2=format_graded(g2), eta2=format_graded(e2))
        reports += [DimReport("kappa+", kp, split), DimReport("kappa-", km, split)]
    for r in reports:
        out.write(str(r) + "\n")


def cmd_restrict(ctx, out):
    c = ctx.cartan
    e = expand_in_chi(c, restrict_ax(c, simple_char(ctx.table, ctx.gamma())))
    out.write(str(e) + "\n")
    if not all(v.is_nonneg() for v in e.terms.values()):
        raise MathFailure("restriction has a coefficient outside N[v,v^-1]")


def cmd_classical_tensor(ctx, out):
    c = ctx.cartan
    l1 = parse_weight(_need(ctx.args, "lhs"), c)
    l2 = parse_weight(_need(ctx.args, "rhs"), c)
    mult = tensor_mult(c, l1, l2)
    for mu in sorted(mult, key=lambda w: (-w.height(), w.items())):
        out.write("chi[%s] : %d\n" % (format_weight(mu), mult[mu]))
    total = sum(m * weyl_dim(c, mu) for mu, m in mult.items())
    if total != weyl_dim(c, l1) * weyl_dim(c, l2):
        raise MathFailure("dimension identity fails")


def cmd_fold(ctx, out):
    args = ctx.args
    cf = fold_cartan(ctx.cartan, parse_orbits(_need(args, "orbits")))
    out.write("cartan %s\n" % [list(r) for r in cf.a])
    out.write("symmetrizer %s\n" % list(cf.sym))
    if args.lam is not None:
        lam = parse_weight(args.lam, cf)
        row = folded_transition(cf, lam)
        for mu in sorted(row, key=lambda w: (-w.height(), w.items())):
            out.write("c[%s] : %d\n" % (format_weight(mu), row[mu]))
        dim = weyl_dim(cf, lam)
        out.write("dim %d\n" % dim)
        if sum(m * orbit_size(cf, mu) for mu, m in row.items()) != dim:
            raise MathFailure("multiplicities do not sum to the Weyl dimension")


def cmd_check(ctx, out):
    args = ctx.args
    rep = run_suite(_need(args, "suite"), args.n, args.seed)
    out.write(rep.text())
    if not rep.ok:
        raise MathFailure("suite %s failed" % rep.name)


def cmd_table(ctx, out):
    t = ctx.table
    args = ctx.args
    for g in args.gamma_list or []:
        g = ctx.x(g)
        standard_char(t, g)
        if ctx.rank1:
            simple_char(t, g)
    if args.save:
        table_save(t, args.save)
    out.write("type %s: %d fundamental, %d simple entries\n" % (t.cartan.name, len(t.fund), len(t.simples)))


COMMANDS = {
    "mul": cmd_mul,
    "standard": cmd_standard,
    "simple": cmd_simple,
    "decompose": cmd_decompose,
    "dims": cmd_dims,
    "restrict": cmd_restrict,
    "classical-tensor": cmd_classical_tensor,
    "fold": cmd_fold,
    "check": cmd_check,
    "table": cmd_table,
}

NO_TYPE = {"check"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="tgring", description="Quantum Grothendieck ring computations.")
    p.add_argument("verb", choices=sorted(COMMANDS))
    p.add_argument("--type", help="Cartan type, e.g. A1, A2, D4")
    p.add_argument("--fold", help="fold the type by an orbit partition, e.g. '1,3|2'")
    p.add_argument("--trunc", type=int, default=0, help="initial series truncation depth")
    p.add_argument("--table", help="character table file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p.add_argument("--gamma")
    p.add_argument("--eta")
    p.add_argument("--gamma2")
    p.add_argument("--eta2")
    p.add_argument("--expr")
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.add_argument("--orbits")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--suite")
    p.add_argument("--save", help="write the table to this path (table verb)")
    p.add_argument("--add", dest="gamma_list", action="append",
                   help="compute and store characters for this gamma (table verb)")
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verb in NO_TYPE and not args.type:
            ctx = argparse.Namespace(args=args)
        else:
            ctx = Context(args)
        COMMANDS[args.verb](ctx, out)
    except (UsageError, ParseError, CartanError, UnknownSuite, TableError, ValueError) as exc:
        err.write("error: %s\n" % (exc.args[0] if exc.args else exc))
        return EXIT_USAGE
    except IterationCapError as exc:
        err.write("error: %s\n" % exc)
        return EXIT_CAP
    except (MathFailure, DecompositionError, ClassicalError) as exc:
        err.write("error: %s\n" % exc)
        return EXIT_MATH
    return EXIT_OK


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
