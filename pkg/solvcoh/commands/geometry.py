"""
symplectic and lefschetz commands.
"""
from collections import OrderedDict

from ..errors import PreconditionError
from ..exact import format_rational, to_rational
from ..cohomology import CEAlgebra, CohomologyRing
from ..geometry import closed_two_forms, symplectic_exists, generic_lefschetz, lefschetz_degree
from ..lie import LieAlgebra
from ..solvmanifolds import FiniteAction, invariant_cdga, modify, presentation
from .base import Command


def _family_results(family):
    return OrderedDict([
        ("closed_forms", len(family.basis)),
        ("coefficients", [str(s) for s in family.symbols]),
        ("generic", [str(c) for c in family.generic if c != 0]),
    ])


class SymplecticCommand(Command):
    """
    Invariant symplectic forms on g, or on the modified algebra with ``--modified``, or the
    ψ-invariant ones that descend to G/Γ with ``--tbar``.
    """
    name = "symplectic"
    help = "existence of symplectic forms and their nondegeneracy condition"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--modified", action="store_true", help="work on the modified algebra")

    def _target(self, args, g, inputs):
        q = self.tbar(args)
        if q is not None:
            inputs["tbar"] = format_rational(q)
            return invariant_cdga(FiniteAction.from_monodromy(g, q, self.order))
        if args.modified:
            inputs["modified"] = True
            return modify(presentation(g), full=self.config["solvcoh_full_modification"])
        return g

    def run(self, args):
        g, inputs = self.load_algebra(args)
        target = self._target(args, g, inputs)
        report = symplectic_exists(target, samples=self.config["solvcoh_symplectic_samples"], seed=self.seed)
        results = OrderedDict([("exists", report.exists), ("method", report.method),
                               ("condition", str(report.condition))])
        results.update(_family_results(report.family))
        if report.sample is not None:
            results["sample"] = [format_rational(v) for v in report.sample]
        return self.document(inputs, results)


class LefschetzCommand(SymplecticCommand):
    """
    Lefschetz verdicts L^{n−k}: H^k → H^{2n−k} for the generic symplectic member, or for the
    member with the coefficients given by ``--omega``.
    """
    name = "lefschetz"
    help = "s-Lefschetz and hard Lefschetz for generic or given symplectic forms"

    @classmethod
    def add_arguments(cls, parser):
        super().add_arguments(parser)
        parser.add_argument("--s", type=int, default=None, help="check k <= s only (default n - 1)")
        parser.add_argument("--omega", metavar="C1,C2,...",
                            help="coefficients of the closed-form family instead of a generic member")

    def run(self, args):
        g, inputs = self.load_algebra(args)
        target = self._target(args, g, inputs)
        if isinstance(target, LieAlgebra):
            target = CEAlgebra(target)
        ring = CohomologyRing(target)
        if args.omega:
            family = closed_two_forms(target)
            values = _coefficients(args.omega, len(family.basis))
            inputs["omega"] = [format_rational(v) for v in values]
            report = lefschetz_degree(ring, family.member(values), args.s)
        else:
            report, family = generic_lefschetz(ring, args.s, samples=self.config["solvcoh_symplectic_samples"],
                                               seed=self.seed)
        results = _family_results(family)
        results["symplectic"] = report is not None
        if report is None:
            return self.document(inputs, results)
        results["top_class"] = report.top_class
        results["degrees"] = [OrderedDict([("k", d.k), ("rank", d.rank), ("source", d.source),
                                           ("target", d.target), ("isomorphism", d.isomorphism)])
                              for d in report.degrees]
        results["lefschetz_degree"] = report.lefschetz_degree()
        results["hard_lefschetz"] = report.hard
        return self.document(inputs, results)


def _coefficients(text, count):
    try:
        values = [to_rational(v) for v in text.split(",")]
    except (ValueError, TypeError, ZeroDivisionError) as err:
        raise PreconditionError("--omega: {}".format(err))
    if len(values) != count:
        raise PreconditionError("--omega needs {} coefficients, got {}".format(count, len(values)))
    return values
