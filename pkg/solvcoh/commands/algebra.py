"""
Commands on a single Lie algebra and its lattices: betti, mostow, modify, lattice-check and
invariants.
"""
from collections import OrderedDict

from ..errors import PreconditionError, TranscendentalEntryError, UnsupportedAngleError
from ..exact import format_rational
from ..cohomology import CEAlgebra, CohomologyRing, cohomology, poincare_check
from ..solvmanifolds import (FiniteAction, presentation, modify, mostow_test, lattice_candidate, exponentials_from_roots,
                             lattice_integrality, symbolic_integrality, eigenvalue_layer_check, lattice_system_check,
                             invariant_cohomology)
from .base import Command


def ring_results(ring):
    """Betti numbers and class representatives of every degree."""
    classes = OrderedDict()
    for p in range(ring.top + 1):
        classes[str(p)] = ring.describe(p)
    return OrderedDict([("betti", ring.betti_numbers()), ("classes", classes)])


def matrix_results(m):
    return m.to_lists()


class BettiCommand(Command):
    """Betti numbers and cohomology classes of H*(g)."""
    name = "betti"
    help = "Chevalley-Eilenberg cohomology of a Lie algebra"

    def run(self, args):
        g, inputs = self.load_algebra(args)
        g.require_solvable()
        ring = cohomology(g)
        results = ring_results(ring)
        results["euler_characteristic"] = ring.euler_characteristic()
        results["unimodular"] = g.is_unimodular()
        if g.is_unimodular():
            results["poincare_duality"] = poincare_check(ring)
        self.info("b(%s) = %s", g.name, results["betti"])
        return self.document(inputs, results)


class MostowCommand(Command):
    """Whether de Rham cohomology of G/Γ equals H*(g) for the lattice at t̄ = qπ."""
    name = "mostow"
    help = "decide the Mostow condition at t = q*pi"
    needs_tbar = True

    def run(self, args):
        g, inputs = self.load_algebra(args)
        q = self.tbar(args)
        inputs["tbar"] = format_rational(q)
        pres = presentation(g)
        report = mostow_test(pres, q)
        results = OrderedDict([
            ("holds", report.holds),
            ("completely_solvable", pres.is_completely_solvable()),
            ("frequencies", [str(f) for f in report.frequencies]),
        ])
        if report.witness is not None:
            results["witness"] = [format_rational(c) for c in report.witness]
        return self.document(inputs, results)


class ModifyCommand(Command):
    """The modified algebra g̃ = R ⋉_{A−C} Rⁿ."""
    name = "modify"
    help = "remove the compact part of the semisimple part of ad X"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--full", action="store_true",
                            help="also remove rotation blocks with irrational frequency")

    def run(self, args):
        g, inputs = self.load_algebra(args)
        full = args.full or self.config["solvcoh_full_modification"]
        inputs["full"] = full
        pres = presentation(g)
        modified = modify(pres, full=full)
        again = modify(modified, full=full)
        results = OrderedDict([
            ("brackets", modified.describe()),
            ("text", modified.to_text()),
            ("compact_part", matrix_results(pres.C)),
            ("finite_part", matrix_results(pres.C_finite)),
            ("idempotent", again == modified),
            ("completely_solvable", presentation(modified).is_completely_solvable()),
            ("betti", cohomology(modified).betti_numbers()),
        ])
        identification = g.metadata.get("modified")
        if identification:
            results["identification"] = identification
        return self.document(inputs, results)


def _report_results(report):
    out = OrderedDict([("verdict", report.verdict), ("reason", report.reason)])
    if report.char_poly is not None:
        out["char_poly"] = str(report.char_poly.as_expr())
    if report.min_poly is not None:
        out["min_poly"] = str(report.min_poly.as_expr())
    if report.witness is not None:
        integer, conjugation = report.witness
        out["integer_matrix"] = matrix_results(integer)
        out["conjugation"] = matrix_results(conjugation)
    return out


class LatticeCheckCommand(Command):
    """
    Lattice criteria at t̄ = qπ: the eigenvalue test, then integrality of the monodromy.

    Real exponentials e^{t̄a} are taken from the roots of ``--exponential-roots`` when given;
    otherwise a monodromy without exact entries goes through the symbolic minimal polynomial.
    ``--system h1,h2`` decides solvability of the integrality system instead.
    """
    name = "lattice-check"
    help = "integrality criteria for the lattice at t = q*pi"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--system", metavar="H1,H2",
                            help="decide the integrality system for the companion cubic instead")
        parser.add_argument("--exponential-roots", metavar="POLY", dest="exponential_roots",
                            help="values of e^(t*a) for the nonzero real parts a, in increasing order "
                                 "of a, as the roots of POLY in its stem field")

    def run(self, args):
        if args.system:
            return self._system(args.system)
        g, inputs = self.load_algebra(args)
        q = self.tbar(args)
        if q is None:
            raise PreconditionError("command lattice-check needs --tbar q or --system h1,h2")
        inputs["tbar"] = format_rational(q)
        pres = presentation(g)
        exponentials = None
        if args.exponential_roots:
            inputs["exponential_roots"] = args.exponential_roots
            exponentials = exponentials_from_roots(pres, args.exponential_roots)
        results = OrderedDict([("eigenvalues", _report_results(eigenvalue_layer_check(pres, q)))])
        try:
            candidate = lattice_candidate(pres, q, exponentials, order=self.order)
        except (TranscendentalEntryError, UnsupportedAngleError) as err:
            self.info("%s; trying the symbolic minimal polynomial", err)
            report = symbolic_integrality(pres, q)
            if report is None:
                self.warn("%s", err)
                results["integrality"] = OrderedDict([("verdict", "out-of-scope"), ("reason", str(err))])
            else:
                results["integrality"] = _report_results(report)
                results["integrality"]["method"] = "symbolic"
        else:
            results["integrality"] = _report_results(lattice_integrality(candidate))
            results["integrality"]["method"] = "exact"
            results["unipotent_up_to_conjugacy"] = candidate.symbolic_unipotent
        note = g.metadata.get("lattices", {}).get(format_rational(q))
        if note:
            results["catalog_note"] = note
        return self.document(inputs, results)

    def _system(self, text):
        try:
            h1, h2 = (int(v) for v in text.split(","))
        except ValueError:
            raise PreconditionError("--system expects two integers h1,h2, got {!r}".format(text))
        report = lattice_system_check(h1, h2)
        results = OrderedDict([
            ("satisfiable", report.satisfiable),
            ("cubic", str(report.cubic.as_expr())),
            ("r_of_s", str(report.r_of_s)),
            ("intervals", [[format_rational(a), format_rational(b)] for a, b in report.intervals]),
        ])
        return self.document(OrderedDict([("system", [h1, h2])]), results)


class InvariantsCommand(Command):
    """H*(G/Γ) as the ψ-invariant cohomology of the modified algebra."""
    name = "invariants"
    help = "cohomology of the solvmanifold G/Gamma at t = q*pi"
    needs_tbar = True

    def run(self, args):
        g, inputs = self.load_algebra(args)
        q = self.tbar(args)
        inputs["tbar"] = format_rational(q)
        full = self.config["solvcoh_full_modification"]
        action = FiniteAction.from_monodromy(g, q, self.order, full=full)
        ring = invariant_cohomology(action, CohomologyRing(CEAlgebra(action.algebra)))
        results = ring_results(ring)
        results["action_order"] = action.order
        results["mostow"] = mostow_test(presentation(g), q).holds
        results["modified"] = action.algebra.describe()
        self.info("b(%s at %s pi) = %s", g.name, inputs["tbar"], results["betti"])
        return self.document(inputs, results)
