"""
model, formality and umodule commands.
"""
from collections import OrderedDict

from ..exact import format_rational
from ..cohomology import CEAlgebra
from ..homotopy import (minimal_model, formality_verdict, umodule, oprea_tralle_model, reference_models,
                        tbar_label, compare_with_reference)
from ..solvmanifolds import FiniteAction, invariant_cdga, presentation
from .base import Command


def model_source(g, q, order=24, full=False):
    """
    The cochain algebra whose minimal model is wanted and the base 1-form α^k in it: the
    Chevalley-Eilenberg algebra of g, or the ψ-invariant forms of the modified algebra at t̄ = qπ.
    """
    if q is None:
        ce = CEAlgebra(g)
        base = ce.basis_vector(1, g.acting_index()) if g.is_almost_abelian() else None
        return ce, base
    action = FiniteAction.from_monodromy(g, q, order, full=full)
    source = invariant_cdga(action)
    base = source.coordinates(1, source.parent.basis_vector(1, presentation(g).acting))
    return source, base


def model_results(model):
    free = model.model
    generators = []
    for name, degree in free.generators:
        dv = free.d_generators.get(name)
        generators.append(OrderedDict([("name", name), ("degree", degree),
                                       ("d", free.format_polynomial(dv) if dv else "0")]))
    return OrderedDict([
        ("model", model.describe()),
        ("generators", generators),
        ("counts", OrderedDict((str(d), c) for d, c in sorted(model.generator_counts().items()))),
        ("cap", model.cap),
        ("source_betti", model.source_ring.betti_numbers()),
    ])


def _matching_references(g, q):
    name = g.metadata.get("catalog")
    if name is None or q is None:
        return []
    label = tbar_label(q)
    out = []
    for reference in reference_models(name, label):
        if all(g.params.get(k) == v for k, v in reference.params.items()):
            out.append(reference)
    return out


class ModelCommand(Command):
    """Minimal model of H*(g), or of G/Γ at t̄ = qπ, compared with the published presentation."""
    name = "model"
    help = "minimal model up to the degree cap"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--oprea-tralle", action="store_true", dest="oprea_tralle",
                            help="assemble the model from the unipotent part of the fibre cohomology")

    def build_model(self, args):
        g, inputs = self.load_algebra(args)
        q = self.tbar(args)
        if q is not None:
            inputs["tbar"] = format_rational(q)
        cap = self.config["solvcoh_model_cap"]
        inputs["cap"] = cap
        if getattr(args, "oprea_tralle", False):
            if q is None:
                q = self.tbar(args, default=2)
                inputs["tbar"] = format_rational(q)
            inputs["oprea_tralle"] = True
            assembled = oprea_tralle_model(presentation(g), q, cap, self.order)
            if not assembled.consistent:
                self.warn("model of %s assembled from U disagrees with the invariant forms", g.name)
            return g, q, inputs, assembled.model, assembled
        source, base = model_source(g, q, self.order, self.config["solvcoh_full_modification"])
        self.info("minimal model of %s", source)
        return g, q, inputs, minimal_model(source, cap, base_vector=base), None

    def run(self, args):
        if self.config["solvcoh_skip_model"]:
            return self.document(OrderedDict(), OrderedDict([("skipped", "no_model")]))
        g, q, inputs, model, assembled = self.build_model(args)
        results = model_results(model)
        results["verified"] = model.verify()
        if assembled is not None:
            results["fiber_model"] = assembled.fiber_model.describe()
            results["consistent"] = assembled.consistent
        comparisons = []
        for reference in _matching_references(g, q):
            comparison = compare_with_reference(reference, model)
            comparisons.append(OrderedDict([
                ("reference", reference.build(model.cap).describe_model()),
                ("agrees", comparison.agrees),
                ("note", reference.note),
            ]))
        if comparisons:
            results["references"] = comparisons
        return self.document(inputs, results)


class FormalityCommand(ModelCommand):
    """Formality verdict: a ψ-map or s-formality certificate, a Massey witness, or unknown."""
    name = "formality"
    help = "decide formality of the minimal model where a certificate exists"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("--s", type=int, default=None, help="degree of the s-formality check")

    def run(self, args):
        if self.config["solvcoh_skip_model"]:
            return self.document(OrderedDict(), OrderedDict([("skipped", "no_model")]))
        g, q, inputs, model, _ = self.build_model(args)
        max_degree = self.config["solvcoh_massey_max_degree"]
        verdict = formality_verdict(model, s=args.s, massey_max_degree=max_degree, seed=self.seed,
                                    massey=max_degree > 0)
        ring = model.source_ring
        results = OrderedDict([
            ("verdict", verdict.verdict),
            ("method", verdict.method),
            ("certificate", verdict.certificate),
            ("psi_witness", verdict.witness),
            ("model", model.describe()),
            ("massey", [OrderedDict([("triple", t.describe(ring)), ("degree", t.degree),
                                     ("representative", ring.algebra.describe(t.degree, t.representative)),
                                     ("vanishes", t.vanishes)]) for t in verdict.massey]),
        ])
        self.info("%s: %s", g.name, verdict.summary())
        return self.document(inputs, results)


class UModuleCommand(Command):
    """The unipotent part U of the fibre cohomology at t̄ = qπ."""
    name = "umodule"
    help = "largest submodule of the fibre cohomology with unipotent monodromy"
    needs_tbar = True

    def run(self, args):
        g, inputs = self.load_algebra(args)
        q = self.tbar(args)
        inputs["tbar"] = format_rational(q)
        umod = umodule(presentation(g), q, self.order)
        degrees = OrderedDict()
        for p in range(umod.fiber.dim + 1):
            degrees[str(p)] = umod.describe(p)
        results = OrderedDict([("dimensions", umod.dimensions()), ("basis", degrees)])
        return self.document(inputs, results)
