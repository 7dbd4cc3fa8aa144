"""
Published minimal models of the compact quotients, as free CDGA presentations.

Keys are ``(algebra, tbar)`` with ``tbar`` one of ``"2pi"``, ``"pi"``, ``"pi/2"`` or ``"other"``
(every admissible t̄ apart from the listed ones).  Greek generator names are written ``b`` and
``c``.
"""
import logging
from collections import namedtuple

from ..exact import to_rational
from ..cohomology import CohomologyRing
from .cdga import free_cdga

logger = logging.getLogger(__name__)


class ReferenceModel(namedtuple("ReferenceModel", ["algebra", "tbar", "params", "generators",
                                                   "differentials", "note"])):

    def build(self, cap=7):
        return free_cdga(self.generators, self.differentials, cap,
                         name="{}@{}".format(self.algebra, self.tbar))


def _model(algebra, tbar, generators, differentials=None, params=None, note=None):
    return ReferenceModel(algebra, tbar, dict(params or {}), generators, dict(differentials or {}), note)


_FREE_TORUS = "A:1, x:1, y:1, z:3"
_SQUARE_KILLED = "A:1, x:2, b:3, y:3"

REFERENCE_MODELS = {}

for _model_entry in [
    _model("g6.8", "2pi", _FREE_TORUS, params={"p": 0}),
    _model("g6.8", "other", _SQUARE_KILLED, {"b": "x^2"}, params={"p": 0}),
    _model("g6.10", "2pi", "A:1, x:1, y:1, z:1, p:1, q:1", {"p": "A*x", "q": "A*p"}, params={"a": 0}),
    _model("g6.10", "other", "A:1, x:1, y:1, z:1, t:2, b:3", {"y": "A*x", "z": "A*y", "b": "t^2"},
           params={"a": 0}),
    _model("g6.11", "2pi", _FREE_TORUS, params={"p": 0}),
    _model("g6.11", "other", _SQUARE_KILLED, {"b": "x^2"}, params={"p": 0}),
    _model("g5.14+R", "2pi", "u:1, A:1, x:1, y:1, z:1, t:1", {"t": "A*x"}),
    _model("g5.14+R", "other", "u:1, A:1, x:1, y:1, z:2, b:3", {"y": "A*x", "b": "z^2"}),
    _model("g5.17+R", "2pi", "u:1, A:1, x:1, y:1, z:1, t:1", params={"p": 0}),
    _model("g5.17+R", "pi", "u:1, A:1, x:4, b:7", {"b": "x^2"}, params={"p": 1, "r": 2},
           note="r even, p nonzero"),
    _model("g5.17+R", "pi", "u:1, A:1, x:1, y:1, z:2, b:3", {"b": "z^2"}, params={"p": 0, "r": 2},
           note="r even, p = 0"),
    _model("g5.17+R", "pi/2", "u:1, A:1, x:2, y:2, b:3, c:3", {"b": "x^2", "c": "y^2"},
           params={"p": 0, "r": 2}, note="r = 2 mod 4"),
    _model("g5.18+R", "2pi", "u:1, A:1, x:1, y:1, z:1, t:1", {"z": "A*x", "t": "A*y"}),
    _model("g3.5+R3", "2pi", "w:1, v:1, u:1, A:1, x:1, y:1",
           note="six closed generators of degree one; the printed list shows five"),
    _model("g3.5+R3", "other", "w:1, v:1, u:1, A:1, x:2, b:3", {"b": "x^2"}),
]:
    REFERENCE_MODELS.setdefault((_model_entry.algebra, _model_entry.tbar), []).append(_model_entry)

TBAR_LABELS = {"2pi": 2, "pi": 1, "pi/2": "1/2"}


def reference_models(algebra=None, tbar=None):
    """All reference models, optionally filtered by algebra name and t̄ label."""
    out = []
    for (name, label), models in sorted(REFERENCE_MODELS.items()):
        if algebra is not None and name != algebra:
            continue
        if tbar is not None and label != tbar:
            continue
        out.extend(models)
    return out


def tbar_label(q):
    """The reference key for t̄ = qπ."""
    for label, value in TBAR_LABELS.items():
        if to_rational(value) == to_rational(q):
            return label
    return "other"


class Comparison(namedtuple("Comparison", ["agrees", "betti", "reference_betti", "counts",
                                           "reference_counts"])):

    def __bool__(self):
        return self.agrees


def compare_with_reference(reference, model):
    """
    Betti numbers through degree cap − 1 and generator counts below the cap of a computed
    :class:`~solvcoh.homotopy.minimal.MinimalModel` against a reference presentation.
    """
    cap = model.cap
    free = reference.build(cap) if isinstance(reference, ReferenceModel) else reference
    ring = CohomologyRing(free)
    betti = [model.source_ring.betti(p) for p in range(cap)]
    reference_betti = [ring.betti(p) for p in range(cap)]
    counts = {d: c for d, c in model.generator_counts().items() if d < cap}
    reference_counts = {d: c for d, c in free.generator_counts().items() if d < cap}
    agrees = betti == reference_betti and counts == reference_counts
    if not agrees:
        logger.info("%s differs from the computed model %s", free.describe_model(), model.describe())
    return Comparison(agrees, betti, reference_betti, counts, reference_counts)
