"""
Chevalley-Eilenberg complexes, cochain algebras and their cohomology rings.
"""
from .forms import ExteriorForm, ce_differential, multi_index_label, parse_label
from .complex import CochainAlgebra, CEAlgebra, SubAlgebra
from .ring import CohomologyRing, cohomology, cup, poincare_check
