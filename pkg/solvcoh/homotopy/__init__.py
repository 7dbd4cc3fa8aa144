"""
Free CDGAs, minimal models, Massey products, formality and the unipotent part of fibre cohomology.
"""
from .cdga import FreeCdga, free_cdga
from .minimal import MinimalModel, minimal_model
from .massey import MasseyTriple, massey_triple, massey_scan
from .formality import FormalityVerdict, formality_verdict, psi_certificate, FORMAL, NOT_FORMAL, UNKNOWN
from .oprea_tralle import UModule, OpreaTralleModel, nilpotent_submodule_U, umodule, assemble, \
    oprea_tralle_model
from .reference import ReferenceModel, reference_models, tbar_label, compare_with_reference
