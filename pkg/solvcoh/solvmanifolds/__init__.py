"""
Almost abelian solvmanifolds: presentations, lattice criteria and finite deck actions.
"""
from .presentation import (AlmostAbelianPresentation, Frequency, Component, MostowReport, LatticeCandidate,
                           jordan_chevalley, compact_part, presentation, modify, mostow_test, monodromy,
                           symbolic_monodromy, surrogate_frequency, exponentials_from_roots, lattice_candidate,
                           finite_rotation)
from .lattices import (IntegralityReport, SystemReport, NECESSARY_PASS, NECESSARY_FAIL, VERIFIED,
                       verify_witness, construct_witness, lattice_integrality, symbolic_integrality,
                       eigenvalue_layer_check, lattice_system_check)
from .actions import (FiniteAction, FixedClasses, action_on_cohomology, fixed_classes, invariant_cdga,
                      invariant_cohomology)
