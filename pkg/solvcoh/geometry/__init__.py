"""
Symplectic forms, Lefschetz properties and SU(3)-structures on Lie algebras.
"""
from .symplectic import TwoFormFamily, SymplecticReport, closed_two_forms, symplectic_exists, pfaffian
from .lefschetz import LefschetzDegree, LefschetzReport, lefschetz_map, lefschetz_degree, generic_lefschetz
from .halfflat import SU3Candidate, HalfFlatReport, half_flat_verify, standard_candidate
