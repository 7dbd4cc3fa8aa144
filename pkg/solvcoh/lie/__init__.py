"""
Lie algebras given by structure constants, and the built-in catalog.
"""
from .algebra import LieAlgebra, JacobiReport, MAX_DIMENSION
from .catalog import CatalogEntry, CATALOG, catalog_build, catalog_entry, catalog_names
