"""
Exact scalars, polynomials and linear algebra.
"""
from .rational import to_rational, format_rational, is_integer
from .numberfield import (NumberField, NumberFieldElement, CyclotomicField, cyclotomic_field,
                          stem_field, stem_field_roots)
from .symbolic import RationalFunctionField, SymbolicRationalFunction, symbolic_char_coeffs
from .matrices import (Matrix, char_poly, min_poly, poly_at_matrix, nilpotent_exp, span_equal,
                       span_contains)
from .roots import sturm_isolate, isolate_real_roots, count_real_roots, RootIsolation
