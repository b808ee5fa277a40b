"""helical: exact computations with finite dg categories.

The engine builds directed subcategories and trivial extensions, mutates
exceptional and spherical collections, generates helices, applies spherical
twists, assembles helix Z-algebras and tensor algebras, and certifies
acyclicity and the Artin-Schelter Gorenstein property, all in exact
arithmetic over the rationals or a prime field.
"""

__version__ = "0.1.0"

from .field import PrimeField, RationalField, field_from_spec, field_to_spec
from .linalg import Matrix, kernel_basis, rank, solve

__all__ = [
    "PrimeField",
    "RationalField",
    "field_from_spec",
    "field_to_spec",
    "Matrix",
    "kernel_basis",
    "rank",
    "solve",
]
