"""hopflab: exact structure-constant computations for finite-dimensional Hopf algebras."""

from .scalars import (
    Cyclotomic,
    PrimeField,
    RATIONALS,
    Rationals,
    Scalar,
    primitive_root_of_unity,
    scalar_arith,
    solve_linear_system,
)

__all__ = [
    "Cyclotomic",
    "PrimeField",
    "RATIONALS",
    "Rationals",
    "Scalar",
    "primitive_root_of_unity",
    "scalar_arith",
    "solve_linear_system",
]
