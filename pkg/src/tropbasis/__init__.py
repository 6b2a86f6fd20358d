"""Tropical bases of matroids and of tropical linear spaces."""

from .basis import (
    has_unique_minimal_basis,
    is_tropical_basis,
    minimal_basis_greedy,
    minimum_basis_exact,
    necessary_circuits,
    variety_points_01,
)
from .errors import TropError
from .matroid import Matroid, subset, validate_circuits
from .puiseux import Puiseux
from .tropical import INF, trop_det, trop_rank

__all__ = [
    "INF",
    "Matroid",
    "Puiseux",
    "TropError",
    "has_unique_minimal_basis",
    "is_tropical_basis",
    "minimal_basis_greedy",
    "minimum_basis_exact",
    "necessary_circuits",
    "subset",
    "trop_det",
    "trop_rank",
    "validate_circuits",
    "variety_points_01",
]
