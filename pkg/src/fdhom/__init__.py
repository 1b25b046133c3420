"""Homological invariants of finite-dimensional algebras over prime fields."""

from .linalg import FpMatrix, ModulusMismatch, kernel_basis, membership, rank, rref, solve
from .values import DimValue
from .algebra import (
    Algebra,
    AlgebraError,
    PresentationError,
    Quiver,
    RadicalIdeal,
    Relation,
    build_path_algebra,
    build_table_algebra,
)
from .modules import (
    BimoduleTensor,
    HomSpace,
    ModuleRep,
    direct_sum,
    end_algebra,
    hom,
    in_add,
    injective_cogenerator,
    is_injective,
    is_projective,
    tensor_over_algebra,
)

__all__ = [
    "FpMatrix", "ModulusMismatch", "kernel_basis", "membership", "rank", "rref", "solve",
    "DimValue",
    "Algebra", "AlgebraError", "PresentationError", "Quiver", "RadicalIdeal", "Relation",
    "build_path_algebra", "build_table_algebra",
    "BimoduleTensor", "HomSpace", "ModuleRep", "direct_sum", "end_algebra", "hom",
    "in_add", "injective_cogenerator", "is_injective", "is_projective",
    "tensor_over_algebra",
]

__version__ = "0.1.0"
