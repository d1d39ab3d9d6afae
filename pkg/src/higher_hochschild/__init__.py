"""Exact higher Hochschild homology of finite simplicial sets with CDGA coefficients."""
from .cdga import (FreeGradedAlgebra, GradedAlgebra, GradedModule, builtin_algebra,
                   dual_numbers, exterior, koszul, poly)
from .hochschild import BasisTooLarge, HochschildComplex, build_complex, induced_map, shuffle_product
from .homology import homology, is_quasi_iso, ring_on_homology
from .simplicial import FiniteSimplicialSet, SimplicialMap, pushout, standard_model

__version__ = "0.1.0"

__all__ = [
    "BasisTooLarge", "FiniteSimplicialSet", "FreeGradedAlgebra", "GradedAlgebra", "GradedModule",
    "HochschildComplex", "SimplicialMap", "build_complex", "builtin_algebra", "dual_numbers",
    "exterior", "homology", "induced_map", "is_quasi_iso", "koszul", "poly", "pushout",
    "ring_on_homology", "shuffle_product", "standard_model",
]
