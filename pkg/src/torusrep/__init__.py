"""torusrep: exact Cartan-matrix classification and vector-field
realizations of sl(r+1) and affine sl(r) on the algebraic torus."""

from .cartan import (
    GCM,
    CartanType,
    classify,
    connected_components,
    is_indecomposable,
    named_gcm,
    validate_gcm,
)
from .laurent import LaurentPoly
from .loop import (
    LoopCertificate,
    extract_loop_unit,
    finite_part_closure,
    highest_root_vectors,
    loop_certificate,
    verify_loop_law,
)
from .representation import (
    Representation,
    RootData,
    build_representation,
    build_root_data,
    candidate_representation,
    constant_parts,
    kernel_check,
    verify_relations,
)
from .solution import (
    SolutionMatrix,
    normalized_solution_matrices,
    scale,
    transpose_involution,
    validate_solution_matrix,
)
from .vectorfield import Derivation, ad_pow, bracket

__version__ = "0.1.0"

__all__ = [
    "GCM", "CartanType", "classify", "connected_components",
    "is_indecomposable", "named_gcm", "validate_gcm",
    "LaurentPoly", "Derivation", "ad_pow", "bracket",
    "SolutionMatrix", "normalized_solution_matrices", "scale",
    "transpose_involution", "validate_solution_matrix",
    "Representation", "RootData", "build_representation", "build_root_data",
    "candidate_representation", "constant_parts", "kernel_check",
    "verify_relations",
    "LoopCertificate", "extract_loop_unit", "finite_part_closure",
    "highest_root_vectors", "loop_certificate", "verify_loop_law",
]
