"""Exact-arithmetic engine for qutrit magic state distillation with the
ternary Golay code, plus the 23-qubit Golay comparison curves.

Everything headline is exact: output-noise polynomials, success
probabilities, thresholds and basins come from rational arithmetic, with a
dense complex-matrix oracle for cross-checking small codes.
"""
from .codes import (
    ClassicalCode,
    StabilizerCode,
    css_from_self_orthogonal,
    five_qutrit_code,
    golay_binary,
    golay_qutrit_code,
    golay_ternary,
    is_self_orthogonal,
    norell_pair_reduction_code,
    strange_pair_reduction_code,
    transversal_invariance_check,
)
from .distill import (
    DistillationResult,
    ShapeFitError,
    SymbolicWigner,
    basin_raster,
    depolarizing_threshold_norell,
    distill,
    input_wigner_norell,
    input_wigner_strange,
    norell_iterate,
    norell_maps,
    strange_curve,
    threshold_strange,
    wigner_from_values,
    yield_report,
)
from .exactpoly import Poly, RationalFunction, isolate_fixed_point, series_truncate
from .fields import FieldMatrix, SympVec, field_inv, symplectic_product
from .qubit_golay import distill_t_5qubit, distill_t_golay23

__version__ = "0.1.0"

__all__ = [
    "ClassicalCode",
    "StabilizerCode",
    "css_from_self_orthogonal",
    "five_qutrit_code",
    "golay_binary",
    "golay_qutrit_code",
    "golay_ternary",
    "is_self_orthogonal",
    "norell_pair_reduction_code",
    "strange_pair_reduction_code",
    "transversal_invariance_check",
    "DistillationResult",
    "ShapeFitError",
    "SymbolicWigner",
    "basin_raster",
    "depolarizing_threshold_norell",
    "distill",
    "input_wigner_norell",
    "input_wigner_strange",
    "norell_iterate",
    "norell_maps",
    "strange_curve",
    "threshold_strange",
    "wigner_from_values",
    "yield_report",
    "Poly",
    "RationalFunction",
    "isolate_fixed_point",
    "series_truncate",
    "FieldMatrix",
    "SympVec",
    "field_inv",
    "symplectic_product",
    "distill_t_5qubit",
    "distill_t_golay23",
    "__version__",
]
