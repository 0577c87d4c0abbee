"""Exact zonal polynomials, orthogonal-group moments, and Haar sampling."""

from .haar import (
    AngleSet,
    oracle_sample,
    oracle_sample_batch,
    orthogonality_check,
    realize,
    sample_angle_set,
    sample_orthogonal,
    sample_orthogonal_batch,
)
from .moments import (
    DiagonalSpec,
    MomentReport,
    ResidualInconsistencyError,
    SeriesResult,
    bilinear_coefficient,
    exact_trace_power_integral,
    hyper0f0,
    mc_exponential_trace,
    mc_linear_trace_power,
    mc_splitting,
    mc_trace_power,
    normalizing_product,
    residual_coefficient,
    residual_values,
)
from .partitions import (
    Partition,
    conjugate,
    dominated_by,
    gl_dimension,
    lb_eigenvalue,
    part_index_sum,
    part_square_sum,
    partitions_of,
    rho,
    sym_group_degree,
)
from .symfunc import MONOMIAL, POWERSUM, SymPoly, m_to_p, p_to_m
from .zonal import (
    DataIntegrityError,
    ZonalTable,
    character_degree,
    check_leading_coefficients,
    check_trace_identity,
    double_factorial,
    zonal_at_identity,
    zonal_in_powersums,
    zonal_row,
    zonal_table,
)

__all__ = [
    "AngleSet",
    "DataIntegrityError",
    "DiagonalSpec",
    "MONOMIAL",
    "MomentReport",
    "POWERSUM",
    "Partition",
    "ResidualInconsistencyError",
    "SeriesResult",
    "SymPoly",
    "ZonalTable",
    "bilinear_coefficient",
    "character_degree",
    "check_leading_coefficients",
    "check_trace_identity",
    "conjugate",
    "dominated_by",
    "double_factorial",
    "exact_trace_power_integral",
    "gl_dimension",
    "hyper0f0",
    "lb_eigenvalue",
    "m_to_p",
    "mc_exponential_trace",
    "mc_linear_trace_power",
    "mc_splitting",
    "mc_trace_power",
    "normalizing_product",
    "oracle_sample",
    "oracle_sample_batch",
    "orthogonality_check",
    "p_to_m",
    "part_index_sum",
    "part_square_sum",
    "partitions_of",
    "realize",
    "residual_coefficient",
    "residual_values",
    "rho",
    "sample_angle_set",
    "sample_orthogonal",
    "sample_orthogonal_batch",
    "sym_group_degree",
    "zonal_at_identity",
    "zonal_in_powersums",
    "zonal_row",
    "zonal_table",
]

__version__ = "0.1.0"
