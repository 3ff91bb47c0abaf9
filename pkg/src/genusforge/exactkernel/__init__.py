"""Exact arithmetic: rational phases, integer matrices, cyclotomic numbers."""

from .rationals import PhaseMod1, PhaseMod2, as_fraction
from .intmatrix import (
    IntMatrix,
    SnfResult,
    det_int,
    freeze,
    identity,
    int_inv_unimodular,
    integer_kernel,
    mat_mul,
    mat_vec,
    rat_inv,
    rational_signature,
    row_lattice_basis,
    smith_normal_form,
    transpose,
)
from .cyclotomic import (
    ComplexInterval,
    CyclotomicNumber,
    cyclo_approx,
    cyclotomic_polynomial,
    euler_phi,
    order_cap,
    reduce_int_counts,
    root_of_unity,
    set_order_cap,
    sum_of_phases,
)

__all__ = [
    "PhaseMod1",
    "PhaseMod2",
    "as_fraction",
    "IntMatrix",
    "SnfResult",
    "det_int",
    "freeze",
    "identity",
    "int_inv_unimodular",
    "integer_kernel",
    "mat_mul",
    "mat_vec",
    "rat_inv",
    "rational_signature",
    "row_lattice_basis",
    "smith_normal_form",
    "transpose",
    "ComplexInterval",
    "CyclotomicNumber",
    "cyclo_approx",
    "cyclotomic_polynomial",
    "euler_phi",
    "order_cap",
    "reduce_int_counts",
    "root_of_unity",
    "set_order_cap",
    "sum_of_phases",
]
