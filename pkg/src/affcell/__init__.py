"""Cells, asymptotic rings and affine cellular structure of based algebras over Z[v, v^-1]."""
from .analysis import AnalysisReport, analyze
from .asymptotic import (
    AsymptoticAlgebra,
    GammaBoundError,
    P2Error,
    a_function,
    asymptotic_algebra,
    check_gamma_associativity,
    check_psi_factorization,
    check_P1,
    check_P2,
    check_P3,
    compute_psi,
    distinguished_set,
    gamma_table,
    infty_action,
    t_multiply,
)
from .based_algebra import (
    AlgebraElement,
    BasedAlgebra,
    TableError,
    ba_check_generalized_unit,
    ba_check_involution,
    ba_dump,
    ba_load,
    ba_multiply,
    check_associativity,
)
from .cells import (
    CellDecomposition,
    cell_ideal_basis,
    check_cell_order,
    check_involution_on_cells,
    lr_preorder,
    one_sided_cells,
    two_sided_cells,
)
from .genmatrix import (
    GenMatrixAlgebra,
    assemble_cell_chain,
    cell_labeling,
    cell_realization,
    gm_check_sigma_rho,
    gm_involution,
    gm_multiply,
    verify_affine_cell_ideal,
    verify_cell_realization,
)
from .laurent import LaurentPoly, lp_add, lp_bar, lp_coeff_at, lp_max_degree, lp_mul
from .repring import (
    JRingElement,
    RepRingElement,
    dual_weight,
    j_matrix_iso,
    j_multiply,
    lr_coefficient,
    tensor_decompose,
    weyl_dimension,
)
from .verdict import Verdict

__version__ = "0.1.0"
