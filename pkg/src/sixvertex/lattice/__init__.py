"""Boson and six-vertex lattice engine at generic ``t`` and at ``t = -1``."""

from .bethe import (
    EigenstateResult,
    NotOnShell,
    bethe_residuals,
    check_eigenstate,
    commutes,
    exchange_relations,
    transfer,
)
from .closed_forms import (
    Quotient,
    b_element_generic,
    b_element_minus_one,
    c_element_minus_one,
    dual_strict,
    dual_wavefunction,
    dual_wavefunction_closed,
    dual_wavefunction_closed_value,
    dwbpf_factorized,
    element_in_z,
    v_of_z,
    wavefunction,
    wavefunction_closed,
    z_of_v,
)
from .config import (
    GENERIC,
    MINUS_ONE,
    ORIGINAL,
    ROW_AUX,
    TILDE,
    ZFORM,
    LatticeConfig,
    LatticeConfigError,
    l_entry,
    l_matrix,
    local_transitions,
    original_weights,
    site_denominator,
)
from .intertwiners import (
    IntertwinerReport,
    check_rll,
    check_rll_tilde,
    check_ybe,
    corrupted_l_fn,
    r_matrix,
    r_tilde,
    verify_intertwiners,
)
from .rows import (
    StateVector,
    apply_row,
    apply_rows,
    apply_word,
    create_state,
    matrix_element,
    matrix_element_B,
    matrix_element_C,
    row_denominator,
    row_elements,
)
from .scalar import (
    BatteryReport,
    ClearedIdentity,
    check_intermediate,
    dwbpf,
    f_exchange,
    g_exchange,
    intermediate_determinant,
    intermediate_direct,
    intermediate_initial,
    intermediate_recursion_sides,
    rational_battery,
    scalar_product,
    scalar_product_identity,
    scalar_q_matrix,
    vacuum_a,
    vacuum_d,
)
