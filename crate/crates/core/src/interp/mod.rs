//! Interpolation polynomials in one and `N` variables, their node-value
//! matrices, and the identities relating them.

mod fpoly;
mod interpolate;
mod matrices;
mod onevar;
mod stability;

pub use fpoly::{
    divisibility_certificate, f_blocks, f_poly, f_poly_det, shifted_parts, straighten, Block, BlockSum,
    DivisibilityCertificate,
};
pub use interpolate::interpolate_sym;
pub use matrices::{
    c_entry, d_entry_hopf, d_entry_okounkov, diag_value, homfly_coeff, hopf_norm, hopf_pairing, one_row_coeff,
    schur_coeffs, CMatrix, DMatrix, MatrixJson, TriMatrix,
};
pub use onevar::{
    binomial_shift_expand, f_uni, f_uni_binomial, from_f_basis, monomial_to_f, newton_1d, norm_1d, pairing_1d,
    x_inverse_node,
};
pub use stability::{
    add_column_check, add_column_rhs, combine, f_expansion, inv_en_check, inv_en_series, mul_by_en, mul_by_en_check,
    normalized_c_entry, restrict_last_var, restrict_last_var_predicted,
};
