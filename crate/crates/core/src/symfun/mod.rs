//! Symmetric polynomials in finitely many variables over `LaurentV`.

mod mpoly;
mod schur;
mod sympoly;

pub use mpoly::MPoly;
pub use schur::{
    dimq, from_schur, hopf_schur, node, principal_point, q_pairing, q_pairing_schur, schur,
    schur_expansion, schur_principal, signed_permutations,
};
pub use sympoly::{EvalPoint, SymPoly};
