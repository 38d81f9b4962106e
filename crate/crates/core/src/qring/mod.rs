//! Exact coefficient rings: Laurent polynomials in `v` (with `q = v^2`),
//! reduced rational functions in `q`, q-calculus and root-of-unity residues.

mod cyclotomic;
mod expr;
mod laurent;
mod qcalc;
mod rational;
mod unipoly;
mod zpoly;

pub use cyclotomic::{eval_at_root, CyclotomicResidue};
pub use expr::{parse_laurent, parse_rational, parse_schur_sum};
pub use laurent::LaurentV;
pub use qcalc::{
    balanced_qbinom, balanced_qfact, balanced_qnum, cyclotomic, euler_phi, poch, qbinom,
    shifted_poch,
};
pub use rational::RationalQ;
pub use unipoly::UniPoly;
pub use zpoly::ZPoly;

/// Exact quotient, see [`LaurentV::divide_exact`].
pub fn divide_exact(p: &LaurentV, d: &LaurentV) -> crate::Result<LaurentV> {
    p.divide_exact(d)
}
