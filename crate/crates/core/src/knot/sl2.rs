//! Habiro's cyclotomic expansion for `sl_2`, used as a cross-check.
//!
//! Here `V_j` is the `(j+1)`-dimensional module and `sigma_m` is the central
//! element `prod_{i=1}^m (C^2 - (v^i + v^-i)^2)`.

use crate::error::Result;
use crate::qring::{balanced_qbinom, balanced_qfact, balanced_qnum, LaurentV};

fn sign(k: u32) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Scalar of `sigma_m` on `V_j`: `prod_{i=1}^m (q^(j+1) + q^(-j-1) - q^i - q^-i)`.
pub fn sl2_sigma_eigen(m: u32, j: u32) -> LaurentV {
    let c = LaurentV::q_pow(j as i64 + 1) + LaurentV::q_pow(-(j as i64) - 1);
    (1..=m as i64).map(|i| &c - &(LaurentV::q_pow(i) + LaurentV::q_pow(-i))).product()
}

/// `a_n = sum_{i<=n} (-1)^(n-i) {2i+2}{i+1} / ({n+i+2}! {n-i}!) phi_i` for
/// `n < values.len()`, with `{k} = v^k - v^-k`. Written over `[2n+2]!` as
/// `sum (-1)^(n-i) [2i+2][i+1] [2n+2 choose n-i] phi_i / ([2n+2]! {1}^(2n))`.
pub fn sl2_a_coeffs(values: &[LaurentV]) -> Result<Vec<LaurentV>> {
    let brace1 = LaurentV::v_pow(1) - LaurentV::v_pow(-1);
    (0..values.len() as u32)
        .map(|n| {
            let mut s = LaurentV::zero();
            for i in 0..=n {
                let w = balanced_qnum(2 * i as i64 + 2)
                    * balanced_qnum(i as i64 + 1)
                    * balanced_qbinom(2 * n + 2, (n - i) as i64)
                    * &values[i as usize];
                s += &w.scale(&sign(n - i).into());
            }
            s.divide_exact(&(balanced_qfact(2 * n + 2) * brace1.pow(2 * n)))
        })
        .collect()
}

/// `sum_m a_m sigma_m(V_j)`.
pub fn sl2_reconstruct(a: &[LaurentV], j: u32) -> LaurentV {
    a.iter().enumerate().map(|(m, c)| c * &sl2_sigma_eigen(m as u32, j)).sum()
}

/// Coefficients of `V_0, ..., V_n` in
/// `P_n = sum_i (-1)^(n-i) [2i+2] / [n+i+2] [2n+1 choose n+1+i] V_i`.
pub fn sl2_pn_expansion(n: u32) -> Result<Vec<LaurentV>> {
    (0..=n)
        .map(|i| {
            let num = balanced_qnum(2 * i as i64 + 2) * balanced_qbinom(2 * n + 1, (n + 1 + i) as i64);
            Ok(num.divide_exact(&balanced_qnum((n + i + 2) as i64))?.scale(&sign(n - i).into()))
        })
        .collect()
}

/// `prod_{i<n} (V_1 - v^(2i+1) - v^(-2i-1))` in the representation ring,
/// using `V_1 V_i = V_(i+1) + V_(i-1)`.
pub fn sl2_pn_product(n: u32) -> Vec<LaurentV> {
    let mut p = vec![LaurentV::one()];
    for i in 0..n as i64 {
        let c = LaurentV::v_pow(2 * i + 1) + LaurentV::v_pow(-2 * i - 1);
        let mut next = vec![LaurentV::zero(); p.len() + 1];
        for (k, x) in p.iter().enumerate() {
            next[k + 1] += x;
            if k > 0 {
                next[k - 1] += x;
            }
            next[k] -= &(x * &c);
        }
        p = next;
    }
    p
}

/// Whether the closed form of `P_n` agrees with the product.
pub fn sl2_pn_check(n: u32) -> Result<bool> {
    Ok(sl2_pn_expansion(n)? == sl2_pn_product(n))
}
