//! One-variable interpolation basis `f_m(x) = (x;q)_m` on the nodes
//! `1, q^-1, q^-2, ...`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::qring::{poch, qbinom, shifted_poch, LaurentV, RationalQ, UniPoly};

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `f_m(x) = (1 - x)(1 - qx)...(1 - q^(m-1) x)`
pub fn f_uni(m: u32) -> UniPoly {
    let mut p = UniPoly::constant(LaurentV::one());
    for i in 0..m as i64 {
        let factor = UniPoly::from_coeffs(vec![LaurentV::one(), -LaurentV::q_pow(i)]);
        p = &p * &factor;
    }
    p
}

/// `f_m` from the q-binomial theorem, `sum_j (-1)^j q^(j(j-1)/2) [m j]_q x^j`.
pub fn f_uni_binomial(m: u32) -> UniPoly {
    UniPoly::from_coeffs(
        (0..=m as i64).map(|j| qbinom(m, j).shift_q(j * (j - 1) / 2).scale(&sign(j).into())).collect(),
    )
}

/// `(f_m, f_m) = q^-m (q;q)_m`
pub fn norm_1d(m: u32) -> LaurentV {
    poch(m).shift_q(-(m as i64))
}

/// The pairing `(g, h)` determined by `(x^a, x^b) = q^(-ab)`.
pub fn pairing_1d(g: &UniPoly, h: &UniPoly) -> LaurentV {
    let mut acc = LaurentV::zero();
    for (a, ga) in g.coeffs().iter().enumerate() {
        for (b, hb) in h.coeffs().iter().enumerate() {
            acc += &(ga * hb).shift_q(-((a * b) as i64));
        }
    }
    acc
}

/// Newton coefficients `a_0..a_M` of the polynomial with the given values at
/// `q^-k`, `k = 0..M`, from the closed formula. Cross-checked against
/// triangular back substitution.
pub fn newton_1d(values: &BTreeMap<u32, LaurentV>) -> Result<Vec<RationalQ>> {
    let m_max = values.len() as u32;
    for k in 0..m_max {
        if !values.contains_key(&k) {
            return Err(Error::InvalidArgument(format!("missing interpolation node q^-{k}")));
        }
    }
    let mut closed = Vec::new();
    for m in 0..m_max {
        let mut s = LaurentV::zero();
        for j in 0..=m as i64 {
            s += &(qbinom(m, j).shift_q(j * (j - 1) / 2).scale(&sign(j).into()) * &values[&(j as u32)]);
        }
        closed.push(RationalQ::new(s, norm_1d(m))?);
    }
    // f(q^-j) = sum_{m <= j} a_m f_m(q^-j)
    let mut back: Vec<RationalQ> = Vec::new();
    for j in 0..m_max {
        let mut rest = RationalQ::from(values[&j].clone());
        for (m, a) in back.iter().enumerate() {
            rest = &rest - &a.mul_laurent(&shifted_poch(-(j as i64), m as u32));
        }
        back.push(rest.div_laurent(&shifted_poch(-(j as i64), j))?);
    }
    if back != closed {
        return Err(Error::InvalidArgument("Newton closed form disagrees with back substitution".into()));
    }
    Ok(closed)
}

/// `k_(a,b) = (-1)^b q^(-ab + b(b+1)/2) [a b]_q`, so that `x^a = sum_b k_(a,b) f_b(x)`.
pub fn monomial_to_f(a: u32) -> Vec<LaurentV> {
    (0..=a as i64)
        .map(|b| qbinom(a, b).shift_q(-(a as i64) * b + b * (b + 1) / 2).scale(&sign(b).into()))
        .collect()
}

/// Coefficients of `(x - q^s)(x - q^(s+1))...(x - q^(s+m-1))` on `f_0..f_m`.
pub fn binomial_shift_expand(s: i64, m: u32) -> Vec<LaurentV> {
    (0..=m as i64)
        .map(|j| {
            let tail = shifted_poch(s + j, (m as i64 - j) as u32);
            (qbinom(m, j) * tail).shift_q(-j * m as i64 + j * (j + 1) / 2).scale(&sign(j).into())
        })
        .collect()
}

/// `sum_b c_b f_b(x)` as a polynomial.
pub fn from_f_basis(c: &[LaurentV]) -> UniPoly {
    c.iter().enumerate().map(|(b, cb)| f_uni(b as u32).scale(cb)).sum()
}

/// `u_j = sum_{m <= j} f_m(q^-j) q^m`; the expansion of `x^-1` predicts `u_j = q^j`.
pub fn x_inverse_node(j: u32) -> LaurentV {
    (0..=j).map(|m| shifted_poch(-(j as i64), m).shift_q(m as i64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_polynomials() {
        assert_eq!(f_uni(0), UniPoly::constant(LaurentV::one()));
        let f2 = f_uni(2);
        assert_eq!(f2.coeffs(), &[LaurentV::one(), -LaurentV::from_q_dense(0, &[1, 1]), LaurentV::q_pow(1)]);
        let f3 = f_uni(3);
        assert_eq!(f3.coeff(2), LaurentV::from_q_dense(1, &[1, 1, 1]));
        assert_eq!(f3.coeff(3), -LaurentV::q_pow(3));
        for m in 0..=10 {
            assert_eq!(f_uni(m), f_uni_binomial(m));
            for k in 0..m as i64 {
                assert!(f_uni(m).eval_q_pow(-k).is_zero());
            }
        }
    }

    #[test]
    fn orthogonality_1d() {
        for m in 0..6 {
            for k in 0..6 {
                let p = pairing_1d(&f_uni(m), &f_uni(k));
                if m == k {
                    assert_eq!(p, norm_1d(m));
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn newton_examples() {
        let ones: BTreeMap<u32, LaurentV> = (0..5).map(|k| (k, LaurentV::one())).collect();
        let a = newton_1d(&ones).unwrap();
        assert_eq!(a[0], RationalQ::one());
        assert!(a[1..].iter().all(|x| x.is_zero()));
        let xs: BTreeMap<u32, LaurentV> = (0..5).map(|k| (k, LaurentV::q_pow(-(k as i64)))).collect();
        let a = newton_1d(&xs).unwrap();
        assert_eq!(a[0], RationalQ::one());
        assert_eq!(a[1], RationalQ::from(-1));
        let inv: BTreeMap<u32, LaurentV> = (0..6).map(|k| (k, LaurentV::q_pow(k as i64))).collect();
        let a = newton_1d(&inv).unwrap();
        for (m, am) in a.iter().enumerate() {
            assert_eq!(*am, RationalQ::from(LaurentV::q_pow(m as i64)));
        }
    }

    #[test]
    fn transition_and_binomial() {
        for a in 0..=6 {
            let k = monomial_to_f(a);
            let mut xa = vec![LaurentV::zero(); a as usize + 1];
            xa[a as usize] = LaurentV::one();
            assert_eq!(from_f_basis(&k), UniPoly::from_coeffs(xa));
        }
        assert_eq!(monomial_to_f(1), vec![LaurentV::one(), -LaurentV::one()]);
        for m in 0..=6 {
            for s in -3..=3 {
                let lhs = (0..m as i64)
                    .map(|i| UniPoly::from_coeffs(vec![-LaurentV::q_pow(s + i), LaurentV::one()]))
                    .fold(UniPoly::constant(LaurentV::one()), |acc, f| &acc * &f);
                assert_eq!(from_f_basis(&binomial_shift_expand(s, m)), lhs, "s={s} m={m}");
            }
        }
        let c = binomial_shift_expand(5, 1);
        assert_eq!(c, vec![LaurentV::one_minus_q_pow(5), -LaurentV::one()]);
    }

    #[test]
    fn x_inverse_nodes() {
        for j in 0..=6 {
            assert_eq!(x_inverse_node(j), LaurentV::q_pow(j as i64));
        }
    }
}
