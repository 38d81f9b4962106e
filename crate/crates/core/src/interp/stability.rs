//! Restriction to fewer variables, adding columns, and multiplication by
//! `x_1 ... x_N` in the basis `F_lambda`.

use std::collections::BTreeMap;

use super::fpoly::{f_poly, straighten};
use super::matrices::c_entry;
use super::onevar::f_uni;
use crate::error::{Error, Result};
use crate::partitions::{binom2, binom3, Partition};
use crate::qring::LaurentV;
use crate::symfun::{node, schur_expansion, MPoly, SymPoly};

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `F_{lambda;N}(x_1, ..., x_{N-1}, 1)`
pub fn restrict_last_var(lambda: &Partition, n: usize) -> Result<SymPoly> {
    if n < 2 {
        return Err(Error::InvalidArgument("restriction needs at least two variables".into()));
    }
    SymPoly::from_mpoly(&f_poly(lambda, n)?.to_mpoly().set_last(0))
}

/// Predicted restriction: zero if `lambda_N > 0`, else
/// `(-1)^(N-1) q^binom(N-1,2) F_{lambda;N-1}(q x_1, ..., q x_{N-1})`.
pub fn restrict_last_var_predicted(lambda: &Partition, n: usize) -> Result<SymPoly> {
    lambda.check_len(n)?;
    if lambda.len() == n {
        return Ok(SymPoly::zero(n - 1));
    }
    let m = n as i64 - 1;
    let f = f_poly(lambda, n - 1)?.scale_all_vars(2);
    Ok(f.scale(&LaurentV::monomial_q(binom2(m), sign(m))))
}

/// `(-1)^binom(N,2) q^(-binom(N,3)) c[lambda][mu]`, which does not depend on `N`.
pub fn normalized_c_entry(lambda: &Partition, mu: &Partition, n: usize) -> Result<LaurentV> {
    let nn = n as i64;
    Ok(c_entry(lambda, mu, n)?.shift_q(-binom3(nn)).scale(&sign(binom2(nn)).into()))
}

/// `q^(k binom(N,2)) prod_i f_k(x_i) F_lambda(q^k x)`
pub fn add_column_rhs(lambda: &Partition, k: u32, n: usize) -> Result<SymPoly> {
    let fk = f_uni(k);
    let mut prod = MPoly::one(n);
    for i in 0..n {
        let mut p = MPoly::zero(n);
        for (d, c) in fk.coeffs().iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = d as u32;
            p.add_term(e, c.clone());
        }
        prod = &prod * &p;
    }
    let shifted = f_poly(lambda, n)?.scale_all_vars(2 * k as i64).to_mpoly();
    let rhs = (&prod * &shifted).scale(&LaurentV::q_pow(k as i64 * binom2(n as i64)));
    SymPoly::from_mpoly(&rhs)
}

/// Checks `F_{lambda + k^N} = q^(k binom(N,2)) prod f_k(x_i) F_lambda(q^k x)`.
pub fn add_column_check(lambda: &Partition, k: u32, n: usize) -> Result<bool> {
    let lhs = f_poly(&lambda.add_columns(k, n)?, n)?;
    Ok(*lhs == add_column_rhs(lambda, k, n)?)
}

/// `x_1...x_N F_lambda = sum_I coefficient F_{lambda + e_I}`: the signed sum
/// `q^(-|lambda| - binom(N,2)) (-1)^|I|` over subsets `I` for which
/// `lambda + e_I` is a partition.
pub fn mul_by_en(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, LaurentV>> {
    lambda.check_len(n)?;
    let pre = -(lambda.size() as i64) - binom2(n as i64);
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let mut p = lambda.padded(n);
        for (i, pi) in p.iter_mut().enumerate() {
            if mask & (1 << i) != 0 {
                *pi += 1;
            }
        }
        if let Some(mu) = Partition::from_i64(&p) {
            out.insert(mu, LaurentV::monomial_q(pre, sign(mask.count_ones() as i64)));
        }
    }
    Ok(out)
}

pub fn combine(coeffs: &BTreeMap<Partition, LaurentV>, n: usize) -> Result<SymPoly> {
    let mut acc = SymPoly::zero(n);
    for (l, c) in coeffs {
        acc = &acc + &f_poly(l, n)?.scale(c);
    }
    Ok(acc)
}

pub fn mul_by_en_check(lambda: &Partition, n: usize) -> Result<bool> {
    let lhs = &*f_poly(lambda, n)? * &SymPoly::monomial(n, &vec![1; n])?;
    Ok(lhs == combine(&mul_by_en(lambda, n)?, n)?)
}

/// Truncation of `(x_1...x_N)^-1 F_lambda = q^binom(N,2) sum_v q^(|lambda| + |v|) F_{lambda+v}`
/// to `|v| <= order`, with index vectors that are not partitions
/// straightened by the determinant rule.
pub fn inv_en_series(lambda: &Partition, n: usize, order: u32) -> Result<BTreeMap<Partition, LaurentV>> {
    lambda.check_len(n)?;
    let base = lambda.padded(n);
    let mut out: BTreeMap<Partition, LaurentV> = BTreeMap::new();
    let mut v = vec![0i64; n];
    fn rec(
        i: usize,
        left: i64,
        v: &mut Vec<i64>,
        base: &[i64],
        pre: i64,
        out: &mut BTreeMap<Partition, LaurentV>,
    ) {
        if i == v.len() {
            let alpha: Vec<i64> = base.iter().zip(v.iter()).map(|(a, b)| a + b).collect();
            let vs: i64 = v.iter().sum();
            if let Some((s, mu)) = straighten(&alpha) {
                let e = out.entry(mu.clone()).or_default();
                *e += &LaurentV::monomial_q(pre + vs, s);
                if e.is_zero() {
                    out.remove(&mu);
                }
            }
            return;
        }
        for k in 0..=left {
            v[i] = k;
            rec(i + 1, left - k, v, base, pre, out);
        }
        v[i] = 0;
    }
    let pre = binom2(n as i64) + lambda.size() as i64;
    rec(0, order as i64, &mut v, &base, pre, &mut out);
    Ok(out)
}

/// Exact expansion of a symmetric polynomial on the basis `F_lambda`, by
/// peeling off top-degree Schur terms (the top-degree part of `F_lambda` is
/// a signed power of `q` times `s_lambda`).
pub fn f_expansion(f: &SymPoly) -> Result<BTreeMap<Partition, LaurentV>> {
    let n = f.nvars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.total_degree() {
        let top = schur_expansion(&rest.homogeneous_part(d));
        let (l, c) = top.iter().next_back().expect("nonzero top part");
        let fl = f_poly(l, n)?;
        let lead = fl.coeff(&{
            let mut k = l.parts().to_vec();
            k.resize(n, 0);
            k
        });
        let a = c.divide_exact(&lead)?;
        rest = &rest - &fl.scale(&a);
        out.insert(l.clone(), a);
    }
    Ok(out)
}

/// Verifies the truncated inverse: `x_1...x_N S - F_lambda` only involves
/// `F_nu` with `|nu| > |lambda| + order`, and vanishes at every node of size
/// at most `|lambda| + order`.
pub fn inv_en_check(lambda: &Partition, n: usize, order: u32) -> Result<bool> {
    let s = combine(&inv_en_series(lambda, n, order)?, n)?;
    let r = &(&s * &SymPoly::monomial(n, &vec![1; n])?) - &*f_poly(lambda, n)?;
    let limit = lambda.size() + order;
    let exp = f_expansion(&r)?;
    if exp.keys().any(|nu| nu.size() <= limit) {
        return Ok(false);
    }
    for mu in Partition::up_to_size(limit, n) {
        if !r.eval(&node(&mu, n)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restriction_examples() {
        let r = restrict_last_var(&part!(1), 2).unwrap();
        let want = SymPoly::from_mpoly(&{
            let mut p = MPoly::zero(1);
            p.add_term(vec![0], -LaurentV::one());
            p.add_term(vec![1], LaurentV::q_pow(1));
            p
        })
        .unwrap();
        assert_eq!(r, want);
        assert!(restrict_last_var(&part!(1, 1), 2).unwrap().is_zero());
        for l in part!(3, 3).sub_partitions() {
            for n in 2..=3 {
                assert_eq!(restrict_last_var(&l, n).unwrap(), restrict_last_var_predicted(&l, n).unwrap());
            }
        }
    }

    #[test]
    fn columns_and_products() {
        assert!(add_column_check(&part!(), 1, 2).unwrap());
        assert!(add_column_check(&part!(2, 1), 2, 2).unwrap());
        assert!(mul_by_en_check(&part!(), 2).unwrap());
        assert!(mul_by_en_check(&part!(2, 1), 3).unwrap());
        let e = mul_by_en(&part!(), 2).unwrap();
        assert_eq!(e.keys().cloned().collect::<Vec<_>>(), vec![part!(), part!(1), part!(1, 1)]);
    }

    #[test]
    fn x_inverse_series() {
        let s = inv_en_series(&part!(), 1, 4).unwrap();
        for m in 0..=4u32 {
            assert_eq!(s[&Partition::new(&[m]).unwrap()], LaurentV::q_pow(m as i64));
        }
        assert!(inv_en_check(&part!(), 1, 4).unwrap());
        assert!(inv_en_check(&part!(1), 2, 3).unwrap());
    }
}
