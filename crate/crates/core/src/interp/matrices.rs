//! Node values `c`, the inverse matrix `d` by two routes, Hopf norms and
//! Schur coefficients of `F_lambda`.
//!
//! Matrices are stored by `(inner, outer)` with `inner ⊆ outer`:
//! `c[inner][outer] = F_inner(node of outer)`, and `d` is the matrix inverse
//! of `c` on the ideal below a bound, so that a function with node values
//! `g(mu)` expands as `sum_lambda (sum_{mu ⊆ lambda} d[mu][lambda] g(mu)) F_lambda`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::fpoly::f_poly;
use crate::error::{Error, Result};
use crate::partitions::{binom2, binom3, Partition};
use crate::qring::{poch, LaurentV, RationalQ};
use crate::symfun::{node, q_pairing, schur_expansion, schur_principal};

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `c[inner][outer] = F_inner(q^(-outer_i - N + i))`
pub fn c_entry(inner: &Partition, outer: &Partition, n: usize) -> Result<LaurentV> {
    outer.check_len(n)?;
    Ok(f_poly(inner, n)?.eval(&node(outer, n)))
}

/// `(-1)^binom(N,2) q^(n(lambda) + binom(N,3)) prod (1 - q^-h)`
pub fn diag_value(lambda: &Partition, n: usize) -> Result<LaurentV> {
    lambda.check_len(n)?;
    let nn = n as i64;
    let hooks: LaurentV = lambda.hooks().iter().map(|&h| LaurentV::one_minus_q_pow(-(h as i64))).product();
    Ok(hooks.shift_q(lambda.n() + binom3(nn)).scale(&sign(binom2(nn)).into()))
}

/// Entry of the inverse matrix from the closed formula
/// `(-1)^(|outer|-|inner|) q^(c(inner) - c(outer)) c*[inner][outer] / (c[outer][outer] c*[inner][inner])`,
/// where `c*` is `c` with `q -> q^-1` and `c(.)` is the total content.
pub fn d_entry_okounkov(inner: &Partition, outer: &Partition, n: usize) -> Result<RationalQ> {
    outer.check_len(n)?;
    if !outer.contains(inner) {
        return Ok(RationalQ::zero());
    }
    let e = sign(outer.size() as i64 - inner.size() as i64);
    let num = c_entry(inner, outer, n)?.invert_v().shift_q(inner.content_sum() - outer.content_sum()).scale(&e.into());
    let den = c_entry(outer, outer, n)? * c_entry(inner, inner, n)?.invert_v();
    RationalQ::new(num, den)
}

/// Schur coefficients `b[lambda][mu]` of `F_lambda = sum_mu b s_mu`.
pub fn schur_coeffs(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, LaurentV>> {
    Ok(schur_expansion(&*f_poly(lambda, n)?))
}

/// Closed form `(F_lambda, F_lambda) = q^(-|lambda| + 2 binom(N,3)) prod (1 - q^(N + c))`.
pub fn hopf_norm(lambda: &Partition, n: usize) -> Result<LaurentV> {
    lambda.check_len(n)?;
    let p: LaurentV = lambda.contents().iter().map(|&c| LaurentV::one_minus_q_pow(n as i64 + c)).product();
    Ok(p.shift_q(-(lambda.size() as i64) + 2 * binom3(n as i64)))
}

/// `(F_lambda, F_nu)` computed from Schur expansions.
pub fn hopf_pairing(lambda: &Partition, nu: &Partition, n: usize) -> Result<LaurentV> {
    Ok(q_pairing(&schur_coeffs(lambda, n)?, &schur_coeffs(nu, n)?, n))
}

/// Entry of the inverse matrix from the Hopf pairing:
/// `d[inner][outer] = b[outer][inner] s_inner(q^(1-N), ..., 1) / (F_outer, F_outer)`.
pub fn d_entry_hopf(inner: &Partition, outer: &Partition, n: usize) -> Result<RationalQ> {
    outer.check_len(n)?;
    inner.check_len(n)?;
    let b = schur_coeffs(outer, n)?.get(inner).cloned().unwrap_or_default();
    RationalQ::new(b * schur_principal(inner, n)?, hopf_norm(outer, n)?)
}

/// The `N`-independent coefficient
/// `(-1)^binom(N,2) q^binom(N,3) d[mu][lambda] q^(-|lambda| - |mu| - n(mu)) prod_{mu} (1 - q^h)`.
pub fn homfly_coeff(lambda: &Partition, mu: &Partition, n: usize) -> Result<RationalQ> {
    let nn = n as i64;
    let d = d_entry_okounkov(mu, lambda, n)?;
    let hooks: LaurentV = mu.hooks().iter().map(|&h| LaurentV::one_minus_q_pow(h as i64)).product();
    let f = hooks
        .shift_q(binom3(nn) - lambda.size() as i64 - mu.size() as i64 - mu.n())
        .scale(&sign(binom2(nn)).into());
    Ok(d.mul_laurent(&f))
}

/// One-row closed form `(-1)^j q^(j(j-3)/2) / (q;q)_(m-j)`.
pub fn one_row_coeff(m: u32, j: u32) -> RationalQ {
    let j = j as i64;
    let num = LaurentV::monomial_q(j * (j - 3) / 2, sign(j));
    RationalQ::new(num, poch(m - j as u32)).expect("nonzero denominator")
}

/// Upper-triangular matrix on the sub-partitions of a bound.
#[derive(Clone, Debug, PartialEq)]
pub struct TriMatrix<T> {
    pub n: usize,
    pub bound: Partition,
    pub entries: BTreeMap<(Partition, Partition), T>,
}

pub type CMatrix = TriMatrix<LaurentV>;
pub type DMatrix = TriMatrix<RationalQ>;

fn pairs(bound: &Partition) -> Vec<(Partition, Partition)> {
    let subs = bound.sub_partitions();
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if b.contains(a) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

impl<T: Clone + Default> TriMatrix<T> {
    pub fn get(&self, inner: &Partition, outer: &Partition) -> T {
        self.entries.get(&(inner.clone(), outer.clone())).cloned().unwrap_or_default()
    }

    pub fn partitions(&self) -> Vec<Partition> {
        self.bound.sub_partitions()
    }
}

impl CMatrix {
    /// Builds every entry `inner ⊆ outer ⊆ bound`, checking the diagonal
    /// against its closed form.
    pub fn build(n: usize, bound: &Partition) -> Result<CMatrix> {
        bound.check_len(n)?;
        let subs = bound.sub_partitions();
        // F_lambda are independent, build them in parallel first
        subs.par_iter().try_for_each(|l| f_poly(l, n).map(|_| ()))?;
        let entries: Result<Vec<_>> =
            pairs(bound).into_par_iter().map(|(a, b)| c_entry(&a, &b, n).map(|v| ((a, b), v))).collect();
        let entries: BTreeMap<_, _> = entries?.into_iter().collect();
        for l in &subs {
            if entries[&(l.clone(), l.clone())] != diag_value(l, n)? {
                return Err(Error::InvalidArgument(format!("diagonal entry at {l} disagrees with the hook formula")));
            }
        }
        Ok(TriMatrix { n, bound: bound.clone(), entries })
    }

    /// Pairs `(lambda, mu)` with `mu ⊉ lambda` whose node value is nonzero.
    pub fn vanishing_violations(&self) -> Result<Vec<(Partition, Partition)>> {
        let subs = self.partitions();
        let mut bad = Vec::new();
        for a in &subs {
            for b in &subs {
                if !b.contains(a) && !c_entry(a, b, self.n)?.is_zero() {
                    bad.push((a.clone(), b.clone()));
                }
            }
        }
        Ok(bad)
    }

    pub fn to_rational(&self) -> DMatrix {
        TriMatrix {
            n: self.n,
            bound: self.bound.clone(),
            entries: self.entries.iter().map(|(k, v)| (k.clone(), RationalQ::from(v.clone()))).collect(),
        }
    }
}

impl DMatrix {
    pub fn build_okounkov(n: usize, bound: &Partition) -> Result<DMatrix> {
        bound.check_len(n)?;
        let entries: Result<Vec<_>> =
            pairs(bound).into_par_iter().map(|(a, b)| d_entry_okounkov(&a, &b, n).map(|v| ((a, b), v))).collect();
        Ok(TriMatrix { n, bound: bound.clone(), entries: entries?.into_iter().collect() })
    }

    pub fn build_hopf(n: usize, bound: &Partition) -> Result<DMatrix> {
        bound.check_len(n)?;
        let entries: Result<Vec<_>> =
            pairs(bound).into_par_iter().map(|(a, b)| d_entry_hopf(&a, &b, n).map(|v| ((a, b), v))).collect();
        Ok(TriMatrix { n, bound: bound.clone(), entries: entries?.into_iter().collect() })
    }

    /// Triangular product of two matrices over the same bound.
    pub fn product(&self, other: &DMatrix) -> DMatrix {
        let subs = self.partitions();
        let mut entries = BTreeMap::new();
        for a in &subs {
            for c in &subs {
                if !c.contains(a) {
                    continue;
                }
                let s: RationalQ = subs
                    .iter()
                    .filter(|b| b.contains(a) && c.contains(b))
                    .map(|b| &self.get(a, b) * &other.get(b, c))
                    .sum();
                if !s.is_zero() {
                    entries.insert((a.clone(), c.clone()), s);
                }
            }
        }
        TriMatrix { n: self.n, bound: self.bound.clone(), entries }
    }

    pub fn is_identity(&self) -> bool {
        self.partitions().iter().all(|a| {
            self.partitions().iter().all(|b| {
                let v = self.get(a, b);
                if a == b {
                    v == RationalQ::one()
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

/// `{"N":2,"bound":[3,3],"entries":{"[1]|[3,2]": {"num":..,"den":..}}}`
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct MatrixJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub bound: Partition,
    pub entries: BTreeMap<String, RationalQ>,
}

impl From<&DMatrix> for MatrixJson {
    fn from(m: &DMatrix) -> Self {
        MatrixJson {
            n: m.n,
            bound: m.bound.clone(),
            entries: m.entries.iter().map(|((a, b), v)| (format!("{}|{}", a.key(), b.key()), v.clone())).collect(),
        }
    }
}

impl TryFrom<&MatrixJson> for DMatrix {
    type Error = Error;
    fn try_from(j: &MatrixJson) -> Result<DMatrix> {
        let mut entries = BTreeMap::new();
        for (k, v) in &j.entries {
            let (a, b) = k.split_once('|').ok_or_else(|| Error::Schema(format!("bad matrix key {k:?}")))?;
            entries.insert((Partition::parse(a)?, Partition::parse(b)?), v.clone());
        }
        Ok(TriMatrix { n: j.n, bound: j.bound.clone(), entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qd(low: i64, c: &[i64]) -> LaurentV {
        LaurentV::from_q_dense(low, c)
    }

    #[test]
    fn sample_entries() {
        assert_eq!(c_entry(&part!(1), &part!(3, 2), 2).unwrap(), qd(-3, &[1, 0, 1, -1, -1]));
        assert!(c_entry(&part!(2), &part!(1, 1), 2).unwrap().is_zero());
        assert_eq!(c_entry(&part!(1), &part!(1), 2).unwrap(), qd(-1, &[1, -1]));
        let want = qd(0, &[1, -1]).pow(2) * qd(0, &[1, 0, -1]) * qd(0, &[1, 0, 0, -1]) * qd(0, &[1, 0, 0, 0, -1]);
        assert_eq!(diag_value(&part!(3, 2), 2).unwrap(), want.shift_q(-9));
        for n in 2..5 {
            let s = sign(binom2(n as i64));
            let want = LaurentV::one_minus_q_pow(-1).shift_q(binom3(n as i64)).scale(&s.into());
            assert_eq!(diag_value(&part!(1), n).unwrap(), want);
        }
    }

    #[test]
    fn inverse_entries() {
        let d = d_entry_okounkov(&part!(), &part!(1), 2).unwrap();
        assert_eq!(d, RationalQ::new(-LaurentV::q_pow(1), qd(0, &[1, -1])).unwrap());
        let num = -(qd(0, &[-1, -1, 1, 0, 1])).shift_q(6);
        let den = qd(0, &[1, -1]).pow(3) * qd(0, &[1, 0, -1]) * qd(0, &[1, 0, 0, -1]) * qd(0, &[1, 0, 0, 0, -1]);
        let want = RationalQ::new(num, den).unwrap();
        assert_eq!(d_entry_okounkov(&part!(1), &part!(3, 2), 2).unwrap(), want);
        assert_eq!(d_entry_hopf(&part!(1), &part!(3, 2), 2).unwrap(), want);
        let l = part!(2, 1);
        assert_eq!(d_entry_okounkov(&l, &l, 2).unwrap(), RationalQ::from(c_entry(&l, &l, 2).unwrap()).recip().unwrap());
    }

    #[test]
    fn norms() {
        let want = qd(0, &[1, 0, 0, 0, -1]) * qd(0, &[1, 0, 0, -1]) * qd(0, &[1, 0, -1]).pow(2) * qd(0, &[1, -1]);
        assert_eq!(hopf_pairing(&part!(3, 2), &part!(3, 2), 2).unwrap(), want.shift_q(-5));
        assert_eq!(hopf_norm(&part!(3, 2), 2).unwrap(), want.shift_q(-5));
        assert_eq!(hopf_norm(&part!(), 2).unwrap(), LaurentV::one());
        assert_eq!(hopf_norm(&part!(1), 2).unwrap(), qd(-1, &[1, 0, -1]));
        assert_eq!(hopf_pairing(&part!(2, 1), &part!(2, 1), 2).unwrap(), hopf_norm(&part!(2, 1), 2).unwrap());
        assert!(hopf_pairing(&part!(2), &part!(1, 1), 2).unwrap().is_zero());
    }

    #[test]
    fn one_row_and_stability_of_homfly() {
        for m in 0..=4u32 {
            for j in 0..=m {
                let (l, mu) = (Partition::new(&[m]).unwrap(), Partition::new(&[j]).unwrap());
                let b2 = homfly_coeff(&l, &mu, 2).unwrap();
                assert_eq!(b2, homfly_coeff(&l, &mu, 3).unwrap());
                assert_eq!(b2, one_row_coeff(m, j), "m={m} j={j}");
            }
        }
        assert_eq!(homfly_coeff(&part!(2, 1), &part!(1), 2).unwrap(), homfly_coeff(&part!(2, 1), &part!(1), 3).unwrap());
    }
}
