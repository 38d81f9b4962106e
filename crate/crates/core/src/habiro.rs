//! Truncations of the Habiro ring: residue classes of `Z[q, q^-1]` modulo
//! the ideal generated by `(q;q)_T`.
//!
//! `(q;q)_T` has constant term 1 and leading coefficient `(-1)^T`, so every
//! class has a unique polynomial representative of degree below
//! `T(T+1)/2`. Since `q (1 - (q;q)_T) / q = 1 - (q;q)_T`, the class of `q` is
//! invertible with inverse `(1 - (q;q)_T) / q`, which is also the partial sum
//! `sum_{n<T} q^n (q;q)_n`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qring::{eval_at_root, poch, CyclotomicResidue, LaurentV};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHabiro")]
pub struct HabiroElement {
    trunc: u32,
    rep: LaurentV,
}

#[derive(Deserialize)]
struct RawHabiro {
    trunc: u32,
    rep: LaurentV,
}

impl TryFrom<RawHabiro> for HabiroElement {
    type Error = Error;
    fn try_from(raw: RawHabiro) -> Result<Self> {
        let h = HabiroElement::embed(&raw.rep, raw.trunc)?;
        if h.rep != raw.rep {
            return Err(Error::Schema("Habiro representative is not reduced".into()));
        }
        Ok(h)
    }
}

fn dense_q(p: &LaurentV) -> Result<Vec<BigInt>> {
    let exps = p.q_exponents()?;
    let Some((&hi, _)) = exps.iter().next_back() else { return Ok(Vec::new()) };
    let mut out = vec![BigInt::zero(); hi as usize + 1];
    for (e, c) in exps {
        debug_assert!(e >= 0);
        out[e as usize] = c;
    }
    Ok(out)
}

fn from_dense_q(c: &[BigInt]) -> LaurentV {
    let mut out = LaurentV::zero();
    for (i, x) in c.iter().enumerate() {
        if !x.is_zero() {
            out.add_term(2 * i as i64, x.clone());
        }
    }
    out
}

/// Remainder of a q-polynomial (nonnegative exponents) modulo `(q;q)_T`.
fn reduce_poly(p: &LaurentV, t: u32) -> Result<LaurentV> {
    let m = dense_q(&poch(t))?;
    let d = m.len() - 1;
    let lead = m[d].clone();
    debug_assert!(lead.abs() == BigInt::from(1));
    let mut r = dense_q(p)?;
    while r.len() > d {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let k = &top * &lead;
        let shift = r.len() - d;
        for (j, c) in m.iter().enumerate().take(d) {
            r[shift + j] -= &k * c;
        }
    }
    Ok(from_dense_q(&r))
}

/// `(1 - (q;q)_T) / q`, the inverse of `q` modulo `(q;q)_T`.
fn q_inverse(t: u32) -> LaurentV {
    (LaurentV::one() - poch(t)).shift_q(-1)
}

impl HabiroElement {
    pub fn zero(t: u32) -> Result<Self> {
        Self::embed(&LaurentV::zero(), t)
    }

    pub fn one(t: u32) -> Result<Self> {
        Self::embed(&LaurentV::one(), t)
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn rep(&self) -> &LaurentV {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Image of a q-Laurent polynomial.
    pub fn embed(p: &LaurentV, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::OutOfRange("truncation order must be at least 1".into()));
        }
        let exps = p.q_exponents()?;
        let low = exps.keys().next().copied().unwrap_or(0).min(0);
        let poly = p.shift_q(-low);
        let mut rep = reduce_poly(&poly, t)?;
        if low < 0 {
            let inv = q_inverse(t);
            for _ in 0..(-low) {
                rep = reduce_poly(&(&rep * &inv), t)?;
            }
        }
        Ok(HabiroElement { trunc: t, rep })
    }

    /// `sum_{n<T} f_n (q;q)_n`; terms with `n >= T` lie in the ideal.
    pub fn from_series(terms: &[LaurentV], t: u32) -> Result<Self> {
        let mut acc = HabiroElement::zero(t)?;
        for (n, f) in terms.iter().enumerate().take(t as usize) {
            let term = HabiroElement::embed(f, t)?.mul(&HabiroElement::embed(&poch(n as u32), t)?)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    fn check(&self, other: &HabiroElement) -> Result<()> {
        if self.trunc != other.trunc {
            return Err(Error::InvalidArgument(format!(
                "truncation orders differ: {} vs {}",
                self.trunc, other.trunc
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &HabiroElement) -> Result<HabiroElement> {
        self.check(other)?;
        Ok(HabiroElement { trunc: self.trunc, rep: reduce_poly(&(&self.rep + &other.rep), self.trunc)? })
    }

    pub fn sub(&self, other: &HabiroElement) -> Result<HabiroElement> {
        self.check(other)?;
        Ok(HabiroElement { trunc: self.trunc, rep: reduce_poly(&(&self.rep - &other.rep), self.trunc)? })
    }

    pub fn neg(&self) -> HabiroElement {
        let rep = reduce_poly(&-&self.rep, self.trunc).expect("q-polynomial");
        HabiroElement { trunc: self.trunc, rep }
    }

    pub fn mul(&self, other: &HabiroElement) -> Result<HabiroElement> {
        self.check(other)?;
        Ok(HabiroElement { trunc: self.trunc, rep: reduce_poly(&(&self.rep * &other.rep), self.trunc)? })
    }

    /// Image under the projection to a smaller truncation.
    pub fn reduce_to(&self, t: u32) -> Result<HabiroElement> {
        if t == 0 || t > self.trunc {
            return Err(Error::OutOfRange(format!("cannot reduce order {} to {t}", self.trunc)));
        }
        HabiroElement::embed(&self.rep, t)
    }

    /// Value at a primitive `n`-th root of unity, determined when `n <= T`.
    pub fn eval_root(&self, n: u64) -> Result<CyclotomicResidue> {
        if n == 0 || n > self.trunc as u64 {
            return Err(Error::OutOfRange(format!(
                "root of order {n} is not determined by truncation {}",
                self.trunc
            )));
        }
        eval_at_root(&self.rep, n)
    }

    /// Coefficients `c_0, ..., c_k` of the expansion in powers of `q - 1`,
    /// determined when `k <= T - 1`.
    pub fn taylor_at_1(&self, k: u32) -> Result<Vec<BigInt>> {
        if k + 1 > self.trunc {
            return Err(Error::OutOfRange(format!(
                "Taylor coefficient {k} is not determined by truncation {}",
                self.trunc
            )));
        }
        let c = dense_q(&self.rep)?;
        Ok((0..=k as u64)
            .map(|j| {
                c.iter()
                    .enumerate()
                    .filter(|(e, _)| *e as u64 >= j)
                    .map(|(e, a)| a * binomial(BigInt::from(e), BigInt::from(j)))
                    .sum()
            })
            .collect())
    }

    /// True iff `candidate` represents this class.
    pub fn laurent_membership(&self, candidate: &LaurentV) -> Result<bool> {
        Ok(HabiroElement::embed(candidate, self.trunc)? == *self)
    }
}
