use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MPoly;
use crate::error::{Error, Result};
use crate::qring::LaurentV;

/// Point `(v^e_1, ..., v^e_N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvalPoint {
    pub v_exponents: Vec<i64>,
}

impl EvalPoint {
    pub fn new(v_exponents: Vec<i64>) -> Self {
        EvalPoint { v_exponents }
    }

    /// `(q^a_1, ..., q^a_N)`
    pub fn from_q(q_exponents: &[i64]) -> Self {
        EvalPoint { v_exponents: q_exponents.iter().map(|a| 2 * a).collect() }
    }

    pub fn len(&self) -> usize {
        self.v_exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v_exponents.is_empty()
    }
}

/// Symmetric polynomial in `N` variables stored on the monomial symmetric
/// basis: key `a` (weakly decreasing, length `N`, zeros allowed) stands for
/// the orbit sum `m_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, LaurentV>,
}

/// Distinct permutations of `a`, in lexicographic order.
pub(crate) fn distinct_perms(a: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = a.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn is_decreasing(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

impl SymPoly {
    pub fn zero(nvars: usize) -> Self {
        SymPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: LaurentV) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, LaurentV::one())
    }

    /// The monomial symmetric function `m_a`.
    pub fn monomial(nvars: usize, a: &[u32]) -> Result<Self> {
        if a.len() > nvars {
            return Err(Error::NvarsMismatch(a.len(), nvars));
        }
        let mut key = a.to_vec();
        key.resize(nvars, 0);
        key.sort_by(|x, y| y.cmp(x));
        let mut p = Self::zero(nvars);
        p.add_term(key, LaurentV::one());
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, LaurentV> {
        &self.terms
    }

    pub fn coeff(&self, a: &[u32]) -> LaurentV {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: LaurentV) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Reads off the orbit representatives of a symmetric polynomial,
    /// rejecting input that is not symmetric.
    pub fn from_mpoly(p: &MPoly) -> Result<Self> {
        let mut out = SymPoly::zero(p.nvars());
        for (e, a) in p.terms() {
            if is_decreasing(e) {
                out.add_term(e.clone(), a.clone());
            }
        }
        if out.to_mpoly() != *p {
            return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
        }
        Ok(out)
    }

    /// Like `from_mpoly` without the symmetry check.
    pub(crate) fn from_mpoly_unchecked(p: &MPoly) -> Self {
        let mut out = SymPoly::zero(p.nvars());
        for (e, a) in p.terms() {
            if is_decreasing(e) {
                out.add_term(e.clone(), a.clone());
            }
        }
        out
    }

    pub fn to_mpoly(&self) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            for p in distinct_perms(e) {
                out.add_term(p, a.clone());
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(e, _)| e.iter().sum::<u32>() == d).map(|(e, a)| (e.clone(), a.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentV) -> SymPoly {
        let mut out = SymPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Substitutes `x_i -> v^k x_i` for every `i`.
    pub fn scale_all_vars(&self, v_exp: i64) -> SymPoly {
        SymPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.shift_v(v_exp * e.iter().sum::<u32>() as i64))).collect(),
        }
    }

    /// Applies `q -> q^-1` to every coefficient.
    pub fn invert_coeffs(&self) -> SymPoly {
        SymPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (e.clone(), a.invert_v())).collect() }
    }

    pub fn try_add(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &SymPoly) -> Result<SymPoly> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(self * other)
    }

    pub fn eval(&self, p: &EvalPoint) -> LaurentV {
        assert_eq!(p.len(), self.nvars, "evaluation point of wrong length");
        let mut acc = LaurentV::zero();
        for (e, a) in &self.terms {
            let mut orbit = LaurentV::zero();
            for perm in distinct_perms(e) {
                let k: i64 = perm.iter().zip(&p.v_exponents).map(|(&x, &y)| x as i64 * y).sum();
                orbit.add_term(k, 1.into());
            }
            acc += &(a * &orbit);
        }
        acc
    }
}

impl<'a> Add<&'a SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &'a SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, a) in &rhs.terms {
            out.add_term(e.clone(), a.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &'a SymPoly) -> SymPoly {
        self + &(-rhs)
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        SymPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (e.clone(), -a)).collect() }
    }
}

impl<'a> Mul<&'a SymPoly> for &SymPoly {
    type Output = SymPoly;
    fn mul(self, rhs: &'a SymPoly) -> SymPoly {
        assert_eq!(self.nvars, rhs.nvars);
        // only decreasing exponent vectors of the product are needed
        let g = rhs.to_mpoly();
        let mut out = SymPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            for p in distinct_perms(e) {
                for (f, b) in g.terms() {
                    let s: Vec<u32> = p.iter().zip(f).map(|(x, y)| x + y).collect();
                    if is_decreasing(&s) {
                        out.add_term(s, a * b);
                    }
                }
            }
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct SymJson {
    nvars: usize,
    terms: BTreeMap<String, LaurentV>,
}

fn exp_key(e: &[u32]) -> String {
    let inner: Vec<String> = e.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

impl Serialize for SymPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymJson { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (exp_key(e), a.clone())).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SymJson::deserialize(d)?;
        let mut out = SymPoly::zero(raw.nvars);
        for (k, a) in raw.terms {
            let e: Vec<u32> = serde_json::from_str(&k).map_err(|_| D::Error::custom(format!("bad exponent key {k:?}")))?;
            if e.len() > raw.nvars {
                return Err(D::Error::custom(format!("exponent key {k:?} has more than {} entries", raw.nvars)));
            }
            let mut e = e;
            e.resize(raw.nvars, 0);
            e.sort_by(|x, y| y.cmp(x));
            out.add_term(e, a);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_perms(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_perms(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_perms(&[1, 1]).len(), 1);
    }

    #[test]
    fn products_in_monomial_basis() {
        let e2 = SymPoly::monomial(2, &[1, 1]).unwrap();
        assert_eq!(&e2 * &e2, SymPoly::monomial(2, &[2, 2]).unwrap());
        let m1 = SymPoly::monomial(2, &[1]).unwrap();
        let sq = &m1 * &m1;
        let want = &SymPoly::monomial(2, &[2]).unwrap() + &e2.scale(&LaurentV::constant(2));
        assert_eq!(sq, want);
        assert_eq!(&sq * &SymPoly::one(2), sq);
        assert!(m1.try_mul(&SymPoly::one(3)).is_err());
    }

    #[test]
    fn evaluation_and_json() {
        let m1 = SymPoly::monomial(2, &[1]).unwrap();
        let v = m1.eval(&EvalPoint::from_q(&[-1, 0]));
        assert_eq!(v, LaurentV::one() + LaurentV::q_pow(-1));
        let s = serde_json::to_string(&m1).unwrap();
        let back: SymPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m1);
        assert!(s.contains("\"[1,0]\""));
    }
}
