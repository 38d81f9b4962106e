use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::qring::LaurentV;

/// Polynomial in `x_1, ..., x_n` with Laurent coefficients. Exponents are
/// nonnegative; the key is the full exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, LaurentV>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: LaurentV) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, LaurentV::one())
    }

    /// `c * x_i^k`
    pub fn var_pow(nvars: usize, i: usize, k: u32, c: LaurentV) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        let mut p = Self::zero(nvars);
        p.add_term(e, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, LaurentV> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> LaurentV {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: LaurentV) {
        debug_assert_eq!(e.len(), self.nvars);
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

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, c: &LaurentV) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a * c);
        }
        out
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap(&self, i: usize, j: usize) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, a.clone());
        }
        out
    }

    /// Substitutes `x_i -> v^(s_i) x_i`.
    pub fn scale_vars(&self, v_shift: &[i64]) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            let k: i64 = e.iter().zip(v_shift).map(|(&ei, &si)| ei as i64 * si).sum();
            out.add_term(e.clone(), a.shift_v(k));
        }
        out
    }

    /// Sets the last variable to `v^e`, giving a polynomial in one fewer
    /// variable.
    pub fn set_last(&self, v_exp: i64) -> MPoly {
        let n = self.nvars - 1;
        let mut out = MPoly::zero(n);
        for (e, a) in &self.terms {
            out.add_term(e[..n].to_vec(), a.shift_v(e[n] as i64 * v_exp));
        }
        out
    }

    /// Value at `x_i = v^(p_i)`.
    pub fn eval_v(&self, point: &[i64]) -> LaurentV {
        assert_eq!(point.len(), self.nvars);
        let mut acc = LaurentV::zero();
        for (e, a) in &self.terms {
            let k: i64 = e.iter().zip(point).map(|(&ei, &pi)| ei as i64 * pi).sum();
            acc += &a.shift_v(k);
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.swap(i, i + 1) == *self)
    }

    /// Exact quotient by `x_i - x_j`, by synthetic division in `x_i`.
    pub fn div_linear(&self, i: usize, j: usize) -> Result<MPoly> {
        // group by the exponent of x_i
        let mut by_deg: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, a) in &self.terms {
            let mut rest = e.clone();
            let d = rest[i];
            rest[i] = 0;
            by_deg.entry(d).or_insert_with(|| MPoly::zero(self.nvars)).add_term(rest, a.clone());
        }
        let Some(&top) = by_deg.keys().next_back() else { return Ok(MPoly::zero(self.nvars)) };
        let xj = MPoly::var_pow(self.nvars, j, 1, LaurentV::one());
        let mut out = MPoly::zero(self.nvars);
        // Q_{k-1} = c_k + x_j Q_k
        let mut carry = MPoly::zero(self.nvars);
        for k in (1..=top).rev() {
            let ck = by_deg.remove(&k).unwrap_or_else(|| MPoly::zero(self.nvars));
            carry = &ck + &(&xj * &carry);
            for (e, a) in &carry.terms {
                let mut e = e.clone();
                e[i] = k - 1;
                out.add_term(e, a.clone());
            }
        }
        let c0 = by_deg.remove(&0).unwrap_or_else(|| MPoly::zero(self.nvars));
        let rem = &c0 + &(&xj * &carry);
        if !rem.is_zero() {
            return Err(Error::InvalidArgument(format!("x{} - x{} does not divide", i + 1, j + 1)));
        }
        Ok(out)
    }

    /// Exact quotient by the Vandermonde `prod_{i<j} (x_i - x_j)`.
    pub fn div_vandermonde(&self) -> Result<MPoly> {
        let mut p = self.clone();
        for i in 0..self.nvars {
            for j in i + 1..self.nvars {
                p = p.div_linear(i, j)?;
            }
        }
        Ok(p)
    }
}

impl<'a> Add<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &'a MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, a) in &rhs.terms {
            out.add_term(e.clone(), a.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &'a MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (e.clone(), -a)).collect() }
    }
}

impl<'a> Mul<&'a MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                let g = e.iter().zip(f).map(|(x, y)| x + y).collect();
                out.add_term(g, a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MPoly {
        MPoly::var_pow(n, i, 1, LaurentV::one())
    }

    #[test]
    fn linear_division() {
        let a = &x(2, 0) - &x(2, 1);
        let b = &(&x(2, 0) * &x(2, 0)) + &x(2, 1);
        let p = &a * &b;
        assert_eq!(p.div_linear(0, 1).unwrap(), b);
        assert!(b.div_linear(0, 1).is_err());
    }

    #[test]
    fn vandermonde_quotient_symmetric() {
        // alternant x1^2 x2 - x1 x2^2 over the Vandermonde is x1 x2
        let n = 2;
        let mut p = MPoly::zero(n);
        p.add_term(vec![2, 1], LaurentV::one());
        p.add_term(vec![1, 2], -LaurentV::one());
        let q = p.div_vandermonde().unwrap();
        assert!(q.is_symmetric());
        assert_eq!(q.coeff(&[1, 1]), LaurentV::one());
    }
}
