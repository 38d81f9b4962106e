use std::ops::{Add, Mul, Neg, Sub};

use super::LaurentV;

/// Dense polynomial in an abstract variable `x` with Laurent coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<LaurentV>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: LaurentV) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x`
    pub fn x() -> Self {
        Self::from_coeffs(vec![LaurentV::zero(), LaurentV::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<LaurentV>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[LaurentV] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> LaurentV {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &LaurentV) -> UniPoly {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `p(q^s x)`
    pub fn subst_q_scale(&self, s: i64) -> UniPoly {
        Self::from_coeffs(self.coeffs.iter().enumerate().map(|(k, a)| a.shift_q(s * k as i64)).collect())
    }

    pub fn eval(&self, x: &LaurentV) -> LaurentV {
        let mut acc = LaurentV::zero();
        for a in self.coeffs.iter().rev() {
            acc = &acc * x + a;
        }
        acc
    }

    /// Value at `x = q^s`.
    pub fn eval_q_pow(&self, s: i64) -> LaurentV {
        self.coeffs.iter().enumerate().map(|(k, a)| a.shift_q(s * k as i64)).sum()
    }
}

impl<'a> Add<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &'a UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &'a UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![LaurentV::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> Self {
        iter.fold(UniPoly::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_evaluation() {
        let p = &UniPoly::constant(LaurentV::one()) - &UniPoly::x();
        let sq = &p * &p;
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.eval(&LaurentV::one()), LaurentV::zero());
        assert_eq!(p.subst_q_scale(1).eval_q_pow(-1), LaurentV::zero());
        assert_eq!(sq.eval_q_pow(2), sq.eval(&LaurentV::q_pow(2)));
    }
}
