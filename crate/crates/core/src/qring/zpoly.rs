//! Dense univariate polynomials over `BigInt`.
//!
//! This is the workhorse behind exact division and GCDs of Laurent
//! polynomials: a Laurent polynomial is split into a monomial shift and a
//! polynomial with nonzero constant term, and the polynomial part is handled
//! here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients stored low degree first, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact coefficientwise division by an integer.
    pub fn div_scalar(&self, k: &BigInt) -> ZPoly {
        ZPoly::from_coeffs(self.coeffs.iter().map(|c| c / k).collect())
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        ZPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::from_coeffs(out)
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < dd {
            return r;
        }
        let mut steps = da - dd + 1;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - dd;
            let mut next = r.scale(&lc).into_coeffs();
            for (j, c) in d.coeffs.iter().enumerate() {
                next[j + shift] -= &lr * c;
            }
            r = ZPoly::from_coeffs(next);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&num_traits::pow(lc, steps));
        }
        r
    }

    /// Division with integer quotient. Succeeds only when `d` divides `self`
    /// in `Z[x]`; otherwise returns the remainder reached at the first
    /// inexact step.
    pub fn div_exact(&self, d: &ZPoly) -> Result<ZPoly, ZPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else { return Ok(ZPoly::zero()) };
        if da < dd {
            return Err(self.clone());
        }
        let mut quo = vec![BigInt::zero(); da - dd + 1];
        for shift in (0..=da - dd).rev() {
            let top = &r[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return Err(ZPoly::from_coeffs(r));
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[j + shift] -= &qc * c;
            }
            quo[shift] = qc;
        }
        let rem = ZPoly::from_coeffs(r);
        if rem.is_zero() {
            Ok(ZPoly::from_coeffs(quo))
        } else {
            Err(rem)
        }
    }

    /// Greatest common divisor over `Z[x]` with positive leading coefficient,
    /// computed with the subresultant remainder sequence on primitive parts.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // subresultant PRS
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            if r.degree() == Some(0) {
                return ZPoly::from_coeffs(vec![content]);
            }
            let divisor = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = r.div_scalar(&divisor);
            g = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let num = num_traits::pow(g.clone(), delta);
                let den = num_traits::pow(h.clone(), delta - 1);
                num / den
            };
        }
        b.primitive_part().scale(&content)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (1-x)(1+x^2) and (1-x)(2+x)
        let a = p(&[1, -1]).mul(&p(&[1, 0, 1]));
        let b = p(&[1, -1]).mul(&p(&[2, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn gcd_keeps_common_content() {
        let a = p(&[4, 4]);
        let b = p(&[6, 6]);
        assert_eq!(a.gcd(&b), p(&[2, 2]));
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, -1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 0, -1]);
        assert_eq!(a.div_exact(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        assert!(p(&[1, -1]).div_exact(&p(&[1, 0, -1])).is_err());
        assert!(p(&[1, 1]).div_exact(&p(&[1, 2])).is_err());
    }
}
