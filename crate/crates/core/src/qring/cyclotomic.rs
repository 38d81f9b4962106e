use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::qcalc::{cyclotomic, euler_phi};
use super::LaurentV;
use crate::error::{Error, Result};

/// Element of `Z[q] / Phi_n(q)`, i.e. an exact value at a primitive `n`-th
/// root of unity. Coefficients are on the basis `1, q, ..., q^(phi(n)-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicResidue {
    order: u64,
    coeffs: Vec<BigInt>,
}

fn phi_coeffs(n: u64) -> Vec<BigInt> {
    let p = cyclotomic(n);
    let deg = euler_phi(n) as usize;
    (0..=deg).map(|i| p.coeff_q(i as i64)).collect()
}

impl CyclotomicResidue {
    /// Reduces dense nonnegative-power coefficients modulo `Phi_n`.
    fn reduce(order: u64, mut dense: Vec<BigInt>) -> Self {
        let phi = phi_coeffs(order);
        let deg = phi.len() - 1;
        // Phi_n is monic
        while dense.len() > deg {
            let top = dense.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = dense.len() - deg;
            for (j, c) in phi.iter().enumerate().take(deg) {
                dense[shift + j] -= &top * c;
            }
        }
        dense.resize(deg, BigInt::zero());
        CyclotomicResidue { order, coeffs: dense }
    }

    pub fn zero(order: u64) -> Self {
        Self::reduce(order, Vec::new())
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// For `n = 1` the residue is the value at `q = 1`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        (self.order == 1).then(|| &self.coeffs[0])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicResidue { order: self.order, coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut dense = vec![BigInt::zero(); self.coeffs.len() * 2];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                dense[i + j] += a * b;
            }
        }
        Ok(Self::reduce(self.order, dense))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::InvalidArgument(format!(
                "residues at different roots of unity ({} and {})",
                self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn to_laurent(&self) -> LaurentV {
        LaurentV::from_q_terms(self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }
}

impl Serialize for CyclotomicResidue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Json {
            order: u64,
            coeffs: Vec<String>,
        }
        Json { order: self.order, coeffs: self.coeffs.iter().map(|c| c.to_string()).collect() }.serialize(s)
    }
}

/// Value of a q-Laurent polynomial at a primitive `n`-th root of unity.
/// Exponents are first reduced modulo `n`, which also handles `q^-1`.
pub fn eval_at_root(p: &LaurentV, n: u64) -> Result<CyclotomicResidue> {
    if n == 0 {
        return Err(Error::InvalidArgument("root of unity of order 0".into()));
    }
    let exps = p.q_exponents()?;
    let mut dense = vec![BigInt::zero(); n as usize];
    for (e, c) in exps {
        dense[e.rem_euclid(n as i64) as usize] += c;
    }
    Ok(CyclotomicResidue::reduce(n, dense))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::poch;

    #[test]
    fn root_values() {
        let r = eval_at_root(&LaurentV::q_pow(3), 1).unwrap();
        assert_eq!(r.as_integer(), Some(&BigInt::from(1)));
        assert!(eval_at_root(&poch(2), 2).unwrap().is_zero());
        assert!(eval_at_root(&LaurentV::from_q_dense(0, &[1, 1, 1]), 3).unwrap().is_zero());
        assert!(eval_at_root(&LaurentV::v_pow(1), 3).is_err());
    }

    #[test]
    fn inverse_of_q() {
        let qi = eval_at_root(&LaurentV::q_pow(-1), 3).unwrap();
        let q = eval_at_root(&LaurentV::q_pow(1), 3).unwrap();
        assert_eq!(qi, eval_at_root(&LaurentV::q_pow(2), 3).unwrap());
        assert_eq!(q.mul(&qi).unwrap(), eval_at_root(&LaurentV::one(), 3).unwrap());
    }

    #[test]
    fn homomorphism() {
        let a = LaurentV::from_q_dense(-3, &[2, 0, -1, 5, 7]);
        let b = LaurentV::from_q_dense(1, &[1, -4, 0, 0, 0, 0, 3]);
        for n in 1..=12 {
            let lhs = eval_at_root(&(&a * &b), n).unwrap();
            let rhs = eval_at_root(&a, n).unwrap().mul(&eval_at_root(&b, n).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "n={n}");
        }
    }
}
