use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentV;
use crate::error::{Error, Result};

/// Reduced fraction of Laurent polynomials in `q`.
///
/// Canonical form: numerator and denominator coprime, the denominator has
/// lowest exponent 0 and positive leading coefficient (any monomial factor is
/// carried by the numerator). With this normalization equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalQ {
    num: LaurentV,
    den: LaurentV,
}

impl RationalQ {
    pub fn zero() -> Self {
        RationalQ { num: LaurentV::zero(), den: LaurentV::one() }
    }

    pub fn one() -> Self {
        RationalQ { num: LaurentV::one(), den: LaurentV::one() }
    }

    pub fn new(num: LaurentV, den: LaurentV) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !num.is_q_polynomial() {
            return Err(Error::OddExponent(num));
        }
        if !den.is_q_polynomial() {
            return Err(Error::OddExponent(den));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentV, den: LaurentV) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (a, n) = num.to_zpoly(true);
        let (b, d) = den.to_zpoly(true);
        let g = n.gcd(&d);
        let mut n = n.div_exact(&g).expect("gcd divides numerator");
        let mut d = d.div_exact(&g).expect("gcd divides denominator");
        if d.leading().is_some_and(|c| c.is_negative()) {
            let m1 = -num_bigint::BigInt::from(1);
            n = n.scale(&m1);
            d = d.scale(&m1);
        }
        RationalQ { num: LaurentV::from_zpoly(a - b, &n, true), den: LaurentV::from_zpoly(0, &d, true) }
    }

    pub fn numer(&self) -> &LaurentV {
        &self.num
    }

    pub fn denom(&self) -> &LaurentV {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a Laurent polynomial, or the remainder witnessing that it
    /// is not one.
    pub fn to_laurent(&self) -> std::result::Result<LaurentV, LaurentV> {
        if self.den.is_one() {
            return Ok(self.num.clone());
        }
        match self.num.divide_exact(&self.den) {
            Ok(x) => Ok(x),
            Err(Error::NotDivisible { remainder }) => Err(remainder),
            Err(_) => Err(self.num.clone()),
        }
    }

    /// `q -> q^-1`
    pub fn invert_q(&self) -> RationalQ {
        Self::normalize(self.num.invert_v(), self.den.invert_v())
    }

    pub fn recip(&self) -> Result<RationalQ> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn mul_laurent(&self, x: &LaurentV) -> RationalQ {
        Self::normalize(&self.num * x, self.den.clone())
    }

    pub fn div_laurent(&self, x: &LaurentV) -> Result<RationalQ> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.num.clone(), &self.den * x))
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            return self.num.to_text();
        }
        format!("({})/({})", self.num.to_text(), self.den.to_text())
    }
}

impl Default for RationalQ {
    fn default() -> Self {
        RationalQ::zero()
    }
}

impl From<LaurentV> for RationalQ {
    fn from(x: LaurentV) -> Self {
        assert!(x.is_q_polynomial(), "RationalQ requires a q-polynomial, got {x}");
        RationalQ { num: x, den: LaurentV::one() }
    }
}

impl From<i64> for RationalQ {
    fn from(c: i64) -> Self {
        RationalQ::from(LaurentV::constant(c))
    }
}

impl<'a> Add<&'a RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn add(self, rhs: &'a RationalQ) -> RationalQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalQ::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RationalQ::normalize(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn sub(self, rhs: &'a RationalQ) -> RationalQ {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn mul(self, rhs: &'a RationalQ) -> RationalQ {
        if self.is_zero() || rhs.is_zero() {
            return RationalQ::zero();
        }
        RationalQ::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalQ> for &RationalQ {
    type Output = RationalQ;
    fn div(self, rhs: &'a RationalQ) -> RationalQ {
        let inv = rhs.recip().expect("division by zero rational");
        self * &inv
    }
}

impl Neg for &RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalQ {
    type Output = RationalQ;
    fn neg(self) -> RationalQ {
        RationalQ { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: RationalQ) -> RationalQ {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a RationalQ> for RationalQ {
            type Output = RationalQ;
            fn $m(self, rhs: &'a RationalQ) -> RationalQ {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RationalQ {
    fn sum<I: Iterator<Item = RationalQ>>(iter: I) -> Self {
        iter.fold(RationalQ::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RationalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalQ({})", self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: LaurentV,
    den: LaurentV,
}

impl Serialize for RationalQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalJson { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RationalJson::deserialize(d)?;
        RationalQ::new(raw.num, raw.den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qd(low: i64, c: &[i64]) -> LaurentV {
        LaurentV::from_q_dense(low, c)
    }

    #[test]
    fn reduces_common_factors() {
        // (1-q^2) / (q^-1 (1-q)) = q (1+q)
        let r = RationalQ::new(LaurentV::one_minus_q_pow(2), qd(-1, &[1, -1])).unwrap();
        assert!(r.is_laurent());
        assert_eq!(r.numer(), &qd(1, &[1, 1]));
    }

    #[test]
    fn denominator_normalization() {
        // 1 / (q^2 - q^3) = q^-2 / (1 - q) -> -q^-2 / (q - 1)
        let r = RationalQ::new(LaurentV::one(), qd(2, &[1, -1])).unwrap();
        assert_eq!(r.denom(), &qd(0, &[-1, 1]));
        assert_eq!(r.numer(), &qd(-2, &[-1]));
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = RationalQ::new(LaurentV::one(), LaurentV::one_minus_q_pow(1)).unwrap();
        let b = RationalQ::new(LaurentV::q_pow(1), LaurentV::one_minus_q_pow(1)).unwrap();
        // 1/(1-q) - q/(1-q) = 1
        assert_eq!(&a - &b, RationalQ::one());
        assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn q_inversion_is_involutive() {
        let r = RationalQ::new(qd(-2, &[1, 3, 0, -1]), qd(0, &[1, 0, -1])).unwrap();
        assert_eq!(r.invert_q().invert_q(), r);
    }
}
