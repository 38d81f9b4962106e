use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in `v` with arbitrary-precision integer
/// coefficients. The quantum parameter is `q = v^2`, so a polynomial "in q"
/// is one whose support lies on even exponents.
///
/// No zero coefficient is ever stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentV {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentV {
    pub fn zero() -> Self {
        LaurentV { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial_v(0, c)
    }

    /// `c * v^e`
    pub fn monomial_v<T: Into<BigInt>>(e: i64, c: T) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentV { coeffs }
    }

    /// `c * q^e`
    pub fn monomial_q<T: Into<BigInt>>(e: i64, c: T) -> Self {
        Self::monomial_v(2 * e, c)
    }

    pub fn v_pow(e: i64) -> Self {
        Self::monomial_v(e, 1)
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial_q(e, 1)
    }

    /// `1 - q^e`
    pub fn one_minus_q_pow(e: i64) -> Self {
        Self::one() - Self::q_pow(e)
    }

    /// Builds from `(v-exponent, coefficient)` pairs, summing repeats.
    pub fn from_v_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        let mut out = LaurentV::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    /// Builds from `(q-exponent, coefficient)` pairs.
    pub fn from_q_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<BigInt>,
    {
        Self::from_v_terms(terms.into_iter().map(|(e, c)| (2 * e, c)))
    }

    /// Dense q-coefficients starting at `q^low`.
    pub fn from_q_dense(low: i64, coeffs: &[i64]) -> Self {
        Self::from_q_terms(coeffs.iter().enumerate().map(|(i, &c)| (low + i as i64, c)))
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Iterates `(v-exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff_v(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn coeff_q(&self, e: i64) -> BigInt {
        self.coeff_v(2 * e)
    }

    pub fn min_v_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_v_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient of the largest power of `v`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    /// True iff every exponent is even, i.e. the value lies in `Z[q, q^-1]`.
    pub fn is_q_polynomial(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// True iff invariant under `v -> v^-1`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_v()
    }

    /// `v -> v^-1` (equivalently `q -> q^-1`).
    pub fn invert_v(&self) -> LaurentV {
        LaurentV { coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    /// Multiplies by `v^k`.
    pub fn shift_v(&self, k: i64) -> LaurentV {
        LaurentV { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> LaurentV {
        self.shift_v(2 * k)
    }

    pub fn scale(&self, k: &BigInt) -> LaurentV {
        if k.is_zero() {
            return LaurentV::zero();
        }
        LaurentV { coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentV {
        let mut acc = LaurentV::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Gcd of all coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Splits `self = v^shift * p(v)` with `p(0) != 0` (as a polynomial in
    /// `v`, or in `q` when `in_q` is set, in which case all exponents must be
    /// even).
    pub(crate) fn to_zpoly(&self, in_q: bool) -> (i64, ZPoly) {
        let step = if in_q { 2 } else { 1 };
        let Some(low) = self.min_v_exp() else { return (0, ZPoly::zero()) };
        let high = self.max_v_exp().unwrap();
        let len = ((high - low) / step + 1) as usize;
        let mut dense = vec![BigInt::zero(); len];
        for (e, c) in self.terms() {
            dense[((e - low) / step) as usize] = c.clone();
        }
        (low / step, ZPoly::from_coeffs(dense))
    }

    pub(crate) fn from_zpoly(shift: i64, p: &ZPoly, in_q: bool) -> LaurentV {
        let step = if in_q { 2 } else { 1 };
        let mut out = LaurentV::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term((shift + i as i64) * step, c.clone());
        }
        out
    }

    /// Exact quotient in `Z[v, v^-1]`.
    pub fn divide_exact(&self, d: &LaurentV) -> Result<LaurentV> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentV::zero());
        }
        let (sp, p) = self.to_zpoly(false);
        let (sd, dp) = d.to_zpoly(false);
        match p.div_exact(&dp) {
            Ok(quo) => Ok(LaurentV::from_zpoly(sp - sd, &quo, false)),
            Err(rem) => Err(Error::NotDivisible { remainder: LaurentV::from_zpoly(sp, &rem, false) }),
        }
    }

    /// True iff `d` divides `self` in `Z[v, v^-1]`.
    pub fn is_divisible_by(&self, d: &LaurentV) -> bool {
        self.divide_exact(d).is_ok()
    }

    /// Replaces exponents `e` by `e / 2`, reading a q-polynomial as a
    /// polynomial in the variable `q`. Errors on odd exponents.
    pub fn q_exponents(&self) -> Result<BTreeMap<i64, BigInt>> {
        if !self.is_q_polynomial() {
            return Err(Error::OddExponent(self.clone()));
        }
        Ok(self.coeffs.iter().map(|(&e, c)| (e / 2, c.clone())).collect())
    }

    /// Sign of the leading coefficient.
    pub fn leading_is_negative(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_negative())
    }

    /// Renders in the variable `q` when possible, else in `v`, with
    /// descending powers.
    pub fn to_text(&self) -> String {
        if self.is_q_polynomial() {
            render_terms(self.terms().rev().map(|(e, c)| (e / 2, c)), "q")
        } else {
            render_terms(self.terms().rev().map(|(e, c)| (e, c)), "v")
        }
    }
}

fn render_terms<'a, I: Iterator<Item = (i64, &'a BigInt)>>(terms: I, var: &str) -> String {
    let mut out = String::new();
    for (i, (e, c)) in terms.enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = abs.is_one();
        if e == 0 {
            out.push_str(&abs.to_string());
            continue;
        }
        if !unit {
            out.push_str(&abs.to_string());
        }
        out.push_str(var);
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentV({})", self.to_text())
    }
}

impl From<i64> for LaurentV {
    fn from(c: i64) -> Self {
        LaurentV::constant(c)
    }
}

impl From<BigInt> for LaurentV {
    fn from(c: BigInt) -> Self {
        LaurentV::constant(c)
    }
}

impl<'a> Add<&'a LaurentV> for &LaurentV {
    type Output = LaurentV;
    fn add(self, rhs: &'a LaurentV) -> LaurentV {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> AddAssign<&'a LaurentV> for LaurentV {
    fn add_assign(&mut self, rhs: &'a LaurentV) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl<'a> SubAssign<&'a LaurentV> for LaurentV {
    fn sub_assign(&mut self, rhs: &'a LaurentV) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c);
        }
    }
}

impl<'a> Sub<&'a LaurentV> for &LaurentV {
    type Output = LaurentV;
    fn sub(self, rhs: &'a LaurentV) -> LaurentV {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        LaurentV { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

impl Neg for LaurentV {
    type Output = LaurentV;
    fn neg(mut self) -> LaurentV {
        for c in self.coeffs.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<'a> Mul<&'a LaurentV> for &LaurentV {
    type Output = LaurentV;
    fn mul(self, rhs: &'a LaurentV) -> LaurentV {
        if self.is_zero() || rhs.is_zero() {
            return LaurentV::zero();
        }
        if rhs.coeffs.len() == 1 {
            let (&e, c) = rhs.coeffs.iter().next().unwrap();
            return LaurentV { coeffs: self.coeffs.iter().map(|(&a, b)| (a + e, b * c)).collect() };
        }
        if self.coeffs.len() == 1 {
            return rhs * self;
        }
        // dense convolution over the exponent span
        let lo = self.min_v_exp().unwrap() + rhs.min_v_exp().unwrap();
        let hi = self.max_v_exp().unwrap() + rhs.max_v_exp().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&a, x) in &self.coeffs {
            for (&b, y) in &rhs.coeffs {
                dense[(a + b - lo) as usize] += x * y;
            }
        }
        let coeffs = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64, c))
            .collect();
        LaurentV { coeffs }
    }
}

impl<'a> MulAssign<&'a LaurentV> for LaurentV {
    fn mul_assign(&mut self, rhs: &'a LaurentV) {
        *self = &*self * rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentV> for LaurentV {
            type Output = LaurentV;
            fn $m(self, rhs: LaurentV) -> LaurentV {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentV> for LaurentV {
            type Output = LaurentV;
            fn $m(self, rhs: &'a LaurentV) -> LaurentV {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentV> for &LaurentV {
            type Output = LaurentV;
            fn $m(self, rhs: LaurentV) -> LaurentV {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for LaurentV {
    fn sum<I: Iterator<Item = LaurentV>>(iter: I) -> Self {
        let mut acc = LaurentV::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl std::iter::Product for LaurentV {
    fn product<I: Iterator<Item = LaurentV>>(iter: I) -> Self {
        let mut acc = LaurentV::one();
        for x in iter {
            acc = &acc * &x;
        }
        acc
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    var: String,
    coeffs: BTreeMap<String, String>,
}

impl Serialize for LaurentV {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            var: "v".to_string(),
            coeffs: self.coeffs.iter().map(|(e, c)| (e.to_string(), c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentV {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = LaurentJson::deserialize(d)?;
        if raw.var != "v" {
            return Err(D::Error::custom(format!("unsupported variable {:?}", raw.var)));
        }
        let mut out = LaurentV::zero();
        for (e, c) in raw.coeffs {
            let e: i64 = e.parse().map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let c: BigInt = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sparse_form() {
        let a = LaurentV::from_q_dense(0, &[1, -1]);
        let b = LaurentV::from_q_dense(0, &[-1, 1]);
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).num_terms(), 0);
    }

    #[test]
    fn divide_exact_cases() {
        let p = LaurentV::one_minus_q_pow(2);
        let d = LaurentV::one_minus_q_pow(1);
        assert_eq!(p.divide_exact(&d).unwrap(), LaurentV::from_q_dense(0, &[1, 1]));
        assert!(matches!(d.divide_exact(&p), Err(Error::NotDivisible { .. })));
        // negative exponents
        let p = LaurentV::from_q_dense(-3, &[1, 0, -1]);
        assert_eq!(p.divide_exact(&d).unwrap(), LaurentV::from_q_dense(-3, &[1, 1]));
    }

    #[test]
    fn text_rendering() {
        let p = LaurentV::from_q_dense(-3, &[1, 0, 1, -1, -1]);
        assert_eq!(p.to_text(), "-q - 1 + q^-1 + q^-3");
        assert_eq!(LaurentV::from_v_terms([(1, 1), (-1, 1)]).to_text(), "v + v^-1");
        assert_eq!(LaurentV::zero().to_text(), "0");
    }

    #[test]
    fn json_shape() {
        let p = LaurentV::from_v_terms([(-2, 3), (4, -1)]);
        let js = serde_json::to_value(&p).unwrap();
        assert_eq!(js, serde_json::json!({"var": "v", "coeffs": {"-2": "3", "4": "-1"}}));
        let back: LaurentV = serde_json::from_value(js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let x = LaurentV::from_q_dense(0, &[1, 1]).pow(80);
        assert_eq!(x.coeff_q(40).to_string(), "107507208733336176461620");
    }
}
