//! Kirby colors `omega_±`, the elements `P'_lambda`, twist forms of
//! `sigma_lambda`, and the unified invariant of `±1` surgery on a knot.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::cyclo::{a_coeffs_by_substitution, CycloCoeffs};
use super::table::KnotTable;
use crate::error::{Error, Result};
use crate::habiro::HabiroElement;
use crate::interp::{d_entry_okounkov, schur_coeffs};
use crate::partitions::{binom2, Partition};
use crate::qring::{LaurentV, RationalQ};
use crate::symfun::{dimq, hopf_schur};

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `v^v_exp * q_part` with `v_exp` in `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VRational {
    pub v_exp: i64,
    pub q_part: RationalQ,
}

/// Splits `p = v^e p'` with `e` in `{0, 1}` and `p'` a q-Laurent polynomial.
pub fn split_v(p: &LaurentV) -> Result<(i64, LaurentV)> {
    let Some(low) = p.min_v_exp() else { return Ok((0, LaurentV::zero())) };
    let e = low.rem_euclid(2);
    let rest = p.shift_v(-e);
    if !rest.is_q_polynomial() {
        return Err(Error::OddExponent(p.clone()));
    }
    Ok((e, rest))
}

impl VRational {
    pub fn zero() -> Self {
        VRational { v_exp: 0, q_part: RationalQ::zero() }
    }

    pub fn from_laurent(p: &LaurentV) -> Result<Self> {
        let (e, r) = split_v(p)?;
        Ok(VRational { v_exp: e, q_part: r.into() })
    }

    pub fn is_zero(&self) -> bool {
        self.q_part.is_zero()
    }

    pub fn mul_laurent(&self, p: &LaurentV) -> Result<Self> {
        let (e, r) = split_v(p)?;
        let mut q = self.q_part.mul_laurent(&r);
        let mut v = self.v_exp + e;
        if v == 2 {
            q = q.mul_laurent(&LaurentV::q_pow(1));
            v = 0;
        }
        Ok(VRational { v_exp: v, q_part: q })
    }

    pub fn add(&self, other: &VRational) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.v_exp != other.v_exp {
            return Err(Error::OddExponent(LaurentV::v_pow(1)));
        }
        Ok(VRational { v_exp: self.v_exp, q_part: &self.q_part + &other.q_part })
    }

    pub fn to_laurent(&self) -> std::result::Result<LaurentV, LaurentV> {
        self.q_part.to_laurent().map(|x| x.shift_v(self.v_exp)).map_err(|r| r.shift_v(self.v_exp))
    }

    pub fn to_text(&self) -> String {
        if self.v_exp == 0 {
            self.q_part.to_text()
        } else {
            format!("v*({})", self.q_part.to_text())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn parse(s: &str) -> Result<Sign> {
        match s {
            "+" | "plus" | "+1" => Ok(Sign::Plus),
            "-" | "minus" | "-1" => Ok(Sign::Minus),
            _ => Err(Error::InvalidArgument(format!("sign must be + or -, got {s:?}"))),
        }
    }

    fn eps(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `(-1)^(|lambda| + binom(N,2)) q^(∓c(lambda)) q^(w_±(lambda))` with
/// `w_+ = D_N(lambda)` and `w_- = D_N(lambda) + N|lambda|`.
pub fn kirby_weight(lambda: &Partition, n: usize, s: Sign) -> Result<LaurentV> {
    let d = lambda.d_n(n)?;
    let size = lambda.size() as i64;
    let w = match s {
        Sign::Plus => d,
        Sign::Minus => d + n as i64 * size,
    };
    Ok(LaurentV::monomial_q(w - s.eps() * lambda.content_sum(), sign(size + binom2(n as i64))))
}

/// `C_lambda = (-1)^(|lambda| + binom(N,2)) q^(-D_N(lambda)) v^(-N|lambda|)`.
pub fn kirby_constant(lambda: &Partition, n: usize) -> Result<LaurentV> {
    let size = lambda.size() as i64;
    Ok(LaurentV::monomial_q(-lambda.d_n(n)?, sign(size + binom2(n as i64))).shift_v(-(n as i64) * size))
}

/// The constant found on the diagonal of the pairing,
/// `(-1)^(|lambda| + binom(N,2)) q^(D_N(lambda)) v^(-N|lambda|)`.
pub fn kirby_diagonal_constant(lambda: &Partition, n: usize) -> Result<LaurentV> {
    Ok(kirby_constant(lambda, n)?.shift_q(2 * lambda.d_n(n)?))
}

/// Coefficients of `P'_lambda = v^-|lambda| dimq(lambda) sum_mu d[mu][lambda](q^-1) / dimq(mu) V(mu)`.
pub fn pprime_coeffs(lambda: &Partition, n: usize) -> Result<BTreeMap<Partition, VRational>> {
    lambda.check_len(n)?;
    let pre = dimq(lambda, n)?.shift_v(-(lambda.size() as i64));
    let mut out = BTreeMap::new();
    for mu in lambda.sub_partitions() {
        let (e, dm) = split_v(&dimq(&mu, n)?)?;
        let d = d_entry_okounkov(&mu, lambda, n)?.invert_q().div_laurent(&dm)?;
        let c = VRational { v_exp: 0, q_part: d }.mul_laurent(&pre.shift_v(-e))?;
        if !c.is_zero() {
            out.insert(mu, c);
        }
    }
    Ok(out)
}

/// `<P'_lambda, V(nu)>` from the Hopf pairing of representations.
pub fn kirby_pairing(lambda: &Partition, nu: &Partition, n: usize) -> Result<VRational> {
    let mut acc = VRational::zero();
    for (mu, c) in pprime_coeffs(lambda, n)? {
        acc = acc.add(&c.mul_laurent(&hopf_schur(&mu, nu, n)?)?)?;
    }
    Ok(acc)
}

/// `C_lambda dimq(lambda)` if `nu = lambda`, else 0.
pub fn kirby_pairing_expected(lambda: &Partition, nu: &Partition, n: usize) -> Result<VRational> {
    if lambda != nu {
        return Ok(VRational::zero());
    }
    VRational::from_laurent(&(kirby_constant(lambda, n)? * dimq(lambda, n)?))
}

/// Whether `<P'_lambda, V(nu)> = C_lambda delta_{lambda nu} dimq(lambda)`.
pub fn kirby_pairing_check(lambda: &Partition, nu: &Partition, n: usize) -> Result<bool> {
    Ok(kirby_pairing(lambda, nu, n)? == kirby_pairing_expected(lambda, nu, n)?)
}

/// Largest `m` with `(q;q)_m` dividing `p`; `None` for `p = 0`.
pub fn poch_divisibility(p: &LaurentV) -> Option<u32> {
    if p.is_zero() {
        return None;
    }
    let mut r = p.clone();
    let mut m = 0;
    while let Ok(x) = r.divide_exact(&LaurentV::one_minus_q_pow(m as i64 + 1)) {
        r = x;
        m += 1;
    }
    Some(m)
}

/// `(v;v)_m` as a Laurent polynomial in `v`.
pub fn v_poch(m: u32) -> LaurentV {
    (1..=m as i64).map(|k| LaurentV::one() - LaurentV::v_pow(k)).product()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PPrimeValue {
    pub lambda: Partition,
    /// `J_K(P'_lambda) = v^-|lambda| dimq(lambda) a_lambda(K)`
    pub value: LaurentV,
    /// `v`-power removed before testing divisibility
    pub unit_shift: i64,
    /// largest `n` with `(q;q)_n` dividing the value; absent for 0
    pub divisibility: Option<u32>,
}

pub fn knot_pprime_value(a: &CycloCoeffs, lambda: &Partition) -> Result<PPrimeValue> {
    let c = a.get(lambda).ok_or_else(|| Error::MissingColor(lambda.clone()))?;
    let value = dimq(lambda, a.n)?.shift_v(-(lambda.size() as i64)) * c;
    let (e, even) = split_v(&value)?;
    Ok(PPrimeValue { lambda: lambda.clone(), divisibility: poch_divisibility(&even), unit_shift: e, value })
}

/// Twist form of `sigma_lambda` for `±1` framing:
/// `sum_mu b[lambda][mu](q^-1) v^((N-1)|mu|) q^(∓c(mu)) v^(∓N|mu|) dimq(mu)`,
/// from `sigma_lambda = sum_mu b[lambda][mu](q^-1) v^((N-1)|mu|) xi(V(mu))` and
/// the pairing of the Kirby color with `V(mu)`.
pub fn twist_sigma(lambda: &Partition, n: usize, s: Sign) -> Result<LaurentV> {
    let nn = n as i64;
    let mut acc = LaurentV::zero();
    for (mu, b) in schur_coeffs(lambda, n)? {
        let m = mu.size() as i64;
        let t = (b.invert_v() * dimq(&mu, n)?).shift_v((nn - 1) * m - s.eps() * nn * m).shift_q(-s.eps() * mu.content_sum());
        acc += &t;
    }
    if !acc.is_q_polynomial() {
        return Err(Error::OddExponent(acc));
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TailCertificate {
    /// the cyclotomic coefficients vanish outside the summed colors
    ExactSupport,
    /// every color of size `shell` has a twist divisible by `(v;v)_m`, the
    /// per-term bound `m = floor(|lambda| / (N(N+1)))`, and `m >= 2T` puts
    /// such terms in `((q;q)_T)`
    ShellDivisibility { shell: u32, m: u32, checked: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnifiedInvariant {
    #[serde(rename = "N")]
    pub n: usize,
    pub sign: Sign,
    pub knot: String,
    /// colors of size below this were summed
    pub cutoff: u32,
    pub terms: usize,
    /// the finite sum as a Laurent polynomial
    pub partial_sum: LaurentV,
    pub value: HabiroElement,
    pub certificate: TailCertificate,
}

/// Size below which every color is summed for truncation `T`.
pub fn unified_cutoff(n: usize, t: u32) -> u32 {
    2 * t * (n * (n + 1)) as u32
}

/// Checks the divisibility of every twist in the shell `|lambda| = shell` by `(v;v)_m`.
pub fn shell_certificate(n: usize, shell: u32) -> Result<TailCertificate> {
    let m = shell / (n * (n + 1)) as u32;
    let vp = v_poch(m);
    let colors = Partition::of_size(shell, n);
    let bad = colors.par_iter().find_map_first(|l| {
        let ok = [Sign::Plus, Sign::Minus].iter().try_fold(true, |acc, s| Ok::<_, Error>(acc && twist_sigma(l, n, *s)?.is_divisible_by(&vp)));
        match ok {
            Ok(true) => None,
            Ok(false) => Some(Ok(l.clone())),
            Err(e) => Some(Err(e)),
        }
    });
    if let Some(l) = bad {
        let l = l?;
        return Err(Error::InsufficientBound(format!(
            "twist of sigma_{l} is not divisible by (v;v)_{m}; the tail beyond size {shell} cannot be certified"
        )));
    }
    Ok(TailCertificate::ShellDivisibility { shell, m, checked: colors.len() })
}

/// `I = sum_lambda a_lambda(K) T_±(sigma_lambda)` modulo `(q;q)_T`.
pub fn unified_invariant(k: &KnotTable, s: Sign, t: u32) -> Result<UnifiedInvariant> {
    let n = k.nvars();
    let (colors, cutoff, certificate) = match k.exact_support() {
        Some(sup) => {
            let mut all: Vec<Partition> = sup.iter().flat_map(|l| l.sub_partitions()).collect();
            all.sort();
            all.dedup();
            let cutoff = all.iter().map(|l| l.size() + 1).max().unwrap_or(0);
            (all, cutoff, TailCertificate::ExactSupport)
        }
        None => {
            let cutoff = unified_cutoff(n, t);
            let cert = shell_certificate(n, cutoff)?;
            (Partition::up_to_size(cutoff - 1, n), cutoff, cert)
        }
    };
    let a = match a_coeffs_by_substitution(k, &colors) {
        Err(Error::MissingColor(mu)) => {
            return Err(Error::InsufficientBound(format!(
                "table lacks color {mu}; truncation {t} needs every color of size below {cutoff}"
            )))
        }
        r => r?,
    };
    let terms: Vec<LaurentV> = colors
        .par_iter()
        .filter(|l| !a.coeffs[*l].is_zero())
        .map(|l| Ok(&a.coeffs[l] * &twist_sigma(l, n, s)?))
        .collect::<Result<_>>()?;
    let count = terms.len();
    let partial_sum: LaurentV = terms.into_iter().sum();
    if !partial_sum.is_q_polynomial() {
        return Err(Error::OddExponent(partial_sum));
    }
    let value = HabiroElement::embed(&partial_sum, t)?;
    Ok(UnifiedInvariant { n, sign: s, knot: k.name().to_string(), cutoff, terms: count, partial_sum, value, certificate })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiteralTerm {
    pub lambda: Partition,
    /// `(-1)^(|lambda|+binom(N,2)) q^(∓c) q^(w_±) J_K(P'_lambda)`
    pub term: LaurentV,
    pub divisibility: Option<u32>,
}

/// Terms of the series `sum_lambda weight_±(lambda) J_K(P'_lambda)` over
/// `lambda ⊆ bound`, with their `(q;q)_n`-divisibility.
pub fn literal_series_terms(a: &CycloCoeffs, s: Sign, bound: &Partition) -> Result<Vec<LiteralTerm>> {
    let mut out = Vec::new();
    for l in bound.sub_partitions() {
        let p = knot_pprime_value(a, &l)?;
        let term = kirby_weight(&l, a.n, s)? * p.value;
        if !term.is_q_polynomial() {
            return Err(Error::OddExponent(term));
        }
        out.push(LiteralTerm { lambda: l, divisibility: poch_divisibility(&term), term });
    }
    Ok(out)
}

/// `(q;q)_m` exponents of the summed shells of a unified invariant, for
/// reporting how fast the series converges.
pub fn shell_divisibility(k: &KnotTable, s: Sign, max_size: u32) -> Result<Vec<(u32, Option<u32>)>> {
    let n = k.nvars();
    let colors = Partition::up_to_size(max_size, n);
    let a = a_coeffs_by_substitution(k, &colors)?;
    let mut shells: BTreeMap<u32, LaurentV> = BTreeMap::new();
    for l in &colors {
        let term = &a.coeffs[l] * &twist_sigma(l, n, s)?;
        *shells.entry(l.size()).or_default() += &term;
    }
    Ok(shells.into_iter().map(|(k, v)| (k, poch_divisibility(&v))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::a_coeffs;
    use crate::partitions::binom3;
    use crate::qring::poch;

    #[test]
    fn twist_of_small_sigmas() {
        assert_eq!(twist_sigma(&part!(), 2, Sign::Plus).unwrap(), LaurentV::constant(-1));
        assert_eq!(twist_sigma(&part!(1), 2, Sign::Plus).unwrap(), LaurentV::from_q_dense(-2, &[1, 0, -1]));
        for n in 1..=3 {
            let want = LaurentV::monomial_q(-binom3(n as i64), sign(binom2(n as i64)));
            assert_eq!(twist_sigma(&part!(), n, Sign::Minus).unwrap(), want);
        }
        assert!(!poch(1).is_divisible_by(&v_poch(2)));
        assert!(poch(2).is_divisible_by(&v_poch(2)));
        assert!(!poch(2).is_divisible_by(&v_poch(4)));
    }

    #[test]
    fn unknot_is_one() {
        for n in 1..=3 {
            let k = KnotTable::unknot(n, &part!()).unwrap();
            for s in [Sign::Plus, Sign::Minus] {
                for t in 1..=6 {
                    let u = unified_invariant(&k, s, t).unwrap();
                    assert!(u.value.rep().is_one(), "N={n} T={t}");
                    assert_eq!(u.certificate, TailCertificate::ExactSupport);
                }
            }
        }
    }

    #[test]
    fn figure_eight_at_one() {
        let k = KnotTable::figure_eight(2, &part!()).unwrap();
        for s in [Sign::Plus, Sign::Minus] {
            let u = unified_invariant(&k, s, 1).unwrap();
            assert_eq!(u.cutoff, 12);
            assert_eq!(u.value.eval_root(1).unwrap().as_integer(), Some(&1.into()));
        }
        assert!(matches!(unified_invariant(&k, Sign::Plus, 2), Err(Error::InsufficientBound(_))));
    }

    #[test]
    fn pairing_is_triangular() {
        for n in 2..=3 {
            for l in part!(1, 1).sub_partitions() {
                for nu in part!(2, 1).sub_partitions() {
                    let p = kirby_pairing(&l, &nu, n).unwrap();
                    if !nu.contains(&l) {
                        assert!(p.is_zero(), "{l} {nu}");
                    }
                }
            }
        }
        assert!(!kirby_pairing(&part!(), &part!(1), 2).unwrap().is_zero());
        assert!(kirby_pairing_check(&part!(), &part!(), 2).unwrap());
        assert!(!kirby_pairing_check(&part!(1), &part!(1), 2).unwrap());
    }

    #[test]
    fn pairing_diagonal() {
        for n in 1..=3 {
            for l in Partition::up_to_size(3, n) {
                let want = VRational::from_laurent(&(kirby_diagonal_constant(&l, n).unwrap() * dimq(&l, n).unwrap())).unwrap();
                assert_eq!(kirby_pairing(&l, &l, n).unwrap(), want, "N={n} {l}");
            }
        }
    }

    #[test]
    fn pprime_values() {
        let k = KnotTable::figure_eight(2, &part!(2, 1)).unwrap();
        let a = a_coeffs(&k, &part!(2, 1)).unwrap();
        let p = knot_pprime_value(&a, &part!(1)).unwrap();
        let want = LaurentV::from_q_dense(-1, &[1, 1]) * LaurentV::from_q_dense(-2, &[-1, 0, 0, 1]);
        assert_eq!(p.value, want);
        assert_eq!(p.divisibility, Some(1));
        let p = knot_pprime_value(&a, &part!()).unwrap();
        assert_eq!(p.value, LaurentV::constant(-1));
        for t in literal_series_terms(&a, Sign::Minus, &part!(2, 1)).unwrap() {
            assert!(t.term.is_q_polynomial());
        }
    }
}
