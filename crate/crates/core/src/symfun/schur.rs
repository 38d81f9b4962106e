use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::{EvalPoint, MPoly, SymPoly};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qring::{balanced_qnum, LaurentV};

/// Permutations of `0..n` with their signs.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in signed_permutations(n - 1) {
        // insert n-1 at every position; moving it left past k entries flips sign k times
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let sign = if (n - 1 - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

type Memo = Mutex<HashMap<(usize, Partition), SymPoly>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Schur polynomial `s_lambda(x_1..x_N)`; zero when `lambda` has more than
/// `N` parts.
pub fn schur(lambda: &Partition, n: usize) -> SymPoly {
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    let key = (n, lambda.clone());
    if let Some(s) = memo().lock().unwrap().get(&key) {
        return s.clone();
    }
    let l: Vec<u32> = (0..n).map(|i| lambda.part(i) + (n - 1 - i) as u32).collect();
    let mut alt = MPoly::zero(n);
    for (w, sign) in signed_permutations(n) {
        let mut e = vec![0u32; n];
        for i in 0..n {
            e[w[i]] = l[i];
        }
        alt.add_term(e, LaurentV::constant(sign));
    }
    let s = SymPoly::from_mpoly_unchecked(&alt.div_vandermonde().expect("Vandermonde divides an alternant"));
    memo().lock().unwrap().insert(key, s.clone());
    s
}

/// Coefficients of `f` on the Schur basis, by peeling off the
/// lexicographically largest monomial.
pub fn schur_expansion(f: &SymPoly) -> BTreeMap<Partition, LaurentV> {
    let n = f.nvars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.terms().iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let lambda = Partition::new(&e).expect("monomial keys are decreasing");
        rest = &rest - &schur(&lambda, n).scale(&c);
        out.insert(lambda, c);
    }
    out
}

/// Inverse of `schur_expansion`.
pub fn from_schur(n: usize, coeffs: &BTreeMap<Partition, LaurentV>) -> SymPoly {
    coeffs.iter().fold(SymPoly::zero(n), |acc, (l, c)| &acc + &schur(l, n).scale(c))
}

/// `(q^(1-N), ..., q^-1, 1)`
pub fn principal_point(n: usize) -> EvalPoint {
    EvalPoint::from_q(&(0..n).map(|i| i as i64 + 1 - n as i64).collect::<Vec<_>>())
}

/// Node `(q^(-mu_i - N + i))_i` attached to `mu`.
pub fn node(mu: &Partition, n: usize) -> EvalPoint {
    EvalPoint::from_q(&(0..n).map(|i| -(mu.part(i) as i64) - n as i64 + 1 + i as i64).collect::<Vec<_>>())
}

/// `s_lambda(q^(1-N), ..., 1)` from the hook-content formula
/// `q^(-n(lambda)) prod (1 - q^(-N-c)) / (1 - q^(-h))`, checked against direct
/// evaluation.
pub fn schur_principal(lambda: &Partition, n: usize) -> Result<LaurentV> {
    lambda.check_len(n)?;
    let mut num = LaurentV::q_pow(-lambda.n());
    let mut den = LaurentV::one();
    for c in lambda.cells() {
        num = num * LaurentV::one_minus_q_pow(-(n as i64) - c.content);
        den = den * LaurentV::one_minus_q_pow(-(c.hook as i64));
    }
    let closed = num.divide_exact(&den)?;
    let direct = schur(lambda, n).eval(&principal_point(n));
    if closed != direct {
        return Err(Error::InvalidArgument(format!("principal specialization mismatch at {lambda}")));
    }
    Ok(closed)
}

/// Quantum dimension `prod [N + c] / [h]`.
pub fn dimq(lambda: &Partition, n: usize) -> Result<LaurentV> {
    lambda.check_len(n)?;
    let mut num = LaurentV::one();
    let mut den = LaurentV::one();
    for c in lambda.cells() {
        num = num * balanced_qnum(n as i64 + c.content);
        den = den * balanced_qnum(c.hook as i64);
    }
    num.divide_exact(&den)
}

/// `<V(lambda), V(mu)> = s_lambda(v^(2 mu_i + N + 1 - 2i)) dim_q V(mu)`
pub fn hopf_schur(lambda: &Partition, mu: &Partition, n: usize) -> Result<LaurentV> {
    lambda.check_len(n)?;
    mu.check_len(n)?;
    let pt = EvalPoint::new((0..n).map(|i| 2 * mu.part(i) as i64 + n as i64 - 1 - 2 * i as i64).collect());
    Ok(schur(lambda, n).eval(&pt) * dimq(mu, n)?)
}

/// The pairing `(s_lambda, s_mu) = s_lambda(node of mu) s_mu(principal point)`.
pub fn q_pairing_schur(lambda: &Partition, mu: &Partition, n: usize) -> LaurentV {
    schur(lambda, n).eval(&node(mu, n)) * schur(mu, n).eval(&principal_point(n))
}

/// Bilinear extension of `q_pairing_schur` to coefficient maps.
pub fn q_pairing(
    f: &BTreeMap<Partition, LaurentV>,
    g: &BTreeMap<Partition, LaurentV>,
    n: usize,
) -> LaurentV {
    let mut acc = LaurentV::zero();
    for (l, a) in f {
        for (m, b) in g {
            acc += &(a * b * q_pairing_schur(l, m, n));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur(&part!(1), 2), SymPoly::monomial(2, &[1]).unwrap());
        assert_eq!(schur(&part!(1, 1), 2), SymPoly::monomial(2, &[1, 1]).unwrap());
        assert_eq!(schur(&part!(2, 1), 2), SymPoly::monomial(2, &[2, 1]).unwrap());
        assert!(schur(&part!(1, 1, 1), 2).is_zero());
        let s1 = schur(&part!(1), 2);
        assert_eq!(&s1 * &s1, &schur(&part!(2), 2) + &schur(&part!(1, 1), 2));
        // s_{2,1} in three variables has m_{1,1,1} with coefficient 2
        assert_eq!(schur(&part!(2, 1), 3).coeff(&[1, 1, 1]), LaurentV::constant(2));
    }

    #[test]
    fn expansion_round_trip() {
        let f = &(&schur(&part!(2, 1), 3) * &schur(&part!(1), 3)) + &SymPoly::one(3);
        let e = schur_expansion(&f);
        assert_eq!(e.len(), 4);
        assert_eq!(from_schur(3, &e), f);
    }

    #[test]
    fn specializations() {
        assert_eq!(schur_principal(&part!(1), 2).unwrap(), LaurentV::one() + LaurentV::q_pow(-1));
        assert_eq!(schur_principal(&part!(), 2).unwrap(), LaurentV::one());
        schur_principal(&part!(2, 2), 2).unwrap();
        assert_eq!(dimq(&part!(1), 2).unwrap(), LaurentV::from_v_terms([(1, 1), (-1, 1)]));
        assert_eq!(dimq(&part!(1), 3).unwrap(), LaurentV::from_v_terms([(2, 1), (0, 1), (-2, 1)]));
        assert_eq!(dimq(&part!(), 4).unwrap(), LaurentV::one());
        let v = schur(&part!(1, 1), 2).eval(&EvalPoint::from_q(&[-2, -1]));
        assert_eq!(v, LaurentV::q_pow(-3));
    }

    #[test]
    fn hopf_values() {
        let want = LaurentV::from_v_terms([(3, 1), (-1, 1)]) * LaurentV::from_v_terms([(1, 1), (-1, 1)]);
        assert_eq!(hopf_schur(&part!(1), &part!(1), 2).unwrap(), want);
        assert_eq!(hopf_schur(&part!(), &part!(2, 1), 3).unwrap(), dimq(&part!(2, 1), 3).unwrap());
    }
}
