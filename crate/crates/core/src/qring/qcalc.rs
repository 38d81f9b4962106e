//! q-Pochhammer symbols, Gaussian binomials, balanced quantum numbers and
//! cyclotomic polynomials.

use super::LaurentV;

/// `(q;q)_m`
pub fn poch(m: u32) -> LaurentV {
    (1..=m as i64).map(LaurentV::one_minus_q_pow).product()
}

/// `(q^s;q)_m = (1 - q^s)(1 - q^(s+1))...(1 - q^(s+m-1))`
pub fn shifted_poch(s: i64, m: u32) -> LaurentV {
    (0..m as i64).map(|i| LaurentV::one_minus_q_pow(s + i)).product()
}

/// Gaussian binomial in `q`; zero outside `0 <= b <= a`.
pub fn qbinom(a: u32, b: i64) -> LaurentV {
    if b < 0 || b > a as i64 {
        return LaurentV::zero();
    }
    let b = b as u32;
    let b = b.min(a - b);
    // Pascal recurrence on rows keeps everything division free
    let mut row = vec![LaurentV::one()];
    for n in 1..=a {
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=n.min(b) {
            let left = if k >= 1 { row[(k - 1) as usize].clone() } else { LaurentV::zero() };
            let right = if k < n && (k as usize) < row.len() {
                row[k as usize].shift_q(k as i64)
            } else {
                LaurentV::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row[b as usize].clone()
}

/// `[a] = (v^a - v^-a) / (v - v^-1)`
pub fn balanced_qnum(a: i64) -> LaurentV {
    let n = a.abs();
    let s: LaurentV = LaurentV::from_v_terms((0..n).map(|i| (n - 1 - 2 * i, 1)));
    if a < 0 {
        -s
    } else {
        s
    }
}

/// `[n]! = [1][2]...[n]`
pub fn balanced_qfact(n: u32) -> LaurentV {
    (1..=n as i64).map(balanced_qnum).product()
}

/// Balanced binomial `[a]! / ([b]! [a-b]!)`; zero outside `0 <= b <= a`.
pub fn balanced_qbinom(a: u32, b: i64) -> LaurentV {
    if b < 0 || b > a as i64 {
        return LaurentV::zero();
    }
    // [a choose b] = v^{-b(a-b)} * qbinom(a, b)
    qbinom(a, b).shift_v(-b * (a as i64 - b))
}

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// The `n`-th cyclotomic polynomial `Phi_n(q)`.
pub fn cyclotomic(n: u64) -> LaurentV {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut p = LaurentV::q_pow(n as i64) - LaurentV::one();
    for d in 1..n {
        if n % d == 0 {
            p = p.divide_exact(&cyclotomic(d)).expect("Phi_d divides q^n - 1");
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qd(low: i64, c: &[i64]) -> LaurentV {
        LaurentV::from_q_dense(low, c)
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(poch(0), LaurentV::one());
        assert_eq!(poch(1), qd(0, &[1, -1]));
        assert_eq!(poch(3), qd(0, &[1, -1, -1, 0, 1, 1, -1]));
        assert!(shifted_poch(0, 3).is_zero());
        assert_eq!(shifted_poch(-1, 1), LaurentV::one() - LaurentV::q_pow(-1));
        assert_eq!(
            shifted_poch(-2, 2),
            LaurentV::one_minus_q_pow(-2) * LaurentV::one_minus_q_pow(-1)
        );
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(qbinom(5, 0), LaurentV::one());
        assert_eq!(qbinom(4, 2), qd(0, &[1, 1, 2, 1, 1]));
        assert!(qbinom(3, 4).is_zero());
        assert!(qbinom(3, -1).is_zero());
        for a in 1..=12u32 {
            for b in 1..a as i64 {
                let rhs = qbinom(a - 1, b - 1) + qbinom(a - 1, b).shift_q(b);
                assert_eq!(qbinom(a, b), rhs, "({a},{b})");
            }
        }
        // against the product formula
        let direct = (poch(7).divide_exact(&(poch(3) * poch(4)))).unwrap();
        assert_eq!(qbinom(7, 3), direct);
    }

    #[test]
    fn balanced_numbers() {
        assert_eq!(balanced_qnum(1), LaurentV::one());
        assert_eq!(balanced_qnum(2), LaurentV::from_v_terms([(1, 1), (-1, 1)]));
        assert_eq!(balanced_qnum(3), LaurentV::from_v_terms([(2, 1), (0, 1), (-2, 1)]));
        assert!(balanced_qnum(0).is_zero());
        assert_eq!(balanced_qnum(-2), -balanced_qnum(2));
        for a in 0..8 {
            assert!(balanced_qnum(a).is_palindromic());
        }
        let lhs = balanced_qbinom(6, 2) * balanced_qfact(2) * balanced_qfact(4);
        assert_eq!(lhs, balanced_qfact(6));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic(1), qd(0, &[-1, 1]));
        assert_eq!(cyclotomic(2), qd(0, &[1, 1]));
        assert_eq!(cyclotomic(6), qd(0, &[1, -1, 1]));
        assert_eq!(cyclotomic(12), qd(0, &[1, 0, -1, 0, 1]));
        for n in 1..=30u64 {
            assert_eq!(cyclotomic(n).max_v_exp(), Some(2 * euler_phi(n) as i64));
        }
    }
}
