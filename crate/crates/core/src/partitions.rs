//! Partitions and Young-diagram statistics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qring::LaurentV;

/// A weakly decreasing sequence of positive integers. Zero parts are never
/// stored; operations that depend on a number of variables take it
/// explicitly and pad with zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A box of the diagram, with its arm/leg statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
    pub arm: u32,
    pub leg: u32,
    pub coarm: u32,
    pub coleg: u32,
    pub hook: u32,
    pub content: i64,
}

pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

pub fn binom3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Accepts any weakly decreasing nonnegative sequence; trailing zeros
    /// are dropped.
    pub fn new(parts: &[u32]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts.to_vec()))
    }

    fn from_sorted(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Builds from a signed exponent vector if it is a partition.
    pub fn from_i64(parts: &[i64]) -> Option<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Self::from_sorted(parts.iter().map(|&p| p as u32).collect()))
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| self.part(i) as i64).collect()
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() > n {
            return Err(Error::TooManyParts { lambda: self.clone(), nvars: n });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Partition {
        let w = self.part(0);
        let parts = (0..w).map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32).collect();
        Partition { parts }
    }

    pub fn cells(&self) -> Vec<Cell> {
        let t = self.transpose();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 0..p {
                let arm = p - j - 1;
                let leg = t.part(j as usize) - i as u32 - 1;
                out.push(Cell {
                    row: i as u32,
                    col: j,
                    arm,
                    leg,
                    coarm: j,
                    coleg: i as u32,
                    hook: arm + leg + 1,
                    content: j as i64 - i as i64,
                });
            }
        }
        out
    }

    pub fn hooks(&self) -> Vec<u32> {
        self.cells().iter().map(|c| c.hook).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.cells().iter().map(|c| c.content).collect()
    }

    /// `n(lambda) = sum (i-1) lambda_i`
    pub fn n(&self) -> i64 {
        self.parts.iter().enumerate().map(|(i, &p)| i as i64 * p as i64).sum()
    }

    /// `n(lambda')`, computed as `sum binom(lambda_i, 2)`.
    pub fn n_prime(&self) -> i64 {
        self.parts.iter().map(|&p| binom2(p as i64)).sum()
    }

    /// Total content `c(lambda) = n(lambda') - n(lambda)`.
    pub fn content_sum(&self) -> i64 {
        self.n_prime() - self.n()
    }

    pub fn stats(&self) -> (i64, i64, i64) {
        (self.n(), self.n_prime(), self.content_sum())
    }

    /// `D_N(lambda) = sum_i binom(lambda_i + N - i, 2)`, checked against the
    /// closed form `c(lambda) + (N-1)|lambda| + binom(N,3)`.
    pub fn d_n(&self, n: usize) -> Result<i64> {
        self.check_len(n)?;
        let nn = n as i64;
        let sum: i64 = (0..n).map(|i| binom2(self.part(i) as i64 + nn - 1 - i as i64)).sum();
        let closed = self.content_sum() + (nn - 1) * self.size() as i64 + binom3(nn);
        assert_eq!(sum, closed, "D_N closed form for {self}");
        Ok(sum)
    }

    /// Coordinatewise containment `self ⊇ other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `self + k^N`: adds a vertical column of height `n`, `k` times.
    pub fn add_columns(&self, k: u32, n: usize) -> Result<Partition> {
        self.check_len(n)?;
        Ok(Partition::from_sorted((0..n).map(|i| self.part(i) + k).collect()))
    }

    /// All partitions contained in `self`, in the canonical order.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(bound: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == bound.len() {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in 0..=bound[i].min(max) {
                cur.push(p);
                rec(bound, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.parts, 0, u32::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of `k` with at most `max_len` parts, canonical order.
    pub fn of_size(k: u32, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rem: u32, max: u32, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            if left == 0 {
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(k, k, max_len, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions of size at most `k` with at most `max_len` parts.
    pub fn up_to_size(k: u32, max_len: usize) -> Vec<Partition> {
        (0..=k).flat_map(|s| Self::of_size(s, max_len)).collect()
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len().min(max_len.saturating_sub(1)) {
            let mut p = self.padded(i + 1);
            p[i] += 1;
            if let Some(mu) = Partition::from_i64(&p) {
                let mut full = mu.parts.clone();
                full.extend_from_slice(self.parts.get(i + 1..).unwrap_or(&[]));
                out.push(Partition::from_sorted(full));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Key form used in JSON maps, e.g. `"[3,2]"`.
    pub fn key(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        format!("[{}]", inner.join(","))
    }

    /// Parses `"3,2"`, `"[3,2]"`, `"(3,2)"`, or the empty forms `""`, `"0"`, `"[]"`.
    pub fn parse(s: &str) -> Result<Partition> {
        let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: std::result::Result<Vec<u32>, _> = t.split(',').map(|x| x.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::InvalidArgument(format!("bad partition {s:?}")))?;
        Partition::new(&parts)
    }
}

/// Checks `prod_cells (1 - t^h) = prod_i (t;t)_{l_i} / prod_{i<j} (1 - t^{l_i - l_j})`
/// with `l_i = lambda_i + N - i`, as an identity of polynomials.
pub fn hook_product_identity_check(lambda: &Partition, n: usize) -> Result<bool> {
    lambda.check_len(n)?;
    let lhs: LaurentV = lambda.hooks().iter().map(|&h| LaurentV::one_minus_q_pow(h as i64)).product();
    let lb: Vec<i64> = (0..n).map(|i| lambda.part(i) as i64 + (n - 1 - i) as i64).collect();
    let num: LaurentV = lb.iter().map(|&l| crate::qring::poch(l as u32)).product();
    let mut den = LaurentV::one();
    for i in 0..n {
        for j in i + 1..n {
            den = den * LaurentV::one_minus_q_pow(lb[i] - lb[j]);
        }
    }
    Ok(match num.divide_exact(&den) {
        Ok(rhs) => rhs == lhs,
        Err(_) => false,
    })
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(&parts).map_err(D::Error::custom)
    }
}

#[macro_export]
macro_rules! part {
    () => { $crate::partitions::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::partitions::Partition::new(&[$($p),+]).unwrap() };
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<u32>) -> Vec<u32> {
        v.sort();
        v
    }

    #[test]
    fn cells_and_hooks() {
        assert!(part!().cells().is_empty());
        assert_eq!(sorted(part!(3, 2).hooks()), vec![1, 1, 2, 3, 4]);
        let c = part!(1).cells();
        assert_eq!((c[0].hook, c[0].content), (1, 0));
        let l = part!(4, 2, 2, 1);
        for c in l.cells() {
            assert!(c.content >= 1 - l.len() as i64 && c.content < l.part(0) as i64);
        }
    }

    #[test]
    fn statistics() {
        assert_eq!(part!(3, 2).stats(), (2, 4, 2));
        assert_eq!(part!(1, 1, 1, 1).stats(), (6, 0, -6));
        assert_eq!(part!().stats(), (0, 0, 0));
        assert_eq!(part!(3, 2).d_n(2).unwrap(), 7);
        assert_eq!(part!(1).d_n(2).unwrap(), 1);
        for n in 2..6 {
            assert_eq!(part!().d_n(n).unwrap(), binom3(n as i64));
        }
        assert!(part!(1, 1, 1).d_n(2).is_err());
    }

    #[test]
    fn ordering_and_enumeration() {
        let subs = part!(2, 1).sub_partitions();
        assert_eq!(subs, vec![part!(), part!(1), part!(1, 1), part!(2), part!(2, 1)]);
        assert!(part!(3, 2).contains(&part!(1)));
        assert!(!part!(2, 2).contains(&part!(3)));
        assert_eq!(Partition::of_size(4, 4).len(), 5);
        assert_eq!(Partition::of_size(4, 2).len(), 3);
        assert_eq!(part!(3, 3).sub_partitions().len(), 10);
        assert_eq!(part!(1, 1).add_box(2), vec![part!(2, 1)]);
        assert_eq!(part!(1).add_box(3), vec![part!(1, 1), part!(2)]);
    }

    #[test]
    fn parsing_and_json() {
        assert_eq!(Partition::parse("3,2").unwrap(), part!(3, 2));
        assert_eq!(Partition::parse("[3,2,0]").unwrap(), part!(3, 2));
        assert_eq!(Partition::parse("0").unwrap(), part!());
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(serde_json::to_string(&part!(3, 2)).unwrap(), "[3,2]");
        assert_eq!(part!(3, 2).key(), "[3,2]");
    }

    #[test]
    fn hook_identity_examples() {
        assert!(hook_product_identity_check(&part!(), 3).unwrap());
        assert!(hook_product_identity_check(&part!(3, 2), 2).unwrap());
        assert!(hook_product_identity_check(&part!(2, 1, 1), 4).unwrap());
    }
}
