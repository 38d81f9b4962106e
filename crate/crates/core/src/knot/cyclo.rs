//! Cyclotomic expansion `J_K = sum_lambda a_lambda(K) sigma_lambda`, where
//! `sigma_lambda` acts on `V(mu)` by `c[lambda][mu](q^-1)`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::table::KnotTable;
use crate::error::{Error, Result};
use crate::interp::{c_entry, d_entry_okounkov, DMatrix};
use crate::partitions::Partition;
use crate::qring::{LaurentV, RationalQ};

/// Scalar by which `sigma_lambda` acts on `V(mu)`.
pub fn sigma_scalar(lambda: &Partition, mu: &Partition, n: usize) -> Result<LaurentV> {
    lambda.check_len(n)?;
    Ok(c_entry(lambda, mu, n)?.invert_v())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CycloCoeffs {
    #[serde(rename = "N")]
    pub n: usize,
    #[serde(with = "keyed")]
    pub coeffs: BTreeMap<Partition, LaurentV>,
}

mod keyed {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<Partition, LaurentV>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let k: BTreeMap<String, &LaurentV> = m.iter().map(|(p, v)| (p.key(), v)).collect();
        k.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BTreeMap<Partition, LaurentV>, D::Error> {
        use serde::de::Error as _;
        let raw = BTreeMap::<String, LaurentV>::deserialize(d)?;
        raw.into_iter().map(|(k, v)| Ok((Partition::parse(&k).map_err(D::Error::custom)?, v))).collect()
    }
}

impl CycloCoeffs {
    pub fn get(&self, lambda: &Partition) -> Option<&LaurentV> {
        self.coeffs.get(lambda)
    }
}

/// `a_lambda(K) = sum_{mu ⊆ lambda} d[mu][lambda](q^-1) J_K(V(mu))` for every
/// `lambda ⊆ bound`. Each sum must collapse to a Laurent polynomial.
pub fn a_coeffs(k: &KnotTable, bound: &Partition) -> Result<CycloCoeffs> {
    let n = k.nvars();
    bound.check_len(n)?;
    let subs = bound.sub_partitions();
    let values: BTreeMap<Partition, LaurentV> =
        subs.iter().map(|m| k.value(m).map(|v| (m.clone(), v))).collect::<Result<_>>()?;
    let coeffs: Result<BTreeMap<_, _>> = subs
        .par_iter()
        .map(|l| {
            let mut a = RationalQ::zero();
            for mu in l.sub_partitions() {
                a = &a + &d_entry_okounkov(&mu, l, n)?.invert_q().mul_laurent(&values[&mu]);
            }
            match a.to_laurent() {
                Ok(x) => Ok((l.clone(), x)),
                Err(remainder) => Err(Error::NotLaurent { lambda: l.clone(), remainder }),
            }
        })
        .collect();
    Ok(CycloCoeffs { n, coeffs: coeffs? })
}

/// `a_coeffs` from a prebuilt inverse matrix over `bound`.
pub fn a_coeffs_from_matrix(k: &KnotTable, d: &DMatrix) -> Result<CycloCoeffs> {
    let n = k.nvars();
    if d.n != n {
        return Err(Error::NvarsMismatch(d.n, n));
    }
    let subs = d.bound.sub_partitions();
    let values: BTreeMap<Partition, LaurentV> =
        subs.iter().map(|m| k.value(m).map(|v| (m.clone(), v))).collect::<Result<_>>()?;
    let mut coeffs = BTreeMap::new();
    for l in &subs {
        let a: RationalQ = l.sub_partitions().iter().map(|mu| d.get(mu, l).invert_q().mul_laurent(&values[mu])).sum();
        match a.to_laurent() {
            Ok(x) => coeffs.insert(l.clone(), x),
            Err(remainder) => return Err(Error::NotLaurent { lambda: l.clone(), remainder }),
        };
    }
    Ok(CycloCoeffs { n, coeffs })
}

/// The same coefficients on a down-closed set of partitions, by forward
/// substitution in `J(V(mu)) = sum_{lambda ⊆ mu} a_lambda sigma_lambda(mu)`.
/// Divisions by the diagonal scalars must be exact.
pub fn a_coeffs_by_substitution(k: &KnotTable, lambdas: &[Partition]) -> Result<CycloCoeffs> {
    let n = k.nvars();
    let mut sorted = lambdas.to_vec();
    sorted.sort();
    sorted.dedup();
    let set: std::collections::BTreeSet<_> = sorted.iter().cloned().collect();
    for l in &sorted {
        if let Some(missing) = l.sub_partitions().into_iter().find(|m| !set.contains(m)) {
            return Err(Error::InvalidArgument(format!("set of partitions is not down-closed: {missing} ⊆ {l}")));
        }
    }
    let mut coeffs: BTreeMap<Partition, LaurentV> = BTreeMap::new();
    for mu in &sorted {
        let subs = mu.sub_partitions();
        let lower: Vec<LaurentV> = subs
            .par_iter()
            .filter(|l| *l != mu)
            .map(|l| Ok(&coeffs[l] * &sigma_scalar(l, mu, n)?))
            .collect::<Result<_>>()?;
        let mut rest = k.value(mu)?;
        for x in lower {
            rest -= &x;
        }
        let a = match rest.divide_exact(&sigma_scalar(mu, mu, n)?) {
            Ok(a) => a,
            Err(Error::NotDivisible { remainder }) => return Err(Error::NotLaurent { lambda: mu.clone(), remainder }),
            Err(e) => return Err(e),
        };
        coeffs.insert(mu.clone(), a);
    }
    Ok(CycloCoeffs { n, coeffs })
}

/// `sum_{lambda ⊆ mu} a_lambda sigma_lambda(mu)`, which recovers `J_K(V(mu))`.
pub fn reconstruct(a: &CycloCoeffs, mu: &Partition) -> Result<LaurentV> {
    let mut acc = LaurentV::zero();
    for l in mu.sub_partitions() {
        let c = a.coeffs.get(&l).ok_or_else(|| Error::MissingColor(l.clone()))?;
        acc += &(c * &sigma_scalar(&l, mu, a.n)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{binom2, binom3};

    fn qd(low: i64, c: &[i64]) -> LaurentV {
        LaurentV::from_q_dense(low, c)
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_scalar(&part!(1), &part!(1), 2).unwrap(), qd(0, &[-1, 1]));
        assert!(sigma_scalar(&part!(2), &part!(1, 1), 2).unwrap().is_zero());
        for n in 1..=4usize {
            let s = if binom2(n as i64) % 2 == 0 { 1 } else { -1 };
            assert_eq!(sigma_scalar(&part!(), &part!(), n).unwrap(), LaurentV::monomial_q(-binom3(n as i64), s));
        }
    }

    #[test]
    fn figure_eight_coefficients() {
        let k = KnotTable::figure_eight(2, &part!(2, 1)).unwrap();
        let a = a_coeffs(&k, &part!(2, 1)).unwrap();
        assert_eq!(a.coeffs[&part!()], LaurentV::constant(-1));
        assert_eq!(a.coeffs[&part!(1)], qd(-2, &[-1, 0, 0, 1]));
        assert_eq!(a.coeffs[&part!(2)], qd(-6, &[-1, 0, 0, -1, 1, 1, 0, 0, 0, -1]));
        assert_eq!(a.coeffs[&part!(1, 1)], qd(-2, &[1, 1, 1]));
        assert_eq!(a.coeffs[&part!(2, 1)], qd(-6, &[1, 1, 1, 2, 1, -1, -1, -1, -1]));
        let b = a_coeffs_by_substitution(&k, &part!(2, 1).sub_partitions()).unwrap();
        assert_eq!(a, b);
        let d = DMatrix::build_okounkov(2, &part!(2, 1)).unwrap();
        assert_eq!(a_coeffs_from_matrix(&k, &d).unwrap(), a);
        for mu in part!(2, 1).sub_partitions() {
            assert_eq!(reconstruct(&a, &mu).unwrap(), k.value(&mu).unwrap());
        }
    }

    #[test]
    fn unknot_coefficients() {
        for n in 1..=3 {
            let bound = Partition::new(&vec![1; n]).unwrap();
            let k = KnotTable::unknot(n, &bound).unwrap();
            let a = a_coeffs(&k, &bound).unwrap();
            let s = if binom2(n as i64) % 2 == 0 { 1 } else { -1 };
            assert_eq!(a.coeffs[&part!()], LaurentV::monomial_q(binom3(n as i64), s));
            assert!(a.coeffs.iter().all(|(l, c)| l.is_empty() || c.is_zero()));
        }
    }

    #[test]
    fn json_shape() {
        let k = KnotTable::figure_eight(2, &part!(1)).unwrap();
        let a = a_coeffs(&k, &part!(1)).unwrap();
        let j = serde_json::to_string(&a).unwrap();
        assert!(j.contains("\"[1]\""));
        assert_eq!(serde_json::from_str::<CycloCoeffs>(&j).unwrap(), a);
    }
}
