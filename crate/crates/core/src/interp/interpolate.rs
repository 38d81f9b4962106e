use std::collections::BTreeMap;

use super::matrices::{c_entry, d_entry_okounkov};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qring::{LaurentV, RationalQ};

/// Coefficients `a_lambda` with `sum_lambda a_lambda F_lambda(node mu) = values[mu]`
/// for every `mu ⊆ bound`. Computed by applying the inverse matrix and by
/// back substitution; the two must agree.
pub fn interpolate_sym(
    values: &BTreeMap<Partition, LaurentV>,
    bound: &Partition,
    n: usize,
) -> Result<BTreeMap<Partition, RationalQ>> {
    bound.check_len(n)?;
    let subs = bound.sub_partitions();
    for mu in &subs {
        if !values.contains_key(mu) {
            return Err(Error::MissingColor(mu.clone()));
        }
    }
    if let Some(extra) = values.keys().find(|k| !bound.contains(k)) {
        return Err(Error::InvalidArgument(format!("node {extra} lies outside the bound {bound}")));
    }
    let mut via_d = BTreeMap::new();
    for l in &subs {
        let mut a = RationalQ::zero();
        for mu in subs.iter().filter(|m| l.contains(m)) {
            a = &a + &d_entry_okounkov(mu, l, n)?.mul_laurent(&values[mu]);
        }
        via_d.insert(l.clone(), a);
    }
    let mut back: BTreeMap<Partition, RationalQ> = BTreeMap::new();
    for nu in &subs {
        let mut rest = RationalQ::from(values[nu].clone());
        for (l, a) in back.iter().filter(|(l, _)| nu.contains(l)) {
            rest = &rest - &a.mul_laurent(&c_entry(l, nu, n)?);
        }
        back.insert(nu.clone(), rest.div_laurent(&c_entry(nu, nu, n)?)?);
    }
    if back != via_d {
        return Err(Error::InvalidArgument("inverse matrix and back substitution disagree".into()));
    }
    Ok(via_d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::f_poly;
    use crate::symfun::{node, schur};

    #[test]
    fn constant_and_schur() {
        let b = part!(2, 2);
        let ones: BTreeMap<_, _> = b.sub_partitions().into_iter().map(|m| (m, LaurentV::one())).collect();
        let a = interpolate_sym(&ones, &b, 2).unwrap();
        assert_eq!(a[&part!()], RationalQ::from(-1));
        assert!(a.iter().filter(|(k, _)| !k.is_empty()).all(|(_, v)| v.is_zero()));

        let s1 = schur(&part!(1), 2);
        let vals: BTreeMap<_, _> = b.sub_partitions().into_iter().map(|m| (m.clone(), s1.eval(&node(&m, 2)))).collect();
        let a = interpolate_sym(&vals, &b, 2).unwrap();
        assert_eq!(a[&part!(1)], RationalQ::from(LaurentV::q_pow(-1)));
        assert_eq!(a[&part!()], RationalQ::from(-LaurentV::from_q_dense(-1, &[1, 1])));
    }

    #[test]
    fn basis_vectors() {
        let b = part!(2, 1);
        let f = f_poly(&part!(1, 1), 2).unwrap();
        let vals: BTreeMap<_, _> = b.sub_partitions().into_iter().map(|m| (m.clone(), f.eval(&node(&m, 2)))).collect();
        let a = interpolate_sym(&vals, &b, 2).unwrap();
        for (k, v) in a {
            assert_eq!(v, if k == part!(1, 1) { RationalQ::one() } else { RationalQ::zero() });
        }
        let mut missing = BTreeMap::new();
        missing.insert(part!(), LaurentV::one());
        assert!(matches!(interpolate_sym(&missing, &b, 2), Err(Error::MissingColor(_))));
    }
}
