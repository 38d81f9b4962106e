use proptest::prelude::*;

use qinterp::interp::{c_entry, CMatrix, DMatrix};
use qinterp::knot::{kirby_pairing, unified_invariant, KnotTable, Sign};
use qinterp::qring::{parse_laurent, poch};
use qinterp::{HabiroElement, LaurentV, Partition, RationalQ};

fn qpoly() -> impl Strategy<Value = LaurentV> {
    (-4i64..=4, prop::collection::vec(-3i64..=3, 0..6)).prop_map(|(low, c)| LaurentV::from_q_dense(low, &c))
}

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(&v).unwrap()
    })
}

proptest! {
    #[test]
    fn partition_key_round_trip(p in partition(4, 5)) {
        prop_assert_eq!(Partition::parse(&p.key()).unwrap(), p.clone());
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
        prop_assert_eq!(p.cells().len() as u32, p.size());
    }

    #[test]
    fn sub_partitions_are_contained(p in partition(3, 3)) {
        let subs = p.sub_partitions();
        prop_assert!(subs.iter().all(|s| p.contains(s)));
        prop_assert!(subs.contains(&Partition::empty()));
        prop_assert!(subs.contains(&p));
    }

    #[test]
    fn laurent_text_round_trip(p in qpoly()) {
        prop_assert_eq!(parse_laurent(&p.to_text()).unwrap(), p.clone());
        prop_assert_eq!(p.invert_v().invert_v(), p);
    }

    #[test]
    fn exact_division(a in qpoly(), b in qpoly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn rational_canonical(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assume!(!b.is_zero() && !c.is_zero());
        let x = RationalQ::new(a.clone(), b.clone()).unwrap();
        let y = RationalQ::new(&a * &c, &b * &c).unwrap();
        prop_assert_eq!(&x, &y);
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalQ>(&json).unwrap(), x);
    }

    #[test]
    fn habiro_representative_independence(p in qpoly(), r in qpoly(), t in 1u32..=5) {
        let shifted = &p + &(&r * &poch(t));
        let a = HabiroElement::embed(&p, t).unwrap();
        let b = HabiroElement::embed(&shifted, t).unwrap();
        prop_assert_eq!(&a, &b);
        for n in 1..=t as u64 {
            prop_assert_eq!(a.eval_root(n).unwrap(), b.eval_root(n).unwrap());
        }
        prop_assert_eq!(a.taylor_at_1(t - 1).unwrap(), b.taylor_at_1(t - 1).unwrap());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<HabiroElement>(&json).unwrap(), a);
    }

    #[test]
    fn habiro_ring_laws(a in qpoly(), b in qpoly(), t in 1u32..=4) {
        let x = HabiroElement::embed(&a, t).unwrap();
        let y = HabiroElement::embed(&b, t).unwrap();
        prop_assert_eq!(x.mul(&y).unwrap(), HabiroElement::embed(&(&a * &b), t).unwrap());
        prop_assert_eq!(x.add(&y).unwrap(), HabiroElement::embed(&(&a + &b), t).unwrap());
        prop_assert!(x.sub(&x).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn c_vanishes_off_containment(a in partition(2, 3), b in partition(2, 3)) {
        let c = c_entry(&a, &b, 2).unwrap();
        prop_assert_eq!(c.is_zero(), !b.contains(&a));
    }

    #[test]
    fn c_times_d_is_identity(b in partition(2, 2), n in 2usize..=3) {
        let c = CMatrix::build(n, &b).unwrap().to_rational();
        let d = DMatrix::build_okounkov(n, &b).unwrap();
        prop_assert!(c.product(&d).is_identity());
        prop_assert!(d.product(&c).is_identity());
    }

    #[test]
    fn kirby_pairing_is_triangular(l in partition(2, 2), nu in partition(2, 2)) {
        let p = kirby_pairing(&l, &nu, 2).unwrap();
        if !nu.contains(&l) {
            prop_assert!(p.is_zero());
        }
        if nu == l {
            prop_assert!(!p.is_zero());
        }
    }

    #[test]
    fn unknot_surgery_is_trivial(t in 1u32..=6, plus in any::<bool>()) {
        let s = if plus { Sign::Plus } else { Sign::Minus };
        let u = unified_invariant(&KnotTable::unknot(2, &Partition::empty()).unwrap(), s, t).unwrap();
        prop_assert!(u.value.rep().is_one());
    }

    #[test]
    fn knot_table_json_round_trip(b in partition(2, 2)) {
        let k = KnotTable::figure_eight(2, &b).unwrap();
        let back = KnotTable::from_json(&k.to_json().unwrap()).unwrap();
        prop_assert_eq!(back.values(), k.values());
    }
}
