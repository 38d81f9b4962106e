//! Release gate: replays every printed example against the golden files and
//! checks the structural identities, one entry per acceptance criterion.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::golden::Golden;
use crate::habiro::HabiroElement;
use crate::interp::*;
use crate::knot::*;
use crate::partitions::Partition;
use crate::qring::{parse_laurent, parse_rational, parse_schur_sum, poch, LaurentV, UniPoly};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn part(s: &str) -> std::result::Result<Partition, String> {
    Partition::parse(s).map_err(e2s)
}

pub const TITLES: [&str; 13] = [
    "Schur expansions of F_lambda, lambda in [3,3], N=2",
    "C matrix for N=2, bound [3,3], entry by entry",
    "D matrix entries and C*D = D*C = 1 (N=2 [3,3], N=3 [2,2,2])",
    "Okounkov and Hopf routes to D agree",
    "Hopf norm of F_[3,2] and diagonal Gram matrix for |lambda| <= 4",
    "figure-eight coefficients and integrality through [3,3]",
    "figure-eight reconstruction through [3,3]",
    "stability under restriction and across N",
    "column, e_N and inverse e_N identities",
    "divisibility certificates and the shifted binomial identity",
    "Habiro ring inverse of q and representative independence",
    "unified invariant of +-1 surgery",
    "sl_2 cross-check for the figure-eight knot",
];

fn c1(g: &Golden) -> Outcome {
    for (k, e) in &g.fpoly.entries {
        let l = part(k)?;
        let want = parse_schur_sum(e).map_err(e2s)?;
        let got = schur_coeffs(&l, 2).map_err(e2s)?;
        if want != got {
            return Err(format!("F_{l} differs from the printed expansion"));
        }
    }
    Ok(format!("{} expansions", g.fpoly.entries.len()))
}

fn c2(g: &Golden) -> Outcome {
    let c = CMatrix::build(2, &part("3,3")?).map_err(e2s)?;
    let mut bad = Vec::new();
    let pairs = g.c_matrix.pairs().map_err(e2s)?;
    for (a, b, e) in &pairs {
        let (a, b) = (part(a)?, part(b)?);
        let want = parse_laurent(e).map_err(e2s)?;
        let got = if b.contains(&a) { c.get(&a, &b) } else { c_entry(&a, &b, 2).map_err(e2s)? };
        if want != got {
            bad.push(format!("c[{a}][{b}]: printed {} computed {}", want.to_text(), got.to_text()));
        }
    }
    let zeros = c.vanishing_violations().map_err(e2s)?;
    if !zeros.is_empty() {
        bad.push(format!("{} structural zeros violated", zeros.len()));
    }
    if bad.is_empty() {
        Ok(format!("{} entries", pairs.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn identity_check(n: usize, bound: &str) -> std::result::Result<(), String> {
    let b = part(bound)?;
    let c = CMatrix::build(n, &b).map_err(e2s)?.to_rational();
    let d = DMatrix::build_okounkov(n, &b).map_err(e2s)?;
    if !c.product(&d).is_identity() || !d.product(&c).is_identity() {
        return Err(format!("C*D is not the identity for N={n} bound {b}"));
    }
    Ok(())
}

fn c3(g: &Golden) -> Outcome {
    for (a, b, e) in g.d_matrix.pairs().map_err(e2s)? {
        let (a, b) = (part(&a)?, part(&b)?);
        let want = parse_rational(&e).map_err(e2s)?;
        if d_entry_okounkov(&a, &b, 2).map_err(e2s)? != want {
            return Err(format!("d[{a}][{b}] differs from the printed value"));
        }
    }
    identity_check(2, "3,3")?;
    identity_check(3, "2,2,2")?;
    Ok("25 entries, both inverse identities".into())
}

fn c4(g: &Golden) -> Outcome {
    for (n, bound) in [(2, "3,3"), (3, "2,2,2")] {
        let b = part(bound)?;
        let ok = DMatrix::build_okounkov(n, &b).map_err(e2s)?;
        let hp = DMatrix::build_hopf(n, &b).map_err(e2s)?;
        if let Some(((x, y), _)) = ok.entries.iter().find(|(k, v)| hp.get(&k.0, &k.1) != **v) {
            return Err(format!("routes differ at d[{x}][{y}], N={n}"));
        }
    }
    let want = parse_rational(g.examples.get("d [1]|[3,2]").ok_or("missing example d [1]|[3,2]")?).map_err(e2s)?;
    let (a, b) = (part("1")?, part("3,2")?);
    if d_entry_okounkov(&a, &b, 2).map_err(e2s)? != want || d_entry_hopf(&a, &b, 2).map_err(e2s)? != want {
        return Err("d[[1]][[3,2]] differs from the printed value".into());
    }
    Ok("all pairs agree, printed example reproduced".into())
}

fn c5(g: &Golden) -> Outcome {
    let l = part("3,2")?;
    let got = hopf_pairing(&l, &l, 2).map_err(e2s)?;
    let mut bad = Vec::new();
    let want = parse_laurent(g.examples.get("norm [3,2]").ok_or("missing example norm [3,2]")?).map_err(e2s)?;
    if got != want {
        bad.push(format!("(F_[3,2], F_[3,2]): printed {} computed {}", want.to_text(), got.to_text()));
    }
    let ps = Partition::up_to_size(4, 2);
    for a in &ps {
        for b in &ps {
            let p = hopf_pairing(a, b, 2).map_err(e2s)?;
            let w = if a == b { hopf_norm(a, 2).map_err(e2s)? } else { LaurentV::zero() };
            if p != w {
                bad.push(format!("Gram entry ({a},{b})"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("Gram matrix of {} polynomials", ps.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn fig8(bound: &str) -> std::result::Result<(KnotTable, CycloCoeffs), String> {
    let b = part(bound)?;
    let k = KnotTable::figure_eight(2, &b).map_err(e2s)?;
    let a = a_coeffs(&k, &b).map_err(e2s)?;
    Ok((k, a))
}

fn c6(g: &Golden) -> Outcome {
    let (_, a) = fig8("3,3")?;
    for (k, e) in &g.fig8.entries {
        let l = part(k)?;
        if a.get(&l) != Some(&parse_laurent(e).map_err(e2s)?) {
            return Err(format!("a_{l} differs from the printed value"));
        }
    }
    Ok(format!("{} printed values, {} Laurent coefficients", g.fig8.entries.len(), a.coeffs.len()))
}

fn c7(_: &Golden) -> Outcome {
    let (k, a) = fig8("3,3")?;
    for mu in part("3,3")?.sub_partitions() {
        if reconstruct(&a, &mu).map_err(e2s)? != k.value(&mu).map_err(e2s)? {
            return Err(format!("reconstruction fails at {mu}"));
        }
    }
    Ok("10 colors".into())
}

fn c8(_: &Golden) -> Outcome {
    for n in [2, 3] {
        for l in part("3,3")?.sub_partitions() {
            if restrict_last_var(&l, n).map_err(e2s)? != restrict_last_var_predicted(&l, n).map_err(e2s)? {
                return Err(format!("restriction of F_{l}, N={n}"));
            }
        }
    }
    let subs = part("3,3")?.sub_partitions();
    for a in &subs {
        for b in &subs {
            if normalized_c_entry(a, b, 2).map_err(e2s)? != normalized_c_entry(a, b, 3).map_err(e2s)? {
                return Err(format!("normalized c[{a}][{b}] depends on N"));
            }
        }
    }
    Ok("restrictions and 100 normalized entries".into())
}

fn c9(_: &Golden) -> Outcome {
    for n in [2, 3] {
        for l in Partition::up_to_size(if n == 2 { 3 } else { 2 }, n) {
            for k in 1..=2 {
                if !add_column_check(&l, k, n).map_err(e2s)? {
                    return Err(format!("adding {k} columns to {l}, N={n}"));
                }
            }
            if !mul_by_en_check(&l, n).map_err(e2s)? {
                return Err(format!("e_N F_{l}, N={n}"));
            }
        }
    }
    for l in Partition::up_to_size(2, 2) {
        for order in 0..=5 {
            if !inv_en_check(&l, 2, order).map_err(e2s)? {
                return Err(format!("inverse e_N series for {l} at order {order}"));
            }
        }
    }
    for j in 0..=6 {
        if x_inverse_node(j) != LaurentV::q_pow(j as i64) {
            return Err(format!("u_{j} != q^{j}"));
        }
    }
    Ok("all identities hold".into())
}

fn shifted_product(s: i64, m: u32) -> UniPoly {
    (0..m as i64).fold(UniPoly::constant(LaurentV::one()), |acc, i| {
        &acc * &UniPoly::from_coeffs(vec![-LaurentV::q_pow(s + i), LaurentV::one()])
    })
}

fn c10(_: &Golden) -> Outcome {
    let mut count = 0;
    for l in Partition::up_to_size(6, 2) {
        for a in -6..=0 {
            for b in -6..=0 {
                let c = divisibility_certificate(&l, &[a, b], 2).map_err(|e| format!("F_{l} at ({a},{b}): {e}"))?;
                if c.quotient * poch(c.k) != c.value {
                    return Err(format!("bad quotient for F_{l} at ({a},{b})"));
                }
                count += 1;
            }
        }
    }
    for m in 0..=6 {
        for s in -3..=3 {
            if from_f_basis(&binomial_shift_expand(s, m)) != shifted_product(s, m) {
                return Err(format!("shifted binomial identity at m={m}, s={s}"));
            }
        }
    }
    Ok(format!("{count} certificates"))
}

fn random_laurent(rng: &mut StdRng, lo: i64, hi: i64) -> LaurentV {
    let mut p = LaurentV::zero();
    for e in lo..=hi {
        let c: i64 = rng.gen_range(-3..=3);
        p += &LaurentV::monomial_q(e, c);
    }
    p
}

fn c11(_: &Golden) -> Outcome {
    for t in 1..=8 {
        let x = HabiroElement::embed(&LaurentV::q_pow(1), t).map_err(e2s)?;
        let y = HabiroElement::embed(&LaurentV::q_pow(-1), t).map_err(e2s)?;
        if !x.mul(&y).map_err(e2s)?.rep().is_one() {
            return Err(format!("q * q^-1 != 1 at T={t}"));
        }
    }
    let mut rng = StdRng::seed_from_u64(20_260_101);
    for case in 0..20 {
        let t = rng.gen_range(1..=6u32);
        let terms: Vec<LaurentV> = (0..t + 2).map(|_| random_laurent(&mut rng, -3, 3)).collect();
        let h = HabiroElement::from_series(&terms, t).map_err(e2s)?;
        // the same class written through a different representative
        let direct: LaurentV = terms.iter().take(t as usize).enumerate().map(|(n, f)| f * &poch(n as u32)).sum();
        let other = &direct + &(random_laurent(&mut rng, -4, 4) * poch(t));
        let h2 = HabiroElement::embed(&other, t).map_err(e2s)?;
        if h != h2 {
            return Err(format!("case {case}: representatives give different classes"));
        }
        for n in 1..=t as u64 {
            if h.eval_root(n).map_err(e2s)? != h2.eval_root(n).map_err(e2s)?
                || h.eval_root(n).map_err(e2s)? != crate::qring::eval_at_root(&other, n).map_err(e2s)?
            {
                return Err(format!("case {case}: value at order {n} depends on the representative"));
            }
        }
        if h.taylor_at_1(t - 1).map_err(e2s)? != h2.taylor_at_1(t - 1).map_err(e2s)? {
            return Err(format!("case {case}: Taylor coefficients depend on the representative"));
        }
    }
    Ok("8 truncations, 20 random cases".into())
}

fn c12(_: &Golden) -> Outcome {
    let u = KnotTable::unknot(2, &Partition::empty()).map_err(e2s)?;
    for t in 1..=6 {
        let p = unified_invariant(&u, Sign::Plus, t).map_err(e2s)?;
        let m = unified_invariant(&u, Sign::Minus, t).map_err(e2s)?;
        if !p.value.rep().is_one() || p.value != m.value {
            return Err(format!("unknot at T={t}"));
        }
    }
    let k = KnotTable::figure_eight(2, &Partition::empty()).map_err(e2s)?;
    for t in 1..=3 {
        for s in [Sign::Plus, Sign::Minus] {
            let r = unified_invariant(&k, s, t).map_err(|e| format!("figure-eight, T={t}, sign {s:?}: {e}"))?;
            if r.value.eval_root(1).map_err(e2s)?.as_integer() != Some(&1.into()) {
                return Err(format!("figure-eight, T={t}, sign {s:?}: value at q=1 is not 1"));
            }
        }
    }
    Ok("unknot T<=6, figure-eight T<=3".into())
}

fn c13(_: &Golden) -> Outcome {
    for n in 0..=4 {
        if !sl2_pn_check(n).map_err(e2s)? {
            return Err(format!("P_{n} closed form"));
        }
    }
    let vals: Vec<LaurentV> = (0..=4).map(figure_eight_jones).collect();
    let a = sl2_a_coeffs(&vals).map_err(e2s)?;
    for j in 0..=4u32 {
        if sl2_reconstruct(&a, j) != vals[j as usize] {
            return Err(format!("reconstruction of V_{j}"));
        }
    }
    let terms: Vec<String> = a.iter().map(|x| x.to_text()).collect();
    Ok(format!("a_0..a_4 = {}", terms.join(", ")))
}

type Check = fn(&Golden) -> Outcome;
const CHECKS: [Check; 13] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13];

/// Runs criterion `id` (1-based).
pub fn run_one(id: u32, g: &Golden) -> CheckResult {
    let i = (id - 1) as usize;
    let out = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| CHECKS[i](g)))
        .unwrap_or_else(|_| Err("panicked".into()));
    let (passed, detail) = match out {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult { id, title: TITLES[i], passed, detail }
}

pub fn run_all(g: &Golden) -> Vec<CheckResult> {
    (1..=CHECKS.len() as u32).map(|i| run_one(i, g)).collect()
}

