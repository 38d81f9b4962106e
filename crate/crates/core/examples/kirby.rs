//! Kirby pairing of P'_lambda against the sigma basis, and divisibility of
//! figure-eight values.
use qinterp::knot::{a_coeffs, kirby_diagonal_constant, kirby_pairing, knot_pprime_value, KnotTable};
use qinterp::Partition;

fn main() -> qinterp::Result<()> {
    let n = 2;
    let b = Partition::parse("2,1")?;
    let subs = b.sub_partitions();
    for l in &subs {
        for nu in &subs {
            let p = kirby_pairing(l, nu, n)?;
            if !p.is_zero() {
                println!("<P'_{l}, sigma_{nu}> = {}", p.to_text());
            }
        }
        println!("  diagonal constant {}", kirby_diagonal_constant(l, n)?.to_text());
    }
    let k = KnotTable::figure_eight(n, &b)?;
    let a = a_coeffs(&k, &b)?;
    for l in &subs {
        let v = knot_pprime_value(&a, l)?;
        match v.divisibility {
            Some(m) => println!("J(P'_{l}) is divisible by (q;q)_{m}"),
            None => println!("J(P'_{l}) = 0"),
        }
    }
    Ok(())
}
