//! Arithmetic in the Habiro ring modulo (q;q)_T.
use qinterp::qring::poch;
use qinterp::{HabiroElement, LaurentV};

fn main() -> qinterp::Result<()> {
    let t = 5;
    let inv = HabiroElement::embed(&LaurentV::q_pow(-1), t)?;
    println!("q^-1 mod (q;q)_{t} = {}", inv.rep().to_text());
    let q = HabiroElement::embed(&LaurentV::q_pow(1), t)?;
    println!("q * q^-1 = {}", q.mul(&inv)?.rep().to_text());

    // sum_n (q;q)_n, the Kontsevich series
    let terms = vec![LaurentV::one(); t as usize];
    let k = HabiroElement::from_series(&terms, t)?;
    for n in 1..=t as u64 {
        println!("at a root of order {n}: {}", k.eval_root(n)?.to_laurent().to_text());
    }
    let c: Vec<String> = k.taylor_at_1(t - 1)?.iter().map(|x| x.to_string()).collect();
    println!("around q = 1: {}", c.join(", "));
    assert!(HabiroElement::embed(&poch(t), t)?.is_zero());
    Ok(())
}
