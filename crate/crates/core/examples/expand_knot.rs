//! Cyclotomic coefficients of the figure-eight knot for gl_2, and of the
//! unknot for gl_3.
use qinterp::knot::{a_coeffs, reconstruct, KnotTable};
use qinterp::Partition;

fn main() -> qinterp::Result<()> {
    for (name, n, b) in [("fig8", 2, "3,3"), ("unknot", 3, "1,1,1")] {
        let bound = Partition::parse(b)?;
        let k = KnotTable::builtin(name, n, &bound)?;
        let a = a_coeffs(&k, &bound)?;
        println!("{name}, N = {n}");
        for (l, c) in &a.coeffs {
            println!("  a_{l} = {}", c.to_text());
            assert_eq!(reconstruct(&a, l)?, k.value(l)?);
        }
    }
    Ok(())
}
