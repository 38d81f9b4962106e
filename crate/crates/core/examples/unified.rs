use qinterp::knot::{unified_invariant, KnotTable, Sign};
use qinterp::Partition;

fn main() -> qinterp::Result<()> {
    let unknot = KnotTable::unknot(2, &Partition::empty())?;
    let fig8 = KnotTable::figure_eight(2, &Partition::empty())?;
    for s in [Sign::Plus, Sign::Minus] {
        let u = unified_invariant(&unknot, s, 6)?;
        println!("unknot {s:?}, T = 6: {}", u.value.rep().to_text());
        let f = unified_invariant(&fig8, s, 1)?;
        println!("figure-eight {s:?}, T = 1: {} ({} colors)", f.value.rep().to_text(), f.terms);
    }
    match unified_invariant(&fig8, Sign::Plus, 2) {
        Ok(u) => println!("figure-eight T = 2: {}", u.value.rep().to_text()),
        Err(e) => println!("figure-eight T = 2: {e}"),
    }
    Ok(())
}
