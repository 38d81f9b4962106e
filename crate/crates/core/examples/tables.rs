//! Prints the evaluation matrix C and its inverse D for N = 2 up to [2,2].
use qinterp::interp::{CMatrix, DMatrix};
use qinterp::Partition;

fn main() -> qinterp::Result<()> {
    let bound = Partition::parse("2,2")?;
    let c = CMatrix::build(2, &bound)?;
    let d = DMatrix::build_okounkov(2, &bound)?;
    for ((a, b), x) in &c.entries {
        println!("c({a}, {b}) = {}", x.to_text());
    }
    println!();
    for ((a, b), x) in &d.entries {
        println!("d({a}, {b}) = {}", x.to_text());
    }
    assert!(c.to_rational().product(&d).is_identity());
    Ok(())
}
