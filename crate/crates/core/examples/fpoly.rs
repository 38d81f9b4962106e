use qinterp::interp::{c_entry, schur_coeffs};
use qinterp::Partition;

fn main() -> qinterp::Result<()> {
    let n = 2;
    for l in Partition::parse("2,2")?.sub_partitions() {
        let s = schur_coeffs(&l, n)?;
        let terms: Vec<String> = s.iter().rev().map(|(mu, c)| format!("({}) s_{mu}", c.to_text())).collect();
        println!("F_{l} = {}", terms.join(" + "));
    }
    // F_lambda vanishes at the nodes of smaller partitions
    let l = Partition::parse("2,1")?;
    for mu in Partition::up_to_size(3, n) {
        println!("F_{l} at node {mu}: {}", c_entry(&l, &mu, n)?.to_text());
    }
    Ok(())
}
