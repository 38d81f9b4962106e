//! Writes a knot table to JSON, reads it back and expands it.
use qinterp::knot::{a_coeffs, KnotTable};
use qinterp::Partition;

fn main() -> qinterp::Result<()> {
    let bound = Partition::parse("2,1")?;
    let path = std::env::temp_dir().join("qinterp-fig8.json");
    std::fs::write(&path, KnotTable::figure_eight(2, &bound)?.to_json()?)?;
    let k = KnotTable::ingest(&path)?;
    println!("{} from {}: {} colors", k.name(), path.display(), k.values().len());
    for (l, c) in &a_coeffs(&k, &bound)?.coeffs {
        println!("a_{l} = {}", c.to_text());
    }
    std::fs::remove_file(&path)?;
    Ok(())
}
