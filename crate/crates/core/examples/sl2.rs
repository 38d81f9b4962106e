use qinterp::knot::{figure_eight_jones, sl2_a_coeffs, sl2_pn_check, sl2_reconstruct};
use qinterp::LaurentV;

fn main() -> qinterp::Result<()> {
    let vals: Vec<LaurentV> = (0..=5).map(figure_eight_jones).collect();
    for (n, v) in vals.iter().enumerate() {
        println!("J(V_{n}) = {}", v.to_text());
    }
    let a = sl2_a_coeffs(&vals)?;
    for (n, x) in a.iter().enumerate() {
        println!("a_{n} = {}", x.to_text());
        assert_eq!(sl2_reconstruct(&a, n as u32), vals[n]);
    }
    println!("P_n closed form through n = 4: {}", (0..=4).all(|n| sl2_pn_check(n).unwrap_or(false)));
    Ok(())
}
