//! Character coefficients of a coset indicator on Z_p and the round trip back.

use vilenkin::fourier::{indicator_coefficients, synthesize, LevelFunction};
use vilenkin::padic::Coset;

fn main() -> vilenkin::Result<()> {
    for (p, r, x) in [(2, 2, 3), (3, 1, 2), (5, 1, 4)] {
        let coset = Coset::new(p, r, x)?;
        let coefs = indicator_coefficients(&coset);
        println!("1_{{{x} + {p}^{r} Z_{p}}}:");
        for (idx, c) in coefs.iter() {
            println!("  {idx:>7}  {:.4}", c.to_complex());
        }
        let back = synthesize(&coefs);
        let target = LevelFunction::indicator(&coset, r)?;
        println!("  exact reconstruction: {}", back.values() == target.values());
    }
    Ok(())
}
