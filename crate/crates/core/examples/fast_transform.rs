//! The fast transform against the quadratic one, then a 65536-point run.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vilenkin::fourier::{analyze_fast, analyze_naive, synthesize, LevelFunction};

fn main() -> vilenkin::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (p, r) in [(2, 10), (3, 6), (5, 4)] {
        let f = LevelFunction::from_fn(p, r, |_| Complex64::new(rng.gen(), rng.gen()))?;
        let fast = analyze_fast(&f);
        let dev = fast.max_deviation(&analyze_naive(&f))?;
        let back = synthesize(&fast).max_deviation(&f)?;
        println!("p={p} r={r}: |fast - naive| = {dev:.2e}, round trip {back:.2e}");
    }

    let f = LevelFunction::from_fn(2, 16, |_| Complex64::new(rng.gen(), 0.0))?;
    let t = Instant::now();
    let c = analyze_fast(&f);
    println!("65536 points in {:.1} ms, mean = {:.4}", t.elapsed().as_secs_f64() * 1e3, c.coeffs()[0].re);
    Ok(())
}
