//! dim(V + V^2 + ... + V^k) for a few generating sets at level 3.

use num_complex::Complex64;
use vilenkin::characters::CharIndexS;
use vilenkin::dimensions::gk_growth;
use vilenkin::fourier::LevelFunction;

fn main() -> vilenkin::Result<()> {
    let chi = LevelFunction::character(&CharIndexS::new(2, 1, 3)?, 3)?;
    let rep = gk_growth(&[chi], 10, 1e-9)?;
    println!("chi_(1,3):        {:?}, stable from k = {:?}", rep.dims, rep.stable_from);

    let one_point = LevelFunction::from_fn(2, 3, |x| Complex64::new(if x == 5 { 1.0 } else { 0.0 }, 0.0))?;
    let ramp = LevelFunction::from_fn(2, 3, |x| Complex64::new(x as f64, 0.0))?;
    let rep = gk_growth(&[one_point, ramp], 10, 1e-9)?;
    println!("{{1_5, x}}:         {:?}, bound {}", rep.dims, rep.bound);
    Ok(())
}
