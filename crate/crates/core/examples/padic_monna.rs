//! Truncated p-adic integers, their digits, and the Monna map onto [0, 1].

use vilenkin::padic::{haar_measure, monna_inverse, monna_map, Coset, PadicTrunc};

fn main() -> vilenkin::Result<()> {
    let p = 3;
    let x = PadicTrunc::new(p, 4, 47)?;
    let y = PadicTrunc::new(p, 4, 80)?;
    println!("x = {} digits {:?}", x.value(), x.digits());
    println!("x + y = {}  (mod 3^4)", x.add(&y)?.value());
    println!("x * y = {}", x.mul(&y)?.value());
    println!("-x    = {}", x.neg().value());

    let t = monna_map(&x);
    println!("T(x) = {t}, back to {}", monna_inverse(p, t)?);

    let c = Coset::new(p, 2, 47)?;
    println!("x in {}+9Z_3: {}, Haar measure {}", c.rep(), c.contains(&x)?, haar_measure(&c));
    Ok(())
}
