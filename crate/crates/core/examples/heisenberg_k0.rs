//! A coset indicator of H_1(Z_3) written as a finite sum of matrix
//! coefficients, then summed back pointwise.

use vilenkin::cyclotomic::Exact;
use vilenkin::heisenberg::{heis_inv, heis_mul, k0_decomposition, k0_synthesize, HeisElement};

fn main() -> vilenkin::Result<()> {
    let (p, r) = (3, 1);
    let v = HeisElement::new(p, r, vec![1], vec![2], 1)?;
    let terms = k0_decomposition(&v, r)?;
    println!("1_{{v H_1(3 Z_3)}} uses {} matrix coefficients", terms.len());
    for t in terms.iter().take(4) {
        println!("  {} * {} * chi_{}[{:?},{:?}]", t.weight, t.phase, t.zeta, t.row, t.col);
    }

    let values = k0_synthesize(&v, r)?;
    let v_inv = heis_inv(&v);
    let mut ok = true;
    for (g, val) in HeisElement::all(p, 1, r)?.zip(&values) {
        let inside = heis_mul(&v_inv, &g)?.in_congruence_subgroup(r)?;
        ok &= *val == Exact::from_ratio(p, (inside as i64).into());
    }
    println!("exact at all {} points: {ok}", values.len());
    Ok(())
}
