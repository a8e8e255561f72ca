//! Compressing a character-diagonal operator to a coset gives a diagonal
//! matrix, so its index vanishes.

use std::collections::BTreeMap;

use vilenkin::characters::CharIndexS;
use vilenkin::dimensions::compressed_qdq;
use vilenkin::padic::Coset;

fn main() -> vilenkin::Result<()> {
    let q = Coset::new(3, 1, 2)?;
    let level = 2;
    let lambda: BTreeMap<_, _> = CharIndexS::up_to_level(3, q.level() + level)
        .into_iter()
        .map(|idx| (idx, 1.0 + idx.n() as f64 + (idx.m() % 5) as f64 / 10.0))
        .collect();
    let rep = compressed_qdq(&lambda, &q, level)?;
    for ((b, d), c) in rep.basis.iter().zip(&rep.diagonal).zip(&rep.closed_form) {
        println!("psi_{b}: <psi, D psi> = {d:.6}  closed form {c:.6}");
    }
    println!("max off-diagonal {:.1e}, index {}", rep.max_offdiag, rep.index());
    Ok(())
}
