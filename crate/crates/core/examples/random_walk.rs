//! Return probabilities of symmetric random walks on finite quotients.

use vilenkin::characters::MonnaIndex;
use vilenkin::dimensions::{rw_dim_bound, FiniteGroup, FiniteRep, Irrep, ReturnMoments};

fn main() -> vilenkin::Result<()> {
    let z3 = FiniteGroup::cyclic(3, 1)?;
    let rep = FiniteRep::new(z3, vec![(Irrep::Cyclic(MonnaIndex(1)), 1), (Irrep::Cyclic(MonnaIndex(2)), 1)])?;
    for m in ReturnMoments::new(&rep)?.take(4) {
        println!("n={}  p_n = {}", m.n, m.p_n());
    }

    let n = 10_000;
    let last = ReturnMoments::new(&rep)?.nth(n - 1).expect("infinite");
    let est = -2.0 * last.ln_p() / (n as f64).ln();
    println!("estimate at n={n}: {est:.4} <= {:.4}", rw_dim_bound(3, n as u64));

    let h = FiniteGroup::heisenberg(2, 1, 1)?;
    let two_dim = h.irreps()?.into_iter().find(|i| i.dim() == 2).expect("H_1(Z/2) has a 2-dim irrep");
    let rep = FiniteRep::new(h, vec![(two_dim, 1)])?;
    for m in ReturnMoments::new(&rep)?.take(3) {
        println!("H_1(Z/2), n={}: p_n = {}", m.n, m.p_n());
    }
    Ok(())
}
