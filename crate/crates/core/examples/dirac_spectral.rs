//! The shell-diagonal Dirac truncation on Z_2: spectrum, trace, and a
//! commutator with a character.

use vilenkin::characters::CharIndexS;
use vilenkin::dimensions::{commutator_block, dirac_spectrum, dirac_trace_power, DiracTruncation, VilenkinGroup};
use vilenkin::fourier::LevelFunction;

fn main() -> vilenkin::Result<()> {
    let t = DiracTruncation::new(VilenkinGroup::Zp { p: 2 }, 1.0, 3)?;
    for (n, (ev, mult)) in dirac_spectrum(&t).into_iter().enumerate() {
        println!("shell {n}: eigenvalue {ev} x {mult}");
    }
    let tr = dirac_trace_power(&t);
    println!("S_3 = {}, zeta(2) - S_3 in [{}, {}]", tr.partial, tr.tail_lower, tr.tail_upper);

    let t = DiracTruncation::new(VilenkinGroup::Zp { p: 3 }, 1.0, 3)?;
    let f = LevelFunction::character(&CharIndexS::new(3, 2, 1)?, 1)?;
    let c = commutator_block(&f, &t, 3, 1e-9)?;
    println!("[D, chi_(2,1)]: {} nonzero entries, max {:.3}", c.nonzero_entries(), c.max_abs());
    println!("zero on shells above {}: {}", c.shell, c.vanishes_beyond(c.shell));
    Ok(())
}
