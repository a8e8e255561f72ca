//! Injections of N_0 against sigma(p^m, .): translations and Prufer shifts
//! pass, a swap across blocks is caught.

use vilenkin::dimensions::{phi_block_check, phi_commuting_check, PhiTable};

fn main() -> vilenkin::Result<()> {
    let (p, m) = (2, 1);
    let tables = [
        ("translation by 2*p^(m+1)", PhiTable::translation(p, m, 2, 64)?),
        ("sigma(5, .)", PhiTable::prufer_shift(p, 5, 64)?),
        ("identity with 1 <-> 4", PhiTable::identity(p, 64)?.with_swapped(1, 4)?),
    ];
    for (name, phi) in &tables {
        let comm = phi_commuting_check(phi, m);
        let blocks = phi_block_check(phi, m, 0);
        println!(
            "{name:<26} commuting: {:<5} ({} violations)  blocks: {:<5} ({} split)",
            comm.passed(),
            comm.violations.len(),
            blocks.passed(),
            blocks.split_blocks.len()
        );
    }
    Ok(())
}
