//! Products of characters in Monna indices, and the orbits of sigma(p^m, .).

use vilenkin::characters::{block_of, sigma, sigma_iterate, sigma_pm_closed};

fn main() {
    let (p, m) = (2u64, 1u32);
    let pm = p.pow(m);
    println!("n  sigma({pm}, n)  closed");
    for n in 0..12 {
        println!("{n:<2} {:<12} {}", sigma(p, pm, n), sigma_pm_closed(p, m, n));
    }

    let start = 9;
    let orbit: Vec<u64> = (0..p.pow(m + 1)).map(|i| sigma_iterate(p, pm, start, i)).collect();
    let block = block_of(p, m, start);
    println!("orbit of {start}: {orbit:?}");
    println!("block P_{{{m},{}}} = {:?}", block.l, block.members());
}
