//! Multiplication in the dual of ℤ_p, written in Monna indices.
//!
//! `σ(a, b)` is the index with `χ_a · χ_b = χ_{σ(a,b)}`. The brute-force
//! [`sigma`] adds Monna values as exact rationals; the closed forms rewrite
//! `σ(p^m, ·)` as a carry into digit positions `0..=m`, which is why its
//! orbits are the blocks `P_{m,l}`.

use std::fmt;

use num_rational::Ratio;

use crate::padic::{digit_reverse, monna_inverse, monna_map_natural, pow};

/// `monna_inverse((T(a) + T(b)) mod 1)`.
pub fn sigma(p: u64, a: u64, b: u64) -> u64 {
    let mut t = monna_map_natural(p, a) + monna_map_natural(p, b);
    if t >= Ratio::from_integer(1) {
        t -= Ratio::from_integer(1);
    }
    monna_inverse(p, t).expect("Monna values have p-power denominators")
}

/// `σ(p^m, n)` in closed form.
///
/// With `κ` the largest `k ≤ m` whose digit `n_k ≠ p − 1`, the result is
/// `n + p^κ + p^{κ+1} − p^{m+1}`; when no such digit exists it is
/// `n + 1 − p^{m+1}`.
pub fn sigma_pm_closed(p: u64, m: u32, n: u64) -> u64 {
    let top = pow(p, m + 1);
    let kappa = (0..=m).rev().find(|&k| (n / pow(p, k)) % p != p - 1);
    match kappa {
        Some(k) => n + pow(p, k) + pow(p, k + 1) - top,
        None => n + 1 - top,
    }
}

/// `σ^i(p^m, l·p^{m+1})`: the block base plus the digit reversal of
/// `i mod p^{m+1}` over `m + 1` places.
pub fn sigma_iter_closed(p: u64, m: u32, l: u64, i: u64) -> u64 {
    let width = pow(p, m + 1);
    l * width + digit_reverse(p, i % width, m + 1)
}

/// Applies `σ(a, ·)` to `start` exactly `i` times.
pub fn sigma_iterate(p: u64, a: u64, start: u64, i: u64) -> u64 {
    (0..i).fold(start, |acc, _| sigma(p, a, acc))
}

/// The block `P_{m,l} = {l·p^{m+1} + c : 0 ≤ c < p^{m+1}}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockId {
    pub p: u64,
    pub m: u32,
    pub l: u64,
}

impl BlockId {
    pub fn width(&self) -> u64 {
        pow(self.p, self.m + 1)
    }

    pub fn start(&self) -> u64 {
        self.l * self.width()
    }

    pub fn contains(&self, k: u64) -> bool {
        k / self.width() == self.l
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<u64> {
        let s = self.start();
        (s..s + self.width()).collect()
    }
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P_{{{},{}}}", self.m, self.l)
    }
}

/// The block of `P_m` containing `k`.
pub fn block_of(p: u64, m: u32, k: u64) -> BlockId {
    BlockId {
        p,
        m,
        l: k / pow(p, m + 1),
    }
}
