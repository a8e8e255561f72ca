//! Finite tables of injections `φ: ℕ₀ → ℕ₀` and their interaction with
//! `σ(p^m, ·)`.
//!
//! If `φ(σ(p^m, n)) = σ(p^m, φ(n))` on a block `P_{m,l}`, then `φ` carries that
//! block, a single `σ(p^m, ·)`-orbit, into one block. The checkers below test
//! both properties on the range a finite table can see and report what they
//! found. A clean report means "no violation on `[m₀, N)`", nothing more.

use std::collections::BTreeSet;

use crate::characters::{block_of, sigma, sigma_pm_closed, BlockId};
use crate::error::{Error, Result};
use crate::padic::{check_prime, pow};

/// `φ` on `[0, N)` together with a declared set of values outside its image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiTable {
    p: u64,
    values: Vec<u64>,
    deficiency: BTreeSet<u64>,
}

impl PhiTable {
    /// Fails with a domain error if `values` repeats an entry or meets the
    /// deficiency set.
    pub fn new(p: u64, values: Vec<u64>, deficiency: BTreeSet<u64>) -> Result<Self> {
        check_prime(p)?;
        let mut seen = BTreeSet::new();
        for (n, &v) in values.iter().enumerate() {
            if !seen.insert(v) {
                return Err(Error::Domain(format!("φ is not injective: value {v} repeats at n = {n}")));
            }
        }
        if let Some(v) = deficiency.iter().find(|v| seen.contains(v)) {
            return Err(Error::Domain(format!("deficiency value {v} lies in the image of φ")));
        }
        Ok(Self {
            p,
            values,
            deficiency,
        })
    }

    pub fn identity(p: u64, domain: u64) -> Result<Self> {
        Self::new(p, (0..domain).collect(), BTreeSet::new())
    }

    /// `φ(n) = n + c·p^{m+1}`; its co-image contains `[0, c·p^{m+1})`.
    pub fn translation(p: u64, m: u32, c: u64, domain: u64) -> Result<Self> {
        check_prime(p)?;
        let shift = c * pow(p, m + 1);
        Self::new(p, (0..domain).map(|n| n + shift).collect(), (0..shift).collect())
    }

    /// `φ = σ(c, ·)`, a bijection of ℕ₀.
    pub fn prufer_shift(p: u64, c: u64, domain: u64) -> Result<Self> {
        check_prime(p)?;
        Self::new(p, (0..domain).map(|n| sigma(p, c, n)).collect(), BTreeSet::new())
    }

    /// Exchanges the values at `a` and `b`.
    pub fn with_swapped(&self, a: u64, b: u64) -> Result<Self> {
        let n = self.domain();
        if a >= n || b >= n {
            return Err(Error::Domain(format!("swap positions must lie in [0, {n})")));
        }
        let mut values = self.values.clone();
        values.swap(a as usize, b as usize);
        Ok(Self {
            values,
            ..self.clone()
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `N`: the table covers `[0, N)`.
    pub fn domain(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.values.get(n as usize).copied()
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn deficiency(&self) -> &BTreeSet<u64> {
        &self.deficiency
    }
}

/// Outcome of [`phi_commuting_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingReport {
    pub m: u32,
    pub from: u64,
    /// How many `n` had `φ(σ(p^m, n))` inside the table.
    pub checked: u64,
    /// Every `n` with `φ(σ(p^m, n)) ≠ σ(p^m, φ(n))`.
    pub violations: Vec<u64>,
}

impl CommutingReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Tests `φ(σ(p^m, n)) = σ(p^m, φ(n))` for every `n ≥ m₀` where both sides are
/// defined by the table.
pub fn phi_commuting_check_from(phi: &PhiTable, m: u32, m0: u64) -> CommutingReport {
    let p = phi.p;
    let mut checked = 0;
    let mut violations = Vec::new();
    for n in m0..phi.domain() {
        let Some(lhs) = phi.get(sigma_pm_closed(p, m, n)) else {
            continue;
        };
        checked += 1;
        let rhs = sigma_pm_closed(p, m, phi.values[n as usize]);
        if lhs != rhs {
            violations.push(n);
        }
    }
    CommutingReport {
        m,
        from: m0,
        checked,
        violations,
    }
}

/// [`phi_commuting_check_from`] over the whole table.
pub fn phi_commuting_check(phi: &PhiTable, m: u32) -> CommutingReport {
    phi_commuting_check_from(phi, m, 0)
}

/// Outcome of [`phi_block_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub m: u32,
    pub from: u64,
    /// Blocks `P_{m,l} ⊆ [m₀, N)` that were examined.
    pub blocks_checked: u64,
    /// Blocks whose image meets more than one block.
    pub split_blocks: Vec<BlockId>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.split_blocks.is_empty()
    }
}

/// Tests that `φ` maps each block `P_{m,l} ⊆ [m₀, N)` into a single block.
pub fn phi_block_check(phi: &PhiTable, m: u32, m0: u64) -> BlockReport {
    let p = phi.p;
    let width = pow(p, m + 1);
    let mut blocks_checked = 0;
    let mut split_blocks = Vec::new();
    let first = m0.div_ceil(width);
    let mut l = first;
    while (l + 1) * width <= phi.domain() {
        let block = BlockId { p, m, l };
        blocks_checked += 1;
        let targets: BTreeSet<u64> = block
            .members()
            .into_iter()
            .map(|n| block_of(p, m, phi.values[n as usize]).l)
            .collect();
        if targets.len() > 1 {
            split_blocks.push(block);
        }
        l += 1;
    }
    BlockReport {
        m,
        from: m0,
        blocks_checked,
        split_blocks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injectivity_is_enforced() {
        assert!(PhiTable::new(2, vec![0, 1, 1], BTreeSet::new()).is_err());
        assert!(PhiTable::new(2, vec![0, 2], [2].into()).is_err());
    }

    #[test]
    fn translations_commute_and_keep_blocks() {
        for p in [2u64, 3] {
            for m in 0..=2 {
                let n = pow(p, m + 3);
                let phi = PhiTable::translation(p, m, 2, n).unwrap();
                assert!(phi_commuting_check(&phi, m).passed());
                assert!(phi_block_check(&phi, m, 0).passed());
            }
        }
    }

    #[test]
    fn prufer_shifts_commute_and_keep_blocks() {
        for c in 0..9 {
            let phi = PhiTable::prufer_shift(3, c, 81).unwrap();
            for m in 0..=2 {
                assert!(phi_commuting_check(&phi, m).passed(), "c={c} m={m}");
                assert!(phi_block_check(&phi, m, 0).passed());
            }
        }
    }

    #[test]
    fn swap_across_blocks_is_caught() {
        let (p, m) = (2u64, 1u32);
        let phi = PhiTable::identity(p, 16).unwrap().with_swapped(0, pow(p, m + 1)).unwrap();
        let rep = phi_commuting_check(&phi, m);
        assert!(rep.violations.iter().any(|&n| n < pow(p, m + 1)));
        assert!(!phi_block_check(&phi, m, 0).passed());
    }
}
