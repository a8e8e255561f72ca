//! Dimension invariants at finite scale and the obstruction checkers.
//!
//! - [`random_walk`]: return probabilities of symmetric random walks on finite
//!   quotients and the resulting dimension estimates.
//! - [`dirac`]: the shell-diagonal Dirac truncation, its trace, commutators
//!   with multiplication operators, and compressions to a coset.
//! - [`gk`]: growth of the powers of a finite generating subspace.
//! - [`obstruction`]: injections of ℕ₀ that commute with `σ(p^m, ·)`.

pub mod dirac;
pub mod gk;
pub mod obstruction;
pub mod random_walk;

pub use dirac::{
    commutator_block, compressed_qdq, dirac_spectrum, dirac_trace_power, shell_multiplicity,
    CommutatorBlock, DiracTruncation, QdqReport, TracePartialSum, VilenkinGroup,
};
pub use gk::{gk_growth, GkReport};
pub use obstruction::{
    phi_block_check, phi_commuting_check, phi_commuting_check_from, BlockReport, CommutingReport,
    PhiTable,
};
pub use random_walk::{rw_dim_bound, rw_dim_estimate, rw_return_prob, Moment, ReturnMoments};

use std::fmt;

use crate::characters::MonnaIndex;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::heisenberg::{enumerate_dual, rep_matrix, HeisDualIndex, HeisElement};
use crate::padic::{check_prime, checked_pow, pow, Phase};

/// A finite quotient of ℤ_p or of H_d(ℤ_p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FiniteGroup {
    /// ℤ/p^n.
    Cyclic { p: u64, n: u32 },
    /// H_d(ℤ/p^n).
    Heisenberg { p: u64, d: usize, n: u32 },
}

impl FiniteGroup {
    pub fn cyclic(p: u64, n: u32) -> Result<Self> {
        check_prime(p)?;
        checked_pow(p, n)?;
        Ok(Self::Cyclic { p, n })
    }

    pub fn heisenberg(p: u64, d: usize, n: u32) -> Result<Self> {
        check_prime(p)?;
        if d == 0 || n == 0 {
            return Err(Error::Domain("Heisenberg quotients need d ≥ 1 and n ≥ 1".into()));
        }
        checked_pow(p, n * (2 * d as u32 + 1))?;
        Ok(Self::Heisenberg { p, d, n })
    }

    pub fn p(&self) -> u64 {
        match *self {
            Self::Cyclic { p, .. } | Self::Heisenberg { p, .. } => p,
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            Self::Cyclic { p, n } => pow(p, n),
            Self::Heisenberg { p, d, n } => pow(p, n * (2 * d as u32 + 1)),
        }
    }

    /// Every irreducible representation.
    pub fn irreps(&self) -> Result<Vec<Irrep>> {
        Ok(match *self {
            Self::Cyclic { p, n } => (0..pow(p, n)).map(|k| Irrep::Cyclic(MonnaIndex(k))).collect(),
            Self::Heisenberg { p, d, n } => enumerate_dual(p, d, n)?
                .into_iter()
                .map(Irrep::Heisenberg)
                .collect(),
        })
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Cyclic { p, n } => write!(f, "Z/{}", pow(p, n)),
            Self::Heisenberg { p, d, n } => write!(f, "H_{d}(Z/{})", pow(p, n)),
        }
    }
}

/// An irreducible representation of a [`FiniteGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Irrep {
    /// `χ_k` through the Monna parametrization.
    Cyclic(MonnaIndex),
    Heisenberg(HeisDualIndex),
}

impl Irrep {
    pub fn dim(&self) -> u64 {
        match self {
            Self::Cyclic(_) => 1,
            Self::Heisenberg(z) => z.dim(),
        }
    }
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cyclic(k) => write!(f, "chi_{k}"),
            Self::Heisenberg(z) => write!(f, "{z}"),
        }
    }
}

/// A finite-dimensional representation as a sum of irreducibles with
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteRep {
    group: FiniteGroup,
    constituents: Vec<(Irrep, u32)>,
}

impl FiniteRep {
    pub fn new(group: FiniteGroup, constituents: Vec<(Irrep, u32)>) -> Result<Self> {
        for (irrep, _) in &constituents {
            let ok = match (group, irrep) {
                (FiniteGroup::Cyclic { p, n }, Irrep::Cyclic(k)) => k.shell(p) <= n,
                (FiniteGroup::Heisenberg { p, d, n }, Irrep::Heisenberg(z)) => {
                    z.p() == p && z.d() == d && z.level() <= n
                }
                _ => false,
            };
            if !ok {
                return Err(Error::Domain(format!("{irrep} is not a representation of {group}")));
            }
        }
        Ok(Self {
            group,
            constituents,
        })
    }

    pub fn group(&self) -> FiniteGroup {
        self.group
    }

    pub fn constituents(&self) -> &[(Irrep, u32)] {
        &self.constituents
    }

    /// `k = Σ multiplicity · dim`.
    pub fn dim(&self) -> u64 {
        self.constituents
            .iter()
            .map(|(i, m)| i.dim() * *m as u64)
            .sum()
    }

    /// The character at every group element, in enumeration order
    /// (`0..p^n` for ℤ/p^n, [`HeisElement::all`] for H_d).
    pub fn traces(&self) -> Result<Vec<Cyclotomic<i64>>> {
        match self.group {
            FiniteGroup::Cyclic { p, n } => Ok((0..pow(p, n))
                .map(|g| {
                    let mut acc = Cyclotomic::zero(p);
                    for (irrep, mult) in &self.constituents {
                        if let Irrep::Cyclic(k) = irrep {
                            let ph = crate::characters::char_eval_residue(&k.to_s(p), g);
                            acc.add_term(&ph, *mult as i64);
                        }
                    }
                    acc
                })
                .collect()),
            FiniteGroup::Heisenberg { p, d, n } => {
                let mut out = Vec::new();
                for g in HeisElement::all(p, d, n)? {
                    let mut acc = Cyclotomic::zero(p);
                    for (irrep, mult) in &self.constituents {
                        if let Irrep::Heisenberg(z) = irrep {
                            let m = rep_matrix(z, &g)?;
                            for a in 0..m.size() {
                                if let Some(ph) = m.entry(a, a) {
                                    acc.add_term(&ph, *mult as i64);
                                }
                            }
                        }
                    }
                    out.push(acc);
                }
                Ok(out)
            }
        }
    }

    /// Whether the character is real, i.e. the representation is
    /// self-conjugate.
    pub fn is_symmetric(&self) -> Result<bool> {
        Ok(self.traces()?.iter().all(|t| *t == t.conj()))
    }
}

/// The phase `χ_k(g)` for `g ∈ ℤ/p^n`, exposed for oracles.
pub fn cyclic_char(p: u64, k: MonnaIndex, g: u64) -> Phase {
    crate::characters::char_eval_residue(&k.to_s(p), g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traces_of_small_reps() {
        let g = FiniteGroup::cyclic(3, 1).unwrap();
        let rep = FiniteRep::new(g, vec![(Irrep::Cyclic(MonnaIndex(1)), 1), (Irrep::Cyclic(MonnaIndex(2)), 1)]).unwrap();
        let t = rep.traces().unwrap();
        assert_eq!(t[0].as_scalar(), Some(2));
        assert_eq!(t[1].as_scalar(), Some(-1));
        assert!(rep.is_symmetric().unwrap());
        let one = FiniteRep::new(g, vec![(Irrep::Cyclic(MonnaIndex(1)), 1)]).unwrap();
        assert!(!one.is_symmetric().unwrap());
    }

    #[test]
    fn heisenberg_regular_character() {
        let g = FiniteGroup::heisenberg(2, 1, 1).unwrap();
        let parts = g.irreps().unwrap().into_iter().map(|i| {
            let m = i.dim() as u32;
            (i, m)
        });
        let reg = FiniteRep::new(g, parts.collect()).unwrap();
        assert_eq!(reg.dim(), 8);
        let t = reg.traces().unwrap();
        assert_eq!(t[0].as_scalar(), Some(8));
        assert!(t[1..].iter().all(|v| v.is_zero()));
    }

    #[test]
    fn constituents_must_belong_to_the_group() {
        let g = FiniteGroup::cyclic(2, 1).unwrap();
        assert!(FiniteRep::new(g, vec![(Irrep::Cyclic(MonnaIndex(2)), 1)]).is_err());
    }
}
