//! The p-adic Heisenberg group H_d(ℤ_p) at finite precision.
//!
//! `[x, y, z]` is the unipotent matrix with first row `(1, xᵗ, z)`, middle
//! block `(0, I_d, y)` and last row `(0, 0, 1)`, so
//! `[x,y,z]·[x',y',z'] = [x+x', y+y', z+z'+x·y']`. An element known to
//! precision `N` is a point of H_d(ℤ/p^N).

mod dual;
mod k0;
mod matrix;

pub use dual::{dual_space_indices, enumerate_dual, enumerate_dual_shell, HeisDualIndex};
pub use k0::{k0_decomposition, k0_evaluate, k0_synthesize, K0Term};
pub use matrix::{coeff_norm, matrix_coeff, rep_matrix, RepMatrix};

use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{check_prime, checked_pow, pow, PadicTrunc};

/// A point `[x, y, z]` of H_d(ℤ/p^N).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HeisElement {
    p: u64,
    precision: u32,
    x: Vec<u64>,
    y: Vec<u64>,
    z: u64,
}

impl HeisElement {
    /// Residues are reduced modulo `p^precision`; `x` and `y` must have the same
    /// length `d ≥ 1`.
    pub fn new(p: u64, precision: u32, x: Vec<u64>, y: Vec<u64>, z: u64) -> Result<Self> {
        check_prime(p)?;
        if precision == 0 {
            return Err(Error::Domain("precision must be at least 1".into()));
        }
        if x.is_empty() || x.len() != y.len() {
            return Err(Error::Mismatch(format!(
                "x and y must share a dimension d ≥ 1 (got {} and {})",
                x.len(),
                y.len()
            )));
        }
        let m = checked_pow(p, precision)?;
        Ok(Self {
            p,
            precision,
            x: x.into_iter().map(|v| v % m).collect(),
            y: y.into_iter().map(|v| v % m).collect(),
            z: z % m,
        })
    }

    pub fn identity(p: u64, d: usize, precision: u32) -> Result<Self> {
        Self::new(p, precision, vec![0; d], vec![0; d], 0)
    }

    /// The `i`-th point of H_d(ℤ/p^N) in the order of [`HeisElement::all`].
    pub fn from_index(p: u64, d: usize, precision: u32, mut i: u64) -> Result<Self> {
        let m = checked_pow(p, precision)?;
        let mut coords = Vec::with_capacity(2 * d + 1);
        for _ in 0..2 * d + 1 {
            coords.push(i % m);
            i /= m;
        }
        let z = coords.pop().unwrap_or(0);
        let y = coords.split_off(d);
        Self::new(p, precision, coords, y, z)
    }

    /// Every point of H_d(ℤ/p^N): `x` varies fastest, then `y`, then `z`.
    pub fn all(p: u64, d: usize, precision: u32) -> Result<impl Iterator<Item = Self>> {
        check_prime(p)?;
        let e = u32::try_from(2 * d + 1)
            .ok()
            .and_then(|k| precision.checked_mul(k))
            .ok_or_else(|| Error::Overflow("group too large to enumerate".into()))?;
        let count = checked_pow(p, e)?;
        Ok((0..count).map(move |i| Self::from_index(p, d, precision, i).expect("valid index")))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.x.len()
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn modulus(&self) -> u64 {
        pow(self.p, self.precision)
    }

    pub fn x(&self) -> &[u64] {
        &self.x
    }

    pub fn y(&self) -> &[u64] {
        &self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn x_padic(&self) -> Vec<PadicTrunc> {
        self.x.iter().map(|&v| self.wrap(v)).collect()
    }

    pub fn y_padic(&self) -> Vec<PadicTrunc> {
        self.y.iter().map(|&v| self.wrap(v)).collect()
    }

    pub fn z_padic(&self) -> PadicTrunc {
        self.wrap(self.z)
    }

    fn wrap(&self, v: u64) -> PadicTrunc {
        PadicTrunc::new(self.p, self.precision, v).expect("validated at construction")
    }

    pub fn is_identity(&self) -> bool {
        self.z == 0 && self.x.iter().chain(&self.y).all(|&v| v == 0)
    }

    /// Reduces to a coarser precision.
    pub fn truncate(&self, level: u32) -> Result<Self> {
        if level > self.precision {
            return Err(Error::Precision {
                needed: level,
                available: self.precision,
            });
        }
        Self::new(self.p, level, self.x.clone(), self.y.clone(), self.z)
    }

    /// True when every coordinate vanishes modulo `p^r`, i.e. the element lies
    /// in H_d(p^r ℤ_p).
    pub fn in_congruence_subgroup(&self, r: u32) -> Result<bool> {
        if r > self.precision {
            return Err(Error::Precision {
                needed: r,
                available: self.precision,
            });
        }
        let m = pow(self.p, r);
        Ok(self.z % m == 0 && self.x.iter().chain(&self.y).all(|&v| v % m == 0))
    }
}

impl fmt::Display for HeisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?},{:?},{}] mod {}^{}", self.x, self.y, self.z, self.p, self.precision)
    }
}

fn dot_mod(a: &[u64], b: &[u64], m: u64) -> u64 {
    a.iter()
        .zip(b)
        .fold(0u128, |acc, (&u, &v)| (acc + u as u128 * v as u128) % m as u128) as u64
}

fn check_compatible(g: &HeisElement, h: &HeisElement) -> Result<()> {
    if g.p != h.p || g.precision != h.precision || g.d() != h.d() {
        return Err(Error::Mismatch(format!(
            "elements of H_{}(ℤ/{}^{}) and H_{}(ℤ/{}^{})",
            g.d(),
            g.p,
            g.precision,
            h.d(),
            h.p,
            h.precision
        )));
    }
    Ok(())
}

/// `[x,y,z]·[x',y',z'] = [x+x', y+y', z+z'+x·y']`.
pub fn heis_mul(g: &HeisElement, h: &HeisElement) -> Result<HeisElement> {
    check_compatible(g, h)?;
    let m = g.modulus();
    let add = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(u, v)| (u + v) % m).collect();
    Ok(HeisElement {
        p: g.p,
        precision: g.precision,
        x: add(&g.x, &h.x),
        y: add(&g.y, &h.y),
        z: (g.z + h.z + dot_mod(&g.x, &h.y, m)) % m,
    })
}

/// `[x,y,z]⁻¹ = [−x, −y, −z + x·y]`.
pub fn heis_inv(g: &HeisElement) -> HeisElement {
    let m = g.modulus();
    let neg = |a: &[u64]| a.iter().map(|v| (m - v) % m).collect();
    HeisElement {
        p: g.p,
        precision: g.precision,
        x: neg(&g.x),
        y: neg(&g.y),
        z: (m - g.z + dot_mod(&g.x, &g.y, m)) % m,
    }
}
