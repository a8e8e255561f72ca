//! The unitary dual of H_d(ℤ_p), level by level.
//!
//! Classes are triples `(α, β, γ)` with `γ ∈ ℚ_p/ℤ_p` and `(α, β)` taken modulo
//! `p^{−j} ℤ_p^{2d}`, where `|γ|_p = p^j`. The representation acts on the
//! `p^{jd}`-dimensional space of functions on `(ℤ/p^j)^d`.

use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{check_prime, checked_pow, pow, QpModZpRep};

/// A class `(α, β, γ)` with canonical representatives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisDualIndex {
    p: u64,
    gamma: QpModZpRep,
    alpha: Vec<QpModZpRep>,
    beta: Vec<QpModZpRep>,
}

/// Reduces `a` modulo `p^{−j} ℤ_p`: `a/p^e ↦ (a mod p^{e−j})/p^e`, or 0 when `e ≤ j`.
fn reduce_mod_gamma(a: &QpModZpRep, j: u32) -> QpModZpRep {
    let e = a.exp();
    if e <= j {
        return QpModZpRep::trivial(a.p());
    }
    QpModZpRep::reduced(a.p(), a.num() % pow(a.p(), e - j), e)
}

impl HeisDualIndex {
    /// Builds the class of `(α, β, γ)`, reducing `α` and `β` to canonical form.
    pub fn new(gamma: QpModZpRep, alpha: Vec<QpModZpRep>, beta: Vec<QpModZpRep>) -> Result<Self> {
        let p = gamma.p();
        check_prime(p)?;
        if alpha.is_empty() || alpha.len() != beta.len() {
            return Err(Error::Mismatch(format!(
                "α and β must share a dimension d ≥ 1 (got {} and {})",
                alpha.len(),
                beta.len()
            )));
        }
        if alpha.iter().chain(&beta).any(|a| a.p() != p) {
            return Err(Error::Mismatch("components use different primes".into()));
        }
        let j = gamma.exp();
        Ok(Self {
            p,
            alpha: alpha.iter().map(|a| reduce_mod_gamma(a, j)).collect(),
            beta: beta.iter().map(|b| reduce_mod_gamma(b, j)).collect(),
            gamma,
        })
    }

    /// The trivial representation of H_d(ℤ_p).
    pub fn trivial(p: u64, d: usize) -> Self {
        let t = QpModZpRep::trivial(p);
        Self {
            p,
            gamma: t,
            alpha: vec![t; d],
            beta: vec![t; d],
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> usize {
        self.alpha.len()
    }

    pub fn gamma(&self) -> &QpModZpRep {
        &self.gamma
    }

    pub fn alpha(&self) -> &[QpModZpRep] {
        &self.alpha
    }

    pub fn beta(&self) -> &[QpModZpRep] {
        &self.beta
    }

    /// `j` with `|γ|_p = p^j` (0 for the trivial γ).
    pub fn j(&self) -> u32 {
        self.gamma.exp()
    }

    /// `|γ|_p^d`.
    pub fn dim(&self) -> u64 {
        pow(self.p, self.j() * self.d() as u32)
    }

    /// The least `n` with the class trivial on H_d(p^n ℤ_p): the exponent of
    /// `‖(α, β, γ)‖_p`.
    pub fn level(&self) -> u32 {
        self.alpha
            .iter()
            .chain(&self.beta)
            .map(QpModZpRep::exp)
            .chain(std::iter::once(self.j()))
            .max()
            .unwrap_or(0)
    }

    /// `‖(α, β, γ)‖_p = max(|α|_p, |β|_p, |γ|_p)`.
    pub fn norm(&self) -> u64 {
        pow(self.p, self.level())
    }
}

impl fmt::Display for HeisDualIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[QpModZpRep]| {
            v.iter()
                .map(|a| format!("{}/{}", a.num(), a.norm()))
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "(α=[{}], β=[{}], γ={}/{})",
            list(&self.alpha),
            list(&self.beta),
            self.gamma.num(),
            self.gamma.norm()
        )
    }
}

/// The basis labels `k ∈ (ℤ/p^j)^d` in lexicographic order (first coordinate
/// most significant).
pub fn dual_space_indices(p: u64, j: u32, d: usize) -> Vec<Vec<u64>> {
    let m = pow(p, j);
    let total = pow(m, d as u32);
    (0..total)
        .map(|mut i| {
            let mut k = vec![0; d];
            for slot in k.iter_mut().rev() {
                *slot = i % m;
                i /= m;
            }
            k
        })
        .collect()
}

/// Every class trivial on H_d(p^n ℤ_p): `γ` of exponent `j ≤ n`, and `α, β`
/// with coordinates `c/p^n`, `0 ≤ c < p^{n−j}`.
///
/// Ordered by `j`, then `γ`, then `α`, then `β` lexicographically.
pub fn enumerate_dual(p: u64, d: usize, n: u32) -> Result<Vec<HeisDualIndex>> {
    check_prime(p)?;
    if d == 0 {
        return Err(Error::Domain("d must be at least 1".into()));
    }
    let e = n
        .checked_mul(2 * d as u32 + 1)
        .ok_or_else(|| Error::Overflow("dual too large".into()))?;
    checked_pow(p, e)?;
    let mut out = Vec::new();
    for j in 0..=n {
        let gammas: Vec<u64> = if j == 0 {
            vec![0]
        } else {
            (1..pow(p, j)).filter(|a| a % p != 0).collect()
        };
        let coords: Vec<QpModZpRep> = (0..pow(p, n - j))
            .map(|c| QpModZpRep::reduced(p, c, n))
            .collect();
        let per_coord = coords.len() as u64;
        let combos = pow(per_coord, 2 * d as u32);
        for &g in &gammas {
            let gamma = QpModZpRep::reduced(p, g, j);
            for mut i in 0..combos {
                let mut ab = vec![QpModZpRep::trivial(p); 2 * d];
                for slot in ab.iter_mut().rev() {
                    *slot = coords[(i % per_coord) as usize];
                    i /= per_coord;
                }
                let beta = ab.split_off(d);
                out.push(HeisDualIndex {
                    p,
                    gamma,
                    alpha: ab,
                    beta,
                });
            }
        }
    }
    Ok(out)
}

/// The classes of level exactly `n`.
pub fn enumerate_dual_shell(p: u64, d: usize, n: u32) -> Result<Vec<HeisDualIndex>> {
    Ok(enumerate_dual(p, d, n)?
        .into_iter()
        .filter(|z| z.level() == n)
        .collect())
}
