//! Matrix coefficients and representation matrices.
//!
//! In the basis `e_k = |γ|_p^{d/2} 𝟙_{k + |γ|_p ℤ_p^d}` the coefficient is
//! `(χ_ζ)_{k,k'}[x,y,z] = e^{2πi{γ(z + k'·y) + x·α + y·β}_p} 𝟙[x ≡ k − k' mod p^j]`.
//! This is `⟨χ_ζ(g) e_k, e_{k'}⟩`, so the matrix of `χ_ζ(g)` acting on column
//! vectors has entry `(χ_ζ)_{k_b, k_a}(g)` in row `a`, column `b`.

use num_complex::Complex64;
use num_rational::Ratio;

use super::dual::{dual_space_indices, HeisDualIndex};
use super::HeisElement;
use crate::error::{Error, Result};
use crate::padic::{pow, Phase};

/// `ζ` with its parameters written over the common denominator `p^level`.
#[derive(Clone, Debug)]
pub(crate) struct Prepared {
    pub modulus: u64,
    pub j_modulus: u64,
    pub gamma: u64,
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
}

impl Prepared {
    pub fn new(zeta: &HeisDualIndex, level: u32) -> Self {
        debug_assert!(level >= zeta.level());
        Self {
            modulus: pow(zeta.p(), level),
            j_modulus: pow(zeta.p(), zeta.j()),
            gamma: zeta.gamma().numerator_at(level),
            alpha: zeta.alpha().iter().map(|a| a.numerator_at(level)).collect(),
            beta: zeta.beta().iter().map(|b| b.numerator_at(level)).collect(),
        }
    }

    /// Numerator over `p^level` of `γ(z + k'·y) + x·α + y·β` at a point whose
    /// coordinates are already reduced modulo `p^level`.
    #[inline]
    pub fn exponent(&self, kp: &[u64], x: &[u64], y: &[u64], z: u64) -> u64 {
        let m = self.modulus as u128;
        let mut inner = z as u128;
        for (k, yy) in kp.iter().zip(y) {
            inner += *k as u128 * *yy as u128;
        }
        let mut e = (self.gamma as u128 * (inner % m)) % m;
        for i in 0..x.len() {
            e += self.alpha[i] as u128 * x[i] as u128 + self.beta[i] as u128 * y[i] as u128;
        }
        (e % m) as u64
    }

    /// Whether `x ≡ k − k' (mod p^j)` componentwise.
    #[inline]
    pub fn support(&self, k: &[u64], kp: &[u64], x: &[u64]) -> bool {
        let m = self.j_modulus;
        k.iter()
            .zip(kp)
            .zip(x)
            .all(|((a, b), xx)| (xx % m + b % m) % m == a % m)
    }
}

fn reduce(g: &HeisElement, level: u32) -> (Vec<u64>, Vec<u64>, u64) {
    let m = pow(g.p(), level);
    (
        g.x().iter().map(|v| v % m).collect(),
        g.y().iter().map(|v| v % m).collect(),
        g.z() % m,
    )
}

fn check_point(zeta: &HeisDualIndex, g: &HeisElement) -> Result<()> {
    if zeta.p() != g.p() || zeta.d() != g.d() {
        return Err(Error::Mismatch("representation and element live on different groups".into()));
    }
    if g.precision() < zeta.level() {
        return Err(Error::Precision {
            needed: zeta.level(),
            available: g.precision(),
        });
    }
    Ok(())
}

fn check_label(zeta: &HeisDualIndex, k: &[u64]) -> Result<()> {
    let m = pow(zeta.p(), zeta.j());
    if k.len() != zeta.d() || k.iter().any(|&v| v >= m) {
        return Err(Error::Domain(format!(
            "basis label {k:?} is not in (ℤ/{m})^{}",
            zeta.d()
        )));
    }
    Ok(())
}

/// `(χ_ζ)_{k,k'}(g)`: an exact phase, or `None` where the coefficient vanishes.
pub fn matrix_coeff(
    zeta: &HeisDualIndex,
    k: &[u64],
    kp: &[u64],
    g: &HeisElement,
) -> Result<Option<Phase>> {
    check_point(zeta, g)?;
    check_label(zeta, k)?;
    check_label(zeta, kp)?;
    let level = zeta.level();
    let prep = Prepared::new(zeta, level);
    let (x, y, z) = reduce(g, level);
    if !prep.support(k, kp, &x) {
        return Ok(None);
    }
    Ok(Some(Phase::new(zeta.p(), prep.exponent(kp, &x, &y, z), level)?))
}

/// The matrix of `χ_ζ(g)`. Each row and column holds exactly one phase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    zeta: HeisDualIndex,
    labels: Vec<Vec<u64>>,
    entries: Vec<Option<Phase>>,
}

impl RepMatrix {
    pub fn zeta(&self) -> &HeisDualIndex {
        &self.zeta
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// Row and column labels `k ∈ (ℤ/p^j)^d`, lexicographic.
    pub fn labels(&self) -> &[Vec<u64>] {
        &self.labels
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<Phase> {
        self.entries[row * self.size() + col]
    }

    fn from_fn(zeta: &HeisDualIndex, labels: Vec<Vec<u64>>, mut f: impl FnMut(usize, usize) -> Option<Phase>) -> Self {
        let n = labels.len();
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        Self {
            zeta: zeta.clone(),
            labels,
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| match self.entry(a, b) {
            Some(ph) => a == b && ph.is_one(),
            None => a != b,
        }))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(&self.zeta, self.labels.clone(), |a, b| self.entry(b, a).map(|ph| ph.conj()))
    }

    /// Exact product of two monomial matrices of the same representation.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.zeta != other.zeta {
            return Err(Error::Mismatch("matrices of different representations".into()));
        }
        let n = self.size();
        let mut entries = vec![None; n * n];
        for a in 0..n {
            for c in 0..n {
                let mut acc: Option<Phase> = None;
                for b in 0..n {
                    if let (Some(u), Some(v)) = (self.entry(a, b), other.entry(b, c)) {
                        if acc.is_some() {
                            return Err(Error::Domain("product of non-monomial matrices".into()));
                        }
                        acc = Some(u.mul(&v));
                    }
                }
                entries[a * n + c] = acc;
            }
        }
        Ok(Self {
            zeta: self.zeta.clone(),
            labels: self.labels.clone(),
            entries,
        })
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        let n = self.size();
        (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| self.entry(a, b).map_or(Complex64::new(0.0, 0.0), |ph| ph.to_complex()))
                    .collect()
            })
            .collect()
    }
}

/// The matrix of `χ_ζ(g)` on `H_γ`.
pub fn rep_matrix(zeta: &HeisDualIndex, g: &HeisElement) -> Result<RepMatrix> {
    check_point(zeta, g)?;
    let level = zeta.level();
    let prep = Prepared::new(zeta, level);
    let (x, y, z) = reduce(g, level);
    let labels = dual_space_indices(zeta.p(), zeta.j(), zeta.d());
    let p = zeta.p();
    let mat = RepMatrix::from_fn(zeta, labels.clone(), |a, b| {
        let (k, kp) = (&labels[b], &labels[a]);
        prep.support(k, kp, &x)
            .then(|| Phase::from_parts(p, prep.exponent(kp, &x, &y, z), level))
    });
    Ok(mat)
}

/// `‖(χ_ζ)_{k,k'}‖²` as an exact Haar integral over the truncation at the
/// level of `ζ`. Only `x` enters `|coefficient|²`, so the integral runs over
/// `(ℤ/p^N)^d` with the product measure.
pub fn coeff_norm(zeta: &HeisDualIndex, k: &[u64], kp: &[u64]) -> Result<Ratio<u64>> {
    check_label(zeta, k)?;
    check_label(zeta, kp)?;
    let level = zeta.level().max(1);
    let d = zeta.d();
    let m = pow(zeta.p(), level);
    let total = pow(m, d as u32);
    let mut hits = 0u64;
    let zero = vec![0; d];
    for mut i in 0..total {
        let mut x = vec![0; d];
        for slot in x.iter_mut() {
            *slot = i % m;
            i /= m;
        }
        let g = HeisElement::new(zeta.p(), level, x, zero.clone(), 0)?;
        if matrix_coeff(zeta, k, kp, &g)?.is_some() {
            hits += 1;
        }
    }
    Ok(Ratio::new(hits, total))
}
