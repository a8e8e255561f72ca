//! Coset indicators of H_d(ℤ_p) as finite sums of matrix coefficients.
//!
//! `𝟙_{v·H_d(p^r ℤ_p)} = Σ_ζ Σ_k |γ|_p^d e^{−2πi{γ(z+k·y)+x·α+y·β}_p} / p^{r(2d+1)} · (χ_ζ)_{k+P_γ(x), k}`
//! where `v = [x,y,z]`, `ζ` runs over the classes trivial on H_d(p^r ℤ_p), and
//! `P_γ` reduces modulo `p^j`.

use num_rational::{Ratio, Rational64};

use super::dual::{dual_space_indices, enumerate_dual, HeisDualIndex};
use super::matrix::{matrix_coeff, Prepared};
use super::HeisElement;
use crate::cyclotomic::{Cyclotomic, Exact};
use crate::error::{Error, Result};
use crate::padic::{checked_pow, pow, Phase};

/// One summand `weight · phase · (χ_ζ)_{row, col}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Term {
    pub zeta: HeisDualIndex,
    pub row: Vec<u64>,
    pub col: Vec<u64>,
    /// `|γ|_p^d / p^{r(2d+1)}`.
    pub weight: Ratio<u64>,
    pub phase: Phase,
}

/// The decomposition of `𝟙_{v·H_d(p^r ℤ_p)}`. Only `v mod p^r` matters, so
/// `v` needs precision at least `r`.
pub fn k0_decomposition(v: &HeisElement, r: u32) -> Result<Vec<K0Term>> {
    if v.precision() < r {
        return Err(Error::Precision {
            needed: r,
            available: v.precision(),
        });
    }
    let (p, d) = (v.p(), v.d());
    let denom = checked_pow(p, r * (2 * d as u32 + 1))?;
    let level = r.max(1);
    let m = pow(p, level);
    let (x, y, z): (Vec<u64>, Vec<u64>, u64) = (
        v.x().iter().map(|a| a % m).collect(),
        v.y().iter().map(|a| a % m).collect(),
        v.z() % m,
    );
    let mut terms = Vec::new();
    for zeta in enumerate_dual(p, d, r)? {
        let prep = Prepared::new(&zeta, level);
        let weight = Ratio::new(zeta.dim(), denom);
        let jm = pow(p, zeta.j());
        for k in dual_space_indices(p, zeta.j(), d) {
            let row = k.iter().zip(&x).map(|(a, b)| (a + b) % jm).collect();
            let e = prep.exponent(&k, &x, &y, z);
            terms.push(K0Term {
                zeta: zeta.clone(),
                row,
                col: k,
                weight,
                phase: Phase::from_parts(p, (m - e) % m, level),
            });
        }
    }
    Ok(terms)
}

/// Evaluates a sum of terms at `g`, exactly.
pub fn k0_evaluate(terms: &[K0Term], g: &HeisElement) -> Result<Exact> {
    let mut acc = Exact::zero(g.p());
    for t in terms {
        if let Some(ph) = matrix_coeff(&t.zeta, &t.row, &t.col, g)? {
            let w = Rational64::new(*t.weight.numer() as i64, *t.weight.denom() as i64);
            acc.add_term(&ph.mul(&t.phase), w);
        }
    }
    Ok(acc)
}

/// The decomposition of `𝟙_{v·H_d(p^r ℤ_p)}` summed at every point of
/// H_d(ℤ/p^L), `L = max(r, 1)`, in the order of [`HeisElement::all`].
///
/// Phases are accumulated as integer histograms over `ℤ/p^L`, so the values
/// are exact.
pub fn k0_synthesize(v: &HeisElement, r: u32) -> Result<Vec<Exact>> {
    let terms = k0_decomposition(v, r)?;
    let (p, d) = (v.p(), v.d());
    let level = r.max(1);
    let m = pow(p, level);
    let denom = checked_pow(p, r * (2 * d as u32 + 1))? as i64;
    let prepared: Vec<(Prepared, &K0Term, u64)> = terms
        .iter()
        .map(|t| {
            let prep = Prepared::new(&t.zeta, level);
            let shift = t.phase.exponent().numerator_at(level);
            (prep, t, shift)
        })
        .collect();
    let mut out = Vec::new();
    let mut hist = vec![0i64; m as usize];
    for g in HeisElement::all(p, d, level)? {
        hist.fill(0);
        for (prep, t, shift) in &prepared {
            if !prep.support(&t.row, &t.col, g.x()) {
                continue;
            }
            let e = (prep.exponent(&t.col, g.x(), g.y(), g.z()) + shift) % m;
            hist[e as usize] += t.zeta.dim() as i64;
        }
        let coeffs = hist.iter().map(|&h| Rational64::new(h, denom)).collect();
        out.push(Cyclotomic::from_coeffs(p, level, coeffs));
    }
    Ok(out)
}
