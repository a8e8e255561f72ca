//! Growth of `V_k = V + V² + … + V^k` for a finite set of level functions.
//!
//! Everything stays inside the `p^N`-dimensional algebra of level-`N`
//! functions, which is closed under pointwise products, so `dim V_k ≤ p^N`.
//! Once `V_k = V_{k−1}` the sequence is constant: `V^{k+1} = V^k·V ⊆ V_{k−1}·V ⊆ V_k`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::LevelFunction;
use crate::padic::pow;

/// `dim V_k` for `k = 1..=k_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct GkReport {
    pub p: u64,
    /// The common level `N` of the generators.
    pub level: u32,
    pub dims: Vec<usize>,
    /// `p^N`.
    pub bound: u64,
    /// The first `k ≥ 2` with `dim V_k = dim V_{k−1}`, after which the
    /// sequence is constant.
    pub stable_from: Option<usize>,
}

impl GkReport {
    pub fn is_nondecreasing(&self) -> bool {
        self.dims.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn within_bound(&self) -> bool {
        self.dims.iter().all(|&d| d as u64 <= self.bound)
    }

    /// `log dim V_k / log k` at the last computed `k`; tends to 0 whenever the
    /// sequence stabilizes.
    pub fn last_log_ratio(&self) -> Option<f64> {
        let k = self.dims.len();
        let d = *self.dims.last()?;
        (k >= 2 && d > 0).then(|| (d as f64).ln() / (k as f64).ln())
    }
}

/// An orthonormal basis grown by modified Gram–Schmidt with one
/// re-orthogonalization pass.
struct Span {
    basis: Vec<Vec<Complex64>>,
    tol: f64,
}

impl Span {
    fn new(tol: f64) -> Self {
        Self {
            basis: Vec::new(),
            tol,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Adds `v` if it is independent of the current span; returns whether it was.
    fn insert(&mut self, v: &[Complex64]) -> bool {
        let norm0 = norm(v);
        if norm0 <= self.tol {
            return false;
        }
        let mut w: Vec<Complex64> = v.iter().map(|z| z / norm0).collect();
        for _ in 0..2 {
            for b in &self.basis {
                let c: Complex64 = b.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let n = norm(&w);
        if n <= self.tol {
            return false;
        }
        for z in w.iter_mut() {
            *z /= n;
        }
        self.basis.push(w);
        true
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Dimensions of `V_k = Σ_{1 ≤ j ≤ k} V^j`, `V = span(generators)`, computed by
/// rank under Gram–Schmidt with tolerance `tol`.
pub fn gk_growth(generators: &[LevelFunction<Complex64>], k_max: usize, tol: f64) -> Result<GkReport> {
    let Some(first) = generators.first() else {
        return Err(Error::Domain("at least one generator is required".into()));
    };
    let p = first.p();
    if generators.iter().any(|g| g.p() != p) {
        return Err(Error::Mismatch("generators use different primes".into()));
    }
    let level = generators.iter().map(LevelFunction::level).max().unwrap_or(0);
    let gens: Vec<Vec<Complex64>> = generators
        .iter()
        .map(|g| g.promote(level).into_values())
        .collect();

    let mut total = Span::new(tol);
    let mut power = Span::new(tol);
    for g in &gens {
        power.insert(g);
    }
    let mut dims = Vec::with_capacity(k_max);
    let mut stable_from = None;
    for k in 1..=k_max {
        if k > 1 {
            // V^k = V^{k−1} · V
            let mut next = Span::new(tol);
            for b in &power.basis {
                for g in &gens {
                    let prod: Vec<Complex64> = b.iter().zip(g).map(|(x, y)| x * y).collect();
                    next.insert(&prod);
                }
            }
            power = next;
        }
        for b in &power.basis {
            total.insert(b);
        }
        if k > 1 && stable_from.is_none() && dims.last() == Some(&total.dim()) {
            stable_from = Some(k);
        }
        dims.push(total.dim());
    }
    Ok(GkReport {
        p,
        level,
        dims,
        bound: pow(p, level),
        stable_from,
    })
}
