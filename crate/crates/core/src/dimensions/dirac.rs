//! Shell-diagonal Dirac operators.
//!
//! `D` acts on shell `n` (the span of matrix coefficients of irreducibles of
//! level exactly `n`) by the scalar `((n+1)² M_n)^{1/s}`, where `M_n` is the
//! shell dimension. Then `|D|^{−s}` has eigenvalue `1/((n+1)² M_n)` with
//! multiplicity `M_n`, so `Tr |D|^{−s} = Σ 1/(n+1)²` is finite for this `s`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

use crate::characters::{sigma, CharIndexS, MonnaIndex};
use crate::error::{Error, Result};
use crate::fourier::{analyze_fast, psi_eval, shells_in_support, synthesize, CoefSequence, LevelFunction};
use crate::heisenberg::enumerate_dual_shell;
use crate::padic::{check_prime, checked_pow, pow, Coset};

/// The profinite groups with a shell structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VilenkinGroup {
    Zp { p: u64 },
    Heisenberg { p: u64, d: usize },
}

impl VilenkinGroup {
    pub fn p(&self) -> u64 {
        match *self {
            Self::Zp { p } | Self::Heisenberg { p, .. } => p,
        }
    }
}

impl fmt::Display for VilenkinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Zp { p } => write!(f, "Z_{p}"),
            Self::Heisenberg { p, d } => write!(f, "H_{d}(Z_{p})"),
        }
    }
}

/// `M_n = dim M(G_n^⊥ ∖ G_{n−1}^⊥)`.
///
/// For ℤ_p this is `1` at `n = 0` and `p^n − p^{n−1}` after. For H_d(ℤ_p) it
/// is the sum of `dim²` over the dual classes of level exactly `n`.
pub fn shell_multiplicity(group: VilenkinGroup, n: u32) -> Result<u64> {
    match group {
        VilenkinGroup::Zp { p } => {
            check_prime(p)?;
            let top = checked_pow(p, n)?;
            Ok(if n == 0 { 1 } else { top - top / p })
        }
        VilenkinGroup::Heisenberg { p, d } => Ok(enumerate_dual_shell(p, d, n)?
            .iter()
            .map(|z| z.dim() * z.dim())
            .sum()),
    }
}

/// The Dirac operator restricted to shells `0..=max_shell`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiracTruncation {
    group: VilenkinGroup,
    s: f64,
    multiplicities: Vec<u64>,
    bases: Vec<u128>,
    eigenvalues: Vec<f64>,
}

impl DiracTruncation {
    pub fn new(group: VilenkinGroup, s: f64, max_shell: u32) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::Domain(format!("summability parameter s must be positive (got {s})")));
        }
        let multiplicities = (0..=max_shell)
            .map(|n| shell_multiplicity(group, n))
            .collect::<Result<Vec<_>>>()?;
        let bases: Vec<u128> = multiplicities
            .iter()
            .enumerate()
            .map(|(n, &m)| (n as u128 + 1).pow(2) * m as u128)
            .collect();
        let eigenvalues = bases.iter().map(|&b| (b as f64).powf(1.0 / s)).collect();
        Ok(Self {
            group,
            s,
            multiplicities,
            bases,
            eigenvalues,
        })
    }

    pub fn group(&self) -> VilenkinGroup {
        self.group
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn max_shell(&self) -> u32 {
        self.multiplicities.len() as u32 - 1
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    /// `(n+1)² M_n`, exact.
    pub fn bases(&self) -> &[u128] {
        &self.bases
    }

    /// `((n+1)² M_n)^{1/s}`.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// The eigenvalue on shell `n`.
    pub fn eigenvalue(&self, n: u32) -> Option<f64> {
        self.eigenvalues.get(n as usize).copied()
    }
}

/// `(eigenvalue, multiplicity)` per shell.
pub fn dirac_spectrum(t: &DiracTruncation) -> Vec<(f64, u64)> {
    t.eigenvalues
        .iter()
        .copied()
        .zip(t.multiplicities.iter().copied())
        .collect()
}

/// The partial trace of `|D|^{−s}` over the truncation, with the certified
/// remainder `1/(N+2) ≤ ζ(2) − S_N ≤ 1/(N+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracePartialSum {
    pub max_shell: u32,
    pub partial: BigRational,
    pub tail_lower: BigRational,
    pub tail_upper: BigRational,
}

/// `S_N = Σ_{n ≤ N} M_n · 1/((n+1)² M_n)`, exact.
pub fn dirac_trace_power(t: &DiracTruncation) -> TracePartialSum {
    let mut partial = BigRational::from_integer(BigInt::from(0));
    for (&m, &b) in t.multiplicities.iter().zip(&t.bases) {
        partial += BigRational::new(BigInt::from(m), BigInt::from(b));
    }
    let n = t.max_shell() as i64;
    TracePartialSum {
        max_shell: t.max_shell(),
        partial,
        tail_lower: BigRational::new(BigInt::from(1), BigInt::from(n + 2)),
        tail_upper: BigRational::new(BigInt::from(1), BigInt::from(n + 1)),
    }
}

/// The matrix of `[D, π(f)]` on the characters of ℤ_p up to a level.
#[derive(Clone, Debug)]
pub struct CommutatorBlock {
    pub p: u64,
    /// Basis: `χ_j` for `j < p^level`, Monna order.
    pub level: u32,
    /// The single shell carrying `f`.
    pub shell: u32,
    /// Row-major `p^level × p^level`.
    pub matrix: Vec<Complex64>,
}

impl CommutatorBlock {
    pub fn size(&self) -> usize {
        pow(self.p, self.level) as usize
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row * self.size() + col]
    }

    /// Whether every column indexed by a shell above `n` is exactly zero.
    pub fn vanishes_beyond(&self, n: u32) -> bool {
        let size = self.size();
        (0..size)
            .filter(|&c| MonnaIndex(c as u64).shell(self.p) > n)
            .all(|c| (0..size).all(|r| self.entry(r, c) == Complex64::new(0.0, 0.0)))
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn nonzero_entries(&self) -> usize {
        self.matrix.iter().filter(|z| **z != Complex64::new(0.0, 0.0)).count()
    }
}

/// `[D, π(f)]` for `f` in a single shell `n₀`, on characters of level `≤ level`.
///
/// `π(f)χ_b = Σ_c f̂_c χ_{σ(c,b)}`, so the entry in row `σ(c,b)`, column `b` is
/// `(λ_{shell σ(c,b)} − λ_{shell b}) f̂_c`. Coefficients of `f` below `tol` are
/// treated as zero.
pub fn commutator_block(
    f: &LevelFunction<Complex64>,
    t: &DiracTruncation,
    level: u32,
    tol: f64,
) -> Result<CommutatorBlock> {
    let p = f.p();
    if t.group() != (VilenkinGroup::Zp { p }) {
        return Err(Error::Mismatch(format!("Dirac truncation is for {}, function lives on Z_{p}", t.group())));
    }
    let coefs = analyze_fast(f);
    let shells = shells_in_support(&coefs, tol);
    let shell = match shells.len() {
        0 => 0,
        1 => *shells.iter().next().expect("one shell"),
        _ => {
            return Err(Error::Domain(format!(
                "function is not supported in a single shell (shells {shells:?})"
            )))
        }
    };
    if level < shell {
        return Err(Error::Domain(format!("level {level} is below the shell {shell} of f")));
    }
    if level > t.max_shell() {
        return Err(Error::Domain(format!(
            "level {level} exceeds the truncation's {} shells",
            t.max_shell()
        )));
    }
    let size = pow(p, level) as usize;
    let mut matrix = vec![Complex64::new(0.0, 0.0); size * size];
    let support: Vec<(u64, Complex64)> = coefs
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > tol)
        .map(|(j, c)| (j as u64, *c))
        .collect();
    let lambda = |k: u64| t.eigenvalues[MonnaIndex(k).shell(p) as usize];
    for b in 0..size as u64 {
        for &(c, fc) in &support {
            let a = sigma(p, c, b);
            let diff = lambda(a) - lambda(b);
            if diff != 0.0 {
                matrix[a as usize * size + b as usize] += fc * diff;
            }
        }
    }
    Ok(CommutatorBlock {
        p,
        level,
        shell,
        matrix,
    })
}

/// The compression `q D q` to the ψ basis of a coset.
#[derive(Clone, Debug)]
pub struct QdqReport {
    pub coset: Coset,
    pub level: u32,
    /// `ψ_{m,n}` labels, `n ≤ level`, Monna order.
    pub basis: Vec<CharIndexS>,
    /// Row-major `⟨ψ_a, D ψ_b⟩`.
    pub matrix: Vec<Complex64>,
    pub diagonal: Vec<f64>,
    /// `p^{−r} Σ λ` over each ψ's character support.
    pub closed_form: Vec<f64>,
    pub max_offdiag: f64,
    pub max_diag_error: f64,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
}

impl QdqReport {
    /// `dim ker − dim coker`.
    pub fn index(&self) -> i64 {
        self.kernel_dim as i64 - self.cokernel_dim as i64
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.max_offdiag <= tol
    }
}

/// Compresses `D = Σ λ_{l,s} |χ_{l,s}⟩⟨χ_{l,s}|` to `𝟙_q L²` and writes it in
/// the basis `ψ_{m,n}`, `n ≤ level`, of that subspace at level `r + level`.
///
/// `lambda` must cover every character of level `≤ r + level`.
pub fn compressed_qdq(lambda: &BTreeMap<CharIndexS, f64>, q: &Coset, level: u32) -> Result<QdqReport> {
    let (p, r) = (q.p(), q.level());
    if level == 0 {
        return Err(Error::Domain("level must be at least 1".into()));
    }
    let top = r + level;
    let chars = CharIndexS::up_to_level(p, top);
    let lam: Vec<f64> = chars
        .iter()
        .map(|idx| {
            lambda
                .get(idx)
                .copied()
                .ok_or_else(|| Error::Domain(format!("eigenvalue table has no entry for χ{idx}")))
        })
        .collect::<Result<_>>()?;
    let basis = CharIndexS::up_to_level(p, level);
    let psis: Vec<LevelFunction<Complex64>> = basis
        .iter()
        .map(|idx| psi_eval(q, idx, top))
        .collect::<Result<_>>()?;
    let d_psis: Vec<LevelFunction<Complex64>> = psis
        .iter()
        .map(|psi| {
            let c = analyze_fast(psi);
            let scaled: Vec<Complex64> = c.coeffs().iter().zip(&lam).map(|(a, l)| a * l).collect();
            synthesize(&CoefSequence::new(p, top, scaled).expect("same shape"))
        })
        .collect();
    let n = basis.len();
    let mut matrix = vec![Complex64::new(0.0, 0.0); n * n];
    for a in 0..n {
        for b in 0..n {
            matrix[a * n + b] = psis[a].inner(&d_psis[b])?;
        }
    }
    let scale = 1.0 / pow(p, r) as f64;
    let closed_form: Vec<f64> = basis
        .iter()
        .map(|idx| {
            let sum: f64 = chars
                .iter()
                .zip(&lam)
                .filter(|(c, _)| {
                    if idx.is_trivial() {
                        c.n() <= r
                    } else {
                        c.n() == idx.n() + r && c.m() % pow(p, idx.n()) == idx.m()
                    }
                })
                .map(|(_, l)| l)
                .sum();
            sum * scale
        })
        .collect();
    let diagonal: Vec<f64> = (0..n).map(|a| matrix[a * n + a].re).collect();
    let mut max_offdiag = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            if a != b {
                max_offdiag = max_offdiag.max(matrix[a * n + b].norm());
            }
        }
    }
    let max_diag_error = (0..n)
        .map(|a| (matrix[a * n + a] - Complex64::new(closed_form[a], 0.0)).norm())
        .fold(0.0, f64::max);
    let lam_scale = lam.iter().fold(1.0f64, |m, l| m.max(l.abs()));
    let kernel_dim = diagonal.iter().filter(|d| d.abs() <= 1e-12 * lam_scale).count();
    Ok(QdqReport {
        coset: *q,
        level,
        basis,
        matrix,
        diagonal,
        closed_form,
        max_offdiag,
        max_diag_error,
        kernel_dim,
        // self-adjoint and diagonal: the cokernel is the kernel
        cokernel_dim: kernel_dim,
    })
}
