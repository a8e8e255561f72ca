//! Coset indicators in the character basis and the local basis `ψ_{m,n}`.

use num_complex::Complex64;
use num_rational::Rational64;

use super::{CoefSequence, LevelFunction};
use crate::characters::{char_eval_residue, CharIndexS};
use crate::cyclotomic::Exact;
use crate::error::{Error, Result};
use crate::padic::{pow, Coset};

/// Exact coefficients of `𝟙_{x + p^r ℤ_p}`: `conj(χ_{m,n}(1))^x / p^r` on every
/// `χ_{m,n}` with `n ≤ r`.
pub fn indicator_coefficients(coset: &Coset) -> CoefSequence<Exact> {
    let (p, r, x) = (coset.p(), coset.level(), coset.rep());
    let w = Rational64::new(1, pow(p, r) as i64);
    let coeffs = CharIndexS::up_to_level(p, r)
        .into_iter()
        .map(|idx| Exact::from_phase(&char_eval_residue(&idx, x).conj(), w))
        .collect();
    CoefSequence {
        p,
        level: r,
        coeffs,
    }
}

/// `ψ_{m,n}(z) = p^{r/2} χ_{m,n}((z − x)/p^r)` on `x + p^r ℤ_p`, zero elsewhere,
/// sampled at `level ≥ r + n`.
pub fn psi_eval(coset: &Coset, idx: &CharIndexS, level: u32) -> Result<LevelFunction<Complex64>> {
    let (p, r, x) = (coset.p(), coset.level(), coset.rep());
    if idx.p() != p {
        return Err(Error::Mismatch("coset and character use different primes".into()));
    }
    if level < r + idx.n() {
        return Err(Error::Precision {
            needed: r + idx.n(),
            available: level,
        });
    }
    let amp = (pow(p, r) as f64).sqrt();
    let step = pow(p, r);
    LevelFunction::from_fn(p, level, |z| {
        if coset.contains_residue(z) {
            char_eval_residue(idx, (z - x) / step).to_complex() * amp
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// The character expansion of `ψ_{m,n}` on `x + p^r ℤ_p`.
///
/// For `(m,n) = (1,0)` the coefficients are `p^{−r/2} conj(χ_{l,s}(x))` on every
/// `(l,s)` with `s ≤ r`. Otherwise they are `p^{−r/2} conj(χ_{l,n+r}(x))` on the
/// `l` with `l ≡ m (mod p^n)`. The table lives at level `r + n`.
pub fn psi_char_expansion(coset: &Coset, idx: &CharIndexS) -> Result<CoefSequence<Complex64>> {
    let (p, r, x) = (coset.p(), coset.level(), coset.rep());
    if idx.p() != p {
        return Err(Error::Mismatch("coset and character use different primes".into()));
    }
    let n = idx.n();
    let level = r + n;
    let amp = 1.0 / (pow(p, r) as f64).sqrt();
    let mut out = CoefSequence::zero(p, level)?;
    let modulus = pow(p, n);
    for (j, target) in CharIndexS::up_to_level(p, level).into_iter().enumerate() {
        let hit = if n == 0 {
            true
        } else {
            target.n() == level && target.m() % modulus == idx.m()
        };
        if hit {
            out.coeffs[j] = char_eval_residue(&target, x).conj().to_complex() * amp;
        }
    }
    Ok(out)
}
