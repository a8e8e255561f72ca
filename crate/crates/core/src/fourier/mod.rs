//! Finite-level Fourier analysis on ℤ_p.
//!
//! A [`LevelFunction`] at level `r` is a function on ℤ_p constant on cosets of
//! `p^r ℤ_p`, stored as its `p^r` values on residues. Its transform is a
//! [`CoefSequence`] over the characters `χ_{m,n}` with `n ≤ r`, stored in
//! Monna order: entry `j` is the coefficient of `χ_j`, whose `(m, n)` label is
//! `MonnaIndex(j).to_s(p)`. Shell `n` occupies entries `[p^{n−1}, p^n)`.
//!
//! Both types are generic over a [`Scalar`]: `Complex64` for user data and
//! [`Exact`] for values built by the library from rationals and phases.

mod indicator;
mod shell;
mod transform;

pub use indicator::{indicator_coefficients, psi_char_expansion, psi_eval};
pub use shell::{filtration_product_check, shell_project, shells_in_support};
pub use transform::{analyze_fast, analyze_naive, analyze_naive_many, synthesize};

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use crate::characters::{char_eval_residue, CharIndexS, MonnaIndex};
use crate::cyclotomic::Exact;
use crate::error::{Error, Result};
use crate::padic::{check_prime, checked_pow, pow, Coset, Phase};

/// Values a transform can run over.
pub trait Scalar:
    Clone + Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Precomputed powers of `ω = e^{2πi/p^level}`.
    type Roots;

    fn zero(p: u64) -> Self;
    fn one(p: u64) -> Self;
    fn from_ratio(p: u64, r: Rational64) -> Self;
    fn from_phase(phase: &Phase) -> Self;
    fn roots(p: u64, level: u32) -> Self::Roots;
    /// `self · ω^exponent`.
    fn mul_root(&self, roots: &Self::Roots, exponent: u64) -> Self;
    fn conj(&self) -> Self;
    fn scale(&self, r: Rational64) -> Self;
    /// Exactly zero for exact values, `|z| ≤ tol` for floats.
    fn is_negligible(&self, tol: f64) -> bool;
    fn to_complex(&self) -> Complex64;
}

/// Root table for floating-point transforms.
pub struct ComplexRoots {
    table: Vec<Complex64>,
}

impl Scalar for Complex64 {
    type Roots = ComplexRoots;

    fn zero(_: u64) -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one(_: u64) -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_ratio(_: u64, r: Rational64) -> Self {
        Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn from_phase(phase: &Phase) -> Self {
        phase.to_complex()
    }

    fn roots(p: u64, level: u32) -> ComplexRoots {
        let m = pow(p, level);
        let table = (0..m)
            .map(|a| Complex64::from_polar(1.0, std::f64::consts::TAU * a as f64 / m as f64))
            .collect();
        ComplexRoots { table }
    }

    #[inline]
    fn mul_root(&self, roots: &ComplexRoots, exponent: u64) -> Self {
        self * roots.table[(exponent % roots.table.len() as u64) as usize]
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn scale(&self, r: Rational64) -> Self {
        self * r.to_f64().unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

impl Scalar for Exact {
    type Roots = u32;

    fn zero(p: u64) -> Self {
        Exact::zero(p)
    }

    fn one(p: u64) -> Self {
        Exact::from_ratio(p, Rational64::from_integer(1))
    }

    fn from_ratio(p: u64, r: Rational64) -> Self {
        Exact::from_ratio(p, r)
    }

    fn from_phase(phase: &Phase) -> Self {
        Exact::from_phase(phase, Rational64::from_integer(1))
    }

    fn roots(_: u64, level: u32) -> u32 {
        level
    }

    fn mul_root(&self, level: &u32, exponent: u64) -> Self {
        Exact::mul_root(self, *level, exponent)
    }

    fn conj(&self) -> Self {
        Exact::conj(self)
    }

    fn scale(&self, r: Rational64) -> Self {
        Exact::scale(self, &r)
    }

    fn is_negligible(&self, _: f64) -> bool {
        self.is_zero()
    }

    fn to_complex(&self) -> Complex64 {
        Exact::to_complex(self)
    }
}

/// A function on ℤ_p constant on the cosets of `p^level ℤ_p`.
#[derive(Clone, Debug)]
pub struct LevelFunction<S = Complex64> {
    p: u64,
    level: u32,
    values: Vec<S>,
}

impl<S: Scalar> LevelFunction<S> {
    pub fn new(p: u64, level: u32, values: Vec<S>) -> Result<Self> {
        check_prime(p)?;
        let m = checked_pow(p, level)?;
        if values.len() as u64 != m {
            return Err(Error::Mismatch(format!(
                "a level-{level} function needs {m} values, got {}",
                values.len()
            )));
        }
        Ok(Self { p, level, values })
    }

    pub fn from_fn(p: u64, level: u32, f: impl FnMut(u64) -> S) -> Result<Self> {
        check_prime(p)?;
        let m = checked_pow(p, level)?;
        Ok(Self {
            p,
            level,
            values: (0..m).map(f).collect(),
        })
    }

    pub fn zero(p: u64, level: u32) -> Result<Self> {
        Self::from_fn(p, level, |_| S::zero(p))
    }

    pub fn constant(p: u64, level: u32, c: S) -> Result<Self> {
        Self::from_fn(p, level, |_| c.clone())
    }

    /// `𝟙_{x + p^r ℤ_p}` sampled at `level ≥ r`.
    pub fn indicator(coset: &Coset, level: u32) -> Result<Self> {
        if level < coset.level() {
            return Err(Error::Precision {
                needed: coset.level(),
                available: level,
            });
        }
        let p = coset.p();
        Self::from_fn(p, level, |z| {
            if coset.contains_residue(z) {
                S::one(p)
            } else {
                S::zero(p)
            }
        })
    }

    /// The character `χ_{m,n}` sampled at `level ≥ n`.
    pub fn character(idx: &CharIndexS, level: u32) -> Result<Self> {
        if level < idx.n() {
            return Err(Error::Precision {
                needed: idx.n(),
                available: level,
            });
        }
        Self::from_fn(idx.p(), level, |z| S::from_phase(&char_eval_residue(idx, z)))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }

    /// The value at any `x` whose residue modulo `p^level` is known.
    pub fn at(&self, x: u64) -> &S {
        &self.values[(x % self.values.len() as u64) as usize]
    }

    /// Constant extension to a finer level; coarser targets return a copy.
    pub fn promote(&self, level: u32) -> Self {
        if level <= self.level {
            return self.clone();
        }
        let m = self.values.len() as u64;
        Self {
            p: self.p,
            level,
            values: (0..pow(self.p, level))
                .map(|z| self.values[(z % m) as usize].clone())
                .collect(),
        }
    }

    fn aligned(&self, other: &Self) -> Result<(Self, Self)> {
        if self.p != other.p {
            return Err(Error::Mismatch("functions use different primes".into()));
        }
        let level = self.level.max(other.level);
        Ok((self.promote(level), other.promote(level)))
    }

    /// Pointwise product at the finer of the two levels.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        Ok(Self {
            values: a.values.into_iter().zip(b.values).map(|(x, y)| x * y).collect(),
            ..a
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.aligned(other)?;
        Ok(Self {
            values: a.values.into_iter().zip(b.values).map(|(x, y)| x + y).collect(),
            ..a
        })
    }

    pub fn to_complex(&self) -> LevelFunction<Complex64> {
        LevelFunction {
            p: self.p,
            level: self.level,
            values: self.values.iter().map(Scalar::to_complex).collect(),
        }
    }

    /// `max_x |f(x) − g(x)|` after promotion.
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        let (a, b) = self.aligned(other)?;
        Ok(a.values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| (x.to_complex() - y.to_complex()).norm())
            .fold(0.0, f64::max))
    }

    /// `p^{−r} Σ_x conj(f(x)) g(x)` in floating point.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        let (a, b) = self.aligned(other)?;
        let sum: Complex64 = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| x.to_complex().conj() * y.to_complex())
            .sum();
        Ok(sum / a.values.len() as f64)
    }
}

/// Coefficients of a level-`r` function against `χ_{m,n}`, `n ≤ r`, in Monna
/// order.
#[derive(Clone, Debug)]
pub struct CoefSequence<S = Complex64> {
    p: u64,
    level: u32,
    coeffs: Vec<S>,
}

impl<S: Scalar> CoefSequence<S> {
    pub fn new(p: u64, level: u32, coeffs: Vec<S>) -> Result<Self> {
        check_prime(p)?;
        let m = checked_pow(p, level)?;
        if coeffs.len() as u64 != m {
            return Err(Error::Mismatch(format!(
                "a level-{level} coefficient table needs {m} entries, got {}",
                coeffs.len()
            )));
        }
        Ok(Self { p, level, coeffs })
    }

    pub fn zero(p: u64, level: u32) -> Result<Self> {
        check_prime(p)?;
        let m = checked_pow(p, level)?;
        Ok(Self {
            p,
            level,
            coeffs: vec![S::zero(p); m as usize],
        })
    }

    /// A table from `(index, value)` pairs; every index must have `n ≤ level`.
    pub fn from_pairs(
        p: u64,
        level: u32,
        pairs: impl IntoIterator<Item = (CharIndexS, S)>,
    ) -> Result<Self> {
        let mut out = Self::zero(p, level)?;
        for (idx, c) in pairs {
            out.set(&idx, c)?;
        }
        Ok(out)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Coefficients in Monna order.
    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn get(&self, idx: &CharIndexS) -> S {
        if idx.n() > self.level {
            return S::zero(self.p);
        }
        self.coeffs[idx.to_monna().0 as usize].clone()
    }

    pub fn get_monna(&self, k: MonnaIndex) -> S {
        self.coeffs
            .get(k.0 as usize)
            .cloned()
            .unwrap_or_else(|| S::zero(self.p))
    }

    pub fn set(&mut self, idx: &CharIndexS, c: S) -> Result<()> {
        if idx.p() != self.p {
            return Err(Error::Mismatch("index uses a different prime".into()));
        }
        if idx.n() > self.level {
            return Err(Error::Domain(format!(
                "χ{idx} lies outside level {}",
                self.level
            )));
        }
        self.coeffs[idx.to_monna().0 as usize] = c;
        Ok(())
    }

    /// `(index, coefficient)` in Monna order.
    pub fn iter(&self) -> impl Iterator<Item = (CharIndexS, &S)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(j, c)| (MonnaIndex(j as u64).to_s(self.p), c))
    }

    /// Indices whose coefficient is not negligible.
    pub fn support(&self, tol: f64) -> Vec<CharIndexS> {
        self.iter()
            .filter(|(_, c)| !c.is_negligible(tol))
            .map(|(idx, _)| idx)
            .collect()
    }

    /// Zero-extension to a finer level.
    pub fn promote(&self, level: u32) -> Self {
        if level <= self.level {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(pow(self.p, level) as usize, S::zero(self.p));
        Self {
            p: self.p,
            level,
            coeffs,
        }
    }

    pub fn to_complex(&self) -> CoefSequence<Complex64> {
        CoefSequence {
            p: self.p,
            level: self.level,
            coeffs: self.coeffs.iter().map(Scalar::to_complex).collect(),
        }
    }

    /// `max_j |a_j − b_j|` after promotion.
    pub fn max_deviation(&self, other: &Self) -> Result<f64> {
        if self.p != other.p {
            return Err(Error::Mismatch("tables use different primes".into()));
        }
        let level = self.level.max(other.level);
        let (a, b) = (self.promote(level), other.promote(level));
        Ok(a.coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| (x.to_complex() - y.to_complex()).norm())
            .fold(0.0, f64::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotion_is_constant_extension() {
        let f = LevelFunction::<Complex64>::from_fn(3, 1, |x| Complex64::new(x as f64, 0.0)).unwrap();
        let g = f.promote(2);
        for z in 0..9 {
            assert_eq!(g.values()[z as usize], f.values()[(z % 3) as usize]);
        }
    }

    #[test]
    fn length_is_checked() {
        assert!(LevelFunction::new(2, 2, vec![Complex64::new(0.0, 0.0); 3]).is_err());
        assert!(CoefSequence::new(2, 2, vec![Complex64::new(0.0, 0.0); 4]).is_ok());
    }

    #[test]
    fn coefficient_lookup_by_either_index() {
        let mut c = CoefSequence::<Complex64>::zero(2, 2).unwrap();
        let idx = CharIndexS::new(2, 3, 2).unwrap();
        c.set(&idx, Complex64::new(2.0, 0.0)).unwrap();
        assert_eq!(c.get_monna(MonnaIndex(3)), Complex64::new(2.0, 0.0));
        assert_eq!(c.get(&idx), Complex64::new(2.0, 0.0));
        assert!(c.set(&CharIndexS::new(2, 1, 3).unwrap(), Complex64::new(1.0, 0.0)).is_err());
    }
}
