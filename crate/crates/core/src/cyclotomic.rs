//! Exact sums of p-power roots of unity.
//!
//! A [`Cyclotomic`] value is stored in group-ring form: `coeffs[a]` is the
//! coefficient of `ζ^a` with `ζ = e^{2πi/p^L}`. That makes accumulating phases
//! a histogram update. Equality is decided on the canonical form over the
//! power basis `1, ζ, …, ζ^{φ(p^L)−1}`, obtained by eliminating
//! `ζ^{(p−1)p^{L−1}+t} = −Σ_{i<p−1} ζ^{i p^{L−1}+t}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use crate::padic::{pow, Phase};

/// Coefficient rings usable inside a [`Cyclotomic`].
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + ToPrimitive
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + ToPrimitive
{
}

/// An element of ℚ(ζ_{p^L}) (or ℤ[ζ_{p^L}]) in group-ring form.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    p: u64,
    level: u32,
    coeffs: Vec<T>,
}

/// Exact values with rational coefficients.
pub type Exact = Cyclotomic<Rational64>;

impl<T: Coefficient> Cyclotomic<T> {
    pub fn zero(p: u64) -> Self {
        Self {
            p,
            level: 0,
            coeffs: vec![T::zero()],
        }
    }

    pub fn from_scalar(p: u64, c: T) -> Self {
        Self {
            p,
            level: 0,
            coeffs: vec![c],
        }
    }

    /// `c · ζ_phase`.
    pub fn from_phase(phase: &Phase, c: T) -> Self {
        let mut out = Self::zero(phase.p());
        out.add_term(phase, c);
        out
    }

    /// Group-ring form at `level` with the given coefficients.
    pub fn from_coeffs(p: u64, level: u32, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len() as u64, pow(p, level), "coefficient vector length");
        Self { p, level, coeffs }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Re-expresses the value over `ζ_{p^level}` (`level` ≥ current level).
    pub fn promote(&self, level: u32) -> Self {
        if level <= self.level {
            return self.clone();
        }
        let stride = pow(self.p, level - self.level) as usize;
        let mut coeffs = vec![T::zero(); pow(self.p, level) as usize];
        for (a, c) in self.coeffs.iter().enumerate() {
            coeffs[a * stride] = c.clone();
        }
        Self {
            p: self.p,
            level,
            coeffs,
        }
    }

    fn promote_in_place(&mut self, level: u32) {
        if level > self.level {
            *self = self.promote(level);
        }
    }

    /// Adds `c · phase` in place.
    pub fn add_term(&mut self, phase: &Phase, c: T) {
        assert_eq!(phase.p(), self.p, "prime mismatch");
        let e = phase.exponent();
        self.promote_in_place(e.exp());
        let idx = e.numerator_at(self.level) as usize;
        let slot = &mut self.coeffs[idx];
        *slot = slot.clone() + c;
    }

    /// Adds `c · ζ_{p^level}^exponent` in place.
    pub fn add_root(&mut self, level: u32, exponent: u64, c: T) {
        self.promote_in_place(level);
        let idx = (exponent % pow(self.p, level)) * pow(self.p, self.level - level);
        let slot = &mut self.coeffs[idx as usize];
        *slot = slot.clone() + c;
    }

    /// Multiplies by `ζ_{p^level}^exponent`: a rotation of the coefficients.
    pub fn mul_root(&self, level: u32, exponent: u64) -> Self {
        let mut out = self.promote(level);
        let m = out.coeffs.len() as u64;
        let shift = ((exponent % pow(self.p, level)) * pow(self.p, out.level - level)) % m;
        out.coeffs.rotate_right(shift as usize);
        out
    }

    pub fn mul_phase(&self, phase: &Phase) -> Self {
        let e = phase.exponent();
        self.mul_root(e.exp(), e.num())
    }

    /// Complex conjugate: `ζ^a ↦ ζ^{−a}`.
    pub fn conj(&self) -> Self {
        let m = self.coeffs.len();
        let mut coeffs = vec![T::zero(); m];
        for (a, c) in self.coeffs.iter().enumerate() {
            coeffs[(m - a) % m] = c.clone();
        }
        Self {
            p: self.p,
            level: self.level,
            coeffs,
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            p: self.p,
            level: self.level,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Coefficients over the power basis `ζ^0 … ζ^{φ−1}`; unique per level.
    pub fn canonical(&self) -> Vec<T> {
        if self.level == 0 {
            return self.coeffs.clone();
        }
        let block = pow(self.p, self.level - 1) as usize;
        let phi = (self.p as usize - 1) * block;
        let mut out: Vec<T> = self.coeffs[..phi].to_vec();
        for t in 0..block {
            let top = self.coeffs[phi + t].clone();
            if top.is_zero() {
                continue;
            }
            for i in 0..(self.p as usize - 1) {
                let idx = i * block + t;
                out[idx] = out[idx].clone() - top.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.canonical().iter().all(Zero::is_zero)
    }

    /// The value as an element of the coefficient ring, when it is one.
    pub fn as_scalar(&self) -> Option<T> {
        let canon = self.canonical();
        if canon[1..].iter().all(Zero::is_zero) {
            Some(canon[0].clone())
        } else {
            None
        }
    }

    /// Evaluated from the power basis, so rational values convert exactly.
    pub fn to_complex(&self) -> Complex64 {
        let m = self.coeffs.len() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, c) in self.canonical().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = c.to_f64().unwrap_or(f64::NAN);
            acc += Complex64::from_polar(w, std::f64::consts::TAU * a as f64 / m);
        }
        acc
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        assert_eq!(self.p, other.p, "prime mismatch");
        let level = self.level.max(other.level);
        (self.promote(level), other.promote(level))
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_scalar(self.p, T::one());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl<T: Coefficient> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p {
            return false;
        }
        let (a, b) = self.aligned(other);
        a.canonical() == b.canonical()
    }
}

impl<T: Coefficient> Add for Cyclotomic<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = self.aligned(&rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x = x.clone() + y;
        }
        a
    }
}

impl<T: Coefficient> Sub for Cyclotomic<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Coefficient> Neg for Cyclotomic<T> {
    type Output = Self;

    fn neg(mut self) -> Self {
        for x in self.coeffs.iter_mut() {
            *x = -x.clone();
        }
        self
    }
}

impl<T: Coefficient> Mul for Cyclotomic<T> {
    type Output = Self;

    /// Cyclic convolution in the group ring, which maps onto the field product.
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = self.aligned(&rhs);
        let m = a.coeffs.len();
        let mut coeffs = vec![T::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % m;
                coeffs[k] = coeffs[k].clone() + x.clone() * y.clone();
            }
        }
        Self {
            p: a.p,
            level: a.level,
            coeffs,
        }
    }
}

impl Exact {
    pub fn from_ratio(p: u64, r: Rational64) -> Self {
        Self::from_scalar(p, r)
    }
}
