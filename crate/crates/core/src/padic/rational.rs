//! Representatives of ℚ_p/ℤ_p and exact p-power roots of unity.

use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;

use super::{check_prime, p_power_exponent, pow};
use crate::error::{Error, Result};

/// A class `a/p^n` of ℚ_p/ℤ_p in lowest terms: `0 ≤ a < p^n`, and `p ∤ a`
/// unless the class is trivial, in which case `a = 0, n = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QpModZpRep {
    p: u64,
    num: u64,
    exp: u32,
}

impl QpModZpRep {
    /// Reduces `num/p^exp` modulo 1 and to lowest terms.
    pub fn new(p: u64, num: u64, exp: u32) -> Result<Self> {
        check_prime(p)?;
        super::checked_pow(p, exp)?;
        Ok(Self::reduced(p, num, exp))
    }

    pub(crate) fn reduced(p: u64, num: u64, exp: u32) -> Self {
        let mut num = num % pow(p, exp);
        let mut exp = exp;
        if num == 0 {
            return Self { p, num: 0, exp: 0 };
        }
        while num % p == 0 {
            num /= p;
            exp -= 1;
        }
        Self { p, num, exp }
    }

    pub fn trivial(p: u64) -> Self {
        Self { p, num: 0, exp: 0 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    /// The exponent `n` of the reduced denominator `p^n`.
    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn is_trivial(&self) -> bool {
        self.num == 0
    }

    /// `|a/p^n|_p = p^n`; the trivial class reports 1.
    pub fn norm(&self) -> u64 {
        pow(self.p, self.exp)
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.num, self.norm())
    }

    /// The numerator over the common denominator `p^level` (`level ≥ n`).
    pub(crate) fn numerator_at(&self, level: u32) -> u64 {
        debug_assert!(level >= self.exp);
        self.num * pow(self.p, level - self.exp)
    }

    pub fn add(&self, other: &Self) -> Self {
        let level = self.exp.max(other.exp);
        let m = pow(self.p, level);
        let s = (self.numerator_at(level) + other.numerator_at(level)) % m;
        Self::reduced(self.p, s, level)
    }

    pub fn neg(&self) -> Self {
        let m = self.norm();
        Self::reduced(self.p, (m - self.num) % m, self.exp)
    }

    /// Multiplies by the integer `k` (any p-adic integer acts through its
    /// residue modulo `p^n`).
    pub fn mul_int(&self, k: u64) -> Self {
        let m = self.norm();
        let s = ((self.num as u128 * (k % m) as u128) % m as u128) as u64;
        Self::reduced(self.p, s, self.exp)
    }
}

impl fmt::Display for QpModZpRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}^{}", self.num, self.p, self.exp)
    }
}

/// The p-adic fractional part `{x}_p` of a rational with p-power denominator.
pub fn frac_part_p(p: u64, x: Ratio<i64>) -> Result<QpModZpRep> {
    check_prime(p)?;
    let den = *x.denom();
    let exp = p_power_exponent(p, den.unsigned_abs())
        .ok_or_else(|| Error::Domain(format!("denominator of {x} is not a power of {p}")))?;
    let m = den.abs();
    let num = x.numer().rem_euclid(m) as u64;
    Ok(QpModZpRep::reduced(p, num, exp))
}

/// `|x|_p` for a representative of ℚ_p/ℤ_p (1 on the trivial class).
pub fn padic_norm(x: &QpModZpRep) -> u64 {
    x.norm()
}

/// The root of unity `e^{2πi a/p^n}`, stored by its reduced exponent.
///
/// Equality is equality of exponents; [`Phase::to_complex`] exists only for
/// floating-point accumulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase(QpModZpRep);

impl Phase {
    pub fn one(p: u64) -> Self {
        Phase(QpModZpRep::trivial(p))
    }

    /// `e^{2πi num/p^exp}`.
    pub fn new(p: u64, num: u64, exp: u32) -> Result<Self> {
        QpModZpRep::new(p, num, exp).map(Phase)
    }

    pub(crate) fn from_parts(p: u64, num: u64, exp: u32) -> Self {
        Phase(QpModZpRep::reduced(p, num, exp))
    }

    pub fn from_rep(rep: QpModZpRep) -> Self {
        Phase(rep)
    }

    pub fn exponent(&self) -> QpModZpRep {
        self.0
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn is_one(&self) -> bool {
        self.0.is_trivial()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Phase(self.0.add(&other.0))
    }

    pub fn conj(&self) -> Self {
        Phase(self.0.neg())
    }

    pub fn pow(&self, k: u64) -> Self {
        Phase(self.0.mul_int(k))
    }

    /// Order of the root of unity as a power of p.
    pub fn order(&self) -> u64 {
        self.0.norm()
    }

    pub fn to_complex(&self) -> Complex64 {
        let theta = std::f64::consts::TAU * self.0.num as f64 / self.0.norm() as f64;
        Complex64::from_polar(1.0, theta)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.0)
    }
}
