//! Truncated p-adic integers.
//!
//! An element of ℤ_p known to precision `N` is a residue modulo `p^N`. All
//! arithmetic is exact integer arithmetic modulo `p^N`, and no operation ever
//! extends the precision of its inputs. The Monna map reverses base-p digits
//! into a fraction of the unit interval and is the bridge between ℤ_p and the
//! Monna parametrization of its dual.

mod rational;

pub use rational::{frac_part_p, padic_norm, Phase, QpModZpRep};

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Returns true when `p` is a prime number.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `p^e`, or an overflow error when it does not fit in a `u64`.
pub fn checked_pow(p: u64, e: u32) -> Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| Error::Overflow(format!("{p}^{e} does not fit in 64 bits")))
}

/// `p^e` for exponents already known to be in range.
#[inline]
pub(crate) fn pow(p: u64, e: u32) -> u64 {
    p.pow(e)
}

/// Base-p digits of `n`, least significant first. Zero has no digits.
pub fn digits(p: u64, mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Number of base-p digits of `n` (zero has length zero).
pub fn digit_len(p: u64, mut n: u64) -> u32 {
    let mut len = 0;
    while n > 0 {
        len += 1;
        n /= p;
    }
    len
}

/// Reverses the lowest `width` base-p digits of `n`.
pub fn digit_reverse(p: u64, mut n: u64, width: u32) -> u64 {
    let mut out = 0;
    for _ in 0..width {
        out = out * p + n % p;
        n /= p;
    }
    out
}

/// An element of ℤ_p known modulo `p^N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PadicTrunc {
    p: u64,
    precision: u32,
    value: u64,
}

/// The ring operation applied by [`ring_op`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    /// Negates the first operand; the second must still match in prime and
    /// precision.
    Neg,
}

impl PadicTrunc {
    /// The residue `value mod p^precision`.
    pub fn new(p: u64, precision: u32, value: u64) -> Result<Self> {
        check_prime(p)?;
        if precision == 0 {
            return Err(Error::Domain("precision must be at least 1".into()));
        }
        let modulus = checked_pow(p, precision)?;
        Ok(Self {
            p,
            precision,
            value: value % modulus,
        })
    }

    /// Builds an element from its digits `(x_0, …, x_{N−1})`, least significant first.
    pub fn from_digits(p: u64, digits: &[u64]) -> Result<Self> {
        check_prime(p)?;
        if let Some(&bad) = digits.iter().find(|&&d| d >= p) {
            return Err(Error::Domain(format!("digit {bad} is not in [0, {})", p - 1)));
        }
        let precision = u32::try_from(digits.len())
            .map_err(|_| Error::Overflow("too many digits".into()))?;
        checked_pow(p, precision)?;
        let value = digits.iter().rev().fold(0u64, |acc, &d| acc * p + d);
        Self::new(p, precision, value)
    }

    pub fn zero(p: u64, precision: u32) -> Result<Self> {
        Self::new(p, precision, 0)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// The encoded residue `Σ x_k p^k`, in `[0, p^N)`.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        pow(self.p, self.precision)
    }

    /// All `N` digits, least significant first (trailing zeros included).
    pub fn digits(&self) -> Vec<u64> {
        let mut v = self.value;
        (0..self.precision)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    /// The residue modulo `p^level`; fails when `level` exceeds the precision.
    pub fn residue(&self, level: u32) -> Result<u64> {
        if level > self.precision {
            return Err(Error::Precision {
                needed: level,
                available: self.precision,
            });
        }
        Ok(self.value % pow(self.p, level))
    }

    /// Drops precision to `level` digits.
    pub fn truncate(&self, level: u32) -> Result<Self> {
        let value = self.residue(level)?;
        Self::new(self.p, level, value)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.precision != other.precision {
            return Err(Error::Mismatch(format!(
                "operands live in ℤ/{}^{} and ℤ/{}^{}",
                self.p, self.precision, other.p, other.precision
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        ring_op(self, other, RingOp::Add)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        ring_op(self, other, RingOp::Mul)
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus();
        Self {
            value: (m - self.value) % m,
            ..*self
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }
}

impl fmt::Display for PadicTrunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.value, self.p, self.precision)
    }
}

/// Exact ring arithmetic modulo `p^N`.
pub fn ring_op(a: &PadicTrunc, b: &PadicTrunc, op: RingOp) -> Result<PadicTrunc> {
    a.check_compatible(b)?;
    let m = a.modulus() as u128;
    let value = match op {
        RingOp::Add => (a.value as u128 + b.value as u128) % m,
        RingOp::Mul => (a.value as u128 * b.value as u128) % m,
        RingOp::Neg => (m - a.value as u128) % m,
    };
    Ok(PadicTrunc {
        value: value as u64,
        ..*a
    })
}

/// The Monna map `T(Σ x_k p^k) = Σ x_k / p^{k+1}` over the known digits.
pub fn monna_map(x: &PadicTrunc) -> Ratio<u64> {
    let num = digit_reverse(x.p, x.value, x.precision);
    Ratio::new(num, x.modulus())
}

/// The Monna map on a natural number, using its natural digit length.
pub fn monna_map_natural(p: u64, k: u64) -> Ratio<u64> {
    let len = digit_len(p, k);
    Ratio::new(digit_reverse(p, k, len), pow(p, len))
}

/// Inverse of the Monna map on terminating expansions: the unique natural
/// `k` with `T(k) = t`.
pub fn monna_inverse(p: u64, t: Ratio<u64>) -> Result<u64> {
    check_prime(p)?;
    let (num, den) = (*t.numer(), *t.denom());
    if num >= den {
        return Err(Error::Domain(format!("{t} is not in [0, 1)")));
    }
    let exp = p_power_exponent(p, den)
        .ok_or_else(|| Error::Domain(format!("denominator {den} is not a power of {p}")))?;
    Ok(digit_reverse(p, num, exp))
}

/// `Some(e)` when `den = p^e`.
pub(crate) fn p_power_exponent(p: u64, mut den: u64) -> Option<u32> {
    if den == 0 {
        return None;
    }
    let mut e = 0;
    while den % p == 0 {
        den /= p;
        e += 1;
    }
    (den == 1).then_some(e)
}

/// The coset `x + p^r ℤ_p`, with `x` reduced modulo `p^r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Coset {
    p: u64,
    level: u32,
    rep: u64,
}

impl Coset {
    pub fn new(p: u64, level: u32, rep: u64) -> Result<Self> {
        check_prime(p)?;
        let m = checked_pow(p, level)?;
        Ok(Self {
            p,
            level,
            rep: rep % m,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn rep(&self) -> u64 {
        self.rep
    }

    pub fn contains(&self, x: &PadicTrunc) -> Result<bool> {
        if x.p() != self.p {
            return Err(Error::Mismatch("coset and element use different primes".into()));
        }
        Ok(x.residue(self.level)? == self.rep)
    }

    /// Membership of the residue `z mod p^level` for `level ≥ r`.
    pub(crate) fn contains_residue(&self, z: u64) -> bool {
        z % pow(self.p, self.level) == self.rep
    }
}

/// Normalized Haar measure of a coset: `p^{−r}`.
pub fn haar_measure(c: &Coset) -> Ratio<u64> {
    Ratio::new(1, pow(c.p, c.level))
}
