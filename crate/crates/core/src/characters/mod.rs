//! The dual group of ℤ_p.
//!
//! Characters are indexed two ways. `CharIndexS` is the pair `(m, n)` with
//! `χ_{m,n}(1) = e^{2πi m/p^n}`, drawn from
//! `S = {(1,0)} ∪ {(m,n) : m < p^n, p ∤ m}`. `MonnaIndex(k)` is the natural
//! number with `χ_k(1) = e^{2πi T(k)}`, `T` the Monna map. The two are related
//! by `T(k) = m/p^n` in lowest terms, and both parametrize the Prüfer group.

mod sigma;

pub use sigma::{
    block_of, sigma, sigma_iter_closed, sigma_iterate, sigma_pm_closed, BlockId,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::padic::{check_prime, digit_len, digit_reverse, pow, PadicTrunc, Phase};

/// A character `χ_{m,n}` of ℤ_p, with `(m, n) ∈ S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharIndexS {
    p: u64,
    m: u64,
    n: u32,
}

impl CharIndexS {
    pub fn new(p: u64, m: u64, n: u32) -> Result<Self> {
        check_prime(p)?;
        let valid = if n == 0 {
            m == 1
        } else {
            crate::padic::checked_pow(p, n)?;
            m < pow(p, n) && m % p != 0
        };
        if !valid {
            return Err(Error::Domain(format!("({m},{n}) is not in S for p = {p}")));
        }
        Ok(Self { p, m, n })
    }

    pub fn trivial(p: u64) -> Self {
        Self { p, m: 1, n: 0 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// The level `n`: the character is trivial on `p^n ℤ_p` and, for `n ≥ 1`,
    /// on no larger subgroup. It is also the shell the character lives in.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 0
    }

    /// `χ_{m,n}(1)`.
    pub fn at_one(&self) -> Phase {
        if self.n == 0 {
            Phase::one(self.p)
        } else {
            Phase::from_parts(self.p, self.m, self.n)
        }
    }

    /// The Monna index `k` with `T(k) = m/p^n`.
    pub fn to_monna(&self) -> MonnaIndex {
        if self.n == 0 {
            MonnaIndex(0)
        } else {
            MonnaIndex(digit_reverse(self.p, self.m, self.n))
        }
    }

    /// All indices with `n ≤ level`, in Monna order.
    pub fn up_to_level(p: u64, level: u32) -> Vec<Self> {
        (0..pow(p, level)).map(|k| MonnaIndex(k).to_s(p)).collect()
    }
}

impl fmt::Display for CharIndexS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A character `χ_k` of ℤ_p indexed through the Monna map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonnaIndex(pub u64);

impl MonnaIndex {
    /// `(m, n)` with `m/p^n = T(k)` in lowest terms; `k = 0 ↦ (1,0)`.
    pub fn to_s(self, p: u64) -> CharIndexS {
        let n = digit_len(p, self.0);
        if n == 0 {
            return CharIndexS::trivial(p);
        }
        CharIndexS {
            p,
            m: digit_reverse(p, self.0, n),
            n,
        }
    }

    /// The shell (level) of the character: the number of base-p digits of `k`.
    pub fn shell(self, p: u64) -> u32 {
        digit_len(p, self.0)
    }
}

impl fmt::Display for MonnaIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `χ_{m,n}(x) = e^{2πi m (x mod p^n)/p^n}`.
pub fn char_eval(idx: &CharIndexS, x: &PadicTrunc) -> Result<Phase> {
    if x.p() != idx.p {
        return Err(Error::Mismatch("character and element use different primes".into()));
    }
    let r = x.residue(idx.n)?;
    Ok(char_eval_residue(idx, r))
}

/// Character value on a residue known modulo at least `p^n`.
pub(crate) fn char_eval_residue(idx: &CharIndexS, x: u64) -> Phase {
    if idx.n == 0 {
        return Phase::one(idx.p);
    }
    let m = pow(idx.p, idx.n);
    let e = ((idx.m as u128 * (x % m) as u128) % m as u128) as u64;
    Phase::from_parts(idx.p, e, idx.n)
}

/// `χ_k(x)` for a Monna index.
pub fn monna_char_eval(k: MonnaIndex, x: &PadicTrunc) -> Result<Phase> {
    char_eval(&k.to_s(x.p()), x)
}

/// Converts a Monna index to `(m, n) ∈ S`.
pub fn index_convert(p: u64, k: MonnaIndex) -> CharIndexS {
    k.to_s(p)
}
