//! Return probabilities of the random walk driven by a symmetric
//! representation of a finite group.
//!
//! For a self-conjugate `χ` of dimension `k` on `G`,
//! `p_n = 𝔪(χ^{⊗2n}) / k^{2n} = |G|^{−1} Σ_g (Tr χ(g) / k)^{2n}`,
//! the multiplicity of the trivial representation in `χ^{⊗2n}` over `k^{2n}`.
//! Since the identity contributes `k^{2n}` and every other term is a real
//! square, `p_n ≥ 1/|G|`, which caps the dimension estimate
//! `−2 log p_n / log n` by `2 log |G| / log n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::FiniteRep;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

enum Powers {
    /// Distinct integer trace values with their counts, and `t^{2n}` for each.
    Rational {
        squares: Vec<BigInt>,
        counts: Vec<u64>,
        current: Vec<BigInt>,
    },
    Cyclotomic {
        squares: Vec<Cyclotomic<BigInt>>,
        current: Vec<Cyclotomic<BigInt>>,
    },
}

/// The sequence `n ↦ (S_n, k^{2n})` with `S_n = Σ_g Tr χ(g)^{2n}`, computed
/// incrementally.
pub struct ReturnMoments {
    order: u64,
    n: u64,
    k_pow: BigInt,
    k_sq: BigInt,
    powers: Powers,
}

/// One term of [`ReturnMoments`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Moment {
    pub n: u64,
    /// `Σ_g Tr χ(g)^{2n} = |G| · 𝔪(χ^{⊗2n})`.
    pub sum: BigInt,
    /// `k^{2n}`.
    pub k_pow: BigInt,
    pub order: u64,
}

impl Moment {
    /// `p_n = S_n / (|G| k^{2n})`.
    pub fn p_n(&self) -> BigRational {
        BigRational::new(self.sum.clone(), self.k_pow.clone() * BigInt::from(self.order))
    }

    /// The multiplicity of the trivial representation in `χ^{⊗2n}`.
    pub fn trivial_multiplicity(&self) -> BigInt {
        &self.sum / BigInt::from(self.order)
    }

    /// `p_n ≥ 1/|G|`, i.e. `S_n ≥ k^{2n}`.
    pub fn meets_floor(&self) -> bool {
        self.sum >= self.k_pow
    }

    /// `log p_n`.
    pub fn ln_p(&self) -> f64 {
        big_ln(&self.sum) - big_ln(&self.k_pow) - (self.order as f64).ln()
    }
}

/// Natural logarithm of a positive big integer.
fn big_ln(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = x >> shift;
    top.to_f64().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

fn to_big(c: &Cyclotomic<i64>) -> Cyclotomic<BigInt> {
    Cyclotomic::from_coeffs(
        c.p(),
        c.level(),
        c.coeffs().iter().map(|&v| BigInt::from(v)).collect(),
    )
}

impl ReturnMoments {
    /// Fails with a domain error unless the representation is symmetric.
    pub fn new(rep: &FiniteRep) -> Result<Self> {
        let traces = rep.traces()?;
        if traces.iter().any(|t| *t != t.conj()) {
            return Err(Error::Domain(
                "return probabilities need a symmetric (self-conjugate) representation".into(),
            ));
        }
        let k = BigInt::from(rep.dim());
        let powers = if let Some(values) = traces.iter().map(|t| t.as_scalar()).collect::<Option<Vec<i64>>>() {
            let mut distinct: Vec<(i64, u64)> = Vec::new();
            for v in values {
                match distinct.iter_mut().find(|(u, _)| *u == v) {
                    Some(slot) => slot.1 += 1,
                    None => distinct.push((v, 1)),
                }
            }
            Powers::Rational {
                squares: distinct.iter().map(|(v, _)| BigInt::from(*v) * BigInt::from(*v)).collect(),
                counts: distinct.iter().map(|(_, c)| *c).collect(),
                current: vec![BigInt::one(); distinct.len()],
            }
        } else {
            let big: Vec<_> = traces.iter().map(to_big).collect();
            Powers::Cyclotomic {
                squares: big.iter().map(|t| t.clone() * t.clone()).collect(),
                current: big
                    .iter()
                    .map(|t| Cyclotomic::from_scalar(t.p(), BigInt::one()))
                    .collect(),
            }
        };
        Ok(Self {
            order: rep.group().order(),
            n: 0,
            k_pow: BigInt::one(),
            k_sq: &k * &k,
            powers,
        })
    }
}

impl Iterator for ReturnMoments {
    type Item = Moment;

    fn next(&mut self) -> Option<Moment> {
        self.n += 1;
        self.k_pow *= &self.k_sq;
        let sum = match &mut self.powers {
            Powers::Rational {
                squares,
                counts,
                current,
            } => {
                let mut s = BigInt::zero();
                for ((cur, sq), c) in current.iter_mut().zip(squares.iter()).zip(counts.iter()) {
                    *cur *= sq;
                    s += &*cur * BigInt::from(*c);
                }
                s
            }
            Powers::Cyclotomic { squares, current } => {
                let mut s: Option<Cyclotomic<BigInt>> = None;
                for (cur, sq) in current.iter_mut().zip(squares.iter()) {
                    *cur = cur.clone() * sq.clone();
                    s = Some(match s {
                        None => cur.clone(),
                        Some(acc) => acc + cur.clone(),
                    });
                }
                s.and_then(|v| v.as_scalar()).expect("a sum over the group of a class function power is rational")
            }
        };
        Some(Moment {
            n: self.n,
            sum,
            k_pow: self.k_pow.clone(),
            order: self.order,
        })
    }
}

/// Exact `p_n` for `n ≥ 1`.
pub fn rw_return_prob(rep: &FiniteRep, n: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let m = ReturnMoments::new(rep)?
        .nth((n - 1) as usize)
        .expect("the moment sequence is infinite");
    Ok(m.p_n())
}

/// `−2 log p_n / log n` for `n ≥ 2`.
pub fn rw_dim_estimate(rep: &FiniteRep, n: u64) -> Result<f64> {
    if n <= 1 {
        return Err(Error::Domain(format!("n = {n} gives log n ≤ 0; need n ≥ 2")));
    }
    let m = ReturnMoments::new(rep)?
        .nth((n - 1) as usize)
        .expect("the moment sequence is infinite");
    let est = -2.0 * m.ln_p() / (n as f64).ln();
    Ok(if est.abs() < 1e-15 { 0.0 } else { est })
}

/// `2 log |G| / log n`, the ceiling every symmetric estimate obeys.
pub fn rw_dim_bound(order: u64, n: u64) -> f64 {
    2.0 * (order as f64).ln() / (n as f64).ln()
}
