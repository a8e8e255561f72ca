//! Analysis and synthesis between level functions and character coefficients.
//!
//! With `M = p^r` and `ω = e^{2πi/M}`, the coefficient in Monna slot `j` is
//! `c_j = M^{−1} Σ_x f(x) ω^{−rev(j)·x}`, where `rev` reverses `r` base-p
//! digits. A decimation-in-frequency pass over natural-order input leaves its
//! output in exactly that digit-reversed order, so the fast transform needs no
//! final permutation.

use num_complex::Complex64;
use num_rational::Rational64;

use super::{CoefSequence, LevelFunction, Scalar};
use crate::padic::{digit_reverse, pow};

fn inverse_size(p: u64, level: u32) -> Rational64 {
    Rational64::new(1, pow(p, level) as i64)
}

/// Direct evaluation of every inner product: `O(p^{2r})`.
pub fn analyze_naive<S: Scalar>(f: &LevelFunction<S>) -> CoefSequence<S> {
    let (p, r) = (f.p, f.level);
    let m = pow(p, r);
    let roots = S::roots(p, r);
    let scale = inverse_size(p, r);
    let coeffs = (0..m)
        .map(|j| {
            let freq = digit_reverse(p, j, r);
            let mut acc = S::zero(p);
            let mut e = 0u64;
            for v in &f.values {
                acc = acc + v.mul_root(&roots, (m - e) % m);
                e = (e + freq) % m;
            }
            acc.scale(scale)
        })
        .collect();
    CoefSequence {
        p,
        level: r,
        coeffs,
    }
}

/// Naive analysis of many functions sharing `(p, r)` in one pass over the
/// character table, which amortizes the twiddle lookups across the batch.
/// Conjugate frequencies are evaluated together.
pub fn analyze_naive_many(fs: &[LevelFunction<Complex64>]) -> Vec<CoefSequence<Complex64>> {
    let Some(first) = fs.first() else {
        return Vec::new();
    };
    let (p, r) = (first.p, first.level);
    assert!(
        fs.iter().all(|f| f.p == p && f.level == r),
        "batch members must share p and level"
    );
    let m = pow(p, r) as usize;
    let b = fs.len();
    let roots = <Complex64 as Scalar>::roots(p, r).table;
    // split re/im, point-major, so the inner loop runs over the batch
    let mut re = vec![0.0f64; m * b];
    let mut im = vec![0.0f64; m * b];
    for (i, f) in fs.iter().enumerate() {
        for (x, v) in f.values.iter().enumerate() {
            re[x * b + i] = v.re;
            im[x * b + i] = v.im;
        }
    }
    let mut out = vec![vec![Complex64::new(0.0, 0.0); m]; b];
    // frequencies f and m − f share their products: with w = c + is,
    // Σ v·w̄ = (A + B) + i(C − D) and Σ v·w = (A − B) + i(C + D)
    let (mut a, mut bb, mut c, mut d) = (vec![0.0f64; b], vec![0.0f64; b], vec![0.0f64; b], vec![0.0f64; b]);
    let inv = 1.0 / m as f64;
    for freq in 0..=m / 2 {
        a.fill(0.0);
        bb.fill(0.0);
        c.fill(0.0);
        d.fill(0.0);
        let mut e = 0usize;
        for x in 0..m {
            let w = roots[e];
            let (wr, wi) = (w.re, w.im);
            let row_re = &re[x * b..(x + 1) * b];
            let row_im = &im[x * b..(x + 1) * b];
            for i in 0..b {
                a[i] += row_re[i] * wr;
                bb[i] += row_im[i] * wi;
                c[i] += row_im[i] * wr;
                d[i] += row_re[i] * wi;
            }
            e = (e + freq) % m;
        }
        let j = digit_reverse(p, freq as u64, r) as usize;
        let partner = (m - freq) % m;
        for i in 0..b {
            out[i][j] = Complex64::new((a[i] + bb[i]) * inv, (c[i] - d[i]) * inv);
        }
        if partner != freq {
            let jp = digit_reverse(p, partner as u64, r) as usize;
            for i in 0..b {
                out[i][jp] = Complex64::new((a[i] - bb[i]) * inv, (c[i] + d[i]) * inv);
            }
        }
    }
    out.into_iter()
        .map(|coeffs| CoefSequence {
            p,
            level: r,
            coeffs,
        })
        .collect()
}

/// In-place radix-p decimation in frequency: `a[pos] ← Σ_x a[x] ω^{sign·rev(pos)·x}`,
/// `sign = ±1`.
fn dif<S: Scalar>(p: u64, level: u32, a: &mut [S], positive: bool) {
    let m = pow(p, level);
    let roots = S::roots(p, level);
    let pu = p as usize;
    let twiddle = |e: u64| if positive { e % m } else { (m - e % m) % m };
    let mut scratch: Vec<S> = vec![S::zero(p); pu];
    let mut span = m as usize;
    while span > 1 {
        let sub = span / pu;
        // exponent of ω for W_span^1 and W_p^1
        let step = m / span as u64;
        let p_step = m / p;
        for base in (0..a.len()).step_by(span) {
            for i in 0..sub {
                for (q, slot) in scratch.iter_mut().enumerate() {
                    let mut acc = a[base + i].clone();
                    for t in 1..pu {
                        let e = (t as u64 * q as u64 % p) * p_step;
                        acc = acc + a[base + i + t * sub].mul_root(&roots, twiddle(e));
                    }
                    *slot = acc;
                }
                for (q, y) in scratch.iter().enumerate() {
                    let e = (i as u64 * q as u64 * step) % m;
                    a[base + i + q * sub] = if e == 0 { y.clone() } else { y.mul_root(&roots, twiddle(e)) };
                }
            }
        }
        span = sub;
    }
}

/// Radix-p fast analysis: `O(r·p^{r+1})` root multiplications.
pub fn analyze_fast<S: Scalar>(f: &LevelFunction<S>) -> CoefSequence<S> {
    let (p, r) = (f.p, f.level);
    let mut a = f.values.clone();
    dif(p, r, &mut a, false);
    let scale = inverse_size(p, r);
    CoefSequence {
        p,
        level: r,
        coeffs: a.into_iter().map(|c| c.scale(scale)).collect(),
    }
}

/// `f(x) = Σ_{m,n} c_{m,n} χ_{m,n}(x)` at the level of the table.
pub fn synthesize<S: Scalar>(c: &CoefSequence<S>) -> LevelFunction<S> {
    let (p, r) = (c.p, c.level);
    let m = pow(p, r);
    // Monna slot rev(k) holds the coefficient of frequency k
    let mut a: Vec<S> = (0..m)
        .map(|k| c.coeffs[digit_reverse(p, k, r) as usize].clone())
        .collect();
    dif(p, r, &mut a, true);
    let values = (0..m)
        .map(|x| a[digit_reverse(p, x, r) as usize].clone())
        .collect();
    LevelFunction {
        p,
        level: r,
        values,
    }
}
