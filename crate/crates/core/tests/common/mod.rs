//! Reference computations for the integration tests. None of these call into
//! the library's arithmetic; they work from first principles on small sizes.

#![allow(dead_code)]

use num_complex::Complex64;

pub fn ipow(p: u64, e: u32) -> u64 {
    p.pow(e)
}

/// Reverses the lowest `width` base-p digits of `k`.
pub fn rev(p: u64, mut k: u64, width: u32) -> u64 {
    let mut out = 0;
    for _ in 0..width {
        out = out * p + k % p;
        k /= p;
    }
    out
}

pub fn digit_count(p: u64, mut k: u64) -> u32 {
    let mut n = 0;
    while k > 0 {
        k /= p;
        n += 1;
    }
    n
}

/// The Monna index of `χ_a · χ_b`: Monna values add modulo 1, and the Monna
/// value of `k` is `rev(k)/p^L` for any width `L` covering its digits.
pub fn sigma_oracle(p: u64, a: u64, b: u64) -> u64 {
    let width = digit_count(p, a).max(digit_count(p, b)).max(1);
    let m = ipow(p, width);
    rev(p, (rev(p, a, width) + rev(p, b, width)) % m, width)
}

/// `χ_k(x)` on ℤ/p^level: `e^{2πi rev(k)·x / p^level}`.
pub fn char_value(p: u64, level: u32, k: u64, x: u64) -> Complex64 {
    let m = ipow(p, level);
    let e = (rev(p, k, level) as u128 * x as u128 % m as u128) as f64;
    Complex64::from_polar(1.0, std::f64::consts::TAU * e / m as f64)
}

/// Shell of Monna index `k`: its number of base-p digits.
pub fn shell(p: u64, k: u64) -> u32 {
    digit_count(p, k)
}

/// 3×3 unipotent integer matrices modulo `m`, the defining model of H_1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mat3 {
    pub a: [[u64; 3]; 3],
    pub m: u64,
}

impl Mat3 {
    pub fn heis(x: u64, y: u64, z: u64, m: u64) -> Self {
        Self {
            a: [[1, x % m, z % m], [0, 1, y % m], [0, 0, 1]],
            m,
        }
    }

    pub fn identity(m: u64) -> Self {
        Self::heis(0, 0, 0, m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut a = [[0u64; 3]; 3];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).map(|k| self.a[i][k] * o.a[k][j]).sum::<u64>() % self.m;
            }
        }
        Self { a, m: self.m }
    }

    fn add_scaled(&self, o: &Self, sign: i64) -> Self {
        let m = self.m as i64;
        let mut a = [[0u64; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                a[i][j] = (self.a[i][j] as i64 + sign * o.a[i][j] as i64).rem_euclid(m) as u64;
            }
        }
        Self { a, m: self.m }
    }

    /// `(I + N)^{-1} = I − N + N²` since `N³ = 0`.
    pub fn inverse(&self) -> Self {
        let id = Self::identity(self.m);
        let n = self.add_scaled(&id, -1);
        id.add_scaled(&n, -1).add_scaled(&n.mul(&n), 1)
    }

    /// `(x, y, z)` read off the matrix.
    pub fn coords(&self) -> (u64, u64, u64) {
        (self.a[0][1], self.a[1][2], self.a[0][2])
    }

    /// Whether every off-diagonal entry vanishes modulo `q`.
    pub fn congruent_to_identity(&self, q: u64) -> bool {
        let (x, y, z) = self.coords();
        x % q == 0 && y % q == 0 && z % q == 0
    }
}

/// Multiplicity of the trivial character in `ρ^{⊗t}` for a sum of characters
/// of ℤ/M given by their frequencies, by dynamic programming over the
/// frequency sum of tensor words.
pub fn cyclic_trivial_count(modulus: u64, freqs: &[u64], t: u32) -> u128 {
    let mut ways = vec![0u128; modulus as usize];
    ways[0] = 1;
    for _ in 0..t {
        let mut next = vec![0u128; modulus as usize];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for &f in freqs {
                next[((s as u64 + f) % modulus) as usize] += w;
            }
        }
        ways = next;
    }
    ways[0]
}

/// The irreducibles of H_1(ℤ/2): four characters `λ_{a,b}` and one
/// two-dimensional `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum H2Irrep {
    Linear(u8, u8),
    Sigma,
}

/// Multiplicity of the trivial representation in `ρ^{⊗t}` for H_1(ℤ/2) using
/// its fusion rules: `λ⊗λ' = λ_{a+a',b+b'}`, `λ⊗σ = σ`, `σ⊗σ = ⊕ λ`.
pub fn heis2_trivial_count(parts: &[(H2Irrep, u32)], t: u32) -> u128 {
    // state: multiplicities of λ_{00}, λ_{01}, λ_{10}, λ_{11}, σ
    let idx = |a: u8, b: u8| (2 * a + b) as usize;
    let mut v = [0u128; 5];
    v[0] = 1;
    for _ in 0..t {
        let mut next = [0u128; 5];
        for (part, mult) in parts {
            let mult = *mult as u128;
            for a in 0..2u8 {
                for b in 0..2u8 {
                    let w = v[idx(a, b)];
                    if w == 0 {
                        continue;
                    }
                    match part {
                        H2Irrep::Linear(c, d) => next[idx(a ^ c, b ^ d)] += w * mult,
                        H2Irrep::Sigma => next[4] += w * mult,
                    }
                }
            }
            if v[4] > 0 {
                match part {
                    H2Irrep::Linear(..) => next[4] += v[4] * mult,
                    H2Irrep::Sigma => {
                        for slot in next.iter_mut().take(4) {
                            *slot += v[4] * mult;
                        }
                    }
                }
            }
        }
        v = next;
    }
    v[0]
}

pub fn pow_mod(mut a: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1u64;
    a %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * a as u128 % q as u128) as u64;
        }
        a = (a as u128 * a as u128 % q as u128) as u64;
        e >>= 1;
    }
    r
}

/// `dim(V + V² + … + V^k)` for `k = 1..=k_max`, with integer-valued
/// generators, by exact rank modulo a large prime.
pub fn gk_dims_oracle(gens: &[Vec<u64>], k_max: usize) -> Vec<usize> {
    const Q: u64 = (1 << 61) - 1;
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (*x as u128 * *y as u128 % Q as u128) as u64).collect()
    };
    let mut all: Vec<Vec<u64>> = Vec::new();
    let mut words: Vec<Vec<u64>> = gens.iter().map(|g| g.iter().map(|v| v % Q).collect()).collect();
    let mut dims = Vec::new();
    for k in 1..=k_max {
        if k > 1 {
            // keep a basis of V^{k−1} before multiplying out
            let basis = independent_rows(&words, Q);
            words = basis.iter().flat_map(|w| gens.iter().map(move |g| mul(w, g))).collect();
        }
        all.extend(words.iter().cloned());
        all = independent_rows(&all, Q);
        dims.push(all.len());
    }
    dims
}

/// A maximal linearly independent subset of `rows` modulo `q`, in order.
fn independent_rows(rows: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let mut kept = Vec::new();
    // reduced copies with their pivot columns
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    for r in rows {
        let mut v: Vec<u64> = r.iter().map(|x| x % q).collect();
        for (c, e) in &echelon {
            let f = v[*c];
            if f != 0 {
                for (a, b) in v.iter_mut().zip(e) {
                    *a = (*a + q - (f as u128 * *b as u128 % q as u128) as u64) % q;
                }
            }
        }
        if let Some(c) = v.iter().position(|&x| x != 0) {
            let inv = pow_mod(v[c], q - 2, q);
            for a in v.iter_mut() {
                *a = (*a as u128 * inv as u128 % q as u128) as u64;
            }
            echelon.push((c, v));
            kept.push(r.clone());
        }
    }
    kept
}
