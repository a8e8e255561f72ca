//! Exact harmonic analysis on the p-adic integers ℤ_p and the p-adic
//! Heisenberg groups H_d(ℤ_p).
//!
//! Everything works at a finite level: a function on ℤ_p that is constant on
//! cosets of `p^r ℤ_p` is a vector of `p^r` values, and a statement about the
//! profinite group is checked on the finite quotient where it lives. Values
//! that are sums of p-power roots of unity are kept exact through
//! [`cyclotomic::Cyclotomic`].
//!
//! - [`padic`]: truncated p-adic integers, the Monna map, ℚ_p/ℤ_p and phases.
//! - [`characters`]: the dual of ℤ_p and the σ digit calculus.
//! - [`fourier`]: level-r transforms, coset indicators and local bases.
//! - [`heisenberg`]: group law, unitary dual, matrix coefficients, K₀ generators.
//! - [`dimensions`]: return probabilities, Dirac truncations, growth and
//!   commuting-injection checks.
//! - [`cli`]: the batch front end behind the `vilenkin` binary.

pub mod characters;
pub mod cli;
pub mod cyclotomic;
pub mod dimensions;
pub mod error;
pub mod fourier;
pub mod heisenberg;
pub mod padic;

pub use error::{Error, Result};
