//! Shells `M(G_n^⊥ ∖ G_{n−1}^⊥)` and the product rule between them.

use std::collections::BTreeSet;

use super::{analyze_fast, synthesize, CoefSequence, LevelFunction, Scalar};
use crate::characters::MonnaIndex;
use crate::error::{Error, Result};

/// Keeps only the coefficients of characters of level exactly `n`.
pub fn shell_project<S: Scalar>(f: &LevelFunction<S>, n: u32) -> LevelFunction<S> {
    let mut c = analyze_fast(f);
    let p = c.p;
    for (j, slot) in c.coeffs.iter_mut().enumerate() {
        if MonnaIndex(j as u64).shell(p) != n {
            *slot = S::zero(p);
        }
    }
    synthesize(&c)
}

/// The shells carrying non-negligible coefficients.
pub fn shells_in_support<S: Scalar>(c: &CoefSequence<S>, tol: f64) -> BTreeSet<u32> {
    c.support(tol).into_iter().map(|idx| idx.n()).collect()
}

/// Checks that `f·g` lies entirely in shell `n` when `f` has level `m < n`
/// and `g` lies in shell `n`.
///
/// Returns `Ok(false)` when the product leaks out of shell `n`. Inputs that
/// do not meet the hypotheses are a precondition error.
pub fn filtration_product_check<S: Scalar>(
    f: &LevelFunction<S>,
    g: &LevelFunction<S>,
    tol: f64,
) -> Result<bool> {
    let f_shells = shells_in_support(&analyze_fast(f), tol);
    let g_shells = shells_in_support(&analyze_fast(g), tol);
    let n = match g_shells.iter().collect::<Vec<_>>().as_slice() {
        [n] => **n,
        _ => {
            return Err(Error::Precondition(format!(
                "second factor must lie in a single shell, found shells {g_shells:?}"
            )))
        }
    };
    let m = f_shells.last().copied().unwrap_or(0);
    if m >= n {
        return Err(Error::Precondition(format!(
            "first factor reaches level {m}, which is not below shell {n}"
        )));
    }
    let product = analyze_fast(&f.mul(g)?);
    Ok(shells_in_support(&product, tol).iter().all(|&s| s == n))
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;
    use num_rational::Rational64;

    use super::*;
    use crate::characters::CharIndexS;
    use crate::cyclotomic::Exact;
    use crate::padic::Coset;

    #[test]
    fn projection_of_even_indicator() {
        let ind = LevelFunction::<Exact>::indicator(&Coset::new(2, 1, 0).unwrap(), 1).unwrap();
        let proj = shell_project(&ind, 1);
        let chi = LevelFunction::<Exact>::character(&CharIndexS::new(2, 1, 1).unwrap(), 1).unwrap();
        let half = chi.values().iter().map(|v| v.scale(&Rational64::new(1, 2))).collect::<Vec<_>>();
        assert_eq!(proj.values(), half.as_slice());
    }

    #[test]
    fn product_examples() {
        let f = LevelFunction::<Exact>::character(&CharIndexS::new(2, 1, 1).unwrap(), 1).unwrap();
        let g = LevelFunction::<Exact>::character(&CharIndexS::new(2, 1, 2).unwrap(), 2).unwrap();
        assert!(filtration_product_check(&f, &g, 0.0).unwrap());
        let c = LevelFunction::constant(3, 0, Complex64::new(2.5, 0.0)).unwrap();
        let g3 = LevelFunction::<Complex64>::character(&CharIndexS::new(3, 4, 2).unwrap(), 2).unwrap();
        assert!(filtration_product_check(&c, &g3, 1e-9).unwrap());
        assert!(matches!(
            filtration_product_check(&g, &f, 0.0),
            Err(Error::Precondition(_))
        ));
    }
}
