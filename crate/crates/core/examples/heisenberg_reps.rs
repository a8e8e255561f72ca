//! Irreducible representations of H_1(Z/4): dimensions, a representation
//! matrix, and the homomorphism property.

use vilenkin::heisenberg::{enumerate_dual, heis_mul, rep_matrix, HeisElement};

fn main() -> vilenkin::Result<()> {
    let (p, d, n) = (2, 1, 2);
    let dual = enumerate_dual(p, d, n)?;
    let sum: u64 = dual.iter().map(|z| z.dim() * z.dim()).sum();
    println!("{} classes, sum of dim^2 = {sum} = |H_1(Z/4)|", dual.len());

    let zeta = dual.iter().max_by_key(|z| z.dim()).expect("nonempty");
    let g = HeisElement::new(p, n, vec![1], vec![3], 2)?;
    let h = HeisElement::new(p, n, vec![2], vec![1], 1)?;
    let m = rep_matrix(zeta, &g)?;
    println!("rho_{zeta}(g), dim {}:", m.size());
    for row in 0..m.size() {
        let cells: Vec<String> = (0..m.size())
            .map(|col| m.entry(row, col).map_or("0".into(), |ph| ph.to_string()))
            .collect();
        println!("  {}", cells.join("  "));
    }
    let lhs = rep_matrix(zeta, &heis_mul(&g, &h)?)?;
    let rhs = m.product(&rep_matrix(zeta, &h)?)?;
    println!("rho(gh) == rho(g) rho(h): {}", lhs == rhs);
    println!("rho(g) unitary: {}", m.product(&m.adjoint())?.is_identity());
    Ok(())
}
