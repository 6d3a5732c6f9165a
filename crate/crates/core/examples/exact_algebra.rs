//! Exact rationals, polynomials, unimodular matrices and ε-complex numbers.
//!
//! ```text
//! cargo run --example exact_algebra
//! ```

use std::sync::Arc;

use liftcheck::algebra::{rat, EpsComplex, Epsilon, Poly, PolyMatrix, Vars};

fn main() -> liftcheck::Result<()> {
    let vars: Vars = Arc::from(vec!["x".to_string(), "y".to_string()]);
    let p = Poly::parse("(x + 1/2*y)^2 - x*y", &vars)?;
    let q = Poly::parse("3*x - y^2", &vars)?;
    println!("p = {p}");
    println!("p * q = {}", &p * &q);
    println!("dp/dx = {}", p.diff("x"));
    println!("p(1, 2) = {}", p.eval_slice(&[rat(1, 1), rat(2, 1)]));

    // a product of two shears has determinant 1 and a polynomial inverse
    let s1 = PolyMatrix::shear(2, 0, 1, Poly::parse("x^2", &vars)?)?;
    let s2 = PolyMatrix::shear(2, 1, 0, Poly::parse("y - 1", &vars)?)?;
    let u = s1.mul(&s2)?;
    let inv = u.unimodular_inverse()?;
    println!("\nU = {u}");
    println!("det U = {}", u.det()?);
    println!("U^-1 = {inv}");
    println!("U U^-1 = {}", u.mul(&inv)?);

    for eps in Epsilon::BOTH {
        let z = EpsComplex::new(rat(1, 1), rat(2, 1), eps);
        let i = EpsComplex::i(eps);
        println!(
            "\nε = {eps}: i² = {}, z = {z}, z·z̄ = {}",
            i.mul(&i)?,
            z.mul(&z.conj())?
        );
    }
    Ok(())
}
