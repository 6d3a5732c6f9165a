//! Tensor fields on a chart: composition, contraction and witnesses for
//! nonzero residuals.

use liftcheck::algebra::int;
use liftcheck::report::find_witness;
use liftcheck::tensor::{endo_apply, endo_compose, metric_pullback, Chart, TensorField};

fn main() -> liftcheck::Result<()> {
    let chart = Chart::new("P", vec!["u".into(), "v".into()])?;
    let p = |s: &str| chart.poly(s);

    // a rotation-like endomorphism with polynomial entries
    let f = TensorField::endo(
        &chart,
        vec![vec![p("u*v")?, p("-1")?], vec![p("1")?, p("0")?]],
    )?;
    let x = TensorField::vector(&chart, vec![p("v")?, p("u^2")?])?;
    println!("F = {f}");
    println!("F(X) = {}", endo_apply(&f, &x)?);
    println!("F∘F = {}", endo_compose(&f, &f)?);

    let g = TensorField::bilinear(
        &chart,
        vec![vec![p("1")?, p("0")?], vec![p("0")?, p("u^2 + 1")?]],
    )?;
    println!("G(F·, F·) = {}", metric_pullback(&g, &f)?);

    let residual = endo_compose(&f, &f)?.sub(&TensorField::identity(&chart).scale(&int(-1)))?;
    match find_witness(&residual, 7) {
        None => println!("F² = −I"),
        Some(w) => println!("F² ≠ −I: {w}"),
    }
    Ok(())
}
