//! The four lifted structures on canonical and conjugated models, and the
//! action formulas of the complete Riemannian one.

use liftcheck::algebra::Epsilon;
use liftcheck::lift::Connection;
use liftcheck::random;
use liftcheck::structure::{canonical_structure, conjugate_structure, Signature};
use liftcheck::tensor::TensorField;
use liftcheck::theorem::{verify_action_formulas, verify_theorem, LiftedStructureSpec, TheoremId};

fn main() -> liftcheck::Result<()> {
    let mut rng = random::rng(42);
    for th in TheoremId::ALL {
        let base = canonical_structure(1, 2, Epsilon::Minus, th.signature())?;
        let base = conjugate_structure(&base, &random::unimodular(base.chart(), 2, 1, &mut rng))?;
        let conn = random::connection(base.chart(), 3, 2, &mut rng)?;
        let spec = LiftedStructureSpec::for_theorem(&base, th, Some(&conn))?;
        let v = verify_theorem(&spec, 1)?;
        println!(
            "theorem {th}: {} : {}",
            v.label,
            if v.passed { "PASS" } else { "FAIL" }
        );
    }

    let base = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian)?;
    let spec = LiftedStructureSpec::for_theorem(&base, TheoremId::CompleteRiemannian, None)?;
    // ∂a, ∂b and ∂c = ξ
    let xs: Vec<TensorField> = (0..3)
        .map(|k| TensorField::coordinate_vector(base.chart(), k))
        .collect();
    let report = verify_action_formulas(&spec, &xs, 1)?;
    println!(
        "\naction formulas, all derived rows pass: {}",
        report.passed()
    );
    for e in &report.errata {
        println!("{e}");
    }

    let flat = Connection::flat(base.chart());
    let spec =
        LiftedStructureSpec::for_theorem(&base, TheoremId::HorizontalRiemannian, Some(&flat))?;
    println!(
        "\nflat connection, theorem 4.3: {}",
        verify_theorem(&spec, 1)?.passed
    );
    Ok(())
}
