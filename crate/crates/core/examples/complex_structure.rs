//! The canonical ε-complex structure and its eigenvectors in ε-complex
//! arithmetic.

use liftcheck::algebra::Epsilon;
use liftcheck::structure::canonical_complex;

fn main() -> liftcheck::Result<()> {
    for eps in Epsilon::BOTH {
        let model = canonical_complex(2, eps, 1)?;
        println!("ε = {eps}: J = {}", model.j);
        for e in &model.report.entries {
            println!("  {} = 0: {}", e.name, e.passed);
        }
        for e in &model.eigen {
            println!(
                "  J {} = ({}) {}: {}  (λ² = ε: {})",
                e.vector, e.eigenvalue, e.vector, e.holds, e.square_holds
            );
        }
        for n in &model.notes {
            println!("  note: {n}");
        }
    }
    Ok(())
}
