//! Axiom checks, metric compatibility and the square-law consistency lint
//! on canonical and conjugated r-contact structures.

use liftcheck::algebra::Epsilon;
use liftcheck::random;
use liftcheck::structure::{
    canonical_structure, check_axioms, check_metric, conjugate_structure, consistency_lint,
    AxiomMode, AxiomSystem, Signature,
};

fn main() -> liftcheck::Result<()> {
    let s = canonical_structure(2, 1, Epsilon::Minus, Signature::Riemannian)?;
    let mut rng = random::rng(random::DEFAULT_SEED);
    let u = random::unimodular(s.chart(), 3, 1, &mut rng);
    let moved = conjugate_structure(&s, &u)?;
    println!("conjugated F:\n  {}", moved.f());

    for (name, st) in [("canonical", &s), ("conjugated", &moved)] {
        let axioms = check_axioms(st, 1);
        let metric = check_metric(st, 1)?;
        println!(
            "{name}: axioms {}, metric {}",
            axioms.passed(),
            metric.passed()
        );
    }

    // ε = +1 only satisfies the consistent square law
    let para = canonical_structure(1, 1, Epsilon::Plus, Signature::Riemannian)?;
    for mode in [AxiomMode::PaperLiteral, AxiomMode::Consistent] {
        let report = check_axioms(&para.clone().with_mode(mode), 1);
        println!("\nε = +1, {mode}: passed = {}", report.passed());
        for e in report.failures() {
            println!("  {} : {}", e.name, e.residual);
        }
    }

    println!();
    for system in AxiomSystem::all() {
        for eps in Epsilon::BOTH {
            println!("{}", consistency_lint(system, eps).summary());
        }
    }
    Ok(())
}
