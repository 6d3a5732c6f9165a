//! Vertical, complete and horizontal lifts of a contact structure to the
//! tangent bundle, with the interaction tables.

use liftcheck::algebra::Epsilon;
use liftcheck::lift::{lift_endo, verify_lift_interactions, Connection, LiftKind, TangentChart};
use liftcheck::structure::{canonical_structure, Signature};

fn main() -> liftcheck::Result<()> {
    let s = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian)?;
    let tc = TangentChart::new(s.chart())?;
    println!("total space coordinates: {:?}", tc.total().coords());

    let conn = Connection::from_sparse(
        s.chart(),
        vec![
            ((2, 0, 0), s.chart().poly("a")?),
            ((0, 1, 2), s.chart().poly("b*c")?),
        ],
        true,
    )?;
    for kind in [LiftKind::Vertical, LiftKind::Complete, LiftKind::Horizontal] {
        let fl = lift_endo(&tc, s.f(), kind, Some(&conn))?;
        println!("\nF^{} =", kind.mark());
        for (label, p) in fl.nonzero_components() {
            println!("  {label} = {p}");
        }
    }

    let report = verify_lift_interactions(&s, &tc, Some(&conn), 1)?;
    println!();
    for e in &report.entries {
        println!(
            "{:24} {}  [{}]",
            e.name,
            if e.passed { "ok" } else { "FAIL" },
            e.tag
        );
    }
    for n in &report.notes {
        println!("note: {n}");
    }
    Ok(())
}
