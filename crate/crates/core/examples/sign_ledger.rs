//! Every sign pair (s, t) for both lifts, signatures and values of ε,
//! compared with the law `J² = εI ⇔ s·t·κ = −c`.

use liftcheck::algebra::Epsilon;
use liftcheck::lift::{Connection, LiftKind};
use liftcheck::structure::{canonical_structure, AxiomMode, Signature};
use liftcheck::theorem::sign_sweep;

fn main() -> liftcheck::Result<()> {
    for kind in [LiftKind::Complete, LiftKind::Horizontal] {
        for sig in Signature::BOTH {
            for eps in Epsilon::BOTH {
                let base = canonical_structure(1, 1, eps, sig)?.with_mode(AxiomMode::Consistent);
                let flat = Connection::flat(base.chart());
                let conn = (kind == LiftKind::Horizontal).then_some(&flat);
                let ledger = sign_sweep(&base, kind, conn, 3)?;
                print!(
                    "{:10} {:10} ε = {:+}  c = {:?}  |",
                    kind.name(),
                    sig.name(),
                    eps.value(),
                    ledger.c
                );
                for cell in &ledger.cells {
                    print!(
                        " ({:+},{:+}) {}",
                        cell.s,
                        cell.t,
                        if cell.passed { "pass" } else { "FAIL" }
                    );
                }
                println!("  | law holds: {}", ledger.law_holds());
            }
        }
    }
    Ok(())
}
