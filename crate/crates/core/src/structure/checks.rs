use crate::algebra::{int, Poly};
use crate::error::{Error, Result};
use crate::random;
use crate::report::CheckReport;
use crate::tensor::{
    bilinear_contract, endo_apply, endo_compose, metric_pullback, oneform_apply, oneform_compose,
    outer_forms, positive_definite_at, rank_at, TensorField, Valence,
};

use super::{lint, AxiomSystem, RContactStructure, Signature};

const RANK_SAMPLES: usize = 8;

/// Checks the structure against the axiom system selected by its mode and
/// signature.
pub fn check_axioms(s: &RContactStructure, seed: u64) -> CheckReport {
    check_axioms_with(s, AxiomSystem::for_structure(s), seed)
}

/// Residuals of the pairing, kernel and square-law identities of `system`.
/// Each residual is the left side minus the right side.
pub fn check_axioms_with(s: &RContactStructure, system: AxiomSystem, seed: u64) -> CheckReport {
    let mut report = CheckReport::new(format!("{} axioms", system.name()), seed);
    let tag = format!("{} axioms", system.name());
    let chart = s.chart();
    let kappa = system.signature().kappa();
    let r = s.r();

    for a in 0..r {
        for b in 0..r {
            let expected = if a == b { kappa } else { 0 };
            let value = oneform_apply(&s.eta()[a], &s.xi()[b]).expect("validated shapes");
            let c = Poly::from_int(chart.coords(), expected);
            let sign = if kappa < 0 { "+" } else { "−" };
            report.record(
                format!("η^{}(ξ_{}) {sign} δ", a + 1, b + 1),
                tag.as_str(),
                value.map(|p| p - &c),
            );
        }
    }
    for a in 0..r {
        report.record(
            format!("F(ξ_{})", a + 1),
            tag.as_str(),
            endo_apply(s.f(), &s.xi()[a]).expect("validated shapes"),
        );
    }
    for a in 0..r {
        report.record(
            format!("η^{}∘F", a + 1),
            tag.as_str(),
            oneform_compose(&s.eta()[a], s.f()).expect("validated shapes"),
        );
    }

    let sigma = system.square_coefficient(s.epsilon());
    let rhs = TensorField::identity(chart)
        .scale(&s.epsilon().rational())
        .add(&s.reeb_projector().scale(&int(sigma)))
        .expect("same chart");
    let square = endo_compose(s.f(), s.f()).expect("validated shapes");
    report.record(
        format!(
            "F² − ({})",
            system
                .square_law()
                .trim_start_matches("F² = ")
                .trim_start_matches("φ² = ")
        ),
        tag.as_str(),
        square.sub(&rhs).expect("same chart"),
    );

    if system.single_reeb() && r != 1 {
        report.note(format!(
            "{} is stated for one Reeb field; this structure has r = {r}",
            system.name()
        ));
    }
    let lint = lint::consistency_lint(system, s.epsilon());
    if !lint.consistent {
        report.note(lint.summary());
    }

    let pts = random::sample_points(chart, RANK_SAMPLES, seed);
    let rank = rank_at(s.f(), &pts).expect("points on chart");
    let expected = chart.dim() - r;
    report.note(format!(
        "generic rank(F) ≥ {rank} at {RANK_SAMPLES} sample points (expected dim − r = {expected})"
    ));
    report
}

/// Residuals of the metric compatibility `G(FX, FY) = G(X, Y) − κΣη^α(X)η^α(Y)`
/// and, for Riemannian structures, `η^α = G(ξ_α, ·)` plus a sampled
/// positive-definiteness note.
pub fn check_metric(s: &RContactStructure, seed: u64) -> Result<CheckReport> {
    let g = s.metric().ok_or(Error::MissingMetric)?;
    let kappa = s.signature().kappa();
    let mut report = CheckReport::new(format!("{} metric", s.signature()), seed);
    let tag = format!("{} metric compatibility", s.signature());
    let mut etaeta = TensorField::zero(s.chart(), Valence::Bilinear);
    for w in s.eta() {
        etaeta = etaeta.add(&outer_forms(w, w)?)?;
    }
    let residual = metric_pullback(g, s.f())?
        .sub(g)?
        .add(&etaeta.scale(&int(kappa)))?;
    let name = match s.signature() {
        Signature::Riemannian => "G(FX,FY) − G(X,Y) + Σ η(X)η(Y)",
        Signature::Lorentzian => "G(FX,FY) − G(X,Y) − Σ η(X)η(Y)",
    };
    report.record(name, tag.as_str(), residual);
    if s.signature() == Signature::Riemannian {
        for (a, (x, w)) in s.xi().iter().zip(s.eta()).enumerate() {
            report.record(
                format!("η^{} − G(ξ_{},·)", a + 1, a + 1),
                tag.as_str(),
                w.sub(&bilinear_contract(g, x)?)?,
            );
        }
        let pts = random::sample_points(s.chart(), RANK_SAMPLES, seed);
        match positive_definite_at(g, &pts)? {
            None => report.note(format!(
                "G positive definite at all {RANK_SAMPLES} sample points"
            )),
            Some(p) => report.note(format!("G not positive definite at {p}")),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Epsilon;
    use crate::structure::{canonical_structure, AxiomMode};

    #[test]
    fn canonical_models_pass_both_modes_for_contact() {
        for sig in Signature::BOTH {
            for mode in [AxiomMode::PaperLiteral, AxiomMode::Consistent] {
                let s = canonical_structure(1, 1, Epsilon::Minus, sig)
                    .unwrap()
                    .with_mode(mode);
                let report = check_axioms(&s, 3);
                assert!(
                    report.passed(),
                    "{sig} {mode}: {:?}",
                    report.failures().next()
                );
            }
        }
    }

    #[test]
    fn literal_square_law_fails_for_paracontact() {
        let s = canonical_structure(1, 1, Epsilon::Plus, Signature::Riemannian)
            .unwrap()
            .with_mode(AxiomMode::PaperLiteral);
        let report = check_axioms(&s, 3);
        let failures: Vec<_> = report.failures().collect();
        assert_eq!(failures.len(), 1);
        let res = &failures[0].residual;
        // F² − (I + ξ⊗η) = −2 ξ⊗η on the c-block
        let nonzero: Vec<_> = res
            .nonzero_components()
            .map(|(l, p)| (l, p.to_string()))
            .collect();
        assert_eq!(nonzero, vec![("[c,c]".to_string(), "-2".to_string())]);
        assert!(failures[0].witness.is_some());
        assert!(check_axioms(&s.clone().with_mode(AxiomMode::Consistent), 3).passed());
    }

    #[test]
    fn rank_note_reports_dim_minus_r() {
        let s = canonical_structure(2, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
        let report = check_axioms(&s, 3);
        assert!(report
            .notes
            .iter()
            .any(|n| n.contains("≥ 4") && n.contains("= 4")));
    }

    #[test]
    fn metric_checks() {
        for sig in Signature::BOTH {
            let s = canonical_structure(2, 2, Epsilon::Minus, sig).unwrap();
            assert!(check_metric(&s, 1).unwrap().passed());
        }
        let bare = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
        let chart = bare.chart().clone();
        let no_metric = RContactStructure::new(
            &chart,
            bare.f().clone(),
            bare.xi().to_vec(),
            bare.eta().to_vec(),
            Epsilon::Minus,
            Signature::Riemannian,
        )
        .unwrap();
        assert!(matches!(
            check_metric(&no_metric, 1),
            Err(Error::MissingMetric)
        ));
    }

    #[test]
    fn rescaled_eta_breaks_compatibility() {
        let s = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
        let chart = s.chart().clone();
        let g = TensorField::bilinear(
            &chart,
            (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| Poly::from_int(chart.coords(), (i == j) as i64))
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        let mutant = RContactStructure::new(
            &chart,
            s.f().clone(),
            s.xi().to_vec(),
            vec![s.eta()[0].scale(&int(2))],
            Epsilon::Minus,
            Signature::Riemannian,
        )
        .unwrap()
        .with_metric(g)
        .unwrap();
        let report = check_metric(&mutant, 1).unwrap();
        let entry = &report.entries[0];
        assert!(!entry.passed);
        let nonzero: Vec<_> = entry
            .residual
            .nonzero_components()
            .map(|(l, p)| (l, p.to_string()))
            .collect();
        assert_eq!(nonzero, vec![("[c,c]".to_string(), "3".to_string())]);
    }
}
