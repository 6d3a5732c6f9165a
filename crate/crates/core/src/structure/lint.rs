use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{int, Epsilon, Poly, Vars};
use crate::tensor::{endo_apply, endo_compose, TensorField};

use super::{canonical_structure, AxiomSystem, Signature};

/// Outcome of applying a square law to the Reeb fields.
///
/// From `F(ξ_β) = 0` the left side `F²ξ_β` vanishes, while the right side
/// `εI + σΣξ_α⊗η^α` sends `ξ_β` to `(ε + σκ)ξ_β`. The law is satisfiable
/// only for the values of ε that make this coefficient zero.
#[derive(Debug, Clone, Serialize)]
pub struct LintReport {
    pub system: AxiomSystem,
    pub epsilon: Epsilon,
    /// `ε + σκ` as a polynomial in the symbol `eps`.
    pub coefficient: String,
    pub forced: Vec<Epsilon>,
    pub consistent: bool,
    /// Whether every `(F² − RHS)ξ_β` vanished on the canonical model.
    pub brute_force_consistent: bool,
    pub notes: Vec<String>,
}

impl LintReport {
    pub fn summary(&self) -> String {
        let forced = match self.forced.as_slice() {
            [] => "no value of ε".to_string(),
            [e] => format!("ε = {e}"),
            _ => "either value of ε".to_string(),
        };
        let verdict = if self.consistent {
            "consistent"
        } else {
            "inconsistent"
        };
        format!(
            "{} with ε = {}: applying the square law to ξ_β gives ({})ξ_β = 0, which allows {forced}; {verdict}",
            self.system, self.epsilon, self.coefficient
        )
    }
}

fn eps_vars() -> Vars {
    Arc::from(vec!["eps".to_string()])
}

/// `σ` as a polynomial in `eps`.
fn sigma_poly(system: AxiomSystem, vars: &Vars) -> Poly {
    match system {
        AxiomSystem::Consistent(sig) => {
            &Poly::var_index(vars, 0) * &Poly::from_int(vars, -sig.kappa())
        }
        other => Poly::from_int(vars, other.square_coefficient(Epsilon::Minus)),
    }
}

/// `(F² − εI − σΣξ⊗η)ξ_β` for every β on a canonical model of the system's
/// signature.
pub fn reeb_residuals(system: AxiomSystem, epsilon: Epsilon, r: usize) -> Vec<TensorField> {
    let s = canonical_structure(1, r, epsilon, system.signature()).expect("valid sizes");
    let sigma = system.square_coefficient(epsilon);
    let rhs = TensorField::identity(s.chart())
        .scale(&epsilon.rational())
        .add(&s.reeb_projector().scale(&int(sigma)))
        .expect("same chart");
    let diff = endo_compose(s.f(), s.f())
        .expect("same chart")
        .sub(&rhs)
        .expect("same chart");
    s.xi()
        .iter()
        .map(|x| endo_apply(&diff, x).expect("same chart"))
        .collect()
}

/// Reports which ε the system's square law admits, cross-checked against
/// the canonical model.
pub fn consistency_lint(system: AxiomSystem, epsilon: Epsilon) -> LintReport {
    let vars = eps_vars();
    let eps = Poly::var_index(&vars, 0);
    let kappa = Poly::from_int(&vars, system.signature().kappa());
    let coefficient = &eps + &(&sigma_poly(system, &vars) * &kappa);
    let forced: Vec<Epsilon> = Epsilon::BOTH
        .into_iter()
        .filter(|e| coefficient.eval_slice(&[e.rational()]) == int(0))
        .collect();
    let consistent = forced.contains(&epsilon);
    let r = if system.single_reeb() { 1 } else { 2 };
    let brute_force_consistent = reeb_residuals(system, epsilon, r)
        .iter()
        .all(TensorField::is_zero);

    let mut notes = Vec::new();
    if !consistent {
        let rewrite = match system.signature() {
            Signature::Riemannian => AxiomSystem::Consistent(Signature::Riemannian),
            Signature::Lorentzian => AxiomSystem::Consistent(Signature::Lorentzian),
        };
        notes.push(format!(
            "`{}` admits no model with ε = {epsilon}; `{}` holds for both values",
            system.square_law(),
            rewrite.square_law()
        ));
    }
    if consistent != brute_force_consistent {
        notes.push("symbolic and canonical-model conclusions disagree".to_string());
    }
    LintReport {
        system,
        epsilon,
        coefficient: coefficient.to_string(),
        forced,
        consistent,
        brute_force_consistent,
        notes,
    }
}
