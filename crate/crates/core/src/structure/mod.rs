//! Almost (Lorentzian) r-contact and r-paracontact structures: containers,
//! axiom and metric checkers, canonical models, conjugation and the
//! sign-consistency lint.

mod checks;
mod complex;
mod lint;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Epsilon, Poly, PolyMatrix};
use crate::error::{Error, Result};
use crate::tensor::{metric_pullback, outer, Chart, TensorField, Valence};

pub use checks::{check_axioms, check_axioms_with, check_metric};
pub use complex::{canonical_complex, ComplexModel, EigenCheck};
pub use lint::{consistency_lint, reeb_residuals, LintReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    Riemannian,
    Lorentzian,
}

impl Signature {
    pub const BOTH: [Signature; 2] = [Signature::Riemannian, Signature::Lorentzian];

    /// Expected value of `η^α(ξ_α)`.
    pub fn kappa(self) -> i64 {
        match self {
            Signature::Riemannian => 1,
            Signature::Lorentzian => -1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Signature::Riemannian => "riemannian",
            Signature::Lorentzian => "lorentzian",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "riemannian" => Some(Signature::Riemannian),
            "lorentzian" => Some(Signature::Lorentzian),
            _ => None,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which square law the checker applies.
///
/// `PaperLiteral` uses `F² = εI ± Σξ⊗η` with a sign fixed by the signature,
/// which admits only one value of ε. `Consistent` uses
/// `F² = ε(I − Σξ⊗η)` (Riemannian) or `F² = ε(I + Σξ⊗η)` (Lorentzian),
/// satisfiable for both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomMode {
    PaperLiteral,
    #[default]
    Consistent,
}

impl AxiomMode {
    pub fn name(self) -> &'static str {
        match self {
            AxiomMode::PaperLiteral => "paper-literal",
            AxiomMode::Consistent => "consistent",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "paper-literal" => Some(AxiomMode::PaperLiteral),
            "consistent" => Some(AxiomMode::Consistent),
            _ => None,
        }
    }
}

impl fmt::Display for AxiomMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The six axiom systems: four verbatim ones and the consistent rewrite
/// for each signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomSystem {
    /// `η(ξ) = 1`, `φ² = εI − ξ⊗η`.
    AlmostContact,
    /// `η(ξ) = −1`, `φ² = εI + ξ⊗η`.
    LorentzianContact,
    /// `η^α(ξ_β) = δ`, `F² = εI + Σξ_α⊗η^α`.
    RContact,
    /// `η^α(ξ_β) = −δ`, `F² = εI − Σξ_α⊗η^α`.
    LorentzianRContact,
    /// `F² = ε(I − κΣξ_α⊗η^α)` with pairing `κδ`.
    Consistent(Signature),
}

impl AxiomSystem {
    pub fn for_structure(s: &RContactStructure) -> Self {
        match (s.mode(), s.signature()) {
            (AxiomMode::Consistent, sig) => AxiomSystem::Consistent(sig),
            (AxiomMode::PaperLiteral, Signature::Riemannian) => AxiomSystem::RContact,
            (AxiomMode::PaperLiteral, Signature::Lorentzian) => AxiomSystem::LorentzianRContact,
        }
    }

    pub fn all() -> [AxiomSystem; 6] {
        [
            AxiomSystem::AlmostContact,
            AxiomSystem::LorentzianContact,
            AxiomSystem::RContact,
            AxiomSystem::LorentzianRContact,
            AxiomSystem::Consistent(Signature::Riemannian),
            AxiomSystem::Consistent(Signature::Lorentzian),
        ]
    }

    pub fn signature(self) -> Signature {
        match self {
            AxiomSystem::AlmostContact | AxiomSystem::RContact => Signature::Riemannian,
            AxiomSystem::LorentzianContact | AxiomSystem::LorentzianRContact => {
                Signature::Lorentzian
            }
            AxiomSystem::Consistent(sig) => sig,
        }
    }

    /// Whether the system is stated for a single Reeb field.
    pub fn single_reeb(self) -> bool {
        matches!(
            self,
            AxiomSystem::AlmostContact | AxiomSystem::LorentzianContact
        )
    }

    /// `σ` in `F² = εI + σ·Σξ_α⊗η^α`.
    pub fn square_coefficient(self, epsilon: Epsilon) -> i64 {
        match self {
            AxiomSystem::AlmostContact | AxiomSystem::LorentzianRContact => -1,
            AxiomSystem::LorentzianContact | AxiomSystem::RContact => 1,
            AxiomSystem::Consistent(sig) => -i64::from(epsilon.value()) * sig.kappa(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AxiomSystem::AlmostContact => "almost contact",
            AxiomSystem::LorentzianContact => "lorentzian almost contact",
            AxiomSystem::RContact => "almost r-contact",
            AxiomSystem::LorentzianRContact => "lorentzian almost r-contact",
            AxiomSystem::Consistent(Signature::Riemannian) => "consistent riemannian",
            AxiomSystem::Consistent(Signature::Lorentzian) => "consistent lorentzian",
        }
    }

    /// The square law as written, e.g. `F² = εI + Σ ξ_α⊗η^α`.
    pub fn square_law(self) -> &'static str {
        match self {
            AxiomSystem::AlmostContact => "φ² = εI − ξ⊗η",
            AxiomSystem::LorentzianContact => "φ² = εI + ξ⊗η",
            AxiomSystem::RContact => "F² = εI + Σ ξ_α⊗η^α",
            AxiomSystem::LorentzianRContact => "F² = εI − Σ ξ_α⊗η^α",
            AxiomSystem::Consistent(Signature::Riemannian) => "F² = ε(I − Σ ξ_α⊗η^α)",
            AxiomSystem::Consistent(Signature::Lorentzian) => "F² = ε(I + Σ ξ_α⊗η^α)",
        }
    }
}

impl fmt::Display for AxiomSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The tuple `(F, ξ_α, η^α, ε)` on a chart of dimension `2n + r`, with a
/// signature, an axiom mode and an optional metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RContactStructure {
    chart: Chart,
    f: TensorField,
    xi: Vec<TensorField>,
    eta: Vec<TensorField>,
    epsilon: Epsilon,
    signature: Signature,
    mode: AxiomMode,
    metric: Option<TensorField>,
    n: usize,
}

/// An almost contact structure is the `r = 1` case.
pub type ContactStructure = RContactStructure;

impl RContactStructure {
    pub fn new(
        chart: &Chart,
        f: TensorField,
        xi: Vec<TensorField>,
        eta: Vec<TensorField>,
        epsilon: Epsilon,
        signature: Signature,
    ) -> Result<Self> {
        chart.ensure_same(f.chart())?;
        f.expect(Valence::Endo)?;
        if xi.len() != eta.len() {
            return Err(Error::shape(format!(
                "{} Reeb fields but {} one-forms",
                xi.len(),
                eta.len()
            )));
        }
        for x in &xi {
            chart.ensure_same(x.chart())?;
            x.expect(Valence::Vector)?;
        }
        for w in &eta {
            chart.ensure_same(w.chart())?;
            w.expect(Valence::OneForm)?;
        }
        let r = xi.len();
        if r > chart.dim() || !(chart.dim() - r).is_multiple_of(2) {
            return Err(Error::shape(format!(
                "chart dimension {} is not 2n + r with r = {r}",
                chart.dim()
            )));
        }
        Ok(RContactStructure {
            chart: chart.clone(),
            n: (chart.dim() - r) / 2,
            f,
            xi,
            eta,
            epsilon,
            signature,
            mode: AxiomMode::default(),
            metric: None,
        })
    }

    /// Single-Reeb-field structure `(φ, ξ, η)`.
    pub fn contact(
        chart: &Chart,
        phi: TensorField,
        xi: TensorField,
        eta: TensorField,
        epsilon: Epsilon,
        signature: Signature,
    ) -> Result<Self> {
        Self::new(chart, phi, vec![xi], vec![eta], epsilon, signature)
    }

    pub fn with_metric(mut self, g: TensorField) -> Result<Self> {
        self.chart.ensure_same(g.chart())?;
        g.expect(Valence::Bilinear)?;
        self.metric = Some(g);
        Ok(self)
    }

    pub fn with_mode(mut self, mode: AxiomMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn f(&self) -> &TensorField {
        &self.f
    }

    pub fn xi(&self) -> &[TensorField] {
        &self.xi
    }

    pub fn eta(&self) -> &[TensorField] {
        &self.eta
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn mode(&self) -> AxiomMode {
        self.mode
    }

    pub fn metric(&self) -> Option<&TensorField> {
        self.metric.as_ref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.xi.len()
    }

    /// `Σ_α ξ_α ⊗ η^α`.
    pub fn reeb_projector(&self) -> TensorField {
        let mut acc = TensorField::zero(&self.chart, Valence::Endo);
        for (x, w) in self.xi.iter().zip(&self.eta) {
            acc = acc
                .add(&outer(x, w).expect("same chart"))
                .expect("same chart");
        }
        acc
    }
}

fn coordinate_names(n: usize, r: usize) -> Vec<String> {
    let block = |prefix: &str, k: usize| -> Vec<String> {
        if k == 1 {
            vec![prefix.to_string()]
        } else {
            (1..=k).map(|i| format!("{prefix}{i}")).collect()
        }
    };
    let mut names = block("a", n);
    names.extend(block("b", n));
    names.extend(block("c", r));
    names
}

/// The minimal model on coordinates `(a_i, b_i, c_α)`:
/// `F(∂a_i) = ∂b_i`, `F(∂b_i) = ε∂a_i`, `F(∂c_α) = 0`, `ξ_α = ∂c_α`,
/// `η^α = ±dc_α` (sign `κ`), and the diagonal metric with `κ` on the
/// c-block. Single blocks use bare names `a, b, c`.
pub fn canonical_structure(
    n: usize,
    r: usize,
    epsilon: Epsilon,
    signature: Signature,
) -> Result<RContactStructure> {
    if n + r == 0 {
        return Err(Error::shape("canonical structure needs n + r ≥ 1"));
    }
    let chart = Chart::new("M", coordinate_names(n, r))?;
    let dim = chart.dim();
    let vars = chart.coords().clone();
    let mut f = vec![Poly::zero(&vars); dim * dim];
    for i in 0..n {
        // column a_i = ∂b_i, column b_i = ε∂a_i
        f[(n + i) * dim + i] = Poly::one(&vars);
        f[i * dim + n + i] = Poly::constant(&vars, epsilon.rational());
    }
    let f = TensorField::new(&chart, Valence::Endo, f)?;
    let kappa = signature.kappa();
    let xi = (0..r)
        .map(|a| TensorField::coordinate_vector(&chart, 2 * n + a))
        .collect();
    let eta = (0..r)
        .map(|a| TensorField::coordinate_form(&chart, 2 * n + a).scale(&crate::algebra::int(kappa)))
        .collect();
    let mut g = vec![Poly::zero(&vars); dim * dim];
    for i in 0..dim {
        let sign = if i >= 2 * n { kappa } else { 1 };
        g[i * dim + i] = Poly::from_int(&vars, sign);
    }
    let g = TensorField::new(&chart, Valence::Bilinear, g)?;
    RContactStructure::new(&chart, f, xi, eta, epsilon, signature)?.with_metric(g)
}

/// Transports a structure along the polynomial automorphism `U`:
/// `F' = U F U⁻¹`, `ξ' = Uξ`, `η' = η∘U⁻¹`, `G' = G(U⁻¹·, U⁻¹·)`.
pub fn conjugate_structure(s: &RContactStructure, u: &PolyMatrix) -> Result<RContactStructure> {
    let chart = s.chart();
    if u.rows() != chart.dim() || !u.is_square() {
        return Err(Error::shape(format!(
            "conjugation matrix is {}x{} on a {}-dimensional chart",
            u.rows(),
            u.cols(),
            chart.dim()
        )));
    }
    let u = PolyMatrix::new(
        u.rows(),
        u.cols(),
        u.entries()
            .iter()
            .map(|p| p.embed(chart.coords()))
            .collect::<Result<_>>()?,
    )?;
    let uinv = u.unimodular_inverse()?;
    let f = u.mul(&s.f().to_matrix()?)?.mul(&uinv)?;
    let f = TensorField::from_matrix(chart, Valence::Endo, &f)?;
    let xi = s
        .xi()
        .iter()
        .map(|x| TensorField::from_matrix(chart, Valence::Vector, &u.mul(&x.to_matrix()?)?))
        .collect::<Result<_>>()?;
    let eta = s
        .eta()
        .iter()
        .map(|w| TensorField::from_matrix(chart, Valence::OneForm, &w.to_matrix()?.mul(&uinv)?))
        .collect::<Result<_>>()?;
    let out =
        RContactStructure::new(chart, f, xi, eta, s.epsilon(), s.signature())?.with_mode(s.mode());
    match s.metric() {
        Some(g) => {
            let uinv_field = TensorField::from_matrix(chart, Valence::Endo, &uinv)?;
            out.with_metric(metric_pullback(g, &uinv_field)?)
        }
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use crate::tensor::{endo_apply, endo_compose, oneform_apply};

    #[test]
    fn canonical_contact_matrix() {
        let s = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
        assert_eq!(s.chart().coords().to_vec(), vec!["a", "b", "c"]);
        assert_eq!(s.f().to_string(), "[[0, -1, 0], [1, 0, 0], [0, 0, 0]]");
        assert_eq!(
            oneform_apply(&s.eta()[0], &s.xi()[0])
                .unwrap()
                .scalar()
                .to_string(),
            "1"
        );
        let l = canonical_structure(1, 1, Epsilon::Minus, Signature::Lorentzian).unwrap();
        assert_eq!(
            oneform_apply(&l.eta()[0], &l.xi()[0])
                .unwrap()
                .scalar()
                .to_string(),
            "-1"
        );
        assert_eq!(l.metric().unwrap().at(2, 2).to_string(), "-1");
    }

    #[test]
    fn canonical_names() {
        let s = canonical_structure(2, 3, Epsilon::Plus, Signature::Riemannian).unwrap();
        assert_eq!(
            s.chart().coords().to_vec(),
            vec!["a1", "a2", "b1", "b2", "c1", "c2", "c3"]
        );
        assert_eq!((s.n(), s.r()), (2, 3));
    }

    #[test]
    fn rejects_bad_dimension() {
        let chart = Chart::new("M", vec!["a".into(), "b".into()]).unwrap();
        let f = TensorField::identity(&chart);
        let xi = TensorField::coordinate_vector(&chart, 0);
        let eta = TensorField::coordinate_form(&chart, 0);
        assert!(RContactStructure::contact(
            &chart,
            f,
            xi,
            eta,
            Epsilon::Minus,
            Signature::Riemannian
        )
        .is_err());
    }

    #[test]
    fn identity_conjugation_is_trivial() {
        let s = canonical_structure(1, 2, Epsilon::Minus, Signature::Lorentzian).unwrap();
        let id = PolyMatrix::identity(s.chart().dim(), s.chart().coords());
        assert_eq!(conjugate_structure(&s, &id).unwrap(), s);
    }

    #[test]
    fn conjugation_preserves_algebraic_relations() {
        let s = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).unwrap();
        let ch = s.chart().clone();
        // shear mixing a into c
        let u = PolyMatrix::shear(3, 2, 0, ch.poly("a^2 + b").unwrap()).unwrap();
        let t = conjugate_structure(&s, &u).unwrap();
        assert_ne!(t.f(), s.f());
        assert_eq!(
            oneform_apply(&t.eta()[0], &t.xi()[0]).unwrap(),
            oneform_apply(&s.eta()[0], &s.xi()[0]).unwrap()
        );
        assert!(endo_apply(t.f(), &t.xi()[0]).unwrap().is_zero());
        let sq = endo_compose(t.f(), t.f()).unwrap();
        let rhs = TensorField::identity(&ch)
            .neg()
            .add(&t.reeb_projector())
            .unwrap();
        assert_eq!(sq, rhs);
    }

    #[test]
    fn random_conjugations_pass_axioms() {
        let s = canonical_structure(1, 2, Epsilon::Plus, Signature::Lorentzian).unwrap();
        let mut rng = random::rng(11);
        for _ in 0..5 {
            let u = random::unimodular(s.chart(), 4, 2, &mut rng);
            let t = conjugate_structure(&s, &u).unwrap();
            assert!(check_axioms(&t, 1).passed());
            assert!(check_metric(&t, 1).unwrap().passed());
        }
    }
}
