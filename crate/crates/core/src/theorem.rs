//! Lifted structures `J = F^L + sΣξ^v⊗η^v + tΣξ^L⊗η^L` on the tangent
//! bundle, their verification, the `(s, t)` sign sweep and the action
//! formulas of `J` on lifted vector fields.
//!
//! Squaring `J` and using `F(ξ) = 0`, `η∘F = 0`, `η^v(ξ^v) = 0`,
//! `η^L(ξ^L) = 0` and `η^v(ξ^L) = η^L(ξ^v) = κδ` gives
//!
//! ```text
//! J² = εI + (c + s·t·κ) Σ (ξ^v⊗η^L + ξ^L⊗η^v)
//! ```
//!
//! where `c` is read off `(F^L)² = εI + c Σ(ξ^v⊗η^L + ξ^L⊗η^v)`. So
//! `J² = εI` exactly when `s·t·κ = −c`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{int, Epsilon, Poly};
use crate::error::{Error, Result};
use crate::lift::{
    lift_endo, lift_function, lift_structure, lift_vector, Connection, LiftKind, TangentChart,
};
use crate::report::{find_witness, CheckReport, Erratum, ErratumKind, Witness};
use crate::structure::{RContactStructure, Signature};
use crate::tensor::{endo_apply, endo_compose, oneform_apply, outer, TensorField, Valence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "4.1")]
    CompleteRiemannian,
    #[serde(rename = "4.2")]
    CompleteLorentzian,
    #[serde(rename = "4.3")]
    HorizontalRiemannian,
    #[serde(rename = "4.4")]
    HorizontalLorentzian,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [
        TheoremId::CompleteRiemannian,
        TheoremId::CompleteLorentzian,
        TheoremId::HorizontalRiemannian,
        TheoremId::HorizontalLorentzian,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::CompleteRiemannian => "4.1",
            TheoremId::CompleteLorentzian => "4.2",
            TheoremId::HorizontalRiemannian => "4.3",
            TheoremId::HorizontalLorentzian => "4.4",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.id() == s)
    }

    pub fn kind(self) -> LiftKind {
        match self {
            TheoremId::CompleteRiemannian | TheoremId::CompleteLorentzian => LiftKind::Complete,
            _ => LiftKind::Horizontal,
        }
    }

    /// `(s, t)` as stated.
    pub fn signs(self) -> (i8, i8) {
        match self {
            TheoremId::CompleteRiemannian | TheoremId::HorizontalRiemannian => (1, -1),
            _ => (-1, 1),
        }
    }

    /// The signature named in the hypothesis.
    pub fn signature(self) -> Signature {
        match self {
            TheoremId::CompleteRiemannian | TheoremId::HorizontalRiemannian => {
                Signature::Riemannian
            }
            _ => Signature::Lorentzian,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TheoremId::CompleteRiemannian => "J̃",
            TheoremId::CompleteLorentzian => "Ĵ",
            TheoremId::HorizontalRiemannian => "J̃*",
            TheoremId::HorizontalLorentzian => "Ĵ*",
        }
    }

    pub fn matching(kind: LiftKind, s: i8, t: i8) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|th| th.kind() == kind && th.signs() == (s, t))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

fn check_sign(name: &str, v: i8) -> Result<()> {
    if v == 1 || v == -1 {
        Ok(())
    } else {
        Err(Error::shape(format!("{name} must be +1 or -1, got {v}")))
    }
}

/// A base structure, a lift kind and the sign pair `(s, t)`.
#[derive(Debug, Clone)]
pub struct LiftedStructureSpec<'a> {
    pub base: &'a RContactStructure,
    pub kind: LiftKind,
    pub conn: Option<&'a Connection>,
    pub s: i8,
    pub t: i8,
    pub tangent: TangentChart,
}

impl<'a> LiftedStructureSpec<'a> {
    pub fn new(
        base: &'a RContactStructure,
        kind: LiftKind,
        conn: Option<&'a Connection>,
        s: i8,
        t: i8,
    ) -> Result<Self> {
        check_sign("s", s)?;
        check_sign("t", t)?;
        match (kind, conn) {
            (LiftKind::Vertical, _) => {
                return Err(Error::Unsupported(
                    "lifted structures are built from complete or horizontal lifts".to_string(),
                ))
            }
            (LiftKind::Horizontal, None) => return Err(Error::MissingConnection),
            (LiftKind::Complete, Some(_)) => {
                return Err(Error::shape(
                    "a complete-lift structure takes no connection",
                ))
            }
            _ => {}
        }
        Ok(LiftedStructureSpec {
            base,
            kind,
            conn,
            s,
            t,
            tangent: TangentChart::new(base.chart())?,
        })
    }

    /// The structure of a numbered theorem. The connection is used only
    /// for the horizontal ones.
    pub fn for_theorem(
        base: &'a RContactStructure,
        theorem: TheoremId,
        conn: Option<&'a Connection>,
    ) -> Result<Self> {
        let (s, t) = theorem.signs();
        let conn = match theorem.kind() {
            LiftKind::Horizontal => conn,
            _ => None,
        };
        Self::new(base, theorem.kind(), conn, s, t)
    }

    pub fn with_tangent(mut self, tangent: TangentChart) -> Result<Self> {
        tangent.base().ensure_same(self.base.chart())?;
        self.tangent = tangent;
        Ok(self)
    }

    pub fn theorem(&self) -> Option<TheoremId> {
        TheoremId::matching(self.kind, self.s, self.t)
    }

    pub fn symbol(&self) -> &'static str {
        self.theorem().map_or("J", TheoremId::symbol)
    }

    fn parts(&self) -> Result<Parts> {
        Parts::new(&self.tangent, self.base, self.kind, self.conn)
    }
}

/// Lifts shared by every `(s, t)` cell.
struct Parts {
    f: TensorField,
    xi_v: Vec<TensorField>,
    eta_v: Vec<TensorField>,
    xi_l: Vec<TensorField>,
    eta_l: Vec<TensorField>,
    /// `Σ ξ^v⊗η^v` and `Σ ξ^L⊗η^L`.
    vv: TensorField,
    ll: TensorField,
}

impl Parts {
    fn new(
        tc: &TangentChart,
        base: &RContactStructure,
        kind: LiftKind,
        conn: Option<&Connection>,
    ) -> Result<Self> {
        let v = lift_structure(tc, base, LiftKind::Vertical, None)?;
        let l = lift_structure(tc, base, kind, conn)?;
        let sum = |xs: &[TensorField], ws: &[TensorField]| -> Result<TensorField> {
            let mut acc = TensorField::zero(tc.total(), Valence::Endo);
            for (x, w) in xs.iter().zip(ws) {
                acc = acc.add(&outer(x, w)?)?;
            }
            Ok(acc)
        };
        Ok(Parts {
            vv: sum(&v.xi, &v.eta)?,
            ll: sum(&l.xi, &l.eta)?,
            f: l.f,
            xi_v: v.xi,
            eta_v: v.eta,
            xi_l: l.xi,
            eta_l: l.eta,
        })
    }

    fn assemble(&self, s: i8, t: i8) -> Result<TensorField> {
        self.f
            .add(&self.vv.scale(&int(s.into())))?
            .add(&self.ll.scale(&int(t.into())))
    }

    /// `Σ (ξ^v⊗η^L + ξ^L⊗η^v)`.
    fn mixed(&self, tc: &TangentChart) -> Result<TensorField> {
        let mut acc = TensorField::zero(tc.total(), Valence::Endo);
        for a in 0..self.xi_v.len() {
            acc = acc
                .add(&outer(&self.xi_v[a], &self.eta_l[a])?)?
                .add(&outer(&self.xi_l[a], &self.eta_v[a])?)?;
        }
        Ok(acc)
    }

    /// `κ` if every pairing `η^{αv}(ξ_β^L)` and `η^{αL}(ξ_β^v)` equals `κδ`
    /// for one `κ = ±1`.
    fn kappa(&self) -> Result<Option<i64>> {
        let r = self.xi_v.len();
        let mut kappa = None;
        for a in 0..r {
            for b in 0..r {
                for value in [
                    oneform_apply(&self.eta_v[a], &self.xi_l[b])?,
                    oneform_apply(&self.eta_l[a], &self.xi_v[b])?,
                ] {
                    let c = value.scalar().constant_value();
                    let ok = match (a == b, c) {
                        (false, Some(c)) => c == int(0),
                        (true, Some(c)) if c == int(1) || c == int(-1) => {
                            let k = if c == int(1) { 1 } else { -1 };
                            if *kappa.get_or_insert(k) != k {
                                return Ok(None);
                            }
                            true
                        }
                        _ => false,
                    };
                    if !ok {
                        return Ok(None);
                    }
                }
            }
        }
        Ok(kappa)
    }
}

pub fn build_lifted_j(spec: &LiftedStructureSpec) -> Result<TensorField> {
    spec.parts()?.assemble(spec.s, spec.t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignLedgerRow {
    pub epsilon: Epsilon,
    pub signature: Signature,
    pub s: i8,
    pub t: i8,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct TheoremVerdict {
    pub theorem: Option<TheoremId>,
    /// e.g. `(J̃)² = εI`.
    pub label: String,
    pub j: TensorField,
    /// `J² − εI`.
    pub residual: TensorField,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub row: SignLedgerRow,
}

fn eps_identity(tc: &TangentChart, e: Epsilon) -> TensorField {
    TensorField::identity(tc.total()).scale(&e.rational())
}

fn square_label(symbol: &str) -> String {
    format!("({symbol})² = εI")
}

fn verdict_for(
    spec: &LiftedStructureSpec,
    parts: &Parts,
    s: i8,
    t: i8,
    seed: u64,
) -> Result<TheoremVerdict> {
    let j = parts.assemble(s, t)?;
    let residual = endo_compose(&j, &j)?.sub(&eps_identity(&spec.tangent, spec.base.epsilon()))?;
    let witness = find_witness(&residual, seed);
    let theorem = TheoremId::matching(spec.kind, s, t);
    Ok(TheoremVerdict {
        theorem,
        label: square_label(theorem.map_or("J", TheoremId::symbol)),
        passed: witness.is_none(),
        row: SignLedgerRow {
            epsilon: spec.base.epsilon(),
            signature: spec.base.signature(),
            s,
            t,
            passed: witness.is_none(),
        },
        j,
        residual,
        witness,
    })
}

/// `J² − εI` as an exact residual.
pub fn verify_theorem(spec: &LiftedStructureSpec, seed: u64) -> Result<TheoremVerdict> {
    verdict_for(spec, &spec.parts()?, spec.s, spec.t, seed)
}

/// How `(F^L)²` decomposes over the Reeb terms.
#[derive(Debug, Clone)]
pub struct SquareExpansion {
    /// `(F^L)²`.
    pub square: TensorField,
    /// `(F^L)² = (F²)^L`.
    pub lift_of_square: bool,
    /// `c` with `(F^L)² − εI = c Σ(ξ^v⊗η^L + ξ^L⊗η^v)`, if it exists and
    /// the Reeb sum is nonzero.
    pub c: Option<i64>,
    /// `(F^L)² = εI` exactly.
    pub trivial: bool,
    pub kappa: Option<i64>,
}

pub fn square_expansion(spec: &LiftedStructureSpec) -> Result<SquareExpansion> {
    expansion_from(spec, &spec.parts()?)
}

fn expansion_from(spec: &LiftedStructureSpec, parts: &Parts) -> Result<SquareExpansion> {
    let tc = &spec.tangent;
    let square = endo_compose(&parts.f, &parts.f)?;
    let f2 = endo_compose(spec.base.f(), spec.base.f())?;
    let lift_of_square = lift_endo(tc, &f2, spec.kind, spec.conn)? == square;
    let d = square.sub(&eps_identity(tc, spec.base.epsilon()))?;
    let mixed = parts.mixed(tc)?;
    let c = if mixed.is_zero() {
        None
    } else if d == mixed {
        Some(1)
    } else if d == mixed.neg() {
        Some(-1)
    } else {
        None
    };
    Ok(SquareExpansion {
        trivial: d.is_zero(),
        square,
        lift_of_square,
        c,
        kappa: parts.kappa()?,
    })
}

#[derive(Debug, Clone)]
pub struct LedgerCell {
    pub s: i8,
    pub t: i8,
    pub passed: bool,
    pub predicted: bool,
    pub witness: Option<Witness>,
    pub theorem: Option<TheoremId>,
}

/// Verdicts for all four `(s, t)` and the prediction `s·t·κ = −c`.
#[derive(Debug, Clone)]
pub struct SignLedger {
    pub kind: LiftKind,
    pub epsilon: Epsilon,
    pub signature: Signature,
    pub c: Option<i64>,
    pub kappa: Option<i64>,
    pub cells: Vec<LedgerCell>,
}

impl SignLedger {
    pub fn law_holds(&self) -> bool {
        self.cells.iter().all(|c| c.passed == c.predicted)
    }

    pub fn cell(&self, s: i8, t: i8) -> Option<&LedgerCell> {
        self.cells.iter().find(|c| c.s == s && c.t == t)
    }
}

pub fn sign_sweep(
    base: &RContactStructure,
    kind: LiftKind,
    conn: Option<&Connection>,
    seed: u64,
) -> Result<SignLedger> {
    let spec = LiftedStructureSpec::new(base, kind, conn, 1, 1)?;
    let parts = spec.parts()?;
    let exp = expansion_from(&spec, &parts)?;
    let mut cells = Vec::with_capacity(4);
    for (idx, (s, t)) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)]
        .into_iter()
        .enumerate()
    {
        let v = verdict_for(&spec, &parts, s, t, seed.wrapping_add(idx as u64))?;
        let predicted = if base.r() == 0 {
            exp.trivial
        } else {
            match (exp.c, exp.kappa) {
                (Some(c), Some(k)) => i64::from(s) * i64::from(t) * k == -c,
                _ => false,
            }
        };
        cells.push(LedgerCell {
            s,
            t,
            passed: v.passed,
            predicted,
            witness: v.witness,
            theorem: v.theorem,
        });
    }
    Ok(SignLedger {
        kind,
        epsilon: base.epsilon(),
        signature: base.signature(),
        c: exp.c,
        kappa: exp.kappa,
        cells,
    })
}

/// Coefficients of a printed action display, with the symbol it uses for
/// the lifted Reeb fields.
struct PrintedDisplays {
    symbol: &'static str,
    /// `J X^v = (FX)^v + p·(η(X))^v ξ^L`.
    xv: i64,
    /// `J X^L = (FX)^L + p₁·(η(X))^v ξ^v + p₂·(η(X))^L ξ^L`.
    xl: (i64, i64),
    /// `J ξ^v = a·δ ξ^L = b·ξ^L`, as printed.
    xi_v: (i64, i64),
    /// `J ξ^L = a·δ ξ^v = b·ξ^v`, as printed.
    xi_l: (i64, i64),
}

fn printed_displays(theorem: TheoremId) -> Option<PrintedDisplays> {
    match theorem {
        TheoremId::CompleteRiemannian => Some(PrintedDisplays {
            symbol: "U",
            xv: -1,
            xl: (1, -1),
            xi_v: (-1, 1),
            xi_l: (1, 1),
        }),
        TheoremId::CompleteLorentzian => Some(PrintedDisplays {
            symbol: "ξ",
            xv: 1,
            xl: (-1, 1),
            xi_v: (1, 1),
            xi_l: (1, 1),
        }),
        TheoremId::HorizontalRiemannian => Some(PrintedDisplays {
            symbol: "ξ",
            xv: -1,
            xl: (1, -1),
            xi_v: (1, 1),
            xi_l: (1, 1),
        }),
        TheoremId::HorizontalLorentzian => None,
    }
}

fn signed(k: i64) -> &'static str {
    if k < 0 {
        "−"
    } else {
        "+"
    }
}

fn coeff(k: i64) -> &'static str {
    if k < 0 {
        "−"
    } else {
        ""
    }
}

/// `Σ_α f_α ξ_α` for lifted functions `f_α`.
fn combine(tc: &TangentChart, fs: &[Poly], fields: &[TensorField], k: i64) -> Result<TensorField> {
    let mut acc = TensorField::zero(tc.total(), Valence::Vector);
    for (f, x) in fs.iter().zip(fields) {
        acc = acc.add(&x.mul_function(f)?.scale(&int(k)))?;
    }
    Ok(acc)
}

fn describe(x: &TensorField, base: &RContactStructure, idx: usize) -> (String, Option<usize>) {
    if let Some(b) = base.xi().iter().position(|xi| xi == x) {
        return (format!("ξ_{}", b + 1), Some(b));
    }
    let coords = base.chart().coords();
    for k in 0..coords.len() {
        if *x == TensorField::coordinate_vector(base.chart(), k) {
            return (format!("∂{}", coords[k]), None);
        }
    }
    (format!("X{}", idx + 1), None)
}

/// Residuals of `J` applied to `X^v` and `X^L` against the right sides
/// derived from the lift contracts, for each `X`. When `X` is a Reeb field
/// the residuals of `Jξ^v` and `Jξ^L` are added. If the sign pair is one
/// of the numbered theorems, its printed displays are evaluated too and
/// every disagreement becomes an erratum.
pub fn verify_action_formulas(
    spec: &LiftedStructureSpec,
    xs: &[TensorField],
    seed: u64,
) -> Result<CheckReport> {
    let tc = &spec.tangent;
    let base = spec.base;
    let parts = spec.parts()?;
    let j = parts.assemble(spec.s, spec.t)?;
    let (s, t) = (i64::from(spec.s), i64::from(spec.t));
    let mark = spec.kind.mark();
    let sym = spec.symbol();
    let kappa = base.signature().kappa();
    let printed = spec.theorem().and_then(printed_displays);
    let mut report = CheckReport::new(format!("action formulas of {sym}"), seed);
    let tag = format!("action of {sym}");

    if let Some(p) = &printed {
        if p.symbol != "ξ" {
            report.erratum(Erratum {
                display: format!("{sym}X^v, {sym}X^{mark}"),
                kind: ErratumKind::UndefinedSymbol,
                printed: format!("{0}_α^{mark}, {0}_α^v", p.symbol),
                derived: format!("ξ_α^{mark}, ξ_α^v"),
            });
            report.note(format!(
                "the symbols {0}_α^{mark}, {0}_α^v are read as ξ_α^{mark}, ξ_α^v",
                p.symbol
            ));
        }
        if spec.kind == LiftKind::Horizontal {
            report.note("(η^α(X))^h is read as η^{αh}(X^h), which vanishes");
        }
    }

    for (idx, x) in xs.iter().enumerate() {
        base.chart().ensure_same(x.chart())?;
        x.expect(Valence::Vector)?;
        let (label, reeb) = describe(x, base, idx);
        let fx = endo_apply(base.f(), x)?;
        let xv = lift_vector(tc, x, LiftKind::Vertical, None)?;
        let xl = lift_vector(tc, x, spec.kind, spec.conn)?;
        let fxv = lift_vector(tc, &fx, LiftKind::Vertical, None)?;
        let fxl = lift_vector(tc, &fx, spec.kind, spec.conn)?;
        let eta_x: Vec<TensorField> = base
            .eta()
            .iter()
            .map(|w| oneform_apply(w, x))
            .collect::<Result<_>>()?;
        let eta_x_v: Vec<Poly> = eta_x
            .iter()
            .map(|f| Ok(lift_function(tc, f, LiftKind::Vertical)?.scalar().clone()))
            .collect::<Result<_>>()?;
        // η^L(X^L): (η(X))^c for complete lifts, 0 for horizontal ones
        let eta_x_l: Vec<Poly> = eta_x
            .iter()
            .map(|f| match spec.kind {
                LiftKind::Horizontal => Ok(Poly::zero(tc.total().coords())),
                k => Ok(lift_function(tc, f, k)?.scalar().clone()),
            })
            .collect::<Result<_>>()?;

        let jxv = endo_apply(&j, &xv)?;
        let jxl = endo_apply(&j, &xl)?;
        let derived_v = fxv.add(&combine(tc, &eta_x_v, &parts.xi_l, t)?)?;
        let derived_l = fxl
            .add(&combine(tc, &eta_x_v, &parts.xi_v, s)?)?
            .add(&combine(tc, &eta_x_l, &parts.xi_l, t)?)?;
        report.record(
            format!(
                "{sym}{label}^v − [(F{label})^v {} (η(X))^v ξ^{mark}]",
                signed(t)
            ),
            tag.as_str(),
            jxv.sub(&derived_v)?,
        );
        report.record(
            format!(
                "{sym}{label}^{mark} − [(F{label})^{mark} {} (η(X))^v ξ^v {} η^{mark}(X^{mark}) ξ^{mark}]",
                signed(s),
                signed(t)
            ),
            tag.as_str(),
            jxl.sub(&derived_l)?,
        );

        if let Some(p) = &printed {
            let printed_v = fxv.add(&combine(tc, &eta_x_v, &parts.xi_l, p.xv)?)?;
            if !jxv.sub(&printed_v)?.is_zero() {
                report.erratum(Erratum {
                    display: format!("{sym}X^v"),
                    kind: ErratumKind::SignMismatch,
                    printed: format!("(FX)^v {} (η^α(X))^v {}_α^{mark}", signed(p.xv), p.symbol),
                    derived: format!("(FX)^v {} (η^α(X))^v ξ_α^{mark}", signed(t)),
                });
            }
            let printed_l = fxl
                .add(&combine(tc, &eta_x_v, &parts.xi_v, p.xl.0)?)?
                .add(&combine(tc, &eta_x_l, &parts.xi_l, p.xl.1)?)?;
            if !jxl.sub(&printed_l)?.is_zero() {
                report.erratum(Erratum {
                    display: format!("{sym}X^{mark}"),
                    kind: ErratumKind::SignMismatch,
                    printed: format!(
                        "(FX)^{mark} {} (η^α(X))^v {s2}_α^v {} (η^α(X))^{mark} {s2}_α^{mark}",
                        signed(p.xl.0),
                        signed(p.xl.1),
                        s2 = p.symbol
                    ),
                    derived: format!(
                        "(FX)^{mark} {} (η^α(X))^v ξ_α^v {} η^{{α{mark}}}(X^{mark}) ξ_α^{mark}",
                        signed(s),
                        signed(t)
                    ),
                });
            }
        }

        if let Some(b) = reeb {
            let n = b + 1;
            let xi_v = &parts.xi_v[b];
            let xi_l = &parts.xi_l[b];
            let on_v = endo_apply(&j, xi_v)?;
            let on_l = endo_apply(&j, xi_l)?;
            let dv = t * kappa;
            let dl = s * kappa;
            report.record(
                format!(
                    "{sym}ξ_{n}^v {} ξ_{n}^{mark}",
                    if dv < 0 { "+" } else { "−" }
                ),
                tag.as_str(),
                on_v.sub(&xi_l.scale(&int(dv)))?,
            );
            report.record(
                format!(
                    "{sym}ξ_{n}^{mark} {} ξ_{n}^v",
                    if dl < 0 { "+" } else { "−" }
                ),
                tag.as_str(),
                on_l.sub(&xi_v.scale(&int(dl)))?,
            );
            if let Some(p) = &printed {
                let checks = [
                    ("v", mark, p.xi_v, dv, &on_v, xi_l),
                    (mark, "v", p.xi_l, dl, &on_l, xi_v),
                ];
                for (from, to, (first, second), derived, image, target) in checks {
                    let display = format!("{sym}ξ_α^{from}");
                    let printed_text = format!(
                        "{sym}ξ_α^{from} = {}δ_β^α ξ_α^{to} = {}ξ_β^{to}",
                        coeff(first),
                        coeff(second)
                    );
                    let derived_text = format!("{sym}ξ_β^{from} = {}ξ_β^{to}", coeff(derived));
                    let matches = |k: i64| -> Result<bool> {
                        Ok(image.sub(&target.scale(&int(k)))?.is_zero())
                    };
                    if first != second {
                        report.erratum(Erratum {
                            display,
                            kind: ErratumKind::InternallyInconsistent,
                            printed: printed_text,
                            derived: derived_text,
                        });
                    } else if !matches(first)? {
                        report.erratum(Erratum {
                            display,
                            kind: ErratumKind::SignMismatch,
                            printed: printed_text,
                            derived: derived_text,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}
