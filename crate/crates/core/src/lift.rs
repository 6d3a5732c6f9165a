//! Vertical, complete and horizontal lifts to the tangent bundle.
//!
//! On the induced chart `(x^i, y^i)` of `T(M)` the lifts are defined by
//! their coordinate blocks (base rows first, fiber rows second):
//!
//! | object | vertical | complete | horizontal |
//! |--------|----------|----------|------------|
//! | `f` | `f` | `y^k ∂_k f` | undefined |
//! | `X` | `(0 \| X)` | `(X \| y^k ∂_k X)` | `(X \| −y^k Γ^i_{kj} X^j)` |
//! | `ω` | `(ω \| 0)` | `(y^k ∂_k ω \| ω)` | `(y^k Γ^s_{ki} ω_s \| ω)` |
//! | `F` | `[[0,0],[F,0]]` | `[[F,0],[y·∂F,F]]` | `[[F,0],[B,F]]` |
//!
//! with `B^i_j = y^k (Γ^s_{kj} F^i_s − Γ^i_{ks} F^s_j)`.

use std::fmt;

use serde::Serialize;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::structure::RContactStructure;
use crate::tensor::{
    endo_apply, endo_compose, oneform_apply, oneform_compose, Chart, TensorField, Valence,
};

pub const DEFAULT_FIBER_SUFFIX: &str = "'";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftKind {
    Vertical,
    Complete,
    Horizontal,
}

impl LiftKind {
    /// Superscript used in identity names.
    pub fn mark(self) -> &'static str {
        match self {
            LiftKind::Vertical => "v",
            LiftKind::Complete => "c",
            LiftKind::Horizontal => "h",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LiftKind::Vertical => "vertical",
            LiftKind::Complete => "complete",
            LiftKind::Horizontal => "horizontal",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "vertical" | "v" => Some(LiftKind::Vertical),
            "complete" | "c" => Some(LiftKind::Complete),
            "horizontal" | "h" => Some(LiftKind::Horizontal),
            _ => None,
        }
    }
}

impl fmt::Display for LiftKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The induced chart on `T(M)`: base coordinates followed by fiber
/// coordinates named `<base><suffix>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentChart {
    base: Chart,
    total: Chart,
    suffix: String,
}

impl TangentChart {
    pub fn new(base: &Chart) -> Result<Self> {
        Self::with_suffix(base, DEFAULT_FIBER_SUFFIX)
    }

    pub fn with_suffix(base: &Chart, suffix: &str) -> Result<Self> {
        if suffix.is_empty() {
            return Err(Error::shape("fiber suffix must be non-empty"));
        }
        let mut coords: Vec<String> = base.coords().to_vec();
        for c in base.coords().iter() {
            let fiber = format!("{c}{suffix}");
            if coords.contains(&fiber) {
                return Err(Error::shape(format!(
                    "fiber coordinate `{fiber}` collides with an existing name"
                )));
            }
            coords.push(fiber);
        }
        Ok(TangentChart {
            base: base.clone(),
            total: Chart::new(format!("T{}", base.name()), coords)?,
            suffix: suffix.to_string(),
        })
    }

    pub fn base(&self) -> &Chart {
        &self.base
    }

    pub fn total(&self) -> &Chart {
        &self.total
    }

    pub fn suffix(&self) -> &str {
        &self.suffix
    }

    fn m(&self) -> usize {
        self.base.dim()
    }

    fn up(&self, p: &Poly) -> Poly {
        p.embed(self.total.coords())
            .expect("base coordinates are a prefix of the total chart")
    }

    fn fiber(&self, k: usize) -> Poly {
        Poly::var_index(self.total.coords(), self.m() + k)
    }

    /// `y^k ∂_k p` for a polynomial already on the total chart.
    fn ydiff(&self, p: &Poly) -> Poly {
        let mut acc = Poly::zero(self.total.coords());
        for k in 0..self.m() {
            let d = p.diff_index(k);
            if !d.is_zero() {
                acc = &acc + &(&self.fiber(k) * &d);
            }
        }
        acc
    }

    fn check_base(&self, t: &TensorField, valence: Valence) -> Result<()> {
        self.base.ensure_same(t.chart())?;
        if t.valence() != valence {
            return Err(Error::ValenceMismatch {
                expected: valence.label().to_string(),
                found: t.valence().label().to_string(),
            });
        }
        Ok(())
    }
}

/// Christoffel symbols `Γ^i_{jk}` of an affine connection on a chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    chart: Chart,
    gamma: Vec<Poly>,
    symmetric: bool,
}

impl Connection {
    pub fn flat(chart: &Chart) -> Self {
        let m = chart.dim();
        Connection {
            chart: chart.clone(),
            gamma: vec![Poly::zero(chart.coords()); m * m * m],
            symmetric: true,
        }
    }

    /// Dense symbols, `gamma[(i*m + j)*m + k] = Γ^i_{jk}`. A symmetric
    /// connection must satisfy `Γ^i_{jk} = Γ^i_{kj}`.
    pub fn new(chart: &Chart, gamma: Vec<Poly>, symmetric: bool) -> Result<Self> {
        let m = chart.dim();
        if gamma.len() != m * m * m {
            return Err(Error::shape(format!(
                "connection on a {m}-dimensional chart needs {} symbols",
                m * m * m
            )));
        }
        let gamma = gamma
            .into_iter()
            .map(|p| p.embed(chart.coords()))
            .collect::<Result<Vec<_>>>()?;
        let conn = Connection {
            chart: chart.clone(),
            gamma,
            symmetric,
        };
        if symmetric {
            for i in 0..m {
                for j in 0..m {
                    for k in j + 1..m {
                        if conn.get(i, j, k) != conn.get(i, k, j) {
                            return Err(Error::shape(format!(
                                "symbol Γ[{},{},{}] is not symmetric in its lower indices",
                                chart.coords()[i],
                                chart.coords()[j],
                                chart.coords()[k]
                            )));
                        }
                    }
                }
            }
        }
        Ok(conn)
    }

    /// Sparse symbols; unspecified entries are zero. When `symmetric`, each
    /// entry also sets its lower-index transpose.
    pub fn from_sparse(
        chart: &Chart,
        entries: Vec<((usize, usize, usize), Poly)>,
        symmetric: bool,
    ) -> Result<Self> {
        let m = chart.dim();
        let mut gamma = vec![Poly::zero(chart.coords()); m * m * m];
        let mut set = vec![false; m * m * m];
        for ((i, j, k), p) in entries {
            if i >= m || j >= m || k >= m {
                return Err(Error::shape(format!(
                    "symbol index ({i},{j},{k}) out of range"
                )));
            }
            let p = p.embed(chart.coords())?;
            let mut slots = vec![(i * m + j) * m + k];
            if symmetric && j != k {
                slots.push((i * m + k) * m + j);
            }
            for s in slots {
                if set[s] && gamma[s] != p {
                    return Err(Error::shape(format!(
                        "conflicting values for symbol ({i},{j},{k})"
                    )));
                }
                gamma[s] = p.clone();
                set[s] = true;
            }
        }
        Self::new(chart, gamma, symmetric)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Poly {
        let m = self.chart.dim();
        &self.gamma[(i * m + j) * m + k]
    }

    pub fn is_flat(&self) -> bool {
        self.gamma.iter().all(Poly::is_zero)
    }

    /// Nonzero symbols as `((i, j, k), Γ^i_{jk})`.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Poly)> {
        let m = self.chart.dim();
        self.gamma
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(move |(idx, p)| ((idx / (m * m), (idx / m) % m, idx % m), p))
    }
}

fn need_connection<'a>(tc: &TangentChart, conn: Option<&'a Connection>) -> Result<&'a Connection> {
    let conn = conn.ok_or(Error::MissingConnection)?;
    tc.base.ensure_same(conn.chart())?;
    Ok(conn)
}

/// `Γ^i_{jk}` re-read on the total chart.
fn lifted_gamma(tc: &TangentChart, conn: &Connection) -> Vec<Poly> {
    conn.gamma.iter().map(|p| tc.up(p)).collect()
}

pub fn lift_function(tc: &TangentChart, f: &TensorField, kind: LiftKind) -> Result<TensorField> {
    tc.check_base(f, Valence::Function)?;
    let p = tc.up(f.scalar());
    let out = match kind {
        LiftKind::Vertical => p,
        LiftKind::Complete => tc.ydiff(&p),
        LiftKind::Horizontal => {
            return Err(Error::Unsupported(
                "horizontal lift of functions".to_string(),
            ))
        }
    };
    Ok(TensorField::from_parts(
        tc.total(),
        Valence::Function,
        vec![out],
    ))
}

pub fn lift_vector(
    tc: &TangentChart,
    x: &TensorField,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<TensorField> {
    tc.check_base(x, Valence::Vector)?;
    let m = tc.m();
    let base: Vec<Poly> = x.components().iter().map(|p| tc.up(p)).collect();
    let zero = Poly::zero(tc.total().coords());
    let comps: Vec<Poly> = match kind {
        LiftKind::Vertical => std::iter::repeat_n(zero, m).chain(base).collect(),
        LiftKind::Complete => {
            let fiber: Vec<Poly> = base.iter().map(|p| tc.ydiff(p)).collect();
            base.into_iter().chain(fiber).collect()
        }
        LiftKind::Horizontal => {
            let conn = need_connection(tc, conn)?;
            let g = lifted_gamma(tc, conn);
            let fiber: Vec<Poly> = (0..m)
                .map(|i| {
                    let mut acc = zero.clone();
                    for k in 0..m {
                        for j in 0..m {
                            let gam = &g[(i * m + k) * m + j];
                            if !gam.is_zero() && !base[j].is_zero() {
                                acc = &acc - &(&(&tc.fiber(k) * gam) * &base[j]);
                            }
                        }
                    }
                    acc
                })
                .collect();
            base.into_iter().chain(fiber).collect()
        }
    };
    Ok(TensorField::from_parts(tc.total(), Valence::Vector, comps))
}

pub fn lift_oneform(
    tc: &TangentChart,
    w: &TensorField,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<TensorField> {
    tc.check_base(w, Valence::OneForm)?;
    let m = tc.m();
    let base: Vec<Poly> = w.components().iter().map(|p| tc.up(p)).collect();
    let zero = Poly::zero(tc.total().coords());
    let comps: Vec<Poly> = match kind {
        LiftKind::Vertical => base
            .into_iter()
            .chain(std::iter::repeat_n(zero, m))
            .collect(),
        LiftKind::Complete => {
            let first: Vec<Poly> = base.iter().map(|p| tc.ydiff(p)).collect();
            first.into_iter().chain(base).collect()
        }
        LiftKind::Horizontal => {
            let conn = need_connection(tc, conn)?;
            let g = lifted_gamma(tc, conn);
            let first: Vec<Poly> = (0..m)
                .map(|i| {
                    let mut acc = zero.clone();
                    for k in 0..m {
                        for s in 0..m {
                            let gam = &g[(s * m + k) * m + i];
                            if !gam.is_zero() && !base[s].is_zero() {
                                acc = &acc + &(&(&tc.fiber(k) * gam) * &base[s]);
                            }
                        }
                    }
                    acc
                })
                .collect();
            first.into_iter().chain(base).collect()
        }
    };
    Ok(TensorField::from_parts(tc.total(), Valence::OneForm, comps))
}

/// Assembles `[[tl, 0], [bl, br]]` from m×m row-major blocks.
fn block_lower(tc: &TangentChart, tl: &[Poly], bl: &[Poly], br: &[Poly]) -> TensorField {
    let m = tc.m();
    let n = 2 * m;
    let zero = Poly::zero(tc.total().coords());
    let mut comps = vec![zero; n * n];
    for i in 0..m {
        for j in 0..m {
            comps[i * n + j] = tl[i * m + j].clone();
            comps[(m + i) * n + j] = bl[i * m + j].clone();
            comps[(m + i) * n + m + j] = br[i * m + j].clone();
        }
    }
    TensorField::from_parts(tc.total(), Valence::Endo, comps)
}

pub fn lift_endo(
    tc: &TangentChart,
    f: &TensorField,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<TensorField> {
    tc.check_base(f, Valence::Endo)?;
    let m = tc.m();
    let fu: Vec<Poly> = f.components().iter().map(|p| tc.up(p)).collect();
    let zeros = vec![Poly::zero(tc.total().coords()); m * m];
    Ok(match kind {
        LiftKind::Vertical => block_lower(tc, &zeros, &fu, &zeros),
        LiftKind::Complete => {
            let d: Vec<Poly> = fu.iter().map(|p| tc.ydiff(p)).collect();
            block_lower(tc, &fu, &d, &fu)
        }
        LiftKind::Horizontal => {
            let conn = need_connection(tc, conn)?;
            let g = lifted_gamma(tc, conn);
            let gam = |i: usize, j: usize, k: usize| &g[(i * m + j) * m + k];
            let mut b = zeros.clone();
            for i in 0..m {
                for j in 0..m {
                    let mut acc = Poly::zero(tc.total().coords());
                    for k in 0..m {
                        let mut inner = Poly::zero(tc.total().coords());
                        for s in 0..m {
                            let (g1, f1) = (gam(s, k, j), &fu[i * m + s]);
                            if !g1.is_zero() && !f1.is_zero() {
                                inner = &inner + &(g1 * f1);
                            }
                            let (g2, f2) = (gam(i, k, s), &fu[s * m + j]);
                            if !g2.is_zero() && !f2.is_zero() {
                                inner = &inner - &(g2 * f2);
                            }
                        }
                        if !inner.is_zero() {
                            acc = &acc + &(&tc.fiber(k) * &inner);
                        }
                    }
                    b[i * m + j] = acc;
                }
            }
            block_lower(tc, &fu, &b, &fu)
        }
    })
}

/// Lifts a field of any supported valence.
pub fn lift(
    tc: &TangentChart,
    t: &TensorField,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<TensorField> {
    match t.valence() {
        Valence::Function => lift_function(tc, t, kind),
        Valence::Vector => lift_vector(tc, t, kind, conn),
        Valence::OneForm => lift_oneform(tc, t, kind, conn),
        Valence::Endo => lift_endo(tc, t, kind, conn),
        Valence::Bilinear => Err(Error::Unsupported(
            "lifts of (0,2) tensor fields".to_string(),
        )),
    }
}

/// Lifted structure data for one lift kind, computed once and shared by
/// the interaction tables and the theorem engine.
pub(crate) struct LiftedData {
    pub f: TensorField,
    pub xi: Vec<TensorField>,
    pub eta: Vec<TensorField>,
}

pub(crate) fn lift_structure(
    tc: &TangentChart,
    s: &RContactStructure,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<LiftedData> {
    Ok(LiftedData {
        f: lift_endo(tc, s.f(), kind, conn)?,
        xi: s
            .xi()
            .iter()
            .map(|x| lift_vector(tc, x, kind, conn))
            .collect::<Result<_>>()?,
        eta: s
            .eta()
            .iter()
            .map(|w| lift_oneform(tc, w, kind, conn))
            .collect::<Result<_>>()?,
    })
}

fn delta_residual(tc: &TangentChart, value: TensorField, expected: i64) -> TensorField {
    let c = Poly::from_int(tc.total().coords(), expected);
    value.map(|p| p - &c)
}

/// Residuals of the lift-interaction identities for the structure's
/// Reeb fields `ξ_α` and forms `η^α`: the complete-lift table always, and
/// the horizontal table when a connection is supplied. Pairings are
/// checked against `κ·δ^α_β` with `κ = +1` (Riemannian) or `−1`
/// (Lorentzian).
pub fn verify_lift_interactions(
    s: &RContactStructure,
    tc: &TangentChart,
    conn: Option<&Connection>,
    seed: u64,
) -> Result<CheckReport> {
    tc.base.ensure_same(s.chart())?;
    let kappa = s.signature().kappa();
    let mut report = CheckReport::new("lift interactions", seed);
    let v = lift_structure(tc, s, LiftKind::Vertical, None)?;
    let c = lift_structure(tc, s, LiftKind::Complete, None)?;
    let r = s.r();

    for a in 0..r {
        let n = a + 1;
        report.record(
            format!("F^c(ξ_{n}^v)"),
            "complete: F annihilates Reeb lifts",
            endo_apply(&c.f, &v.xi[a])?,
        );
        report.record(
            format!("F^c(ξ_{n}^c)"),
            "complete: F annihilates Reeb lifts",
            endo_apply(&c.f, &c.xi[a])?,
        );
        report.record(
            format!("η^{n}v∘F^c"),
            "complete: forms annihilate F",
            oneform_compose(&v.eta[a], &c.f)?,
        );
        report.record(
            format!("η^{n}c∘F^v"),
            "complete: forms annihilate F",
            oneform_compose(&c.eta[a], &v.f)?,
        );
        report.record(
            format!("η^{n}c∘F^c"),
            "complete: forms annihilate F",
            oneform_compose(&c.eta[a], &c.f)?,
        );
    }
    for a in 0..r {
        for b in 0..r {
            let (na, nb) = (a + 1, b + 1);
            let delta = if a == b { kappa } else { 0 };
            report.record(
                format!("η^{na}v(ξ_{nb}^v)"),
                "complete: pairing",
                oneform_apply(&v.eta[a], &v.xi[b])?,
            );
            report.record(
                format!("η^{na}v(ξ_{nb}^c) − κδ"),
                "complete: pairing",
                delta_residual(tc, oneform_apply(&v.eta[a], &c.xi[b])?, delta),
            );
            report.record(
                format!("η^{na}c(ξ_{nb}^v) − κδ"),
                "complete: pairing",
                delta_residual(tc, oneform_apply(&c.eta[a], &v.xi[b])?, delta),
            );
            report.record(
                format!("η^{na}c(ξ_{nb}^c)"),
                "complete: pairing",
                oneform_apply(&c.eta[a], &c.xi[b])?,
            );
        }
    }

    if let Some(conn) = conn {
        let h = lift_structure(tc, s, LiftKind::Horizontal, Some(conn))?;
        for a in 0..r {
            let n = a + 1;
            report.record(
                format!("F^h(ξ_{n}^h)"),
                "horizontal: F annihilates Reeb lifts",
                endo_apply(&h.f, &h.xi[a])?,
            );
            report.record(
                format!("F^h(ξ_{n}^v)"),
                "horizontal: F annihilates Reeb lifts",
                endo_apply(&h.f, &v.xi[a])?,
            );
            report.record(
                format!("η^{n}h∘F^h"),
                "horizontal: forms annihilate F",
                oneform_compose(&h.eta[a], &h.f)?,
            );
            report.record(
                format!("η^{n}v∘F^h"),
                "horizontal: forms annihilate F",
                oneform_compose(&v.eta[a], &h.f)?,
            );
        }
        for a in 0..r {
            for b in 0..r {
                let (na, nb) = (a + 1, b + 1);
                let delta = if a == b { kappa } else { 0 };
                report.record(
                    format!("η^{na}h(ξ_{nb}^h)"),
                    "horizontal: pairing",
                    oneform_apply(&h.eta[a], &h.xi[b])?,
                );
                report.record(
                    format!("η^{na}h(ξ_{nb}^v) − κδ"),
                    "horizontal: pairing",
                    delta_residual(tc, oneform_apply(&h.eta[a], &v.xi[b])?, delta),
                );
                report.record(
                    format!("η^{na}v(ξ_{nb}^h) − κδ"),
                    "horizontal: pairing",
                    delta_residual(tc, oneform_apply(&v.eta[a], &h.xi[b])?, delta),
                );
            }
        }
    }
    report.note(format!(
        "pairings compared against κδ with κ = {kappa:+} ({})",
        s.signature()
    ));
    Ok(report)
}

/// `(F^L)²` for a lift kind, used by the theorem engine and tests.
pub fn lifted_square(
    tc: &TangentChart,
    f: &TensorField,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<TensorField> {
    let fl = lift_endo(tc, f, kind, conn)?;
    endo_compose(&fl, &fl)
}
