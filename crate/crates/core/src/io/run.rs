use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Epsilon;
use crate::error::{Error, Result};
use crate::lift::{lift_endo, verify_lift_interactions, Connection, LiftKind, TangentChart};
use crate::report::{CheckReport, Erratum};
use crate::structure::{
    canonical_complex, canonical_structure, check_axioms, check_metric, consistency_lint,
    AxiomMode, AxiomSystem, RContactStructure, Signature,
};
use crate::tensor::{endo_compose, TensorField};
use crate::theorem::{
    sign_sweep, square_expansion, verify_action_formulas, verify_theorem, LiftedStructureSpec,
    TheoremId,
};

use super::definition::{Definition, Task};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    fn of(passed: bool) -> Self {
        if passed {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub name: String,
    pub tag: String,
    /// `"0"` or the nonzero components, `"[c,c] = -2; ..."`.
    pub residual: String,
    pub verdict: Verdict,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section {
    pub title: String,
    pub rows: Vec<Row>,
    pub notes: Vec<String>,
    pub errata: Vec<Erratum>,
    /// Failing rows of an informational section do not fail the report;
    /// `passed` then records agreement with the predicted outcome.
    pub informational: bool,
    pub passed: bool,
    pub error: Option<String>,
}

impl Section {
    fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            rows: Vec::new(),
            notes: Vec::new(),
            errata: Vec::new(),
            informational: false,
            passed: true,
            error: None,
        }
    }

    fn failed(title: impl Into<String>, err: &Error) -> Self {
        Section {
            passed: false,
            error: Some(err.to_string()),
            ..Section::new(title)
        }
    }

    fn from_check(title: impl Into<String>, report: CheckReport) -> Self {
        let mut out = Section::new(title);
        out.passed = report.passed();
        out.rows = report
            .entries
            .iter()
            .map(|e| Row {
                name: e.name.clone(),
                tag: e.tag.clone(),
                residual: residual_text(&e.residual),
                verdict: Verdict::of(e.passed),
                witness: e.witness.as_ref().map(ToString::to_string),
            })
            .collect();
        out.notes = report.notes;
        out.errata = report.errata;
        out
    }

    fn push_row(
        &mut self,
        name: impl Into<String>,
        tag: impl Into<String>,
        residual: &TensorField,
        witness: Option<String>,
    ) {
        let passed = residual.is_zero();
        if !self.informational {
            self.passed &= passed;
        }
        self.rows.push(Row {
            name: name.into(),
            tag: tag.into(),
            residual: residual_text(residual),
            verdict: Verdict::of(passed),
            witness,
        });
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub title: String,
    pub seed: u64,
    pub sections: Vec<Section>,
    pub passed: bool,
}

impl Report {
    fn new(title: impl Into<String>, seed: u64, sections: Vec<Section>) -> Self {
        let passed = sections.iter().all(|s| s.passed);
        Report {
            title: title.into(),
            seed,
            sections,
            passed,
        }
    }

    /// 0 iff every verdict passed.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Human => self.to_human(),
            OutputFormat::Machine => self.to_machine(),
        }
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} (seed {})", self.title, self.seed);
        for sec in &self.sections {
            let _ = write!(out, "\n== {}", sec.title);
            if sec.informational {
                out.push_str(" (informational)");
            }
            out.push_str(" ==\n");
            if let Some(e) = &sec.error {
                let _ = writeln!(out, "  error: {e}");
            }
            let width = sec
                .rows
                .iter()
                .map(|r| r.name.chars().count())
                .max()
                .unwrap_or(0);
            for row in &sec.rows {
                let pad = width - row.name.chars().count();
                let _ = writeln!(
                    out,
                    "  {}{} : {}   [{}]",
                    row.name,
                    " ".repeat(pad),
                    row.verdict.label(),
                    row.tag
                );
                if row.residual != "0" {
                    let _ = writeln!(out, "      residual: {}", row.residual);
                }
                if let Some(w) = &row.witness {
                    let _ = writeln!(out, "      witness: {w}");
                }
            }
            for n in &sec.notes {
                let _ = writeln!(out, "  note: {n}");
            }
            for e in &sec.errata {
                let _ = writeln!(out, "  {e}");
            }
            if sec.informational {
                let _ = writeln!(
                    out,
                    "  agreement with prediction: {}",
                    Verdict::of(sec.passed).label()
                );
            }
        }
        let _ = writeln!(out, "\noverall: {}", Verdict::of(self.passed).label());
        out
    }
}

fn residual_text(t: &TensorField) -> String {
    let parts: Vec<String> = t
        .nonzero_components()
        .map(|(label, p)| {
            if label.is_empty() {
                p.to_string()
            } else {
                format!("{label} = {p}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("; ")
    }
}

fn sign(v: i8) -> &'static str {
    if v < 0 {
        "−1"
    } else {
        "+1"
    }
}

/// The structure, tangent chart and connection a definition provides.
struct Context {
    base: Option<RContactStructure>,
    tangent: TangentChart,
    conn: Option<Connection>,
}

impl Context {
    fn new(def: &Definition, mode: Option<AxiomMode>) -> Result<Self> {
        let base = def.structure()?.map(|s| match mode {
            Some(m) => s.with_mode(m),
            None => s,
        });
        Ok(Context {
            base,
            tangent: def.tangent_chart()?,
            conn: def.connection()?,
        })
    }

    fn base(&self) -> Result<&RContactStructure> {
        self.base
            .as_ref()
            .ok_or_else(|| Error::shape("the definition has no [structure] block"))
    }

    /// The declared connection, or the flat one with a note.
    fn connection(&self, notes: &mut Vec<String>) -> Connection {
        match &self.conn {
            Some(c) => c.clone(),
            None => {
                notes.push("no [connection] block; using the flat connection".to_string());
                Connection::flat(self.tangent.base())
            }
        }
    }

    fn spec<'a>(
        &'a self,
        kind: LiftKind,
        conn: &'a Connection,
        s: i8,
        t: i8,
    ) -> Result<LiftedStructureSpec<'a>> {
        let conn = (kind == LiftKind::Horizontal).then_some(conn);
        LiftedStructureSpec::new(self.base()?, kind, conn, s, t)?.with_tangent(self.tangent.clone())
    }
}

fn check_section(base: &RContactStructure, seed: u64) -> Result<Section> {
    let mut report = check_axioms(base, seed);
    if base.metric().is_some() {
        report.absorb(check_metric(base, seed)?);
    }
    let lint = consistency_lint(AxiomSystem::for_structure(base), base.epsilon());
    report.note(lint.summary());
    Ok(Section::from_check(
        format!(
            "check: {} structure, ε = {}, {} mode",
            base.signature(),
            base.epsilon(),
            base.mode()
        ),
        report,
    ))
}

fn lint_section(base: &RContactStructure) -> Section {
    let mut sec = Section::new(format!("lint: ε = {}", base.epsilon()));
    let mut systems = vec![AxiomSystem::for_structure(base)];
    for sys in AxiomSystem::all() {
        if sys.signature() == base.signature() && !systems.contains(&sys) {
            systems.push(sys);
        }
    }
    for sys in systems {
        let lint = consistency_lint(sys, base.epsilon());
        let agree = lint.consistent == lint.brute_force_consistent;
        sec.passed &= agree;
        sec.rows.push(Row {
            name: format!("{}: symbolic vs canonical model", sys.name()),
            tag: sys.square_law().to_string(),
            residual: if agree {
                "0".into()
            } else {
                "disagreement".into()
            },
            verdict: Verdict::of(agree),
            witness: None,
        });
        sec.notes.push(lint.summary());
        sec.notes.extend(lint.notes);
    }
    sec
}

fn lift_section(ctx: &Context, kind: LiftKind, seed: u64) -> Result<Section> {
    let base = ctx.base()?;
    let mut notes = Vec::new();
    let conn = match kind {
        LiftKind::Horizontal => Some(ctx.connection(&mut notes)),
        _ => None,
    };
    let report = verify_lift_interactions(base, &ctx.tangent, conn.as_ref(), seed)?;
    let prefix = format!("{}:", kind.name());
    let mut sec = Section::from_check(format!("lift: {} lifts", kind.name()), report);
    sec.rows.retain(|r| r.tag.starts_with(&prefix));
    sec.passed = sec.rows.iter().all(|r| r.verdict == Verdict::Pass);
    sec.notes.splice(0..0, notes);

    let f2 = endo_compose(base.f(), base.f())?;
    let fl = lift_endo(&ctx.tangent, base.f(), kind, conn.as_ref())?;
    let residual =
        endo_compose(&fl, &fl)?.sub(&lift_endo(&ctx.tangent, &f2, kind, conn.as_ref())?)?;
    let mark = kind.mark();
    sec.push_row(
        format!("(F^{mark})² − (F²)^{mark}"),
        format!("{}: square of lift", kind.name()),
        &residual,
        None,
    );
    let spec = LiftedStructureSpec::new(base, kind, conn.as_ref(), 1, 1)?
        .with_tangent(ctx.tangent.clone())?;
    expansion_note(&mut sec, &spec)?;
    Ok(sec)
}

fn expansion_note(sec: &mut Section, spec: &LiftedStructureSpec) -> Result<()> {
    let exp = square_expansion(spec)?;
    let mark = spec.kind.mark();
    let text = match (exp.trivial, exp.c) {
        (true, _) => format!("(F^{mark})² = εI"),
        (false, Some(c)) => format!(
            "(F^{mark})² = εI {} Σ(ξ^v⊗η^{mark} + ξ^{mark}⊗η^v)",
            if c < 0 { "−" } else { "+" }
        ),
        (false, None) => format!("(F^{mark})² − εI is not a multiple of the mixed Reeb sum"),
    };
    sec.notes.push(text);
    Ok(())
}

fn theorem_section(
    ctx: &Context,
    kind: LiftKind,
    s: i8,
    t: i8,
    title: String,
    seed: u64,
) -> Result<Section> {
    let base = ctx.base()?;
    let mut notes = Vec::new();
    let conn = match kind {
        LiftKind::Horizontal => ctx.connection(&mut notes),
        _ => Connection::flat(base.chart()),
    };
    let spec = ctx.spec(kind, &conn, s, t)?;
    let verdict = verify_theorem(&spec, seed)?;
    let mut sec = Section::new(title);
    sec.notes = notes;
    if let Some(th) = verdict.theorem {
        if th.signature() != base.signature() {
            sec.notes.push(format!(
                "theorem {th} is stated for {} structures; this one is {}",
                th.signature(),
                base.signature()
            ));
        }
    }
    let tag = match verdict.theorem {
        Some(th) => format!("theorem {th}, (s, t) = ({}, {})", sign(s), sign(t)),
        None => format!("(s, t) = ({}, {})", sign(s), sign(t)),
    };
    sec.push_row(
        verdict.label.clone(),
        tag,
        &verdict.residual,
        verdict.witness.as_ref().map(ToString::to_string),
    );
    Ok(sec)
}

fn verify_section(ctx: &Context, th: TheoremId, seed: u64) -> Result<Section> {
    let base = ctx.base()?;
    let mut notes = Vec::new();
    let conn = match th.kind() {
        LiftKind::Horizontal => ctx.connection(&mut notes),
        _ => Connection::flat(base.chart()),
    };
    let (s, t) = th.signs();
    let spec = ctx.spec(th.kind(), &conn, s, t)?;
    let chart = base.chart();
    let mut xs: Vec<TensorField> = (0..chart.dim())
        .map(|k| TensorField::coordinate_vector(chart, k))
        .collect();
    for x in base.xi() {
        if !xs.contains(x) {
            xs.push(x.clone());
        }
    }
    let report = verify_action_formulas(&spec, &xs, seed)?;
    let mut sec = Section::from_check(format!("verify: action formulas of theorem {th}"), report);
    sec.notes.splice(0..0, notes);
    Ok(sec)
}

fn sweep_section(ctx: &Context, kind: LiftKind, seed: u64) -> Result<Section> {
    let base = ctx.base()?;
    let mut notes = Vec::new();
    let conn = match kind {
        LiftKind::Horizontal => Some(ctx.connection(&mut notes)),
        _ => None,
    };
    let ledger = sign_sweep(base, kind, conn.as_ref(), seed)?;
    let mut sec = Section::new(format!(
        "sweep: {} lifts, {} structure, ε = {}",
        kind.name(),
        base.signature(),
        base.epsilon()
    ));
    sec.informational = true;
    sec.notes = notes;
    for cell in &ledger.cells {
        let name = match cell.theorem {
            Some(th) => format!(
                "(s, t) = ({}, {}) [theorem {th}]",
                sign(cell.s),
                sign(cell.t)
            ),
            None => format!("(s, t) = ({}, {})", sign(cell.s), sign(cell.t)),
        };
        sec.rows.push(Row {
            name,
            tag: format!("predicted {}", if cell.predicted { "PASS" } else { "FAIL" }),
            residual: if cell.passed {
                "0".into()
            } else {
                "nonzero".into()
            },
            verdict: Verdict::of(cell.passed),
            witness: cell.witness.as_ref().map(ToString::to_string),
        });
    }
    let fmt_opt = |v: Option<i64>| v.map_or("undefined".to_string(), |v| format!("{v:+}"));
    sec.notes.push(format!(
        "c = {}, κ = {}; J² = εI predicted iff s·t·κ = −c",
        fmt_opt(ledger.c),
        fmt_opt(ledger.kappa)
    ));
    sec.passed = ledger.law_holds();
    Ok(sec)
}

fn task_title(task: Task) -> String {
    match task {
        Task::Check => "check".into(),
        Task::Lint => "lint".into(),
        Task::Lift(k) => format!("lift: {} lifts", k.name()),
        Task::BuildJ { kind, s, t } => {
            format!(
                "build-j: {} lifts, (s, t) = ({}, {})",
                kind.name(),
                sign(s),
                sign(t)
            )
        }
        Task::Theorem(th) => format!("theorem {th}"),
        Task::Verify(th) => format!("verify: action formulas of theorem {th}"),
        Task::Sweep(k) => format!("sweep: {} lifts", k.name()),
    }
}

fn try_task(ctx: &Context, task: Task, seed: u64) -> Result<Section> {
    match task {
        Task::Check => check_section(ctx.base()?, seed),
        Task::Lint => Ok(lint_section(ctx.base()?)),
        Task::Lift(k) => lift_section(ctx, k, seed),
        Task::BuildJ { kind, s, t } => {
            let mut sec = theorem_section(ctx, kind, s, t, task_title(task), seed)?;
            let conn = ctx
                .conn
                .clone()
                .unwrap_or_else(|| Connection::flat(ctx.tangent.base()));
            let j = crate::theorem::build_lifted_j(&ctx.spec(kind, &conn, s, t)?)?;
            sec.notes.push(format!("J: {}", residual_text(&j)));
            Ok(sec)
        }
        Task::Theorem(th) => {
            let (s, t) = th.signs();
            theorem_section(ctx, th.kind(), s, t, task_title(task), seed)
        }
        Task::Verify(th) => verify_section(ctx, th, seed),
        Task::Sweep(k) => sweep_section(ctx, k, seed),
    }
}

/// Runs one task. Failures to run (missing structure, bad shapes) become a
/// failed section carrying the error.
pub fn run_task(def: &Definition, task: Task, seed: u64, mode: Option<AxiomMode>) -> Section {
    match Context::new(def, mode).and_then(|ctx| try_task(&ctx, task, seed)) {
        Ok(sec) => sec,
        Err(e) => Section::failed(task_title(task), &e),
    }
}

/// Runs the definition's tasks in order.
pub fn run_definition(def: &Definition, seed: u64, mode: Option<AxiomMode>) -> Report {
    let title = format!("definition on chart {}", def.chart.name());
    let sections = match Context::new(def, mode) {
        Err(e) => vec![Section::failed("definition", &e)],
        Ok(ctx) => def
            .tasks
            .iter()
            .map(|&task| {
                try_task(&ctx, task, seed).unwrap_or_else(|e| Section::failed(task_title(task), &e))
            })
            .collect(),
    };
    Report::new(title, seed, sections)
}

fn demo_sections(seed: u64, mode: AxiomMode) -> Result<Vec<Section>> {
    let mut out = Vec::new();
    let riem = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian)?;
    let lor = canonical_structure(1, 1, Epsilon::Minus, Signature::Lorentzian)?;
    let bent = Connection::from_sparse(
        riem.chart(),
        vec![((2, 0, 0), riem.chart().poly("a")?)],
        true,
    )?;

    for base in [&riem, &lor] {
        let def = Definition::from_structure(base, Some(&bent), Vec::new());
        let ctx = Context::new(&def, Some(mode))?;
        let b = ctx.base()?;
        out.push(check_section(b, seed)?);
        out.push(lint_section(b));
        out.push(lift_section(&ctx, LiftKind::Complete, seed)?);
        out.push(lift_section(&ctx, LiftKind::Horizontal, seed)?);
        let theorems: &[TheoremId] = match base.signature() {
            Signature::Riemannian => &[
                TheoremId::CompleteRiemannian,
                TheoremId::HorizontalRiemannian,
            ],
            Signature::Lorentzian => &[
                TheoremId::CompleteLorentzian,
                TheoremId::HorizontalLorentzian,
            ],
        };
        for &th in theorems {
            let (s, t) = th.signs();
            out.push(theorem_section(
                &ctx,
                th.kind(),
                s,
                t,
                format!("theorem {th}"),
                seed,
            )?);
        }
        if base.signature() == Signature::Riemannian {
            let flat_def =
                Definition::from_structure(base, Some(&Connection::flat(base.chart())), Vec::new());
            let flat = Context::new(&flat_def, Some(mode))?;
            let (s, t) = TheoremId::HorizontalRiemannian.signs();
            out.push(theorem_section(
                &flat,
                LiftKind::Horizontal,
                s,
                t,
                "theorem 4.3, flat connection".into(),
                seed,
            )?);
            out.push(verify_section(&ctx, TheoremId::CompleteRiemannian, seed)?);
        }
    }

    for sig in Signature::BOTH {
        for eps in Epsilon::BOTH {
            let base = canonical_structure(1, 1, eps, sig)?.with_mode(AxiomMode::Consistent);
            let def = Definition::from_structure(&base, Some(&bent), Vec::new());
            let ctx = Context::new(&def, None)?;
            out.push(sweep_section(&ctx, LiftKind::Complete, seed)?);
            out.push(sweep_section(&ctx, LiftKind::Horizontal, seed)?);
            if eps == Epsilon::Plus {
                out.push(theorem_section(
                    &ctx,
                    LiftKind::Complete,
                    1,
                    1,
                    format!("paracomplex lift, {sig} structure, (s, t) = (+1, +1)"),
                    seed,
                )?);
            }
        }
    }

    for eps in Epsilon::BOTH {
        let model = canonical_complex(2, eps, seed)?;
        let mut sec = Section::new(format!("ε-complex structure, ε = {eps}"));
        let passed = model.passed();
        let mut check = Section::from_check(String::new(), model.report);
        sec.rows.append(&mut check.rows);
        for e in &model.eigen {
            sec.rows.push(Row {
                name: format!("J({}) − ({})·{}", e.vector, e.eigenvalue, e.vector),
                tag: "ε-complex eigenvector".into(),
                residual: if e.holds {
                    "0".into()
                } else {
                    "nonzero".into()
                },
                verdict: Verdict::of(e.holds && e.square_holds),
                witness: None,
            });
        }
        sec.notes = model.notes;
        sec.passed = passed;
        out.push(sec);
    }
    Ok(out)
}

/// The end-to-end pipeline on built-in canonical models: axioms, metric,
/// lint, lift tables, the four lifted structures, action formulas, sign
/// sweeps and the ε-complex eigencheck. Without a mode override the
/// ε = −1 models are checked against the literal axiom systems.
pub fn demo_report(seed: u64, mode: Option<AxiomMode>) -> Report {
    let sections = demo_sections(seed, mode.unwrap_or(AxiomMode::PaperLiteral))
        .unwrap_or_else(|e| vec![Section::failed("demo", &e)]);
    Report::new(
        "tangent-bundle ε-structures on canonical models",
        seed,
        sections,
    )
}
