//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};

use liftcheck::algebra::{int, rat, EpsComplex, Epsilon, Rational};
use liftcheck::io::{emit_definition, parse_definition, run_definition, Task};
use liftcheck::lift::{
    lift_endo, lift_oneform, lift_vector, verify_lift_interactions, Connection, LiftKind,
    TangentChart,
};
use liftcheck::random;
use liftcheck::report::{ErratumKind, Witness};
use liftcheck::structure::{
    canonical_complex, canonical_structure, check_metric, conjugate_structure, consistency_lint,
    AxiomMode, AxiomSystem, RContactStructure, Signature,
};
use liftcheck::tensor::{
    endo_apply, endo_compose, endo_transpose, oneform_apply, outer, outer_forms, TensorField,
};
use liftcheck::theorem::{
    build_lifted_j, sign_sweep, square_expansion, verify_action_formulas, LiftedStructureSpec,
    TheoremId,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn manifest() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// `(n, r)` with `n, r ≤ 3` and at least one Reeb field.
fn sizes() -> impl Iterator<Item = (usize, usize)> {
    (0..=3).flat_map(|n| (1..=3).map(move |r| (n, r)))
}

fn models(
    n: usize,
    r: usize,
    eps: Epsilon,
    sig: Signature,
    conjugations: usize,
    seed: u64,
) -> Result<Vec<RContactStructure>, String> {
    let base = canonical_structure(n, r, eps, sig).map_err(e)?;
    let mut rng = random::rng(seed);
    let mut out = vec![base.clone()];
    for _ in 0..conjugations {
        let u = random::unimodular(base.chart(), 3, 1, &mut rng);
        out.push(conjugate_structure(&base, &u).map_err(e)?);
    }
    Ok(out)
}

/// `Σ_α x_α ⊗ w_α`.
fn sum_outer(
    xs: &[TensorField],
    ws: &[TensorField],
    chart: &TangentChart,
) -> Result<TensorField, String> {
    let mut acc = TensorField::zero(chart.total(), liftcheck::tensor::Valence::Endo);
    for (x, w) in xs.iter().zip(ws) {
        acc = acc.add(&outer(x, w).map_err(e)?).map_err(e)?;
    }
    Ok(acc)
}

struct Lifted {
    f: TensorField,
    xi_v: Vec<TensorField>,
    xi_l: Vec<TensorField>,
    eta_v: Vec<TensorField>,
    eta_l: Vec<TensorField>,
}

fn lifted(
    s: &RContactStructure,
    tc: &TangentChart,
    kind: LiftKind,
    conn: Option<&Connection>,
) -> Result<Lifted, String> {
    let vecs = |k: LiftKind| -> Result<Vec<TensorField>, String> {
        s.xi()
            .iter()
            .map(|x| lift_vector(tc, x, k, conn).map_err(e))
            .collect()
    };
    let forms = |k: LiftKind| -> Result<Vec<TensorField>, String> {
        s.eta()
            .iter()
            .map(|w| lift_oneform(tc, w, k, conn).map_err(e))
            .collect()
    };
    Ok(Lifted {
        f: lift_endo(tc, s.f(), kind, conn).map_err(e)?,
        xi_v: vecs(LiftKind::Vertical)?,
        xi_l: vecs(kind)?,
        eta_v: forms(LiftKind::Vertical)?,
        eta_l: forms(kind)?,
    })
}

/// `J = F^L + sΣξ^v⊗η^v + tΣξ^L⊗η^L`, assembled here from the lifts.
fn assemble(l: &Lifted, tc: &TangentChart, s: i64, t: i64) -> Result<TensorField, String> {
    let vv = sum_outer(&l.xi_v, &l.eta_v, tc)?.scale(&int(s));
    let ll = sum_outer(&l.xi_l, &l.eta_l, tc)?.scale(&int(t));
    l.f.add(&vv).and_then(|j| j.add(&ll)).map_err(e)
}

fn eps_identity(tc: &TangentChart, eps: Epsilon) -> TensorField {
    TensorField::identity(tc.total()).scale(&eps.rational())
}

fn squares_to_eps(j: &TensorField, tc: &TangentChart, eps: Epsilon) -> Result<bool, String> {
    Ok(endo_compose(j, j)
        .map_err(e)?
        .sub(&eps_identity(tc, eps))
        .map_err(e)?
        .is_zero())
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    let mut seed = 100;
    for sig in Signature::BOTH {
        let kappa = sig.kappa();
        for (n, r) in sizes() {
            seed += 1;
            for s in models(n, r, Epsilon::Minus, sig, 20, seed)? {
                let tc = TangentChart::new(s.chart()).map_err(e)?;
                let conn =
                    random::connection(s.chart(), 2, 1, &mut random::rng(seed)).map_err(e)?;
                let report = verify_lift_interactions(&s, &tc, Some(&conn), seed).map_err(e)?;
                if let Some(f) = report.failures().next() {
                    return Err(format!(
                        "{sig} n={n} r={r}: {} [{}] residual {}",
                        f.name, f.tag, f.residual
                    ));
                }
                ensure!(
                    report
                        .entries
                        .iter()
                        .any(|x| x.tag.starts_with("horizontal")),
                    "horizontal table missing"
                );
                checked += report.entries.len();
            }
            // pairings evaluated directly: η^v(ξ^L) = η^L(ξ^v) = κδ
            let s = canonical_structure(n, r, Epsilon::Minus, sig).map_err(e)?;
            let tc = TangentChart::new(s.chart()).map_err(e)?;
            let flat = Connection::flat(s.chart());
            for kind in [LiftKind::Complete, LiftKind::Horizontal] {
                let l = lifted(&s, &tc, kind, Some(&flat))?;
                for a in 0..r {
                    for b in 0..r {
                        let expected = if a == b { kappa } else { 0 };
                        for value in [
                            oneform_apply(&l.eta_v[a], &l.xi_l[b]).map_err(e)?,
                            oneform_apply(&l.eta_l[a], &l.xi_v[b]).map_err(e)?,
                        ] {
                            ensure!(
                                value.scalar().constant_value() == Some(int(expected)),
                                "{sig} {kind} pairing ({a},{b}) = {}, expected {expected}",
                                value.scalar()
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(format!(
        "{checked} identities on 24 model families × 21 models"
    ))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for sig in Signature::BOTH {
        // displayed expansions: +Σ(...) riemannian, the distributed minus lorentzian
        let c = match sig {
            Signature::Riemannian => 1,
            Signature::Lorentzian => -1,
        };
        for (n, r) in sizes() {
            let s = canonical_structure(n, r, Epsilon::Minus, sig).map_err(e)?;
            let tc = TangentChart::new(s.chart()).map_err(e)?;
            let l = lifted(&s, &tc, LiftKind::Complete, None)?;
            let square = endo_compose(&l.f, &l.f).map_err(e)?;
            let f2 = endo_compose(s.f(), s.f()).map_err(e)?;
            ensure!(
                square == lift_endo(&tc, &f2, LiftKind::Complete, None).map_err(e)?,
                "(F^c)² ≠ (F²)^c for {sig} n={n} r={r}"
            );
            let mixed = sum_outer(&l.xi_v, &l.eta_l, &tc)?
                .add(&sum_outer(&l.xi_l, &l.eta_v, &tc)?)
                .map_err(e)?;
            let expected = eps_identity(&tc, Epsilon::Minus)
                .add(&mixed.scale(&int(c)))
                .map_err(e)?;
            ensure!(
                square == expected,
                "{sig} n={n} r={r}: (F^c)² ≠ εI {:+}Σ(ξ^v⊗η^c + ξ^c⊗η^v)",
                c
            );
            let spec = LiftedStructureSpec::new(&s, LiftKind::Complete, None, 1, 1).map_err(e)?;
            ensure!(
                square_expansion(&spec).map_err(e)?.c == Some(c),
                "engine c disagrees for {sig}"
            );
            count += 1;
        }
    }
    Ok(format!(
        "{count} canonical models, c = +1 riemannian, −1 lorentzian"
    ))
}

fn check_theorem(
    th: TheoremId,
    s: &RContactStructure,
    conn: Option<&Connection>,
) -> Result<(), String> {
    let spec = LiftedStructureSpec::for_theorem(s, th, conn).map_err(e)?;
    let (st, tt) = th.signs();
    let l = lifted(s, &spec.tangent, th.kind(), spec.conn)?;
    let j = assemble(&l, &spec.tangent, st.into(), tt.into())?;
    ensure!(
        j == build_lifted_j(&spec).map_err(e)?,
        "engine J differs from the assembled J"
    );
    ensure!(
        squares_to_eps(&j, &spec.tangent, s.epsilon())?,
        "theorem {th}: J² ≠ εI"
    );
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    let mut seed = 300;
    for th in [TheoremId::CompleteRiemannian, TheoremId::CompleteLorentzian] {
        for (n, r) in sizes() {
            seed += 1;
            for s in models(n, r, Epsilon::Minus, th.signature(), 3, seed)? {
                check_theorem(th, &s, None).map_err(|m| format!("n={n} r={r}: {m}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} models"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    let mut seed = 400;
    for th in [
        TheoremId::HorizontalRiemannian,
        TheoremId::HorizontalLorentzian,
    ] {
        for (n, r) in [(1, 1), (1, 2), (2, 1), (0, 2), (2, 2)] {
            seed += 1;
            for s in models(n, r, Epsilon::Minus, th.signature(), 1, seed)? {
                let mut conns = vec![Connection::flat(s.chart())];
                let mut rng = random::rng(seed);
                while conns.len() < 4 {
                    let c = random::connection(s.chart(), 3, 2, &mut rng).map_err(e)?;
                    if !c.is_flat() {
                        conns.push(c);
                    }
                }
                for c in &conns {
                    check_theorem(th, &s, Some(c)).map_err(|m| format!("n={n} r={r}: {m}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!(
        "{count} (model, connection) pairs, 3 non-flat connections each"
    ))
}

fn criterion_5() -> Outcome {
    let mut cells = 0;
    for kind in [LiftKind::Complete, LiftKind::Horizontal] {
        for sig in Signature::BOTH {
            for eps in Epsilon::BOTH {
                let base = canonical_structure(1, 1, eps, sig)
                    .map_err(e)?
                    .with_mode(AxiomMode::Consistent);
                let tc = TangentChart::new(base.chart()).map_err(e)?;
                let conn =
                    random::connection(base.chart(), 3, 2, &mut random::rng(5)).map_err(e)?;
                let conn = (kind == LiftKind::Horizontal).then_some(&conn);
                let l = lifted(&base, &tc, kind, conn)?;
                // c from (F^L)² − εI = c·Σ(ξ^v⊗η^L + ξ^L⊗η^v)
                let d = endo_compose(&l.f, &l.f)
                    .map_err(e)?
                    .sub(&eps_identity(&tc, eps))
                    .map_err(e)?;
                let mixed = sum_outer(&l.xi_v, &l.eta_l, &tc)?
                    .add(&sum_outer(&l.xi_l, &l.eta_v, &tc)?)
                    .map_err(e)?;
                let c = if d == mixed {
                    1
                } else if d == mixed.neg() {
                    -1
                } else {
                    return Err(format!("{kind} {sig} ε={eps}: (F^L)² − εI is not ±mixed"));
                };
                let ledger = sign_sweep(&base, kind, conn, 55).map_err(e)?;
                ensure!(ledger.cells.len() == 4, "expected 4 cells");
                for cell in &ledger.cells {
                    let predicted = i64::from(cell.s) * i64::from(cell.t) * sig.kappa() == -c;
                    let j = assemble(&l, &tc, cell.s.into(), cell.t.into())?;
                    let truth = squares_to_eps(&j, &tc, eps)?;
                    ensure!(
                        cell.passed == predicted && truth == predicted,
                        "{kind} {sig} ε={eps} (s,t)=({},{}): engine {}, direct {truth}, predicted {predicted}",
                        cell.s, cell.t, cell.passed
                    );
                    if !cell.passed {
                        let Some(Witness::Point { point, .. }) = &cell.witness else {
                            return Err("failing cell without a witness point".into());
                        };
                        let residual = endo_compose(&j, &j)
                            .map_err(e)?
                            .sub(&eps_identity(&tc, eps))
                            .map_err(e)?;
                        let values = residual.evaluate(point).map_err(e)?;
                        ensure!(
                            values
                                .iter()
                                .any(|v| *v != Rational::from_integer(0.into())),
                            "witness point does not separate the residual from zero"
                        );
                    }
                    cells += 1;
                }
                if kind == LiftKind::Complete && sig == Signature::Riemannian {
                    let stated = ledger.cell(1, -1).ok_or("missing (+1,−1) cell")?;
                    match eps {
                        Epsilon::Minus => {
                            ensure!(stated.passed, "(+1,−1) should pass the contact cell")
                        }
                        Epsilon::Plus => ensure!(
                            !stated.passed && stated.witness.is_some(),
                            "(+1,−1) should fail the paracontact cell"
                        ),
                    }
                }
            }
        }
    }
    Ok(format!("{cells} cells agree with s·t·κ = −c"))
}

fn criterion_6() -> Outcome {
    let text = std::fs::read_to_string(manifest().join("examples/contact_n1_r1.def")).map_err(e)?;
    let mut def = parse_definition(&text).map_err(e)?;
    def.tasks = vec![Task::Verify(TheoremId::CompleteRiemannian)];
    let report = run_definition(&def, random::DEFAULT_SEED, None);
    let section = &report.sections[0];
    ensure!(
        section.passed && section.rows.len() == 8,
        "action rows: passed {}, {} rows",
        section.passed,
        section.rows.len()
    );
    let kinds: Vec<ErratumKind> = section.errata.iter().map(|x| x.kind).collect();
    ensure!(
        kinds
            == [
                ErratumKind::UndefinedSymbol,
                ErratumKind::InternallyInconsistent
            ],
        "errata {kinds:?}"
    );
    ensure!(
        section.errata[0].printed.contains("U_α"),
        "first erratum should name the U symbol"
    );
    ensure!(
        section.errata[1].display.contains("ξ_α^v"),
        "second erratum should concern J̃ξ^v"
    );

    // the derived Reeb action, checked directly: J̃ξ^v = −ξ^c
    let s = canonical_structure(1, 1, Epsilon::Minus, Signature::Riemannian).map_err(e)?;
    let spec =
        LiftedStructureSpec::for_theorem(&s, TheoremId::CompleteRiemannian, None).map_err(e)?;
    let j = build_lifted_j(&spec).map_err(e)?;
    let xv = lift_vector(&spec.tangent, &s.xi()[0], LiftKind::Vertical, None).map_err(e)?;
    let xc = lift_vector(&spec.tangent, &s.xi()[0], LiftKind::Complete, None).map_err(e)?;
    ensure!(endo_apply(&j, &xv).map_err(e)? == xc.neg(), "J̃ξ^v ≠ −ξ^c");
    let xs: Vec<_> = (0..3)
        .map(|k| TensorField::coordinate_vector(s.chart(), k))
        .collect();
    ensure!(
        verify_action_formulas(&spec, &xs, 1)
            .map_err(e)?
            .errata
            .len()
            == 2,
        "engine errata count"
    );

    let golden_path = manifest().join("tests/golden/action_formulas.json");
    let actual = serde_json::to_value(section).map_err(e)?;
    let golden = std::fs::read_to_string(&golden_path)
        .map_err(|x| format!("{}: {x}", golden_path.display()))?;
    let golden: serde_json::Value = serde_json::from_str(&golden).map_err(e)?;
    ensure!(
        actual == golden,
        "report differs from {}",
        golden_path.display()
    );
    Ok("8 zero residuals, 2 errata, golden report matches".into())
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for sig in Signature::BOTH {
        for (n, r) in sizes() {
            for s in models(n, r, Epsilon::Minus, sig, 2, 700 + (n * 4 + r) as u64)? {
                let report = check_metric(&s, 7).map_err(e)?;
                ensure!(
                    report.passed(),
                    "{sig} n={n} r={r}: {:?}",
                    report.failures().next().map(|f| &f.name)
                );
                count += 1;
            }
        }
    }
    for r in [1, 2] {
        let s = canonical_structure(1, r, Epsilon::Minus, Signature::Riemannian).map_err(e)?;
        let chart = s.chart().clone();
        let eta2: Vec<_> = s.eta().iter().map(|w| w.scale(&int(2))).collect();
        let mutant = RContactStructure::new(
            &chart,
            s.f().clone(),
            s.xi().to_vec(),
            eta2,
            Epsilon::Minus,
            Signature::Riemannian,
        )
        .map_err(e)?
        .with_metric(s.metric().unwrap().clone())
        .map_err(e)?;
        let report = check_metric(&mutant, 7).map_err(e)?;
        let entry = &report.entries[0];
        let mut expected = TensorField::zero(&chart, liftcheck::tensor::Valence::Bilinear);
        for w in s.eta() {
            expected = expected
                .add(&outer_forms(w, w).map_err(e)?.scale(&int(3)))
                .map_err(e)?;
        }
        ensure!(
            !entry.passed && entry.residual == expected,
            "r={r}: mutant residual {}",
            entry.residual
        );
    }
    Ok(format!(
        "{count} metrics compatible; rescaled η gives 3·Σ η⊗η"
    ))
}

fn criterion_8() -> Outcome {
    // σ in F² = εI + σΣξ⊗η as displayed for each literal system
    let literal = [
        (AxiomSystem::RContact, 1, Epsilon::Minus),
        (AxiomSystem::LorentzianRContact, -1, Epsilon::Minus),
        (AxiomSystem::AlmostContact, -1, Epsilon::Plus),
    ];
    for (system, sigma, only) in literal {
        for eps in Epsilon::BOTH {
            let lint = consistency_lint(system, eps);
            ensure!(lint.forced == [only], "{system}: forced {:?}", lint.forced);
            let s = canonical_structure(1, 2, eps, system.signature()).map_err(e)?;
            let rhs = TensorField::identity(s.chart())
                .scale(&eps.rational())
                .add(&s.reeb_projector().scale(&int(sigma)))
                .map_err(e)?;
            let f2 = endo_compose(s.f(), s.f()).map_err(e)?;
            let mut brute = true;
            for x in s.xi() {
                let lhs = endo_apply(&f2, x).map_err(e)?;
                brute &= lhs
                    .sub(&endo_apply(&rhs, x).map_err(e)?)
                    .map_err(e)?
                    .is_zero();
            }
            ensure!(
                brute == (eps == only)
                    && lint.consistent == brute
                    && lint.brute_force_consistent == brute,
                "{system} ε={eps}: brute {brute}, lint {}",
                lint.consistent
            );
        }
    }
    Ok("r-contact and lorentzian r-contact force ε = −1, almost contact forces ε = +1".into())
}

fn criterion_9() -> Outcome {
    for eps in Epsilon::BOTH {
        let model = canonical_complex(2, eps, 9).map_err(e)?;
        ensure!(model.passed(), "model checks fail for ε={eps}");
        // J = [[0, ε], [1, 0]]: J∂x = ∂y, J∂y = ε∂x
        let j = |v: &[EpsComplex; 2]| [v[1].scale(&eps.rational()), v[0].clone()];
        let i = EpsComplex::i(eps);
        let e_c = EpsComplex::real(eps.rational(), eps);
        for sign in [-1i64, 1] {
            let v = [
                EpsComplex::real(rat(1, 2), eps),
                EpsComplex::new(rat(0, 1), rat(sign, 2), eps),
            ];
            let lambda = i.mul(&e_c).map_err(e)?.scale(&rat(sign, 1));
            let jv = j(&v);
            ensure!(
                jv[0] == lambda.mul(&v[0]).map_err(e)? && jv[1] == lambda.mul(&v[1]).map_err(e)?,
                "eigenvector fails for ε={eps}"
            );
        }
        let jt = endo_transpose(&model.j).map_err(e)?;
        let sq = endo_compose(&jt, &jt).map_err(e)?;
        ensure!(
            sq == TensorField::identity(model.j.chart()).scale(&eps.rational()),
            "(J*)² ≠ εI"
        );
    }
    Ok("eigenvalues ∓iε and (J*)² = εI for ε = ±1".into())
}

fn def_files() -> Result<Vec<PathBuf>, String> {
    let mut files: Vec<_> = std::fs::read_dir(manifest().join("examples"))
        .map_err(e)?
        .filter_map(|x| x.ok().map(|x| x.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "def"))
        .collect();
    files.sort();
    Ok(files)
}

fn criterion_10() -> Outcome {
    let files = def_files()?;
    ensure!(
        files.len() >= 5,
        "expected the shipped .def files, found {}",
        files.len()
    );
    for path in &files {
        let text = std::fs::read_to_string(path).map_err(e)?;
        let def = parse_definition(&text).map_err(|x| format!("{}: {x}", path.display()))?;
        let again = parse_definition(&emit_definition(&def)).map_err(e)?;
        ensure!(again == def, "{} does not round-trip", path.display());
    }
    let bin = env!("CARGO_BIN_EXE_liftcheck");
    let run = || {
        Command::new(bin)
            .args(["--format", "machine", "--seed", "31", "demo"])
            .output()
    };
    let first = run().map_err(e)?;
    let second = run().map_err(e)?;
    ensure!(
        first.status.success(),
        "demo exited with {:?}",
        first.status.code()
    );
    ensure!(
        !first.stdout.is_empty() && first.stdout == second.stdout,
        "machine reports differ between runs"
    );
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(e)?;
    ensure!(
        value["passed"] == serde_json::Value::Bool(true),
        "demo report not passed"
    );
    Ok(format!(
        "{} definition files round-trip; demo exit 0, {} identical bytes",
        files.len(),
        first.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("lift-interaction tables", criterion_1),
        ("square of the complete lift", criterion_2),
        ("complete lifted structures (4.1, 4.2)", criterion_3),
        ("horizontal lifted structures (4.3, 4.4)", criterion_4),
        ("sign ledger", criterion_5),
        ("action formulas and errata", criterion_6),
        ("metric compatibility", criterion_7),
        ("consistency lint", criterion_8),
        ("ε-complex eigencheck", criterion_9),
        ("definition files and CLI", criterion_10),
    ];
    let mut failed = 0;
    for (idx, (name, f)) in criteria.into_iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:2} {name}: {detail} ({secs:.1}s)", idx + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:2} {name}: {msg} ({secs:.1}s)", idx + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
