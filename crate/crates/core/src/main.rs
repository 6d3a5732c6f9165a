use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use liftcheck::algebra::Epsilon;
use liftcheck::io::{
    demo_report, emit_definition, parse_definition, run_definition, Definition, OutputFormat, Task,
};
use liftcheck::lift::LiftKind;
use liftcheck::random::DEFAULT_SEED;
use liftcheck::structure::{canonical_structure, AxiomMode, Signature};
use liftcheck::theorem::TheoremId;

#[derive(Parser)]
#[command(
    name = "liftcheck",
    version,
    about = "Check ε-structures and their tangent-bundle lifts"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Override the axiom mode of the structure.
    #[arg(long, value_enum, global = true)]
    mode: Option<Mode>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    PaperLiteral,
    Consistent,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Complete,
    Horizontal,
}

impl From<Kind> for LiftKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Complete => LiftKind::Complete,
            Kind::Horizontal => LiftKind::Horizontal,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks listed in the file.
    Run { file: PathBuf },
    /// Axioms, metric compatibility and the consistency lint.
    Check { file: PathBuf },
    /// Lift-interaction tables.
    Lift {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Complete)]
        kind: Kind,
    },
    /// Build J = F^L + sΣξ^v⊗η^v + tΣξ^L⊗η^L and check J² = εI.
    BuildJ {
        file: PathBuf,
        #[arg(long, value_parser = parse_theorem, conflicts_with_all = ["kind", "s", "t"])]
        theorem: Option<TheoremId>,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<i8>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<i8>,
    },
    /// Action formulas of a theorem's lifted structure.
    Verify {
        file: PathBuf,
        #[arg(long, value_parser = parse_theorem)]
        theorem: TheoremId,
    },
    /// All four (s, t) sign pairs.
    Sweep {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Complete)]
        kind: Kind,
    },
    /// The full pipeline on built-in canonical models.
    Demo,
    /// Print a definition file in canonical form.
    Fmt { file: PathBuf },
    /// Print the definition of a canonical structure.
    Canonical {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        epsilon: i64,
        #[arg(long, default_value = "riemannian", value_parser = parse_signature)]
        signature: Signature,
    },
}

fn parse_theorem(s: &str) -> Result<TheoremId, String> {
    TheoremId::parse(s).ok_or_else(|| format!("unknown theorem `{s}`, expected 4.1 to 4.4"))
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    Signature::parse(s).ok_or_else(|| format!("unknown signature `{s}`"))
}

fn load(path: &Path) -> Result<Definition, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_definition(&text).map_err(|e| format!("{}:{e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = match cli.format {
        Format::Human => OutputFormat::Human,
        Format::Machine => OutputFormat::Machine,
    };
    let mode = cli.mode.map(|m| match m {
        Mode::PaperLiteral => AxiomMode::PaperLiteral,
        Mode::Consistent => AxiomMode::Consistent,
    });
    let with_task = |file: &Path, task: Task| -> Result<Definition, String> {
        let mut def = load(file)?;
        def.tasks = vec![task];
        Ok(def)
    };
    let def = match cli.command {
        Command::Demo => {
            let report = demo_report(cli.seed, mode);
            print!("{}", report.render(format));
            return Ok(ExitCode::from(report.exit_code() as u8));
        }
        Command::Fmt { file } => {
            print!("{}", emit_definition(&load(&file)?));
            return Ok(ExitCode::SUCCESS);
        }
        Command::Canonical {
            n,
            r,
            epsilon,
            signature,
        } => {
            let eps = Epsilon::from_value(epsilon).map_err(|e| e.to_string())?;
            let s = canonical_structure(n, r, eps, signature).map_err(|e| e.to_string())?;
            let s = match mode {
                Some(m) => s.with_mode(m),
                None => s,
            };
            print!(
                "{}",
                emit_definition(&Definition::from_structure(&s, None, vec![Task::Check]))
            );
            return Ok(ExitCode::SUCCESS);
        }
        Command::Run { file } => load(&file)?,
        Command::Check { file } => with_task(&file, Task::Check)?,
        Command::Lift { file, kind } => with_task(&file, Task::Lift(kind.into()))?,
        Command::BuildJ {
            file,
            theorem,
            kind,
            s,
            t,
        } => {
            let task = match (theorem, kind, s, t) {
                (Some(th), ..) => {
                    let (s, t) = th.signs();
                    Task::BuildJ {
                        kind: th.kind(),
                        s,
                        t,
                    }
                }
                (None, Some(kind), Some(s), Some(t)) => Task::BuildJ {
                    kind: kind.into(),
                    s,
                    t,
                },
                _ => return Err("build-j needs --theorem or all of --kind, --s and --t".into()),
            };
            with_task(&file, task)?
        }
        Command::Verify { file, theorem } => with_task(&file, Task::Verify(theorem))?,
        Command::Sweep { file, kind } => with_task(&file, Task::Sweep(kind.into()))?,
    };
    let report = run_definition(&def, cli.seed, mode);
    print!("{}", report.render(format));
    Ok(ExitCode::from(report.exit_code() as u8))
}
