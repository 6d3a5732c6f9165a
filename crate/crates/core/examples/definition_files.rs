//! Parse the shipped `.def` files, run their tasks and print the reports.
//!
//! ```text
//! cargo run --example definition_files -- [machine]
//! ```

use std::path::Path;

use liftcheck::io::{emit_definition, parse_definition, run_definition, OutputFormat};
use liftcheck::random::DEFAULT_SEED;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let format = match std::env::args().nth(1).as_deref() {
        Some("machine") => OutputFormat::Machine,
        _ => OutputFormat::Human,
    };
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut files: Vec<_> = std::fs::read_dir(&dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "def"))
        .collect();
    files.sort();
    for path in files {
        let text = std::fs::read_to_string(&path)?;
        let def = parse_definition(&text)?;
        assert_eq!(parse_definition(&emit_definition(&def))?, def);
        let report = run_definition(&def, DEFAULT_SEED, None);
        println!("### {}", path.file_name().unwrap().to_string_lossy());
        print!("{}", report.render(format));
    }
    Ok(())
}
