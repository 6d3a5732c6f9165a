//! Definition files, task execution and report rendering.

mod definition;
mod run;

pub use definition::{
    emit_definition, parse_definition, ConnectionBlock, Definition, StructureBlock, Task,
};
pub use run::{demo_report, run_definition, run_task, OutputFormat, Report, Row, Section, Verdict};
