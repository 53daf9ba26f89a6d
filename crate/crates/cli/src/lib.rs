//! Command implementations for the `qsem` binary.
//!
//! Kept as a library so integration tests can drive the exact same code
//! paths the binary uses, including output rendering and exit-code
//! selection.

mod output;

pub use output::{render_hardy, render_queries, Format};

use std::fs;
use std::path::Path;

use qsem_core::dsl::{self, Stage};
use qsem_core::hardy;

/// Exit code 2: unreadable input file. 3: parse or check failure.
/// 4: evaluation failure. Diagnostics go to standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub exit_code: i32,
    pub message: String,
}

pub const EXIT_IO: i32 = 2;
pub const EXIT_PARSE_CHECK: i32 = 3;
pub const EXIT_EVAL: i32 = 4;

fn stage_exit_code(stage: Stage) -> i32 {
    match stage {
        Stage::Parse | Stage::Check => EXIT_PARSE_CHECK,
        Stage::Eval => EXIT_EVAL,
    }
}

/// `qsem run <file>`: parse, check, and run a script, rendering the query
/// results in the requested format.
pub fn cmd_run(path: &Path, format: Format) -> Result<String, CliError> {
    let source = fs::read_to_string(path).map_err(|e| CliError {
        exit_code: EXIT_IO,
        message: format!("cannot read `{}`: {e}", path.display()),
    })?;
    let script_error = |e: dsl::DslError| CliError {
        exit_code: stage_exit_code(e.stage),
        message: format!("{}:{}", path.display(), e),
    };
    let script = dsl::parse(&source).map_err(script_error)?;
    let checked = dsl::check(script).map_err(script_error)?;
    let results = dsl::run(&checked).map_err(script_error)?;
    Ok(render_queries(&results, format))
}

/// `qsem hardy`: the built-in paradox report.
pub fn cmd_hardy(format: Format) -> String {
    let scenario = hardy::build_scenario();
    let report = hardy::paradox_report(&scenario);
    render_hardy(&report, format)
}
