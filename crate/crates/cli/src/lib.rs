//! Command-line front end for the `eulerfpt` solvers.

pub mod args;
mod commands;
pub mod report;

use clap::error::ErrorKind;
use clap::Parser;
use thiserror::Error;

pub use args::Cli;
pub use report::{
    Certificate, CheckStatus, ReduceReport, Requirement, RunResult, Stats, ThresholdReport, VerdictLabel,
};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Data(_) => EXIT_DATA,
            CliError::Internal(_) => EXIT_SOFTWARE,
        }
    }
}

/// Everything one invocation prints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn execute<I, S>(argv: I) -> Execution
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Execution {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Execution {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let echo = argv.iter().skip(1).cloned().collect();
    match commands::dispatch(&cli.command, &cli.opts, echo) {
        Ok(report) => render(report, cli.opts.json),
        Err(e) => Execution {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn render(report: commands::Report, json: bool) -> Execution {
    let pick = |text: String, j: String| if json { j } else { text };
    match report {
        commands::Report::Run(r) => Execution {
            code: r.verdict.exit_code(),
            stdout: pick(r.to_text(), json_line(&r)),
            stderr: String::new(),
        },
        commands::Report::Thresholds(t) => Execution {
            code: 0,
            stdout: pick(t.to_text(), json_line(&t)),
            stderr: String::new(),
        },
        commands::Report::Reduce { report, target_text } => {
            let summary = pick(report.to_text(), json_line(&report));
            // With the target on standard output, the summary moves to stderr.
            let (stdout, stderr) = match target_text {
                Some(t) => (t, summary),
                None => (summary, String::new()),
            };
            Execution {
                code: report.exit_code(),
                stdout,
                stderr,
            }
        }
    }
}
