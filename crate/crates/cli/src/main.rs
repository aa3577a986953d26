use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let run = eulerfpt_cli::execute(std::env::args());
    let _ = std::io::stdout().write_all(run.stdout.as_bytes());
    let _ = std::io::stderr().write_all(run.stderr.as_bytes());
    ExitCode::from(run.code as u8)
}
