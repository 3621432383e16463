use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = prodex::cli::run(std::env::args_os());
    // one write per stream: parallel work never interleaves with output
    let _ = std::io::stdout()
        .lock()
        .write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr()
        .lock()
        .write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
