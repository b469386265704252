use std::process::ExitCode;

// same entry point as the `kegraph` binary, built here so the acceptance
// target can spawn it
fn main() -> ExitCode {
    ExitCode::from(kegraph_cli::run_from(std::env::args_os()))
}
