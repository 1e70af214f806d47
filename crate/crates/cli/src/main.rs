use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(doiko_cli::run(std::env::args_os()))
}
