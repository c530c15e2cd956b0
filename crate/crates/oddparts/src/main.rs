use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(oddparts::cli::run())
}
