use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(presemiring::cli::run(std::env::args()) as u8)
}
