use std::process::ExitCode;

fn main() -> ExitCode {
    p14::cli::run()
}
