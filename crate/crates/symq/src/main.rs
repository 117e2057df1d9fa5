use std::process::ExitCode;

fn main() -> ExitCode {
    symq::cli::run(std::env::args_os())
}
