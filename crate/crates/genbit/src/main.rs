use std::process::ExitCode;

fn main() -> ExitCode {
    genbit::cli::run()
}
