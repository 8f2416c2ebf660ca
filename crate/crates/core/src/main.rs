use std::process::ExitCode;

fn main() -> ExitCode {
    softgames::cli::run()
}
