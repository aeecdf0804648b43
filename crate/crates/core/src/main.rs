use std::process::ExitCode;

fn main() -> ExitCode {
    dyck_squares::cli::run()
}
