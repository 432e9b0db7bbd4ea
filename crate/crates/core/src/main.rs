use std::process::ExitCode;

fn main() -> ExitCode {
    fibgen::cli::main()
}
