use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(fgraph::cli::main_from_args(std::env::args_os()) as u8)
}
