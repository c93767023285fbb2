use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(k4bip_cli::cli_main(std::env::args_os()))
}
