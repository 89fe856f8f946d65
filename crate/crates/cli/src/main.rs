mod args;
mod commands;
mod sexp;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    // deep terms recurse deeply in the core
    let code = std::thread::Builder::new()
        .stack_size(512 << 20)
        .spawn(move || commands::run(cli.command))
        .expect("spawn worker thread")
        .join()
        .unwrap_or(commands::Exit::Internal);
    ExitCode::from(code as u8)
}
