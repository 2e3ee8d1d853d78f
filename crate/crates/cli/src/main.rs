mod cli;
mod error;
mod run;

use clap::Parser;

fn main() {
    let cli = cli::Cli::parse();
    if let Err(e) = run::configure_threads() {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
    match run::dispatch(&cli.command) {
        Ok(out) => print!("{out}"),
        Err(run::Failure { output, error }) => {
            print!("{output}");
            eprintln!("error: {error}");
            std::process::exit(error.exit_code());
        }
    }
}
