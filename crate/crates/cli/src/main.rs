//! Command-line entry point. Exit codes: 0 success or PASS, 1 usage error,
//! 2 computation error, 3 verification FAIL.

mod run;

use clap::error::ErrorKind;
use clap::Parser;

fn main() {
    let cli = match run::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    std::process::exit(run::run(cli));
}
