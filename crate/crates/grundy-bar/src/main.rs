use clap::Parser;
use std::io;
use std::process;

use grundy_bar::cli::{run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut out = io::stdout();
    let mut err = io::stderr();
    process::exit(run(&cli, &mut input, &mut out, &mut err));
}
