use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use flagcalc_cli::{configure_threads, render, run, write_atomically, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => return fail(&CliError::Usage(e.to_string().trim_end().to_owned())),
    };
    let result = configure_threads().and_then(|()| run(&cli.command)).and_then(|value| {
        let text = render(&value);
        match &cli.out {
            Some(path) => write_atomically(path, &text),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e),
    }
}

fn fail(e: &CliError) -> ExitCode {
    println!("{}", render(&e.to_json()).trim_end());
    ExitCode::from(e.exit_code() as u8)
}
